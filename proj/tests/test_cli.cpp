// End-to-end checks of the command-line binary. The test runner passes its
// location through DESIGNBENCH_CLI.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
  int code;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("DESIGNBENCH_CLI");
  return env ? env : "./designbench";
}

CmdResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("optimum certificates through the cli") {
  const CmdResult vessel = run_cli("optimum vessel --format json");
  CHECK(vessel.code == 0);
  const json jv = json::parse(vessel.out);
  CHECK(std::abs(jv["objective"].get<double>() - 6059.714335048436) < 1e-6);

  const CmdResult beam = run_cli("optimum cantilever --format json");
  CHECK(beam.code == 0);
  const json jb = json::parse(beam.out);
  CHECK(std::abs(jb["objective"].get<double>() - 1.339956367) < 1e-8);

  CHECK(run_cli("optimum frobnicator").code == 2);
}

TEST_CASE("json and text formats agree to full printed precision") {
  const json jv = json::parse(run_cli("optimum vessel --format json").out);
  const std::string text = run_cli("optimum vessel --format text").out;
  const auto pos = text.find("objective:");
  REQUIRE(pos != std::string::npos);
  const double text_value = std::stod(text.substr(pos + 10));
  CHECK(text_value == jv["objective"].get<double>());

  const std::string csv = run_cli("optimum vessel --format csv").out;
  CHECK(csv.find("6059.7143350484357") != std::string::npos);
}

TEST_CASE("validate subcommand") {
  const CmdResult def = run_cli("validate");
  CHECK(def.code == 0);  // two starred anomalies do not fail the corpus
  CHECK(def.out.find("below-proven-optimum") != std::string::npos);

  const json jr = json::parse(run_cli("validate --format json").out);
  CHECK(jr["counts"]["below-proven-optimum"] == 2);
  CHECK(jr["records"].size() == 36);
  CHECK(jr["anomalies_unstarred"] == 0);

  CHECK(run_cli("validate /nonexistent/corpus.csv").code == 2);
}

TEST_CASE("validate flags malformed rows with a line number") {
  const std::string path = "/tmp/designbench_bad_corpus.csv";
  std::ofstream(path) << "ok,vessel,6100\nbroken\n";
  const CmdResult r = run_cli("validate " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find(":2:") != std::string::npos);
}

TEST_CASE("validate exits 1 on unstarred anomalies") {
  const std::string path = "/tmp/designbench_anomaly_corpus.csv";
  std::ofstream(path) << "TooGood,vessel,6000.0\n";
  const CmdResult r = run_cli("validate " + path);
  CHECK(r.code == 1);
}

TEST_CASE("sweep subcommand") {
  const std::string path = "/tmp/designbench_sweep.csv";
  CHECK(run_cli("sweep --output " + path).code == 0);
  std::ifstream in(path);
  std::string line, footer;
  int rows = -1;  // header
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      footer = line;
      continue;
    }
    ++rows;
  }
  CHECK(rows == 9801);
  CHECK(footer.find("I=13,J=7") != std::string::npos);
  CHECK(footer.find("6059.7143350484") != std::string::npos);
}

TEST_CASE("bench subcommand") {
  CHECK(run_cli("bench vessel --budget 0").code == 2);
  CHECK(run_cli("bench frobnicator").code == 2);

  const std::string args = "bench vessel --seeds 1..3 --budget 2000 --format csv";
  const CmdResult a = run_cli(args);
  CHECK(a.code == 0);
  const CmdResult b = run_cli(args);
  CHECK(a.out == b.out);  // byte-identical reruns

  const json jb = json::parse(
      run_cli("bench vessel --seeds 1,5 --budget 2000 --format json").out);
  CHECK(jb["runs"].size() == 2);
}
