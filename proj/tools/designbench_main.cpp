// Command-line front end: certificates, corpus validation, the thickness grid
// sweep and the stochastic benchmark harness.
//
// Exit codes: 0 success, 1 validation anomaly, 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "designbench/analytic.hpp"
#include "designbench/harness.hpp"
#include "designbench/print.hpp"
#include "designbench/validator.hpp"

using nlohmann::json;
using namespace designbench;

namespace {

constexpr const char* kDefaultCorpus =
    DESIGNBENCH_DATA_DIR "/pressure_vessel_table1.csv";

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::endpoint_argument: return "endpoint-argument";
    case Provenance::lagrange_stationarity: return "lagrange-stationarity";
    case Provenance::lambda_closed_form: return "lambda-closed-form";
  }
  return "?";
}

ProvenOptima proven_optima() {
  return {vessel_global_optimum().objective,
          cantilever_global_optimum().objective};
}

// Writes either to stdout or to --output.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) return false;
    os = &file;
    return true;
  }
};

json vessel_cert_json(const VesselCertificate& c) {
  json j;
  j["problem"] = "vessel";
  j["design"] = {{"d1", c.design.shell_thickness},
                 {"d2", c.design.head_thickness},
                 {"r", c.design.radius},
                 {"L", c.design.length}};
  j["objective"] = c.objective;
  j["active_constraints"] = c.active_constraints;
  j["multipliers"] = c.multipliers;
  j["kkt_residual"] = c.kkt_residual;
  j["provenance"] = provenance_name(c.provenance);
  j["stationarity_roots"] = c.stationarity_roots;
  j["rejected_endpoint"] = {{"r", c.rejected_endpoint.radius},
                            {"L", c.rejected_endpoint.length},
                            {"objective", c.rejected_endpoint_objective}};
  return j;
}

json cantilever_cert_json(const CantileverCertificate& c) {
  json j;
  j["problem"] = "cantilever";
  j["design"] = c.design.heights;
  j["objective"] = c.objective;
  j["active_constraints"] = c.active_constraints;
  j["multipliers"] = c.multipliers;
  j["kkt_residual"] = c.kkt_residual;
  j["provenance"] = provenance_name(c.provenance);
  return j;
}

int cmd_optimum(const std::string& problem, const std::string& format,
                const std::string& output) {
  Sink sink;
  if (!sink.open(output)) {
    std::cerr << "cannot open output file: " << output << "\n";
    return 2;
  }
  std::ostream& os = *sink.os;

  if (problem == "vessel") {
    const VesselCertificate c = vessel_global_optimum();
    if (format == "json") {
      os << vessel_cert_json(c).dump(2) << "\n";
    } else if (format == "csv") {
      os << "problem,d1,d2,r,L,objective,kkt_residual,provenance\n"
         << "vessel," << fmt17(c.design.shell_thickness) << ','
         << fmt17(c.design.head_thickness) << ',' << fmt17(c.design.radius)
         << ',' << fmt17(c.design.length) << ',' << fmt17(c.objective) << ','
         << fmt17(c.kkt_residual) << ',' << provenance_name(c.provenance)
         << "\n";
    } else {
      os << "problem:             vessel\n"
         << "design:              d1=" << fmt17(c.design.shell_thickness)
         << " d2=" << fmt17(c.design.head_thickness)
         << " r=" << fmt17(c.design.radius)
         << " L=" << fmt17(c.design.length) << "\n"
         << "objective:           " << fmt17(c.objective) << "\n";
      os << "active constraints: ";
      for (int i : c.active_constraints) os << " g" << (i + 1);
      os << "\nmultipliers:        ";
      for (double m : c.multipliers) os << ' ' << fmt17(m);
      os << "\nkkt residual:        " << fmt17(c.kkt_residual) << "\n"
         << "provenance:          " << provenance_name(c.provenance) << "\n"
         << "stationary points:   " << c.stationarity_roots.size() << "\n"
         << "rejected endpoint:   r=" << fmt17(c.rejected_endpoint.radius)
         << " L=" << fmt17(c.rejected_endpoint.length)
         << " objective=" << fmt17(c.rejected_endpoint_objective) << "\n";
    }
  } else {
    const CantileverCertificate c = cantilever_global_optimum();
    if (format == "json") {
      os << cantilever_cert_json(c).dump(2) << "\n";
    } else if (format == "csv") {
      os << "problem,x1,x2,x3,x4,x5,objective,lambda,kkt_residual,provenance\n"
         << "cantilever";
      for (double x : c.design.heights) os << ',' << fmt17(x);
      os << ',' << fmt17(c.objective) << ',' << fmt17(c.multipliers[0]) << ','
         << fmt17(c.kkt_residual) << ',' << provenance_name(c.provenance)
         << "\n";
    } else {
      os << "problem:             cantilever\ndesign:             ";
      for (double x : c.design.heights) os << ' ' << fmt17(x);
      os << "\nobjective:           " << fmt17(c.objective) << "\n"
         << "active constraints:  g1\n"
         << "multiplier:          " << fmt17(c.multipliers[0]) << "\n"
         << "kkt residual:        " << fmt17(c.kkt_residual) << "\n"
         << "provenance:          " << provenance_name(c.provenance) << "\n";
    }
  }
  return 0;
}

int cmd_validate(const std::string& path, const std::string& format,
                 const std::string& output, double claim_tol,
                 double report_tol) {
  std::vector<CandidateRecord> records;
  try {
    records = load_corpus_file(path);
  } catch (const CorpusParseError& e) {
    std::cerr << path << ":" << e.line << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  ValidatorTolerances tol;
  tol.claim = claim_tol;
  tol.report = report_tol;
  const CorpusReport report = corpus_report(records, proven_optima(), tol);

  Sink sink;
  if (!sink.open(output)) {
    std::cerr << "cannot open output file: " << output << "\n";
    return 2;
  }
  std::ostream& os = *sink.os;

  if (format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json r{{"source", row.record.source},
             {"problem", row.record.problem == Problem::vessel ? "vessel"
                                                               : "cantilever"},
             {"reported_f", row.record.reported_f},
             {"flagged_invalid", row.record.flagged_invalid},
             {"classification", to_string(row.verdict.classification)},
             {"gap_to_optimum", row.verdict.gap_to_optimum}};
      if (row.verdict.recomputed_f) r["recomputed_f"] = *row.verdict.recomputed_f;
      if (row.verdict.worst_violation)
        r["worst_violation"] = *row.verdict.worst_violation;
      rows.push_back(std::move(r));
    }
    json counts;
    for (const auto& [verdict, n] : report.counts) counts[to_string(verdict)] = n;
    os << json{{"records", rows},
               {"counts", counts},
               {"anomalies_unstarred", report.anomalies_unstarred},
               {"starred_unconfirmed", report.starred_unconfirmed}}
              .dump(2)
       << "\n";
  } else if (format == "csv") {
    os << "source,problem,reported_f,flagged_invalid,classification,gap_to_optimum\n";
    for (const auto& row : report.rows)
      os << row.record.source << ','
         << (row.record.problem == Problem::vessel ? "vessel" : "cantilever")
         << ',' << fmt17(row.record.reported_f) << ','
         << (row.record.flagged_invalid ? "true" : "false") << ','
         << to_string(row.verdict.classification) << ','
         << fmt17(row.verdict.gap_to_optimum) << "\n";
  } else {
    os << std::left << std::setw(22) << "source" << std::setw(12) << "problem"
       << std::setw(14) << "reported_f" << std::setw(8) << "starred"
       << std::setw(24) << "classification" << "gap_to_optimum\n";
    for (const auto& row : report.rows)
      os << std::left << std::setw(22) << row.record.source << std::setw(12)
         << (row.record.problem == Problem::vessel ? "vessel" : "cantilever")
         << std::setw(14) << row.record.reported_f << std::setw(8)
         << (row.record.flagged_invalid ? "*" : "") << std::setw(24)
         << to_string(row.verdict.classification)
         << fmt17(row.verdict.gap_to_optimum) << "\n";
    os << "--\n";
    for (const auto& [verdict, n] : report.counts)
      os << std::left << std::setw(24) << to_string(verdict) << n << "\n";
    os << "anomalies among non-starred records: "
       << report.anomalies_unstarred << "\n";
  }
  return report.anomalies_unstarred > 0 ? 1 : 0;
}

int cmd_sweep(const std::string& format, const std::string& output) {
  const std::vector<SweepRow> rows = vessel_grid_sweep();
  const SweepRow* best = nullptr;
  for (const SweepRow& r : rows)
    if (r.feasible && (!best || r.f_opt < best->f_opt)) best = &r;

  Sink sink;
  if (!sink.open(output)) {
    std::cerr << "cannot open output file: " << output << "\n";
    return 2;
  }
  std::ostream& os = *sink.os;

  if (format == "json") {
    json arr = json::array();
    for (const SweepRow& r : rows) {
      json row{{"I", r.shell_multiple}, {"J", r.head_multiple},
               {"d1", r.shell},          {"d2", r.head},
               {"feasible", r.feasible}};
      if (r.feasible) {
        row["r_opt"] = r.r_opt;
        row["L_opt"] = r.L_opt;
        row["f_opt"] = r.f_opt;
      }
      arr.push_back(std::move(row));
    }
    os << json{{"rows", arr},
               {"argmin", {{"I", best->shell_multiple},
                           {"J", best->head_multiple},
                           {"objective", best->f_opt}}}}
              .dump(2)
       << "\n";
  } else if (format == "text") {
    os << std::left << std::setw(5) << "I" << std::setw(5) << "J"
       << std::setw(10) << "d1" << std::setw(10) << "d2" << std::setw(10)
       << "feasible" << std::setw(22) << "r_opt" << std::setw(22) << "L_opt"
       << "f_opt\n";
    for (const SweepRow& r : rows) {
      os << std::left << std::setw(5) << r.shell_multiple << std::setw(5)
         << r.head_multiple << std::setw(10) << r.shell << std::setw(10)
         << r.head << std::setw(10) << (r.feasible ? "true" : "false");
      if (r.feasible)
        os << std::setw(22) << fmt17(r.r_opt) << std::setw(22)
           << fmt17(r.L_opt) << fmt17(r.f_opt);
      os << "\n";
    }
    os << "argmin: I=" << best->shell_multiple << " J=" << best->head_multiple
       << " objective=" << fmt17(best->f_opt) << "\n";
  } else {
    write_sweep_csv(os, rows);
    os << "# argmin,I=" << best->shell_multiple << ",J=" << best->head_multiple
       << ",objective=" << fmt17(best->f_opt) << "\n";
  }
  return 0;
}

bool parse_seeds(const std::string& text, std::vector<std::uint64_t>& out) {
  try {
    if (const auto pos = text.find(".."); pos != std::string::npos) {
      const std::uint64_t lo = std::stoull(text.substr(0, pos));
      const std::uint64_t hi = std::stoull(text.substr(pos + 2));
      if (hi < lo) return false;
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
      return true;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return !out.empty();
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_bench(const std::string& problem_name, const std::string& algo,
              const std::string& seeds_text, long budget, int population,
              double weight, double crossover, double penalty,
              const std::string& thresholds_text, const std::string& format,
              const std::string& output) {
  std::vector<std::uint64_t> seeds;
  if (!parse_seeds(seeds_text, seeds)) {
    std::cerr << "invalid --seeds value: " << seeds_text << "\n";
    return 2;
  }
  std::vector<double> thresholds;
  {
    std::stringstream ss(thresholds_text);
    std::string tok;
    try {
      while (std::getline(ss, tok, ',')) thresholds.push_back(std::stod(tok));
    } catch (const std::exception&) {
      std::cerr << "invalid --thresholds value: " << thresholds_text << "\n";
      return 2;
    }
  }

  const Problem problem =
      problem_name == "vessel" ? Problem::vessel : Problem::cantilever;
  std::vector<RunConfig> configs;
  for (std::uint64_t s : seeds) {
    RunConfig c;
    c.algorithm = algo == "random" ? Algorithm::random_search
                                   : Algorithm::differential_evolution;
    c.seed = s;
    c.budget = budget;
    c.population = population;
    c.weight = weight;
    c.crossover = crossover;
    c.penalty_coefficient = penalty;
    configs.push_back(c);
  }

  const BatchStats stats = batch(problem, configs, proven_optima(), thresholds);

  Sink sink;
  if (!sink.open(output)) {
    std::cerr << "cannot open output file: " << output << "\n";
    return 2;
  }
  std::ostream& os = *sink.os;

  if (format == "json") {
    json rows = json::array();
    for (const auto& r : stats.rows)
      rows.push_back({{"seed", r.seed},
                      {"gap", r.gap},
                      {"best_feasible_f", r.best_feasible_f},
                      {"best_penalized_f", r.best_penalized_f}});
    json rates = json::array();
    for (std::size_t i = 0; i < stats.thresholds.size(); ++i)
      rates.push_back({{"threshold", stats.thresholds[i]},
                       {"success_rate", stats.success_rates[i]}});
    os << json{{"runs", rows},
               {"success_rates", rates},
               {"median_gap", stats.median_gap},
               {"best_gap", stats.best_gap},
               {"worst_gap", stats.worst_gap}}
              .dump(2)
       << "\n";
  } else if (format == "csv") {
    os << "seed,gap,best_feasible_f,best_penalized_f\n";
    for (const auto& r : stats.rows)
      os << r.seed << ',' << fmt17(r.gap) << ',' << fmt17(r.best_feasible_f)
         << ',' << fmt17(r.best_penalized_f) << "\n";
  } else {
    os << std::left << std::setw(8) << "seed" << std::setw(26) << "gap"
       << std::setw(26) << "best_feasible_f" << "best_penalized_f\n";
    for (const auto& r : stats.rows)
      os << std::left << std::setw(8) << r.seed << std::setw(26)
         << fmt17(r.gap) << std::setw(26) << fmt17(r.best_feasible_f)
         << fmt17(r.best_penalized_f) << "\n";
    os << "--\n";
    for (std::size_t i = 0; i < stats.thresholds.size(); ++i)
      os << "success rate @ gap<" << stats.thresholds[i] << ": "
         << stats.success_rates[i] << "\n";
    os << "median gap: " << fmt17(stats.median_gap)
       << "\nbest gap:   " << fmt17(stats.best_gap)
       << "\nworst gap:  " << fmt17(stats.worst_gap) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark toolkit for the pressure-vessel and cantilever-beam "
               "design problems: proven optima, claim validation, grid sweeps "
               "and a reproducible stochastic harness."};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};

  // optimum
  auto* opt = app.add_subcommand("optimum", "Print a proven optimum certificate");
  std::string opt_problem, opt_format = "text", opt_output;
  opt->add_option("problem", opt_problem, "vessel or cantilever")
      ->required()
      ->check(CLI::IsMember({"vessel", "cantilever"}));
  opt->add_option("--format", opt_format)->check(CLI::IsMember(formats));
  opt->add_option("--output", opt_output, "write to file instead of stdout");

  // validate
  auto* val = app.add_subcommand("validate", "Validate a corpus of claimed solutions");
  std::string val_path = kDefaultCorpus, val_format = "text", val_output;
  double claim_tol = ValidatorTolerances{}.claim;
  double report_tol = ValidatorTolerances{}.report;
  val->add_option("path", val_path, "corpus file (defaults to the shipped table)");
  val->add_option("--format", val_format)->check(CLI::IsMember(formats));
  val->add_option("--output", val_output);
  val->add_option("--claim-tol", claim_tol,
                  "margin below the proven optimum that counts as anomalous")
      ->envname("DESIGNBENCH_CLAIM_TOL");
  val->add_option("--report-tol", report_tol,
                  "allowed |reported - recomputed| objective mismatch")
      ->envname("DESIGNBENCH_REPORT_TOL");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Enumerate optima for all thickness pairs");
  std::string swp_format = "csv", swp_output;
  swp->add_option("--format", swp_format)->check(CLI::IsMember(formats));
  swp->add_option("--output", swp_output);

  // bench
  auto* ben = app.add_subcommand("bench", "Run seeded reference optimizers");
  std::string ben_problem, ben_algo = "de", ben_seeds = "1..10";
  std::string ben_thresholds = "0.001,0.01", ben_format = "text", ben_output;
  long ben_budget = 50000;
  int ben_population = 40;
  double ben_weight = 0.7, ben_crossover = 0.9, ben_penalty = 1e8;
  ben->add_option("problem", ben_problem, "vessel or cantilever")
      ->required()
      ->check(CLI::IsMember({"vessel", "cantilever"}));
  ben->add_option("--algo", ben_algo)->check(CLI::IsMember({"de", "random"}));
  ben->add_option("--seeds", ben_seeds, "range a..b or comma list");
  ben->add_option("--budget", ben_budget)->check(CLI::PositiveNumber);
  ben->add_option("--population", ben_population)->check(CLI::Range(4, 100000));
  ben->add_option("--F", ben_weight)->check(CLI::Range(1e-9, 2.0));
  ben->add_option("--CR", ben_crossover)->check(CLI::Range(0.0, 1.0));
  ben->add_option("--penalty", ben_penalty)->check(CLI::NonNegativeNumber);
  ben->add_option("--thresholds", ben_thresholds, "comma list of gap thresholds");
  ben->add_option("--format", ben_format)->check(CLI::IsMember(formats));
  ben->add_option("--output", ben_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt->parsed()) return cmd_optimum(opt_problem, opt_format, opt_output);
    if (val->parsed())
      return cmd_validate(val_path, val_format, val_output, claim_tol, report_tol);
    if (swp->parsed()) return cmd_sweep(swp_format, swp_output);
    if (ben->parsed())
      return cmd_bench(ben_problem, ben_algo, ben_seeds, ben_budget,
                       ben_population, ben_weight, ben_crossover, ben_penalty,
                       ben_thresholds, ben_format, ben_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
