#include <cmath>
#include <sstream>

#include <doctest.h>

#include "designbench/analytic.hpp"
#include "designbench/harness.hpp"

using namespace designbench;

namespace {

ProvenOptima optima() {
  static const ProvenOptima o{vessel_global_optimum().objective,
                              cantilever_global_optimum().objective};
  return o;
}

}  // namespace

TEST_CASE("degenerate budget") {
  RunConfig cfg;
  cfg.algorithm = Algorithm::random_search;
  cfg.seed = 1;
  cfg.budget = 1;
  const RunResult r = run(Problem::vessel, cfg, optima());
  CHECK(r.evaluations_used == 1);
  CHECK(r.history.size() == 1);
  CHECK(r.history[0].evaluation_index == 1);
}

TEST_CASE("identical configs produce identical results") {
  RunConfig cfg;
  cfg.seed = 42;
  cfg.budget = 4000;
  const RunResult a = run(Problem::vessel, cfg, optima());
  const RunResult b = run(Problem::vessel, cfg, optima());
  CHECK(a.best_penalized_f == b.best_penalized_f);
  CHECK(a.best_design == b.best_design);
  CHECK(a.best_feasible_f == b.best_feasible_f);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].best_penalized_f == b.history[i].best_penalized_f);
    CHECK(a.history[i].evaluation_index == b.history[i].evaluation_index);
  }
}

TEST_CASE("different seeds explore differently") {
  RunConfig a, b;
  a.seed = 1;
  b.seed = 2;
  a.budget = b.budget = 2000;
  CHECK(run(Problem::vessel, a, optima()).best_penalized_f !=
        run(Problem::vessel, b, optima()).best_penalized_f);
}

TEST_CASE("invalid configs are rejected") {
  RunConfig cfg;
  cfg.budget = 0;
  CHECK_THROWS_AS(run(Problem::vessel, cfg, optima()), std::invalid_argument);
  cfg.budget = 100;
  cfg.population = 3;
  CHECK_THROWS_AS(run(Problem::vessel, cfg, optima()), std::invalid_argument);
  cfg.population = 40;
  cfg.crossover = 1.5;
  CHECK_THROWS_AS(run(Problem::vessel, cfg, optima()), std::invalid_argument);
  cfg.crossover = 0.9;
  cfg.weight = 2.5;
  CHECK_THROWS_AS(run(Problem::vessel, cfg, optima()), std::invalid_argument);
}

TEST_CASE("DE closes in on the vessel certificate") {
  RunConfig cfg;
  cfg.seed = 42;
  cfg.budget = 50000;
  const RunResult r = run(Problem::vessel, cfg, optima());
  REQUIRE(r.best_feasible_f.has_value());
  CHECK(r.gap < 1e-3);
  CHECK(*r.best_feasible_f >= optima().vessel_f_min - 1e-9);
}

TEST_CASE("DE closes in on the cantilever certificate") {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.budget = 30000;
  const RunResult r = run(Problem::cantilever, cfg, optima());
  REQUIRE(r.best_feasible_f.has_value());
  CHECK(r.gap < 1e-2);
  CHECK(*r.best_feasible_f >= optima().cantilever_f_min - 1e-9);
}

TEST_CASE("best-so-far history never increases") {
  RunConfig cfg;
  cfg.seed = 5;
  cfg.budget = 10000;
  const RunResult r = run(Problem::vessel, cfg, optima());
  for (std::size_t i = 1; i < r.history.size(); ++i)
    CHECK(r.history[i].best_penalized_f <= r.history[i - 1].best_penalized_f);
}

TEST_CASE("batch aggregates") {
  std::vector<RunConfig> configs(4);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    configs[i].seed = i + 1;
    configs[i].budget = 3000;
  }
  const double thresholds[] = {0.001, 0.5};
  const BatchStats stats = batch(Problem::vessel, configs, optima(), thresholds);
  REQUIRE(stats.rows.size() == 4);
  REQUIRE(stats.success_rates.size() == 2);
  for (double rate : stats.success_rates) {
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
  }
  CHECK(stats.best_gap <= stats.median_gap);
  CHECK(stats.median_gap <= stats.worst_gap);

  // no thresholds: aggregates only
  const BatchStats bare = batch(Problem::vessel, configs, optima());
  CHECK(bare.success_rates.empty());
  CHECK(bare.median_gap == stats.median_gap);

  // identical configs: zero variance
  std::vector<RunConfig> same(3, configs[0]);
  const BatchStats flat = batch(Problem::vessel, same, optima());
  CHECK(flat.best_gap == flat.worst_gap);
}

TEST_CASE("history csv export") {
  RunConfig cfg;
  cfg.algorithm = Algorithm::random_search;
  cfg.seed = 9;
  cfg.budget = 100;
  cfg.history_stride = 25;
  const RunResult r = run(Problem::cantilever, cfg, optima());
  std::ostringstream os;
  write_history_csv(os, r);
  const std::string text = os.str();
  CHECK(text.rfind("evaluation_index,best_penalized_f,best_feasible_f\n", 0) == 0);
  CHECK(r.history.size() == 4);
}
