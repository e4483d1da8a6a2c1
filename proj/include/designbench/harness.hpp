#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "designbench/validator.hpp"

namespace designbench {

enum class Algorithm { random_search, differential_evolution };

struct RunConfig {
  Algorithm algorithm = Algorithm::differential_evolution;
  std::uint64_t seed = 0;
  long budget = 50000;  // objective evaluations
  int population = 40;  // DE only
  double weight = 0.7;      // DE differential weight F
  double crossover = 0.9;   // DE crossover rate CR
  double penalty_coefficient = 1e8;
  long history_stride = 0;  // 0 = budget / 100
};

struct HistoryPoint {
  long evaluation_index;
  double best_penalized_f;
  double best_feasible_f;  // NaN until a feasible point is seen
};

struct RunResult {
  std::vector<double> best_design;  // decoded (d1, d2, r, L) or x1..x5
  double best_penalized_f;
  std::optional<double> best_feasible_f;
  std::vector<double> best_feasible_design;
  long evaluations_used;
  double gap;  // (best_feasible_f - f_min) / f_min, NaN without a feasible hit
  std::vector<HistoryPoint> history;
};

/// mt19937_64 with a fixed bits-to-double mapping, so traces are identical
/// on every conforming platform.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t integer(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

/// One seeded optimizer run. Deterministic for a fixed (problem, config).
/// Invalid configs throw std::invalid_argument.
RunResult run(Problem problem, const RunConfig& config,
              const ProvenOptima& optima);

struct BatchStats {
  struct Row {
    std::uint64_t seed;
    double gap;
    double best_feasible_f;   // NaN without a feasible hit
    double best_penalized_f;
  };
  std::vector<Row> rows;
  std::vector<double> thresholds;
  std::vector<double> success_rates;  // fraction of runs with gap < threshold
  double median_gap;
  double best_gap;
  double worst_gap;
};

BatchStats batch(Problem problem, std::span<const RunConfig> configs,
                 const ProvenOptima& optima,
                 std::span<const double> thresholds = {});

void write_history_csv(std::ostream& os, const RunResult& result);

}  // namespace designbench
