#include "designbench/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "designbench/print.hpp"

namespace designbench {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Space {
  int dim;
  std::array<double, 5> lo, hi;
};

Space space_for(Problem p) {
  if (p == Problem::vessel)
    // Thickness multiples evolve as continuous values, rounded at evaluation.
    return {4,
            {double(kMinThicknessMultiple), double(kMinThicknessMultiple),
             kRadiusLo, kLengthLo},
            {double(kMaxThicknessMultiple), double(kMaxThicknessMultiple),
             kRadiusHi, kLengthHi}};
  return {5,
          {kCantileverLo, kCantileverLo, kCantileverLo, kCantileverLo, kCantileverLo},
          {kCantileverHi, kCantileverHi, kCantileverHi, kCantileverHi, kCantileverHi}};
}

struct EvalOut {
  double penalized;
  double objective;
  bool feasible;
  std::vector<double> design;
};

double sq(double v) { return v * v; }

EvalOut evaluate(Problem p, std::span<const double> genome, double rho) {
  EvalOut out;
  if (p == Problem::vessel) {
    const int i = std::clamp<int>(int(std::llround(genome[0])),
                                  kMinThicknessMultiple, kMaxThicknessMultiple);
    const int j = std::clamp<int>(int(std::llround(genome[1])),
                                  kMinThicknessMultiple, kMaxThicknessMultiple);
    const VesselDesign x{i * kThicknessStep, j * kThicknessStep, genome[2],
                         genome[3]};
    const EvaluationReport rep = evaluate_vessel(x);
    const auto& g = rep.constraint_slacks;
    out.objective = rep.objective;
    // Violations normalized to comparable scale before squaring.
    out.penalized = rep.objective +
                    rho * (sq(std::max(0.0, g[0])) + sq(std::max(0.0, g[1])) +
                           sq(std::max(0.0, g[2] / kRequiredVolume)) +
                           sq(std::max(0.0, g[3] / kLengthStructuralMax)));
    out.feasible = rep.feasible;
    out.design = {x.shell_thickness, x.head_thickness, x.radius, x.length};
  } else {
    CantileverDesign x;
    std::copy(genome.begin(), genome.end(), x.heights.begin());
    const EvaluationReport rep = evaluate_cantilever(x);
    out.objective = rep.objective;
    out.penalized =
        rep.objective + rho * sq(std::max(0.0, rep.constraint_slacks[0]));
    out.feasible = rep.feasible;
    out.design.assign(x.heights.begin(), x.heights.end());
  }
  return out;
}

struct Tracker {
  long stride;
  long evals = 0;
  double best_penalized = std::numeric_limits<double>::infinity();
  std::vector<double> best_design;
  double best_feasible = kNan;
  std::vector<double> best_feasible_design;
  std::vector<HistoryPoint> history;

  void observe(const EvalOut& e) {
    ++evals;
    if (e.penalized < best_penalized) {
      best_penalized = e.penalized;
      best_design = e.design;
    }
    if (e.feasible &&
        (std::isnan(best_feasible) || e.objective < best_feasible)) {
      best_feasible = e.objective;
      best_feasible_design = e.design;
    }
    if (evals % stride == 0)
      history.push_back({evals, best_penalized, best_feasible});
  }
};

void check_config(const RunConfig& c) {
  if (c.budget <= 0) throw std::invalid_argument("harness: budget must be > 0");
  if (c.algorithm == Algorithm::differential_evolution) {
    if (c.population < 4)
      throw std::invalid_argument("harness: DE population must be >= 4");
    if (!(c.weight > 0.0 && c.weight <= 2.0))
      throw std::invalid_argument("harness: DE weight must be in (0, 2]");
    if (!(c.crossover >= 0.0 && c.crossover <= 1.0))
      throw std::invalid_argument("harness: DE crossover must be in [0, 1]");
  }
  if (!(c.penalty_coefficient >= 0))
    throw std::invalid_argument("harness: penalty coefficient must be >= 0");
}

std::vector<double> random_genome(PortableRng& rng, const Space& s) {
  std::vector<double> g(s.dim);
  for (int d = 0; d < s.dim; ++d) g[d] = rng.uniform(s.lo[d], s.hi[d]);
  return g;
}

}  // namespace

RunResult run(Problem problem, const RunConfig& config,
              const ProvenOptima& optima) {
  check_config(config);
  const Space space = space_for(problem);
  PortableRng rng(config.seed);
  Tracker track;
  track.stride = config.history_stride > 0 ? config.history_stride
                                           : std::max<long>(1, config.budget / 100);
  const double rho = config.penalty_coefficient;

  if (config.algorithm == Algorithm::random_search) {
    while (track.evals < config.budget)
      track.observe(evaluate(problem, random_genome(rng, space), rho));
  } else {
    // DE/rand/1/bin with greedy selection on the penalized objective.
    const int np = config.population;
    std::vector<std::vector<double>> pop;
    std::vector<double> fitness;
    for (int i = 0; i < np && track.evals < config.budget; ++i) {
      pop.push_back(random_genome(rng, space));
      const EvalOut e = evaluate(problem, pop.back(), rho);
      track.observe(e);
      fitness.push_back(e.penalized);
    }
    while (track.evals < config.budget && int(pop.size()) == np) {
      for (int i = 0; i < np && track.evals < config.budget; ++i) {
        std::uint64_t r1, r2, r3;
        do r1 = rng.integer(np); while (int(r1) == i);
        do r2 = rng.integer(np); while (int(r2) == i || r2 == r1);
        do r3 = rng.integer(np); while (int(r3) == i || r3 == r1 || r3 == r2);

        std::vector<double> trial = pop[i];
        const std::uint64_t forced = rng.integer(space.dim);
        for (int d = 0; d < space.dim; ++d) {
          if (rng.uniform() < config.crossover || std::uint64_t(d) == forced) {
            const double m = pop[r1][d] + config.weight * (pop[r2][d] - pop[r3][d]);
            trial[d] = std::clamp(m, space.lo[d], space.hi[d]);
          }
        }
        const EvalOut e = evaluate(problem, trial, rho);
        track.observe(e);
        if (e.penalized <= fitness[i]) {
          pop[i] = std::move(trial);
          fitness[i] = e.penalized;
        }
      }
    }
  }

  RunResult result;
  result.best_design = track.best_design;
  result.best_penalized_f = track.best_penalized;
  result.evaluations_used = track.evals;
  result.history = std::move(track.history);
  const double f_min = problem == Problem::vessel ? optima.vessel_f_min
                                                  : optima.cantilever_f_min;
  if (!std::isnan(track.best_feasible)) {
    result.best_feasible_f = track.best_feasible;
    result.best_feasible_design = track.best_feasible_design;
    result.gap = (track.best_feasible - f_min) / f_min;
  } else {
    result.gap = kNan;
  }
  return result;
}

BatchStats batch(Problem problem, std::span<const RunConfig> configs,
                 const ProvenOptima& optima,
                 std::span<const double> thresholds) {
  if (configs.empty()) throw std::invalid_argument("batch: no configs");
  BatchStats stats;
  stats.thresholds.assign(thresholds.begin(), thresholds.end());
  std::vector<double> gaps;
  for (const RunConfig& c : configs) {
    const RunResult r = run(problem, c, optima);
    stats.rows.push_back({c.seed, r.gap,
                          r.best_feasible_f.value_or(kNan),
                          r.best_penalized_f});
    gaps.push_back(std::isnan(r.gap) ? std::numeric_limits<double>::infinity()
                                     : r.gap);
  }
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  stats.best_gap = sorted.front();
  stats.worst_gap = sorted.back();
  const std::size_t n = sorted.size();
  stats.median_gap = (n % 2) ? sorted[n / 2]
                             : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  for (double thr : thresholds) {
    int hits = 0;
    for (double g : gaps)
      if (g < thr) ++hits;
    stats.success_rates.push_back(double(hits) / double(n));
  }
  return stats;
}

void write_history_csv(std::ostream& os, const RunResult& result) {
  os << "evaluation_index,best_penalized_f,best_feasible_f\n";
  for (const HistoryPoint& h : result.history)
    os << h.evaluation_index << ',' << fmt17(h.best_penalized_f) << ','
       << fmt17(h.best_feasible_f) << '\n';
}

}  // namespace designbench
