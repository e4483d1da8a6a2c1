#include "designbench/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace designbench {

namespace {

bool all_finite(const VesselDesign& x) {
  return std::isfinite(x.shell_thickness) && std::isfinite(x.head_thickness) &&
         std::isfinite(x.radius) && std::isfinite(x.length);
}

void note_bound(std::vector<BoundViolation>& out, int var, double v, double lo,
                double hi) {
  if (v < lo) out.push_back({var, lo - v});
  if (v > hi) out.push_back({var, v - hi});
}

}  // namespace

double vessel_objective(const VesselDesign& x) {
  if (!all_finite(x)) throw std::domain_error("vessel_objective: non-finite input");
  const double d1 = x.shell_thickness, d2 = x.head_thickness;
  const double r = x.radius, L = x.length;
  return kShellCost * d1 * r * L + kHeadCost * d2 * r * r +
         kShellLengthCost * d1 * d1 * L + kShellRadiusCost * d1 * d1 * r;
}

std::array<double, 4> vessel_constraints(const VesselDesign& x) {
  if (!all_finite(x)) throw std::domain_error("vessel_constraints: non-finite input");
  const double pi = std::numbers::pi;
  const double r = x.radius, L = x.length;
  return {
      -x.shell_thickness + kShellStressRatio * r,
      -x.head_thickness + kHeadStressRatio * r,
      -pi * r * r * L - (4.0 * pi / 3.0) * r * r * r + kRequiredVolume,
      L - kLengthStructuralMax,
  };
}

GridCheck vessel_grid_check(const VesselDesign& x, double tol) {
  auto nearest = [](double d) {
    return static_cast<int>(std::llround(d / kThicknessStep));
  };
  auto on = [&](double d, int m) {
    return std::abs(d / kThicknessStep - m) <= tol &&
           m >= kMinThicknessMultiple && m <= kMaxThicknessMultiple;
  };
  const int i = nearest(x.shell_thickness);
  const int j = nearest(x.head_thickness);
  return {on(x.shell_thickness, i) && on(x.head_thickness, j), i, j};
}

double cantilever_objective(const CantileverDesign& x) {
  double sum = 0.0;
  for (double h : x.heights) {
    if (!std::isfinite(h)) throw std::domain_error("cantilever_objective: non-finite input");
    sum += h;
  }
  return kCantileverWeight * sum;
}

double cantilever_constraint(const CantileverDesign& x) {
  double g = -1.0;
  for (std::size_t i = 0; i < x.heights.size(); ++i) {
    const double h = x.heights[i];
    if (h == 0.0) throw std::domain_error("cantilever_constraint: zero section height");
    g += kCantileverLoads[i] / (h * h * h);
  }
  return g;
}

EvaluationReport evaluate_vessel(const VesselDesign& x,
                                 const FeasibilityTolerances& tol) {
  EvaluationReport rep;
  rep.objective = vessel_objective(x);
  const auto g = vessel_constraints(x);
  rep.constraint_slacks.assign(g.begin(), g.end());

  note_bound(rep.bound_violations, 0, x.shell_thickness, kThicknessStep,
             kMaxThicknessMultiple * kThicknessStep);
  note_bound(rep.bound_violations, 1, x.head_thickness, kThicknessStep,
             kMaxThicknessMultiple * kThicknessStep);
  note_bound(rep.bound_violations, 2, x.radius, kRadiusLo, kRadiusHi);
  note_bound(rep.bound_violations, 3, x.length, kLengthLo, kLengthHi);

  rep.grid_violation = !vessel_grid_check(x, tol.grid).on_grid;

  const std::array<double, 4> ctol{tol.stress, tol.stress, tol.volume, tol.length};
  bool slacks_ok = true;
  for (int i = 0; i < 4; ++i) {
    if (g[i] > ctol[i]) slacks_ok = false;
    rep.max_violation = std::max(rep.max_violation, g[i]);
  }
  bool bounds_ok = true;
  for (const auto& b : rep.bound_violations) {
    if (b.amount > tol.bounds) bounds_ok = false;
    rep.max_violation = std::max(rep.max_violation, b.amount);
  }
  rep.feasible = slacks_ok && bounds_ok && !rep.grid_violation;
  return rep;
}

EvaluationReport evaluate_cantilever(const CantileverDesign& x,
                                     const FeasibilityTolerances& tol) {
  EvaluationReport rep;
  rep.objective = cantilever_objective(x);
  const double g = cantilever_constraint(x);
  rep.constraint_slacks = {g};
  for (std::size_t i = 0; i < x.heights.size(); ++i)
    note_bound(rep.bound_violations, static_cast<int>(i), x.heights[i],
               kCantileverLo, kCantileverHi);

  rep.max_violation = std::max(0.0, g);
  bool bounds_ok = true;
  for (const auto& b : rep.bound_violations) {
    if (b.amount > tol.bounds) bounds_ok = false;
    rep.max_violation = std::max(rep.max_violation, b.amount);
  }
  rep.feasible = g <= tol.stress && bounds_ok;
  return rep;
}

}  // namespace designbench
