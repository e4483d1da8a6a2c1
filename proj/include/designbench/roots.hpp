#pragma once

#include <array>
#include <functional>
#include <vector>

#include "designbench/constants.hpp"

namespace designbench {

enum class RootMethod { newton, bisection_fallback };

struct RootResult {
  double root;
  double residual;  // |f(root)|, <= requested tolerance on success
  int iterations;
  RootMethod method;
};

/// Newton's method on a sign-changing bracket [lo, hi], falling back to
/// bisection whenever a step leaves the bracket or the derivative degenerates
/// (|df| < 1e-14). The returned root never leaves the initial bracket.
///
/// Throws std::invalid_argument without a sign change, std::runtime_error if
/// max_iter is exhausted before |f| <= tol.
RootResult newton_safeguarded(const std::function<double(double)>& f,
                              const std::function<double(double)>& df,
                              double lo, double hi, double tol = 1e-12,
                              int max_iter = 100);

/// The unique positive radius r with pi r^2 L + (4 pi / 3) r^3 = volume.
double solve_vessel_radius(double length, double volume = kRequiredVolume);

struct PolyRoot {
  double value;
  int multiplicity;
};

/// All real roots of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, ascending, with
/// repeated roots reported once and flagged by multiplicity. Degenerate
/// leading coefficients reduce the degree; an all-zero polynomial is a
/// std::domain_error. Each root satisfies |p(root)| <= 1e-6 * max(1, max|ci|).
std::vector<PolyRoot> quartic_real_roots(double c4, double c3, double c2,
                                         double c1, double c0);

/// The positive multiplier solving 3 lambda / k = sum_i (3 lambda a_i / k)^{1/4}.
/// Solved in closed form (t = (sum a_i^{1/4})^{4/3}, lambda = k t / 3) and
/// cross-checked against fixed-point iteration; disagreement beyond tol is a
/// std::logic_error. Non-positive inputs are a std::domain_error.
double solve_cantilever_lambda(const std::array<double, 5>& a, double k,
                               double tol = 1e-12);

}  // namespace designbench
