#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "designbench/problems.hpp"

using namespace designbench;

namespace {
const VesselDesign kOptimum{0.8125, 0.4375, 42.0984455958549,
                            176.6365958424394};
}

TEST_CASE("vessel objective matches the published values") {
  CHECK(vessel_objective(kOptimum) ==
        doctest::Approx(6059.714335048436).epsilon(1e-12));
  CHECK(vessel_objective({0.8125, 0.4375, 40.31961872409872, 200.0}) ==
        doctest::Approx(6288.67704565344).epsilon(1e-9));
  // Unit design sums the four cost coefficients.
  CHECK(vessel_objective({1, 1, 1, 1}) == doctest::Approx(25.4066).epsilon(1e-12));
}

TEST_CASE("vessel objective rejects non-finite input") {
  CHECK_THROWS_AS(vessel_objective({std::numeric_limits<double>::quiet_NaN(),
                                    0.4375, 42.0, 176.0}),
                  std::domain_error);
  CHECK_THROWS_AS(vessel_objective({0.8, 0.4, std::numeric_limits<double>::infinity(), 176.0}),
                  std::domain_error);
}

TEST_CASE("vessel constraints") {
  const auto g = vessel_constraints(kOptimum);
  CHECK(std::abs(g[0]) < 1e-9);   // stress bound active
  CHECK(std::abs(g[2]) < 1e-3);   // volume bound active (1e6 scale)
  CHECK(g[1] < 0.0);
  CHECK(g[3] < 0.0);

  CHECK(vessel_constraints({1, 1, 10, 240})[3] == 0.0);

  const auto g2 = vessel_constraints({0.8125, 0.4375, 45.859538784067, 100.0});
  CHECK(std::abs(g2[1]) < 1e-12);
}

TEST_CASE("g4 is redundant for in-bound lengths") {
  for (double L = kLengthLo; L <= kLengthHi; L += 1.0)
    CHECK(vessel_constraints({1, 1, 50, L})[3] < 0.0);
}

TEST_CASE("thickness grid check") {
  const auto ok = vessel_grid_check({0.8125, 0.4375, 42, 176});
  CHECK(ok.on_grid);
  CHECK(ok.shell_multiple == 13);
  CHECK(ok.head_multiple == 7);

  CHECK_FALSE(vessel_grid_check({0.8, 0.4375, 42, 176}, 1e-9).on_grid);

  const auto ends = vessel_grid_check({0.0625, 6.1875, 42, 176});
  CHECK(ends.on_grid);
  CHECK(ends.shell_multiple == 1);
  CHECK(ends.head_multiple == 99);

  // Multiples outside [1, 99] are off-grid even if exact.
  CHECK_FALSE(vessel_grid_check({100 * 0.0625, 0.4375, 42, 176}).on_grid);
}

TEST_CASE("cantilever objective") {
  const CantileverDesign star{{6.0160159, 5.3091739, 4.4943296, 3.5014750,
                               2.15266533}};
  CHECK(cantilever_objective(star) ==
        doctest::Approx(1.339956367).epsilon(1e-8));
  CHECK(cantilever_objective({{6.0089, 5.3049, 4.5023, 3.5077, 2.1504}}) ==
        doctest::Approx(1.33999).epsilon(1e-4));
  CHECK(cantilever_objective({{1, 1, 1, 1, 1}}) == doctest::Approx(0.312));
  CHECK_THROWS_AS(
      cantilever_objective({{1, 1, std::numeric_limits<double>::quiet_NaN(), 1, 1}}),
      std::domain_error);
}

TEST_CASE("cantilever constraint") {
  const CantileverDesign star{{6.0160159, 5.3091739, 4.4943296, 3.5014750,
                               2.15266533}};
  CHECK(std::abs(cantilever_constraint(star)) < 1e-7);

  // Equal-contribution construction: every term is exactly 1/5.
  const double s = std::cbrt(5.0);
  const CantileverDesign eq{{std::cbrt(61.0) * s, std::cbrt(37.0) * s,
                             std::cbrt(19.0) * s, std::cbrt(7.0) * s, s}};
  CHECK(std::abs(cantilever_constraint(eq)) < 1e-12);

  CHECK(cantilever_constraint({{100, 100, 100, 100, 100}}) ==
        doctest::Approx(125.0 / 1e6 - 1.0));
  CHECK_THROWS_AS(cantilever_constraint({{1, 0, 1, 1, 1}}), std::domain_error);
}

TEST_CASE("vessel objective is strictly monotone in each variable") {
  std::mt19937_64 gen(7);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * (double(gen() >> 11) * 0x1.0p-53);
  };
  for (int it = 0; it < 1000; ++it) {
    VesselDesign x{u(0.05, 7), u(0.05, 7), u(1, 220), u(1, 220)};
    const double f = vessel_objective(x);
    const double step = u(0.01, 5.0);
    VesselDesign y = x;
    switch (it % 4) {
      case 0: y.shell_thickness += step; break;
      case 1: y.head_thickness += step; break;
      case 2: y.radius += step; break;
      case 3: y.length += step; break;
    }
    CHECK(vessel_objective(y) > f);
  }
}

TEST_CASE("cantilever objective depends on the section sum only") {
  CantileverDesign x{{5.0, 1.5, 9.25, 0.125, 2.0}};
  CantileverDesign sorted = x;
  std::sort(sorted.heights.begin(), sorted.heights.end());
  CHECK(cantilever_objective(x) == cantilever_objective(sorted));
}

TEST_CASE("evaluation reports") {
  const auto rep = evaluate_vessel(kOptimum);
  CHECK(rep.feasible);
  CHECK_FALSE(rep.grid_violation);
  CHECK(rep.constraint_slacks.size() == 4);
  CHECK(rep.bound_violations.empty());

  // Off-grid thickness flips feasibility through the grid flag alone.
  auto off = kOptimum;
  off.shell_thickness = 0.8;
  const auto rep2 = evaluate_vessel(off);
  CHECK(rep2.grid_violation);
  CHECK_FALSE(rep2.feasible);

  // Out-of-bounds radius is a bound violation.
  auto wide = kOptimum;
  wide.radius = 250.0;
  CHECK_FALSE(evaluate_vessel(wide).bound_violations.empty());

  const auto crep = evaluate_cantilever({{7, 6, 5, 4, 3}});
  CHECK(crep.feasible);
  CHECK_FALSE(evaluate_cantilever({{1, 1, 1, 1, 1}}).feasible);
}

TEST_CASE("evaluation is deterministic") {
  const auto a = evaluate_vessel(kOptimum);
  const auto b = evaluate_vessel(kOptimum);
  CHECK(a.objective == b.objective);
  CHECK(a.constraint_slacks == b.constraint_slacks);
}
