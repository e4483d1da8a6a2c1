#pragma once

#include <array>
#include <vector>

#include "designbench/constants.hpp"

namespace designbench {

/// A pressure vessel design point: shell thickness, head thickness,
/// inner radius and cylinder length, all in inches.
struct VesselDesign {
  double shell_thickness;  // d1
  double head_thickness;   // d2
  double radius;           // r
  double length;           // L
};

/// A cantilever beam design point: five section heights.
struct CantileverDesign {
  std::array<double, 5> heights;
};

/// Per-constraint feasibility tolerances. The volume constraint lives on a
/// ~1e6 scale, so it gets an absolute tolerance of its own.
struct FeasibilityTolerances {
  double stress = 1e-9;  // g1, g2
  double volume = 1e-3;  // g3
  double length = 1e-9;  // g4
  double bounds = 1e-9;
  double grid = 1e-9;
};

struct BoundViolation {
  int variable;   // index into the design vector
  double amount;  // distance outside the bound, > 0
};

/// Result of evaluating a design against its problem definition.
struct EvaluationReport {
  double objective = 0.0;
  std::vector<double> constraint_slacks;  // g_i(x); <= 0 means satisfied
  std::vector<BoundViolation> bound_violations;
  bool grid_violation = false;  // vessel only
  bool feasible = false;
  double max_violation = 0.0;
};

struct GridCheck {
  bool on_grid;
  int shell_multiple;  // nearest multiple of the thickness step for d1
  int head_multiple;   // and for d2
};

/// Cost of a vessel design. Throws std::domain_error on non-finite input.
double vessel_objective(const VesselDesign& x);

/// The four constraint slacks [g1, g2, g3, g4]; g_i <= 0 means satisfied.
std::array<double, 4> vessel_constraints(const VesselDesign& x);

/// Whether both thicknesses sit on the rolled-plate grid (within tol) with
/// multiples inside [1, 99]. Returns the nearest multiples either way.
GridCheck vessel_grid_check(const VesselDesign& x, double tol = 1e-9);

/// Weight of a cantilever design. Throws std::domain_error on non-finite input.
double cantilever_objective(const CantileverDesign& x);

/// Deflection constraint slack sum(a_i / x_i^3) - 1. Throws
/// std::domain_error if any section height is zero.
double cantilever_constraint(const CantileverDesign& x);

EvaluationReport evaluate_vessel(const VesselDesign& x,
                                 const FeasibilityTolerances& tol = {});
EvaluationReport evaluate_cantilever(const CantileverDesign& x,
                                     const FeasibilityTolerances& tol = {});

}  // namespace designbench
