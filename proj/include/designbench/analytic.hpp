#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "designbench/problems.hpp"

namespace designbench {

/// Vessel cost with the thicknesses fixed: f(r, L) = a r L + b r^2 + c L + d r.
struct ReducedVesselObjective {
  double a, b, c, d;

  static ReducedVesselObjective for_thickness(double shell, double head);

  double value(double r, double length) const;
  /// Value with L eliminated via the active volume constraint.
  double value_on_curve(double r) const;
  /// d/dr of value_on_curve.
  double derivative_on_curve(double r) const;
};

/// Length that makes the volume constraint active at radius r.
double vessel_length_for_radius(double r, double volume = kRequiredVolume);

enum class Provenance { endpoint_argument, lagrange_stationarity, lambda_closed_form };

struct VesselCertificate {
  VesselDesign design;
  double objective;
  std::vector<int> active_constraints;  // indices into [g1..g4]
  std::vector<double> multipliers;      // volume equality, then active stress bound
  double kkt_residual;
  Provenance provenance;
  std::vector<double> stationarity_roots;     // interior candidates, may be empty
  double rejected_endpoint_objective;         // cost at the competing curve end
  VesselDesign rejected_endpoint;
};

struct CantileverCertificate {
  CantileverDesign design;
  double objective;
  std::vector<int> active_constraints;
  std::vector<double> multipliers;  // the single deflection multiplier
  double kkt_residual;
  Provenance provenance;
};

/// Radius range compatible with the volume constraint and the length bounds:
/// r1 at L = 200, r2 at L = 10.
std::pair<double, double> vessel_radius_interval();

struct MinThickness {
  int shell_multiple;  // I
  int head_multiple;   // J
  double shell;        // I * step
  double head;         // J * step
};

/// Smallest on-grid thicknesses whose stress limits admit radius r1.
MinThickness vessel_min_thicknesses(double r1);

/// Largest radius the stress constraints allow for the given thicknesses.
double vessel_radius_cap(double shell, double head);

/// Real roots of the stationarity condition of f(r, L(r)) inside
/// [r_lo, r_hi], each verified to satisfy |d/dr f| <= 1e-6. Obtained by
/// eliminating the multiplier and L from the Lagrange conditions, which
/// clears to the quartic
///   pi (2b - 8a/3) r^4 + pi (d - 4c/3) r^3 - a K r - 2 c K = 0.
std::vector<double> vessel_stationarity_roots(const ReducedVesselObjective& f,
                                              double r_lo, double r_hi);

/// Proven vessel optimum: minimal on-grid thicknesses, then the best point on
/// the active-volume curve among its two endpoints and any interior
/// stationary points.
VesselCertificate vessel_global_optimum();

/// Proven cantilever optimum from the closed-form multiplier.
CantileverCertificate cantilever_global_optimum();

struct SweepRow {
  int shell_multiple;  // I
  int head_multiple;   // J
  double shell;
  double head;
  bool feasible;
  double r_opt;  // NaN when infeasible
  double L_opt;
  double f_opt;
};

/// Per-combination optima over every thickness pair (I, J) in [1, 99]^2.
/// Rows are ordered I-major. This is the brute-force cross-check of the
/// analytic path.
std::vector<SweepRow> vessel_grid_sweep();

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace designbench
