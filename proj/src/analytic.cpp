#include "designbench/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "designbench/print.hpp"
#include "designbench/roots.hpp"

namespace designbench {

namespace {

constexpr double kPi = std::numbers::pi;

int ceil_multiple(double x) {
  // Nudge so exactly grid-aligned values do not round up a notch.
  return std::max(1, static_cast<int>(std::ceil(x - 1e-9)));
}

double golden_min(const ReducedVesselObjective& f, double a, double b,
                  double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f.value_on_curve(c);
  double fd = f.value_on_curve(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f.value_on_curve(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f.value_on_curve(d);
    }
  }
  return 0.5 * (a + b);
}

double curve_second_derivative(const ReducedVesselObjective& f, double r) {
  const double K = kRequiredVolume;
  return 2.0 * f.a * K / (kPi * r * r * r) + (2.0 * f.b - 8.0 * f.a / 3.0) +
         6.0 * f.c * K / (kPi * r * r * r * r);
}

// Best point of f on the active-volume curve over [r_lo, r_hi]: both
// endpoints plus any interior stationary point refined by golden section.
std::pair<double, double> minimize_on_curve(const ReducedVesselObjective& f,
                                            double r_lo, double r_hi) {
  double best_r = r_hi;
  double best_f = f.value_on_curve(r_hi);
  if (const double v = f.value_on_curve(r_lo); v < best_f) {
    best_f = v;
    best_r = r_lo;
  }
  constexpr int kScan = 48;
  double prev_r = r_lo;
  double prev_d = f.derivative_on_curve(r_lo);
  for (int i = 1; i <= kScan; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / kScan;
    const double d = f.derivative_on_curve(r);
    if (prev_d < 0.0 && d >= 0.0) {
      const double rm = golden_min(f, prev_r, r, 1e-10);
      if (const double v = f.value_on_curve(rm); v < best_f) {
        best_f = v;
        best_r = rm;
      }
    }
    prev_r = r;
    prev_d = d;
  }
  return {best_r, best_f};
}

}  // namespace

ReducedVesselObjective ReducedVesselObjective::for_thickness(double shell,
                                                             double head) {
  return {kShellCost * shell, kHeadCost * head,
          kShellLengthCost * shell * shell, kShellRadiusCost * shell * shell};
}

double ReducedVesselObjective::value(double r, double length) const {
  return a * r * length + b * r * r + c * length + d * r;
}

double ReducedVesselObjective::value_on_curve(double r) const {
  return value(r, vessel_length_for_radius(r));
}

double ReducedVesselObjective::derivative_on_curve(double r) const {
  const double K = kRequiredVolume;
  return -a * K / (kPi * r * r) + (2.0 * b - 8.0 * a / 3.0) * r +
         (d - 4.0 * c / 3.0) - 2.0 * c * K / (kPi * r * r * r);
}

double vessel_length_for_radius(double r, double volume) {
  return volume / (kPi * r * r) - 4.0 * r / 3.0;
}

std::pair<double, double> vessel_radius_interval() {
  return {solve_vessel_radius(kLengthHi), solve_vessel_radius(kLengthLo)};
}

MinThickness vessel_min_thicknesses(double r1) {
  const int i = ceil_multiple(kShellStressRatio * r1 / kThicknessStep);
  const int j = ceil_multiple(kHeadStressRatio * r1 / kThicknessStep);
  return {i, j, i * kThicknessStep, j * kThicknessStep};
}

double vessel_radius_cap(double shell, double head) {
  return std::min(shell / kShellStressRatio, head / kHeadStressRatio);
}

std::vector<double> vessel_stationarity_roots(const ReducedVesselObjective& f,
                                              double r_lo, double r_hi) {
  const double K = kRequiredVolume;
  const double c4 = kPi * (2.0 * f.b - 8.0 * f.a / 3.0);
  const double c3 = kPi * (f.d - 4.0 * f.c / 3.0);
  const double c1 = -f.a * K;
  const double c0 = -2.0 * f.c * K;

  std::vector<double> out;
  for (const PolyRoot& pr : quartic_real_roots(c4, c3, 0.0, c1, c0)) {
    double r = pr.value;
    if (r < r_lo || r > r_hi) continue;
    for (int it = 0; it < 4; ++it) {  // polish on the curve derivative itself
      const double d2 = curve_second_derivative(f, r);
      if (d2 == 0.0) break;
      r -= f.derivative_on_curve(r) / d2;
    }
    if (r < r_lo || r > r_hi) continue;
    if (std::abs(f.derivative_on_curve(r)) > 1e-6)
      throw std::logic_error("vessel_stationarity_roots: root fails derivative check");
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VesselCertificate vessel_global_optimum() {
  const auto [r1, r2] = vessel_radius_interval();
  const MinThickness mt = vessel_min_thicknesses(r1);
  const double cap = vessel_radius_cap(mt.shell, mt.head);
  const double r_hi = std::min(cap, r2);
  const ReducedVesselObjective red =
      ReducedVesselObjective::for_thickness(mt.shell, mt.head);

  const std::vector<double> interior = vessel_stationarity_roots(red, r1, r_hi);

  std::vector<double> candidates{r_hi, r1};
  candidates.insert(candidates.end(), interior.begin(), interior.end());

  auto make_design = [&](double r) {
    return VesselDesign{mt.shell, mt.head, r, vessel_length_for_radius(r)};
  };

  double best_r = candidates.front();
  double best_f = std::numeric_limits<double>::infinity();
  for (double r : candidates) {
    const VesselDesign x = make_design(r);
    if (!evaluate_vessel(x).feasible) continue;
    if (const double v = vessel_objective(x); v < best_f) {
      best_f = v;
      best_r = r;
    }
  }

  VesselCertificate cert;
  cert.design = make_design(best_r);
  cert.objective = best_f;
  cert.stationarity_roots = interior;
  cert.provenance = (best_r == r_hi || best_r == r1)
                        ? Provenance::endpoint_argument
                        : Provenance::lagrange_stationarity;

  const double other_r = (best_r == r_hi) ? r1 : r_hi;
  cert.rejected_endpoint = make_design(other_r);
  cert.rejected_endpoint_objective = vessel_objective(cert.rejected_endpoint);

  const auto g = vessel_constraints(cert.design);
  const std::array<double, 4> act_tol{1e-9, 1e-9, 1e-3, 1e-9};
  for (int i = 0; i < 4; ++i)
    if (std::abs(g[i]) <= act_tol[i]) cert.active_constraints.push_back(i);

  // Multiplier of the volume equality from the L-stationarity equation, then
  // the multiplier of the active stress bound from the r-equation.
  const double r = cert.design.radius;
  const double L = cert.design.length;
  const double lambda = -(red.a * r + red.c) / (kPi * r * r);
  const double mu = -(red.a * L + 2.0 * red.b * r + red.d +
                      lambda * (2.0 * kPi * r * L + 4.0 * kPi * r * r)) /
                    kShellStressRatio;
  cert.multipliers = {lambda, mu};
  cert.kkt_residual = std::max({std::abs(g[2]) / kRequiredVolume,
                                std::abs(g[0]), std::max(0.0, -mu)});
  return cert;
}

CantileverCertificate cantilever_global_optimum() {
  const double k = kCantileverWeight;
  const double lambda = solve_cantilever_lambda(kCantileverLoads, k);
  const double t = 3.0 * lambda / k;

  CantileverCertificate cert;
  for (std::size_t i = 0; i < kCantileverLoads.size(); ++i)
    cert.design.heights[i] = std::pow(t * kCantileverLoads[i], 0.25);
  cert.objective = cantilever_objective(cert.design);
  cert.active_constraints = {0};
  cert.multipliers = {lambda};
  cert.provenance = Provenance::lambda_closed_form;

  double stationarity = 0.0;
  for (std::size_t i = 0; i < kCantileverLoads.size(); ++i) {
    const double x = cert.design.heights[i];
    stationarity = std::max(
        stationarity,
        std::abs(k - 3.0 * lambda * kCantileverLoads[i] / (x * x * x * x)));
  }
  cert.kkt_residual =
      std::max(stationarity, std::abs(cantilever_constraint(cert.design)));
  return cert;
}

std::vector<SweepRow> vessel_grid_sweep() {
  const auto [r1, r2] = vessel_radius_interval();
  std::vector<SweepRow> rows;
  rows.reserve(kMaxThicknessMultiple * kMaxThicknessMultiple);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (int i = kMinThicknessMultiple; i <= kMaxThicknessMultiple; ++i) {
    for (int j = kMinThicknessMultiple; j <= kMaxThicknessMultiple; ++j) {
      const double d1 = i * kThicknessStep;
      const double d2 = j * kThicknessStep;
      const double cap = std::min(vessel_radius_cap(d1, d2), r2);
      SweepRow row{i, j, d1, d2, false, nan, nan, nan};
      if (cap >= r1) {
        const ReducedVesselObjective red =
            ReducedVesselObjective::for_thickness(d1, d2);
        const auto [r_opt, f_red] = minimize_on_curve(red, r1, cap);
        row.feasible = true;
        row.r_opt = r_opt;
        row.L_opt = vessel_length_for_radius(r_opt);
        row.f_opt = vessel_objective({d1, d2, r_opt, row.L_opt});
        (void)f_red;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "I,J,d1,d2,feasible,r_opt,L_opt,f_opt\n";
  for (const SweepRow& r : rows) {
    os << r.shell_multiple << ',' << r.head_multiple << ',' << fmt17(r.shell)
       << ',' << fmt17(r.head) << ',' << (r.feasible ? "true" : "false");
    if (r.feasible)
      os << ',' << fmt17(r.r_opt) << ',' << fmt17(r.L_opt) << ','
         << fmt17(r.f_opt) << '\n';
    else
      os << ",,,\n";
  }
}

}  // namespace designbench
