#include "designbench/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace designbench {

RootResult newton_safeguarded(const std::function<double(double)>& f,
                              const std::function<double(double)>& df,
                              double lo, double hi, double tol, int max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("newton_safeguarded: tol must be > 0");
  double fa = f(lo);
  if (std::abs(fa) <= tol) return {lo, std::abs(fa), 0, RootMethod::newton};
  double fb = f(hi);
  if (std::abs(fb) <= tol) return {hi, std::abs(fb), 0, RootMethod::newton};
  if ((fa < 0) == (fb < 0))
    throw std::invalid_argument("newton_safeguarded: no sign change on bracket");

  double a = lo, b = hi;
  double x = 0.5 * (a + b);
  RootMethod method = RootMethod::newton;
  for (int it = 1; it <= max_iter; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= tol) return {x, std::abs(fx), it, method};
    if ((fx < 0) == (fa < 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    const double d = df(x);
    double next;
    if (std::abs(d) < 1e-14) {
      next = 0.5 * (a + b);
      method = RootMethod::bisection_fallback;
    } else {
      next = x - fx / d;
      if (!(next > a && next < b)) {
        next = 0.5 * (a + b);
        method = RootMethod::bisection_fallback;
      }
    }
    x = next;
  }
  throw std::runtime_error("newton_safeguarded: max_iter exceeded");
}

double solve_vessel_radius(double length, double volume) {
  if (!(length > 0) || !(volume > 0))
    throw std::domain_error("solve_vessel_radius: length and volume must be > 0");
  const double pi = std::numbers::pi;
  auto f = [=](double r) {
    return pi * r * r * length + (4.0 * pi / 3.0) * r * r * r - volume;
  };
  auto df = [=](double r) { return 2.0 * pi * r * length + 4.0 * pi * r * r; };
  const double hi =
      std::sqrt(volume / (pi * length)) + std::cbrt(3.0 * volume / (4.0 * pi));
  return newton_safeguarded(f, df, 0.0, hi, 1e-12 * volume, 200).root;
}

namespace {

// Polynomials as coefficient vectors, highest degree first.

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (double ci : c) v = v * x + ci;
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> d;
  d.reserve(n);
  for (int i = 0; i < n; ++i) d.push_back(c[i] * (n - i));
  return d;
}

double max_abs_coeff(const std::vector<double>& c) {
  double m = 0.0;
  for (double ci : c) m = std::max(m, std::abs(ci));
  return m;
}

// Bisection-guarded Newton to machine precision on a strict sign change.
double solve_on_bracket(const std::vector<double>& c,
                        const std::vector<double>& dc, double a, double b) {
  double fa = horner(c, a);
  double x = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    const double fx = horner(c, x);
    if (fx == 0.0) return x;
    if ((fx < 0) == (fa < 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    const double d = horner(dc, x);
    double next = (d != 0.0) ? x - fx / d : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(next))) return next;
    x = next;
  }
  return x;
}

// Real roots by recursive isolation: critical points of p partition the line
// into monotonic pieces; a sign change on a piece pins down exactly one root.
std::vector<double> real_roots(std::vector<double> c) {
  const double maxc = max_abs_coeff(c);
  while (c.size() > 1 && std::abs(c.front()) <= 1e-12 * maxc) c.erase(c.begin());
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  if (n == 1) return {-c[1] / c[0]};
  if (n == 2) {
    const double a = c[0], b = c[1], cc = c[2];
    const double disc = b * b - 4.0 * a * cc;
    const double disc_tol = 8.0 * 2.2e-16 * (b * b + std::abs(4.0 * a * cc));
    if (disc < -disc_tol) return {};
    if (disc <= disc_tol) return {-b / (2.0 * a)};
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = q / a;
    double r2 = (q != 0.0) ? cc / q : -b / a - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
  }

  const std::vector<double> dc = derivative(c);
  const double res_tol = 1e-6 * std::max(1.0, max_abs_coeff(c));

  double bound = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    bound = std::max(bound, std::abs(c[i]) / std::abs(c[0]));
  bound += 1.0;

  std::vector<double> points{-bound};
  for (double cp : real_roots(dc))
    if (cp > -bound && cp < bound) points.push_back(cp);
  points.push_back(bound);
  std::sort(points.begin(), points.end());

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double u = points[i], v = points[i + 1];
    const double fu = horner(c, u), fv = horner(c, v);
    if (std::abs(fu) <= res_tol) {
      roots.push_back(u);
      continue;
    }
    if (std::abs(fv) <= res_tol) continue;  // picked up as the next u
    if ((fu < 0) != (fv < 0)) roots.push_back(solve_on_bracket(c, dc, u, v));
  }
  {
    const double back = points.back();
    if (std::abs(horner(c, back)) <= res_tol) roots.push_back(back);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<PolyRoot> quartic_real_roots(double c4, double c3, double c2,
                                         double c1, double c0) {
  std::vector<double> c{c4, c3, c2, c1, c0};
  if (max_abs_coeff(c) == 0.0)
    throw std::domain_error("quartic_real_roots: all coefficients zero");

  std::vector<double> raw = real_roots(c);

  // Merge near-duplicates, then count multiplicity from vanishing derivatives.
  std::vector<PolyRoot> out;
  std::vector<std::vector<double>> derivs{c};
  while (derivs.back().size() > 1) derivs.push_back(derivative(derivs.back()));
  const int deg = static_cast<int>(c.size()) - 1;
  const double maxc = std::max(1.0, max_abs_coeff(c));

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!out.empty() &&
        std::abs(raw[i] - out.back().value) <= 1e-7 * (1.0 + std::abs(raw[i])))
      continue;
    const double r = raw[i];
    int mult = 1;
    for (std::size_t j = 1; j + 1 < derivs.size(); ++j) {
      const double scale = std::max(1.0, max_abs_coeff(derivs[j])) *
                           std::pow(std::max(1.0, std::abs(r)),
                                    static_cast<double>(deg - j));
      if (std::abs(horner(derivs[j], r)) <= 1e-7 * scale)
        ++mult;
      else
        break;
    }
    out.push_back({r, mult});
  }
  return out;
}

double solve_cantilever_lambda(const std::array<double, 5>& a, double k,
                               double tol) {
  if (!(k > 0)) throw std::domain_error("solve_cantilever_lambda: k must be > 0");
  double s = 0.0;
  for (double ai : a) {
    if (!(ai > 0))
      throw std::domain_error("solve_cantilever_lambda: weights must be > 0");
    s += std::pow(ai, 0.25);
  }
  // Substituting t = 3 lambda / k turns the stationarity equation into
  // t = t^{1/4} * sum(a_i^{1/4}), hence t = s^{4/3}.
  const double t_closed = std::pow(s, 4.0 / 3.0);

  double t = s;
  for (int it = 0; it < 200; ++it) {
    const double next = s * std::pow(t, 0.25);
    const bool done = std::abs(next - t) <= tol * std::max(1.0, next);
    t = next;
    if (done) break;
  }
  if (std::abs(t - t_closed) > 1e-10 * t_closed)
    throw std::logic_error("solve_cantilever_lambda: fixed point disagrees with closed form");
  return k * t_closed / 3.0;
}

}  // namespace designbench
