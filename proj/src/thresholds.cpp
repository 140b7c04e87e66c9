#include "gbm/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "gbm/error.hpp"
#include "gbm/geometry.hpp"

namespace gbm {

namespace {

// Smallest x in [lo, hi] with objective(x) > target for an increasing
// objective, given objective(lo) <= target < objective(hi).
template <typename F>
double bisect_increasing(F&& objective, double target, double lo, double hi) {
  for (int i = 0; i < 400 && hi - lo > kSolverTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (objective(mid) > target) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Same for a decreasing objective: largest x with objective(x) > target,
// given objective(lo) > target >= objective(hi).
template <typename F>
double bisect_decreasing(F&& objective, double target, double lo, double hi) {
  for (int i = 0; i < 400 && hi - lo > kSolverTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (objective(mid) > target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double log_n_over_n(std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::log(nn) / nn;
}

}  // namespace

double f1_objective(double b, double f) {
  const double s = 2.0 * b;
  return (s + f) * std::log1p(f / s) - f;
}

double f2_objective(double b, double f) {
  const double s = 2.0 * b;
  if (f >= s) return s;
  return (s - f) * std::log1p(-f / s) + f;
}

double solve_f1(double b) {
  require(b > 0.0, "f1 requires b > 0");
  double hi = 1.0;
  for (int i = 0; i < 1000 && f1_objective(b, hi) <= 1.0; ++i) hi *= 2.0;
  return bisect_increasing([b](double f) { return f1_objective(b, f); }, 1.0, 0.0, hi);
}

std::optional<double> solve_f2(double b) {
  require(b > 0.0, "f2 requires b > 0");
  // Supremum of the objective over (0, 2b] is its limit 2b at f = 2b.
  if (2.0 * b <= 1.0) return std::nullopt;
  return bisect_increasing([b](double f) { return f2_objective(b, f); }, 1.0, 0.0, 2.0 * b);
}

double band_objective(double s, double y) {
  return 0.5 * (s * std::log(s / y) + y - s);
}

double solve_theta1(double a, double b, double f1) {
  require(a > 0.0 && b > 0.0 && f1 > 0.0, "theta1 requires a, b, f1 > 0");
  const double s1 = 4.0 * b + 2.0 * f1;
  if (2.0 * a <= s1) return 0.0;
  // band_objective(s1, .) is 0 at s1 and increasing beyond it.
  double hi = 2.0 * s1;
  for (int i = 0; i < 1000 && band_objective(s1, hi) <= 1.0; ++i) hi *= 2.0;
  const double y1 = bisect_increasing([s1](double y) { return band_objective(s1, y); }, 1.0, s1, hi);
  return std::max(0.0, 2.0 * a - y1);
}

double solve_theta2(double a, double b, std::optional<double> f2) {
  require(a > 0.0 && b > 0.0, "theta2 requires a, b > 0");
  if (!f2) return a;
  const double s2 = 4.0 * b - 2.0 * *f2;
  require(s2 > 0.0, "theta2 requires f2 < 2b");
  // band_objective(s2, .) decreases from +inf at 0+ to 0 at s2.
  double lo = s2 / 2.0;
  for (int i = 0; i < 1000 && band_objective(s2, lo) <= 1.0; ++i) lo /= 2.0;
  const double y2 = bisect_decreasing([s2](double y) { return band_objective(s2, y); }, 1.0, lo, s2);
  const double theta = std::max({2.0 * a - y2, 2.0 * b, 2.0 * a - 4.0 * b + 2.0 * *f2});
  return theta <= a ? theta : a;
}

bool recovery_condition_1d(double a, double theta1, double theta2) {
  return (a - theta2 + theta1 > 2.0) || (a > 2.0 && a - theta2 > 1.0);
}

ThresholdSet1D thresholds_1d(std::size_t n, double a, double b) {
  require(n >= 3, "thresholds need n >= 3");
  require(b > 0.0, "thresholds need b > 0");
  if (a < 2.0 * b) {
    throw Error(ErrorKind::kRegime, "triangle filter thresholds are defined only for a >= 2b");
  }
  ThresholdSet1D th;
  th.n = n;
  th.a = a;
  th.b = b;
  th.f1 = solve_f1(b);
  th.f2 = solve_f2(b);
  th.theta1 = solve_theta1(a, b, th.f1);
  th.theta2 = solve_theta2(a, b, th.f2);
  const double scale = log_n_over_n(n);
  th.e_s = (2.0 * b + th.f1) * scale;
  if (th.f2) th.e_d = (2.0 * b - *th.f2) * scale;
  th.recoverable = recovery_condition_1d(a, th.theta1, th.theta2);
  return th;
}

double min_a_for_b(double b) {
  require(b > 0.0, "min_a_for_b requires b > 0");
  const double f1 = solve_f1(b);
  const auto f2 = solve_f2(b);
  auto ok = [&](double a) {
    return recovery_condition_1d(a, solve_theta1(a, b, f1), solve_theta2(a, b, f2));
  };
  double lo = 2.0 * b;
  if (ok(lo)) return lo;
  double hi = std::max(4.0, 4.0 * b);
  for (int i = 0; i < 60 && !ok(hi); ++i) hi *= 2.0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (ok(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

std::vector<double> table1_b_values() { return {0.01, 1, 2, 3, 4, 5, 6, 7}; }

ThresholdSetHD thresholds_hd(std::size_t n, int t, double r_s, double r_d, double c_s,
                             double c_d) {
  check_dimension(t);
  require(n >= 3, "thresholds need n >= 3");
  require(r_d >= 0.0 && r_s <= 2.0, "radii must lie in [0, 2]");
  require(c_s >= 1.0 && c_d > 0.0 && c_d <= 1.0, "constants need c_s >= 1 and 0 < c_d <= 1");
  if (r_s <= r_d) throw Error(ErrorKind::kInfeasible, "no separating window: r_s <= r_d");

  ThresholdSetHD th;
  th.n = n;
  th.t = t;
  th.r_s = r_s;
  th.r_d = r_d;
  th.c_s = c_s;
  th.c_d = c_d;
  th.cap_s = cap_fraction(t, r_s);
  th.cap_d = cap_fraction(t, r_d);
  th.overlap = cap_intersection_fraction(t, r_s, r_d, r_d);
  const double nn = static_cast<double>(n);
  const double ln = std::log(nn);
  th.e_s = c_s * (th.cap_d * nn + std::sqrt(6.0 * th.cap_d * nn * ln));
  th.e_d = c_d * (nn * th.overlap - std::sqrt(2.0 * nn * th.cap_d * ln));
  if (r_d > 0.0 && th.e_d >= th.e_s) {
    throw Error(ErrorKind::kInfeasible, "no separating window: E_D >= E_S");
  }
  return th;
}

DensePlan dense_plan(std::size_t n, int t, double r_s, double r_d, double theta_s,
                     double theta_d) {
  check_dimension(t);
  require(n >= 4, "dense plan needs n >= 4");
  require(r_d > 0.0 && r_d < r_s && r_s <= 2.0, "dense plan needs 0 < r_d < r_s <= 2");
  require(theta_s > 0.0 && theta_d > 0.0, "dense constants must be positive");
  const double cap_s = cap_fraction(t, r_s);
  const double cap_d = cap_fraction(t, r_d);
  require(cap_s > cap_d, "dense plan needs B_t(r_s) > B_t(r_d)");

  DensePlan plan;
  plan.n = n;
  plan.t = t;
  plan.r_s = r_s;
  plan.r_d = r_d;
  plan.theta_s = theta_s;
  plan.theta_d = theta_d;

  const double nn = static_cast<double>(n);
  const double ln = std::log(nn);
  const double spread = (std::sqrt(12.0 * cap_d) + std::sqrt(12.0 * cap_s)) / (cap_s - cap_d);
  const double g_raw = std::ceil(ln * spread * spread);
  plan.g = std::min(n / 2, static_cast<std::size_t>(std::min(g_raw, 1e18)));
  plan.h = std::min(n, static_cast<std::size_t>(std::ceil(std::sqrt(nn * static_cast<double>(plan.g)))));
  if (3 * plan.g > plan.h) {
    plan.degenerate = true;
    plan.h = n;
  }

  const double hh = static_cast<double>(plan.h);
  const double overlap = cap_intersection_fraction(t, r_s, r_d, r_d);
  plan.e_s = theta_s * (cap_d * hh + std::sqrt(6.0 * cap_d * hh * ln));
  plan.e_d = theta_d * (hh * overlap - std::sqrt(6.0 * hh * cap_d * ln));
  return plan;
}

}  // namespace gbm
