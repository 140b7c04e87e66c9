#pragma once

// Threshold solvers for the triangle-count filter.
//
// One-dimensional sparse regime (r = x log n / n):
//   f1     = min{f > 0 : (2b+f) ln((2b+f)/2b) - f > 1}
//   f2     = min{f in (0,2b) : (2b-f) ln((2b-f)/2b) + f > 1}, absent if b <= 1/2
//   theta1 = sup of the short-range band of same-cluster edges that survive
//   theta2 = inf of the long-range band (falls back to a when empty)
//   E_S    = (2b + f1) log n / n,  E_D = (2b - f2) log n / n
// Higher dimensions and the dense two-phase algorithm use absolute
// common-neighbor counts built from normalized cap areas.

#include <cstddef>
#include <optional>
#include <vector>

namespace gbm {

/// Bisection tolerance shared by every scalar solver.
inline constexpr double kSolverTolerance = 1e-9;

double f1_objective(double b, double f);
double f2_objective(double b, double f);

double solve_f1(double b);
std::optional<double> solve_f2(double b);

/// phi(y) = (s ln(s/y) + y - s) / 2, the scaled divergence used by both theta solvers.
double band_objective(double s, double y);

double solve_theta1(double a, double b, double f1);
double solve_theta2(double a, double b, std::optional<double> f2);

/// a - theta2 + theta1 > 2, or (a > 2 and a - theta2 > 1).
bool recovery_condition_1d(double a, double theta1, double theta2);

struct ThresholdSet1D {
  std::size_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double f1 = 0.0;
  std::optional<double> f2;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double e_s = 0.0;               // count/n units
  std::optional<double> e_d;      // absent: low-count branch disabled
  bool recoverable = false;       // recovery_condition_1d(a, theta1, theta2)
};

/// Requires a >= 2b > 0 and n >= 3; a < 2b raises ErrorKind::kRegime.
ThresholdSet1D thresholds_1d(std::size_t n, double a, double b);

/// Least a (to 1e-3 or better) for which the recovery condition holds.
double min_a_for_b(double b);

/// The b values reported in the published minimum-a table.
std::vector<double> table1_b_values();

struct ThresholdSetHD {
  std::size_t n = 0;
  int t = 1;
  double r_s = 0.0;
  double r_d = 0.0;
  double c_s = 1.0;
  double c_d = 1.0;
  double cap_s = 0.0;             // B_t(r_s)
  double cap_d = 0.0;             // B_t(r_d)
  double overlap = 0.0;           // V_t(r_s, r_d, r_d)
  double e_s = 0.0;               // absolute counts
  double e_d = 0.0;
};

/// E_S = c_s (B n + sqrt(6 B n ln n)), E_D = c_d (n V - sqrt(2 n B ln n)) with
/// B = B_t(r_d), V = V_t(r_s, r_d, r_d). Raises kInfeasible when the window
/// is empty (r_s <= r_d, or E_D >= E_S with r_d > 0).
ThresholdSetHD thresholds_hd(std::size_t n, int t, double r_s, double r_d,
                             double c_s = 1.0, double c_d = 1.0);

struct DensePlan {
  std::size_t n = 0;
  int t = 1;
  double r_s = 0.0;
  double r_d = 0.0;
  double theta_s = 1.0;
  double theta_d = 1.0;
  std::size_t g = 0;              // phase-2 samples per provisional cluster
  std::size_t h = 0;              // phase-1 sample size
  double e_s = 0.0;               // phase-1 thresholds, absolute counts
  double e_d = 0.0;
  /// g > h/3 leaves no room for phase-2 sampling; the plan then probes every
  /// pair (h = n, no phase 2).
  bool degenerate = false;
};

DensePlan dense_plan(std::size_t n, int t, double r_s, double r_d,
                     double theta_s = 1.0, double theta_d = 1.0);

}  // namespace gbm
