#include "gbm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gbm/error.hpp"
#include "gbm/rng.hpp"

namespace gbm {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(double r, const char* what) {
  if (!(r >= 0.0 && r <= 2.0)) throw Error(ErrorKind::kInvalidArgument, what);
}

// Normalizer of the colatitude density on S^t: integral of sin^{t-1} on [0, pi].
double colatitude_normalizer(int t) {
  return std::sqrt(kPi) * boost::math::tgamma_ratio(t / 2.0, (t + 1) / 2.0);
}

// Length of the overlap of arcs [-a1, a1] and [c - a2, c + a2] on a circle of
// circumference 2 pi.
double arc_overlap(double a1, double a2, double c) {
  double total = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = std::max(-a1, c - a2 + 2.0 * kPi * k);
    const double hi = std::min(a1, c + a2 + 2.0 * kPi * k);
    if (hi > lo) total += hi - lo;
  }
  return std::min(total, 2.0 * std::min(a1, a2));
}

}  // namespace

SphereCloud::SphereCloud(int t, std::vector<double> coords)
    : t_(t), data_(std::move(coords)) {
  check_dimension(t);
  require(data_.size() % width() == 0, "sphere coordinates not a multiple of t+1");
}

void check_dimension(int t) {
  if (t < 1) throw Error(ErrorKind::kInvalidArgument, "dimension t must be >= 1");
}

double geodesic_distance(double x, double y) noexcept {
  const double d = std::fabs(x - y);
  return std::min(d, 1.0 - d);
}

double chord_of_geodesic(double d) {
  require(d >= 0.0 && d <= 0.5, "geodesic distance must lie in [0, 1/2]");
  return 2.0 * std::sin(kPi * d);
}

double squared_distance(std::span<const double> x, std::span<const double> y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) noexcept {
  return std::sqrt(squared_distance(x, y));
}

CircleCoords sample_circle(std::uint64_t seed, std::size_t n) {
  require(n >= 1, "sample size must be >= 1");
  CircleCoords out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Stream::derive(seed, {i}).uniform();
  return out;
}

SphereCloud sample_sphere(std::uint64_t seed, std::size_t n, int t) {
  require(n >= 1, "sample size must be >= 1");
  check_dimension(t);
  const std::size_t w = static_cast<std::size_t>(t) + 1;
  std::vector<double> data(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    Stream rng = Stream::derive(seed, {i});
    double* p = data.data() + i * w;
    double norm2 = 0.0;
    while (norm2 < 1e-24) {
      norm2 = 0.0;
      for (std::size_t k = 0; k < w; ++k) {
        p[k] = rng.normal();
        norm2 += p[k] * p[k];
      }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < w; ++k) p[k] *= inv;
  }
  return SphereCloud(t, std::move(data));
}

SphereCloud embed_circle(const CircleCoords& coords) {
  std::vector<double> data(coords.size() * 2);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    data[2 * i] = std::cos(2.0 * kPi * coords[i]);
    data[2 * i + 1] = std::sin(2.0 * kPi * coords[i]);
  }
  return SphereCloud(1, std::move(data));
}

double angular_radius(double r) {
  check_radius(r, "Euclidean radius must lie in [0, 2]");
  return 2.0 * std::asin(std::min(1.0, r / 2.0));
}

double cap_fraction_angle(int t, double alpha) {
  check_dimension(t);
  require(alpha >= 0.0 && alpha <= kPi, "angular radius must lie in [0, pi]");
  switch (t) {
    case 1:
      return alpha / kPi;
    case 2:
      return 0.5 * (1.0 - std::cos(alpha));
    case 3:
      return (alpha - std::sin(alpha) * std::cos(alpha)) / kPi;
    default: {
      const double s = std::sin(alpha);
      const double half = 0.5 * boost::math::ibeta(t / 2.0, 0.5, s * s);
      return alpha <= kPi / 2 ? half : 1.0 - half;
    }
  }
}

double cap_fraction(int t, double r) {
  check_dimension(t);
  check_radius(r, "cap radius must lie in [0, 2]");
  // cos(alpha) = 1 - r^2/2, so the 2-sphere cap height is r^2/2.
  if (t == 2) return r * r / 4.0;
  return cap_fraction_angle(t, angular_radius(r));
}

double annulus_fraction(int t, double r1, double r2) {
  check_radius(r1, "annulus radius must lie in [0, 2]");
  check_radius(r2, "annulus radius must lie in [0, 2]");
  require(r1 <= r2, "annulus requires r1 <= r2");
  return cap_fraction(t, r2) - cap_fraction(t, r1);
}

double cap_intersection_fraction(int t, double r1, double r2, double ell) {
  check_dimension(t);
  check_radius(r1, "cap radius must lie in [0, 2]");
  check_radius(r2, "cap radius must lie in [0, 2]");
  check_radius(ell, "center separation must lie in [0, 2]");

  // Integrate over the narrower cap; this also makes the result exactly
  // symmetric in (r1, r2).
  double a1 = angular_radius(r1);
  double a2 = angular_radius(r2);
  if (a1 > a2) std::swap(a1, a2);
  const double beta = angular_radius(ell);

  if (a1 == 0.0) return 0.0;
  if (beta == 0.0) return cap_fraction_angle(t, a1);
  if (t == 1) return arc_overlap(a1, a2, beta) / (2.0 * kPi);

  // Point at colatitude theta from the first center; the latitude sphere
  // S^{t-1} at that colatitude meets the second cap in a cap of angular
  // radius gamma with cos(gamma) = (cos a2 - cos theta cos beta)/(sin theta sin beta).
  const double cb = std::cos(beta), sb = std::sin(beta), ca2 = std::cos(a2);
  const double z = colatitude_normalizer(t);
  auto integrand = [&](double theta) {
    const double st = std::sin(theta);
    if (st <= 0.0) return 0.0;
    const double c = (ca2 - std::cos(theta) * cb) / (st * sb);
    double inner;
    if (c >= 1.0) {
      inner = 0.0;
    } else if (c <= -1.0) {
      inner = 1.0;
    } else {
      inner = cap_fraction_angle(t - 1, std::acos(c));
    }
    return std::pow(st, t - 1) * inner / z;
  };

  std::vector<double> cuts{0.0, a1};
  for (double b : {std::fabs(beta - a2), a2 - beta, a2 + beta, 2.0 * kPi - a2 - beta}) {
    if (b > 0.0 && b < a1) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  boost::math::quadrature::tanh_sinh<double> quad;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-15) continue;
    total += quad.integrate(integrand, cuts[i], cuts[i + 1], 1e-12);
  }
  return std::clamp(total, 0.0, cap_fraction_angle(t, a1));
}

double psi(int t) {
  check_dimension(t);
  return std::sqrt(kPi) * (t + 1) * boost::math::tgamma_ratio((t + 2) / 2.0, (t + 3) / 2.0);
}

double sphere_area(int t) {
  check_dimension(t);
  return (t + 1) * std::pow(kPi, (t + 1) / 2.0) / boost::math::tgamma((t + 3) / 2.0);
}

double small_cap_constant(int t) {
  check_dimension(t);
  return std::pow(kPi, t / 2.0) / boost::math::tgamma(t / 2.0 + 1.0);
}

}  // namespace gbm
