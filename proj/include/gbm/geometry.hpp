#pragma once

// Latent-space primitives: circle and sphere sampling, distances, and the
// normalized spherical cap / annulus / cap-intersection areas that every
// threshold in the library is expressed in.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gbm {

/// Coordinates on the circle of circumference 1, each in [0, 1).
using CircleCoords = std::vector<double>;

/// n points on the unit sphere S^t, stored row-major with t+1 coordinates
/// per point.
class SphereCloud {
 public:
  SphereCloud() = default;
  SphereCloud(int t, std::vector<double> coords);

  int dim() const noexcept { return t_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(t_) + 1; }
  std::size_t size() const noexcept { return t_ > 0 ? data_.size() / width() : 0; }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * width(), width()};
  }
  const std::vector<double>& raw() const noexcept { return data_; }

 private:
  int t_ = 0;
  std::vector<double> data_;
};

void check_dimension(int t);

/// Circular distance min(|x-y|, 1-|x-y|), in [0, 1/2].
double geodesic_distance(double x, double y) noexcept;

/// Chord length 2 sin(pi d) on the unit circle for geodesic distance d.
double chord_of_geodesic(double d);

double euclidean_distance(std::span<const double> x, std::span<const double> y) noexcept;
double squared_distance(std::span<const double> x, std::span<const double> y) noexcept;

/// Position of vertex i is drawn from substream (seed, i), so prefixes agree
/// across different n.
CircleCoords sample_circle(std::uint64_t seed, std::size_t n);
SphereCloud sample_sphere(std::uint64_t seed, std::size_t n, int t);

/// Maps circle coordinates to unit vectors (cos 2 pi x, sin 2 pi x) on S^1.
SphereCloud embed_circle(const CircleCoords& coords);

/// Angle subtended at the center by a chord of Euclidean length r in [0, 2].
double angular_radius(double r);

/// Exact normalized area of {x in S^t : ||x - u|| <= r}.
double cap_fraction(int t, double r);

/// Same, parameterized by angular radius alpha in [0, pi].
double cap_fraction_angle(int t, double alpha);

double annulus_fraction(int t, double r1, double r2);

/// Normalized area of the intersection of caps of radii r1, r2 whose centers
/// are at Euclidean distance ell.
double cap_intersection_fraction(int t, double r1, double r2, double ell);

/// sqrt(pi) (t+1) Gamma((t+2)/2) / Gamma((t+3)/2).
double psi(int t);

/// Surface area |S^t| = (t+1) pi^{(t+1)/2} / Gamma((t+3)/2).
double sphere_area(int t);

/// Volume of the unit t-ball, pi^{t/2}/Gamma(t/2+1): the small-radius
/// constant in |B_t(u,r)| ~ c_t r^t.
double small_cap_constant(int t);

}  // namespace gbm
