#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gbm/error.hpp"
#include "gbm/geometry.hpp"
#include "oracles.hpp"

using namespace gbm;
using std::numbers::pi;

TEST_CASE("geodesic distance on the unit circle") {
  CHECK(geodesic_distance(0.1, 0.9) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(geodesic_distance(0.37, 0.37) == 0.0);
  CHECK(geodesic_distance(0.0, 0.5) == 0.5);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const double dxy = geodesic_distance(x, y);
    CHECK(dxy == geodesic_distance(y, x));
    CHECK(dxy >= 0.0);
    CHECK(dxy <= 0.5);
    CHECK(dxy <= geodesic_distance(x, z) + geodesic_distance(z, y) + 1e-15);
  }
}

TEST_CASE("chord of geodesic matches embedded Euclidean distance") {
  CHECK(chord_of_geodesic(0.0) == 0.0);
  CHECK(chord_of_geodesic(0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(chord_of_geodesic(0.25) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(chord_of_geodesic(0.6), Error);

  const auto x = sample_circle(11, 2000);
  const auto emb = embed_circle(x);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double d = euclidean_distance(emb[i], emb[i + 1]);
    CHECK(std::fabs(d - chord_of_geodesic(geodesic_distance(x[i], x[i + 1]))) <= 1e-12);
  }
  for (double d = 0.0; d < 0.5; d += 0.01)
    CHECK(chord_of_geodesic(d) < chord_of_geodesic(d + 0.005));
}

TEST_CASE("circle sampling is deterministic and uniform") {
  const auto a = sample_circle(42, 100000);
  const auto b = sample_circle(42, 100000);
  CHECK(a == b);
  CHECK(std::all_of(a.begin(), a.end(), [](double v) { return v >= 0.0 && v < 1.0; }));

  // Prefix property: vertex i depends only on (seed, i).
  const auto prefix = sample_circle(42, 1000);
  CHECK(std::equal(prefix.begin(), prefix.end(), a.begin()));

  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  double ks = 0.0;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ks = std::max({ks, std::fabs((i + 1) / n - sorted[i]), std::fabs(sorted[i] - i / n)});
  }
  CHECK(ks < 0.01);
}

TEST_CASE("sphere sampling has unit norms and centered coordinates") {
  const auto pts = sample_sphere(7, 100000, 2);
  CHECK(pts.size() == 100000);
  CHECK(pts.raw() == sample_sphere(7, 100000, 2).raw());
  double mean[3] = {0, 0, 0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto p = pts[i];
    CHECK(std::fabs(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) - 1.0) <= 1e-12);
    for (int k = 0; k < 3; ++k) mean[k] += p[k];
  }
  for (double m : mean) CHECK(std::fabs(m / 1e5) <= 3.0 / std::sqrt(1e5));

  const auto hi = sample_sphere(3, 500, 7);
  for (std::size_t i = 0; i < hi.size(); ++i) {
    double s = 0;
    for (double v : hi[i]) s += v * v;
    CHECK(std::fabs(std::sqrt(s) - 1.0) <= 1e-12);
  }
}

TEST_CASE("cap fraction endpoints, closed forms and monotonicity") {
  for (int t = 1; t <= 7; ++t) {
    CHECK(cap_fraction(t, 0.0) == 0.0);
    CHECK(cap_fraction(t, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    double prev = 0.0;
    for (double r = 0.05; r <= 2.0; r += 0.05) {
      const double c = cap_fraction(t, r);
      CHECK(c >= prev);
      prev = c;
    }
  }
  CHECK(cap_fraction(2, 0.1) == doctest::Approx(0.0025).epsilon(1e-14));
  // Half sphere at r = sqrt(2).
  for (int t = 1; t <= 6; ++t) CHECK(cap_fraction(t, std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(cap_fraction(2, -0.1), Error);
  CHECK_THROWS_AS(cap_fraction(2, 2.1), Error);
  CHECK_THROWS_AS(cap_fraction(0, 0.5), Error);
}

TEST_CASE("cap fraction agrees with direct colatitude quadrature") {
  for (int t = 1; t <= 8; ++t) {
    auto w = [t](double th) { return std::pow(std::sin(th), t - 1); };
    const double z = oracle::simpson(w, 0.0, pi, 20000);
    for (double r : {0.1, 0.7, 1.3, 1.9}) {
      const double alpha = 2.0 * std::asin(r / 2.0);
      const double ref = oracle::simpson(w, 0.0, alpha, 20000) / z;
      CHECK(cap_fraction(t, r) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("small-radius cap approaches c_t r^t / |S^t|") {
  for (int t = 1; t <= 5; ++t) {
    const double r = 1e-3;
    const double approx = small_cap_constant(t) * std::pow(r, t) / sphere_area(t);
    CHECK(cap_fraction(t, r) / approx == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("annulus fraction") {
  CHECK(annulus_fraction(3, 0.4, 0.4) == 0.0);
  CHECK(annulus_fraction(3, 0.0, 0.4) == cap_fraction(3, 0.4));
  CHECK(annulus_fraction(2, 0.1, 0.2) == doctest::Approx(0.0075).epsilon(1e-13));
  CHECK(annulus_fraction(4, 0.1, 0.5) + annulus_fraction(4, 0.5, 1.2) ==
        doctest::Approx(annulus_fraction(4, 0.1, 1.2)).epsilon(1e-13));
  CHECK_THROWS_AS(annulus_fraction(2, 0.3, 0.2), Error);
}

TEST_CASE("cap intersection fraction") {
  // Golden value: rejection sampling with 1e7 points on S^2 gave
  // 0.0039315 with standard error 2.0e-5.
  CHECK(std::fabs(cap_intersection_fraction(2, 0.2, 0.2, 0.2) - 0.0039315) <= 3 * 2.0e-5);

  for (int t = 1; t <= 5; ++t) {
    CHECK(cap_intersection_fraction(t, 0.1, 0.15, 0.25) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cap_intersection_fraction(t, 0.1, 0.15, 0.3) == 0.0);
    CHECK(cap_intersection_fraction(t, 0.2, 0.5, 0.0) == doctest::Approx(cap_fraction(t, 0.2)).epsilon(1e-12));
    for (double l : {0.05, 0.3, 0.9, 1.7}) {
      const double v = cap_intersection_fraction(t, 0.4, 0.9, l);
      CHECK(v == cap_intersection_fraction(t, 0.9, 0.4, l));
      CHECK(v <= std::min(cap_fraction(t, 0.4), cap_fraction(t, 0.9)) + 1e-15);
    }
    double prev = 1.0;
    for (double l = 0.0; l <= 2.0; l += 0.05) {
      const double v = cap_intersection_fraction(t, 0.7, 1.1, l);
      CHECK(v <= prev + 1e-10);
      prev = v;
    }
  }
}

TEST_CASE("cap intersection matches Monte-Carlo oracle in several dimensions") {
  struct Case {
    int t;
    double r1, r2, ell;
  };
  for (auto c : {Case{1, 0.5, 0.8, 0.6}, Case{2, 0.6, 0.4, 0.4}, Case{3, 0.6, 0.4, 0.4},
                 Case{4, 1.0, 1.2, 0.9}, Case{5, 1.6, 1.5, 1.8}}) {
    const auto est = oracle::cap_intersection_mc(c.t, c.r1, c.r2, c.ell, 400000, 99 + c.t);
    CAPTURE(c.t);
    CHECK(std::fabs(cap_intersection_fraction(c.t, c.r1, c.r2, c.ell) - est.mean) <=
          4.0 * est.stderr_ + 1e-12);
  }
}

TEST_CASE("cap intersection scales as length^t for small configurations") {
  for (int t = 1; t <= 4; ++t) {
    const double base = cap_intersection_fraction(t, 0.02, 0.03, 0.04);
    const double half = cap_intersection_fraction(t, 0.01, 0.015, 0.02);
    CAPTURE(t);
    CHECK(base / half == doctest::Approx(std::pow(2.0, t)).epsilon(1e-3));
  }
}

TEST_CASE("psi and sphere area") {
  CHECK(psi(1) == doctest::Approx(pi).epsilon(1e-12));
  CHECK(psi(2) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(psi(3) == doctest::Approx(1.5 * pi).epsilon(1e-12));
  CHECK(sphere_area(1) == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(sphere_area(2) == doctest::Approx(4 * pi).epsilon(1e-12));
  CHECK(sphere_area(3) == doctest::Approx(2 * pi * pi).epsilon(1e-12));
}
