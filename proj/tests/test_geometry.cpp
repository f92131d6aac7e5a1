#include <doctest.h>

#include <cmath>
#include <numeric>

#include "vekua/geometry.hpp"

using namespace vekua;

namespace {

// Boundary radius of the beaked domain written out directly, for oracles.
double beak_rho(double t) {
  t = std::abs(t);
  if (t >= pi / 10) return 1.0;
  return 0.8443 / (std::sin(t) + 0.5629 * std::cos(t));
}

double polyline_perimeter(const std::function<double(double)>& rho, int segments) {
  double len = 0.0;
  cplx prev = std::polar(rho(-pi), -pi);
  for (int k = 1; k <= segments; ++k) {
    double t = -pi + two_pi * k / segments;
    cplx z = std::polar(rho(t), t);
    len += std::abs(z - prev);
    prev = z;
  }
  return len;
}

}  // namespace

TEST_CASE("angle wrapping") {
  CHECK(wrap_angle(0.5) == 0.5);
  CHECK(wrap_angle(pi) == doctest::Approx(-pi));
  CHECK(wrap_angle(3 * pi + 0.25) == doctest::Approx(-pi + 0.25));
  CHECK(angle_difference(pi - 0.1, -pi + 0.1) == doctest::Approx(-0.2));
}

TEST_CASE("unit disk") {
  const StarDomain d = unit_disk();
  CHECK(d.radius(0.0) == 1.0);
  CHECK(d.radius(pi / 2) == 1.0);
  CHECK(d.corner_angles().empty());
  CHECK(d.contains({0.5, 0.5}));
  CHECK_FALSE(d.contains({0.8, 0.8}));
}

TEST_CASE("beaked domain radius") {
  const StarDomain d = beaked_domain();
  CHECK(d.radius(0.0) == doctest::Approx(1.5).epsilon(1e-3));
  CHECK(d.radius(pi / 2) == 1.0);
  CHECK(std::abs(d.radius(pi / 10) - 1.0) <= 2e-4);
  CHECK(d.radius(-0.2) == doctest::Approx(d.radius(0.2)));
  REQUIRE(d.corner_angles().size() == 3);

  // continuity at the junctions with the circle
  const double eps = 1e-9;
  CHECK(std::abs(d.radius(pi / 10 - eps) - d.radius(pi / 10 + eps)) <= 2e-4);
  CHECK(std::abs(d.radius(-pi / 10 + eps) - d.radius(-pi / 10 - eps)) <= 2e-4);

  auto [x0, x1] = d.x_extent();
  CHECK(x0 == doctest::Approx(-1.0));
  CHECK(x1 == doctest::Approx(1.5).epsilon(1e-3));
}

TEST_CASE("radial grid samples") {
  const StarDomain disk = unit_disk();
  {
    RadialGrid g = build_radial_grid(disk, 0.0, 4);
    std::vector<double> want = {0, 0.25, 0.5, 0.75, 1};
    for (int p = 0; p <= 4; ++p) CHECK(g.r[p] == doctest::Approx(want[p]));
  }
  {
    const double pin = 0.4596;
    RadialGrid g = build_radial_grid(disk, pi / 4, 4, std::vector<double>{pin});
    std::vector<double> want = {0, 0.25, pin, 0.75, 1};
    for (int p = 0; p <= 4; ++p) CHECK(g.r[p] == doctest::Approx(want[p]));
  }
  {
    RadialGrid g = build_radial_grid(beaked_domain(), 0.0, 2);
    CHECK(g.r[1] == doctest::Approx(0.75).epsilon(1e-3));
    CHECK(g.r[2] == doctest::Approx(1.5).epsilon(1e-3));
  }
  CHECK_THROWS(build_radial_grid(disk, 0.0, 4, std::vector<double>{1.2}));
  CHECK_THROWS(build_radial_grid(disk, 0.0, 4, std::vector<double>{0.0}));
  CHECK_THROWS(build_radial_grid(disk, 0.0, 4, std::vector<double>{0.49, 0.51}));
}

TEST_CASE("radial grid points lie at their radii") {
  const StarDomain d = beaked_domain();
  for (double t : {-3.0, -0.2, 0.0, 0.1, 1.0, 2.9}) {
    RadialGrid g = build_radial_grid(d, t, 137);
    for (int p = 0; p <= 137; ++p) CHECK(std::abs(std::abs(g.z[p]) - g.r[p]) <= 4e-16 * (1 + g.r[p]));
    for (int p = 1; p <= 137; ++p) CHECK(g.r[p] > g.r[p - 1]);
  }
}

TEST_CASE("angle sets") {
  {
    AngleSet a = build_angle_set(4);
    REQUIRE(a.count() == 4);
    // stored in [-pi, pi): {-pi, -pi/2, 0, pi/2}
    std::vector<double> want = {-pi, -pi / 2, 0, pi / 2};
    for (int k = 0; k < 4; ++k) CHECK(a.angles[k] == doctest::Approx(want[k]));
  }
  {
    std::vector<double> pins = {0.0, pi / 10, -pi / 10};
    AngleSet a = build_angle_set(91, pins);
    CHECK(a.count() == 91);
    for (double p : pins) {
      int k = a.find(p, 0.0);
      REQUIRE(k >= 0);
      CHECK(a.angles[k] == p);
    }
  }
  {
    AngleSet a = build_angle_set(100);
    for (int q = 0; q < 100; ++q) {
      int k = a.find(q * pi / 50, 1e-12);
      CHECK(k >= 0);
    }
  }
  for (int Q : {20, 50, 91, 100, 333}) {
    AngleSet a = build_angle_set(Q, std::vector<double>{0.0, pi / 10, -pi / 10});
    for (int k = 1; k < Q; ++k) CHECK(a.angles[k] > a.angles[k - 1]);
  }
  CHECK_THROWS(build_angle_set(10, std::vector<double>{0.0, 0.05}));
  // three corner pins 0.31 apart do not fit into seven uniform angles
  CHECK_THROWS(build_angle_set(7, std::vector<double>{0.0, pi / 10, -pi / 10}));
}

TEST_CASE("arc length weights") {
  {
    AngleSet a = build_angle_set(4);
    for (double w : arc_length_weights(unit_disk(), a)) CHECK(std::abs(w - pi / 2) <= 0.05 * pi / 2);
  }
  SUBCASE("perimeter of the circle converges at second order") {
    double prev = 0.0;
    for (int Q : {50, 100, 200}) {
      auto w = arc_length_weights(unit_disk(), build_angle_set(Q), 1);
      double err = std::abs(std::accumulate(w.begin(), w.end(), 0.0) - two_pi);
      if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.05));
      prev = err;
    }
  }
  SUBCASE("beaked perimeter against a fine polyline") {
    const double oracle = polyline_perimeter(beak_rho, 1000000);
    std::vector<double> pins = {0.0, pi / 10, -pi / 10};
    auto w = arc_length_weights(beaked_domain(), build_angle_set(1000, pins));
    CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - oracle) <= 1e-4);
  }
}

TEST_CASE("knot domains") {
  std::vector<std::pair<double, double>> knots = {{-pi, 2.0}, {-pi / 2, 2.0}, {0.0, 2.0}, {pi / 2, 2.0}};
  StarDomain d = knot_domain("flat", knots);
  CHECK(d.radius(0.3) == doctest::Approx(2.0));
  CHECK(d.radius(pi - 0.01) == doctest::Approx(2.0));
  CHECK_THROWS(domain_by_name("no_such_domain.json"));
}
