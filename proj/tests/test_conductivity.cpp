#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "vekua/conductivity.hpp"

using namespace vekua;

namespace {

// d/dz and d/dzbar of log p by central differences, with the unscaled operators.
cplx dz_log(const std::function<double(const SamplePoint&)>& p, double x, double y, double h) {
  auto lp = [&](double a, double b) { return std::log(p(SamplePoint::at(a, b))); };
  double dx = (lp(x + h, y) - lp(x - h, y)) / (2 * h);
  double dy = (lp(x, y + h) - lp(x, y - h)) / (2 * h);
  return {dx, -dy};
}
cplx dzbar_log(const std::function<double(const SamplePoint&)>& p, double x, double y, double h) {
  return std::conj(dz_log(p, x, y, h));
}

// For pairs (p, i/p) the pair built from q is a successor of the pair built from p when
// d_z log q = -d_zbar log p.
double successor_defect(const GeneratingSequence& seq, int from, double x, double y) {
  const int to = (from + 1) % seq.period;
  const double h = 1e-5;
  return std::abs(dz_log(seq.p[to], x, y, h) + dzbar_log(seq.p[from], x, y, h));
}

}  // namespace

TEST_CASE("builtin cases at known points") {
  {
    TestCase c = builtin_case("separable_lorentzian", 0.0);
    CHECK(c.sigma.at(0, 0) == doctest::Approx(100.0));
    CHECK(c.boundary_condition(0, 0) == 0.0);
  }
  {
    TestCase c = builtin_case("exponential", 1.0);
    CHECK(c.sigma.at(0, 0) == 1.0);
    CHECK(c.boundary_condition(0, 0) == 1.0);
  }
  {
    TestCase c = builtin_case("lorentzian", 1.0);
    CHECK(c.sigma.at(1, 0) == doctest::Approx(0.5));
    CHECK(c.boundary_condition(1, 0) == doctest::Approx(4.0 / 3.0));
  }
  {
    TestCase c = builtin_case("sinusoidal", 5.0, 1.0);
    CHECK(c.sigma.at(0.5, 0.5) == doctest::Approx(1.0 + std::sin(1.25)));
    CHECK(c.boundary_condition(0.5, 0.5) == doctest::Approx(1.0 / (std::tan(0.125) + 1.0)));
    CHECK_FALSE(c.exact.has_value());
  }
  CHECK_THROWS(builtin_case("no_such_case", 1.0));
}

TEST_CASE("exact solutions satisfy the conductivity equation") {
  // div(sigma grad u) by a 5-point stencil, relative to the size of its terms
  const double h = 1e-3;
  for (auto [name, alpha] : std::vector<std::pair<const char*, double>>{
           {"separable_lorentzian", 0}, {"exponential", 1}, {"polynomial", 1}, {"lorentzian", 1}, {"sinusoidal", 1}}) {
    TestCase c = builtin_case(name, alpha);
    REQUIRE(c.exact);
    auto& u = *c.exact;
    auto s = [&](double x, double y) { return c.sigma.at(x, y); };
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0.3, -0.2}, {-0.5, 0.1}, {0.1, 0.6}}) {
      double fx1 = s(x + h / 2, y) * (u(x + h, y) - u(x, y));
      double fx0 = s(x - h / 2, y) * (u(x, y) - u(x - h, y));
      double fy1 = s(x, y + h / 2) * (u(x, y + h) - u(x, y));
      double fy0 = s(x, y - h / 2) * (u(x, y) - u(x, y - h));
      double scale = std::abs(fx1) + std::abs(fy1) + 1e-3 * s(x, y) * h;
      CAPTURE(name);
      CHECK(std::abs(fx1 - fx0 + fy1 - fy0) <= 1e-4 * scale);
    }
  }
}

TEST_CASE("geometric cases") {
  CHECK(geometric_case("concentric_disks").sigma.at(0.5, 0.0) == 20.0);
  CHECK(geometric_case("concentric_disks").sigma.at(0.1, 0.0) == 100.0);
  CHECK(geometric_case("concentric_disks").sigma.at(0.0, 0.9) == 10.0);
  CHECK(geometric_case("offcenter_disk").sigma.at(0.6, 0.0) == 100.0);
  CHECK(geometric_case("offcenter_disk").sigma.at(-0.6, 0.0) == 10.0);
  CHECK(geometric_case("square_inclusion").sigma.at(0.4, 0.4) == 10.0);
  CHECK(geometric_case("square_inclusion").sigma.at(0.3, -0.3) == 100.0);
  CHECK(geometric_case("beaked_square").sigma.at(1.2, 0.0) == 10.0);
  CHECK_THROWS(geometric_case("triangle"));
}

TEST_CASE("non-positive conductivity is rejected") {
  TestCase bad = builtin_case("polynomial", 20.0);  // 20(x + y) + 10 < 0 near (-0.7, -0.7)
  CHECK_THROWS(check_positive(bad.sigma, unit_disk()));
  CHECK_NOTHROW(check_positive(builtin_case("polynomial", 5.0).sigma, unit_disk()));
}

TEST_CASE("sampled field from CSV") {
  const auto path = std::filesystem::temp_directory_path() / "vekua_sigma_test.csv";
  {
    std::ofstream f(path);
    f << "x,y,sigma\n";
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        double x = -1 + 0.5 * i, y = -1 + 0.5 * j;
        f << x << ',' << y << ',' << 6 + x + 3 * y << '\n';
      }
  }
  ConductivityField s = load_sampled_field(path.string());
  // bilinear interpolation reproduces affine data
  CHECK(s.at(0.1, -0.35) == doctest::Approx(6 + 0.1 - 1.05));
  CHECK(s.at(0.0, 0.0) == doctest::Approx(6.0));
  std::filesystem::remove(path);
}

TEST_CASE("strip interpolation of a constant field") {
  const StarDomain disk = unit_disk();
  auto s = build_strip_interpolation(constant_conductivity(7.0), disk, 13, 5, 60.0);
  for (int k = 0; k < s->strips(); ++k)
    for (double y : {-0.5, 0.0, 0.3}) CHECK(s->sigma_pw(s->midline(k), y) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(s->edge(0) == doctest::Approx(-1.0));
  CHECK(s->edge(13) == doctest::Approx(1.0));
}

TEST_CASE("strip interpolation against a brute-force rebuild") {
  // Independent reconstruction on the unit disk, where the midline chord is known exactly.
  // The library finds chords on a polygonal outline, which agrees with the circle to ~1e-8.
  const TestCase c = builtin_case("separable_lorentzian", 0.0);
  const int K = 9, J = 6;
  const double A = 60.0;
  auto s = build_strip_interpolation(c.sigma, unit_disk(), K, J, A);
  for (double x : {-0.93, -0.41, 0.0, 0.17, 0.66}) {
    const int k = static_cast<int>(std::floor((x + 1.0) / (2.0 / K)));
    const double chi = -1.0 + (k + 0.5) * 2.0 / K;
    const double half = std::sqrt(1 - chi * chi);
    for (double y : {-0.3, 0.05, 0.2}) {
      if (std::abs(y) > half) continue;
      const double u = (y + half) / (2 * half) * (J - 1);
      const int j = static_cast<int>(u);
      auto sample = [&](int jj) { return c.sigma.at(chi, -half + 2 * half * jj / (J - 1)); };
      const double f = sample(j) + (u - j) * (sample(j + 1) - sample(j));
      const double want = (x + A) / (chi + A) * f;
      CHECK(s->sigma_pw(x, y) == doctest::Approx(want).epsilon(1e-6));
      CHECK(s->p0(x, y) * s->p0(x, y) * s->sigma_pw(x, y) == doctest::Approx(s->f(k, y) * s->f(k, y)).epsilon(1e-12));
      CHECK(s->f(k, y) == doctest::Approx(f).epsilon(1e-6));
    }
  }
}

TEST_CASE("strip interpolation accuracy and convergence") {
  const TestCase c = builtin_case("separable_lorentzian", 0.0);
  auto grid_error = [&](int K, int J) {
    auto s = build_strip_interpolation(c.sigma, unit_disk(), K, J, 60.0);
    double err = 0.0;
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; j <= 100; ++j) {
        double x = -1 + 0.02 * i, y = -1 + 0.02 * j;
        if (x * x + y * y >= 1.0) continue;
        double e = c.sigma.at(x, y);
        err = std::max(err, std::abs(s->sigma_pw(x, y) - e) / e);
      }
    return err;
  };
  CHECK(grid_error(1000, 1000) <= 0.02);
  double prev = grid_error(50, 50);
  for (int k : {100, 200, 400, 800, 1600}) {
    double e = grid_error(k, k);
    CHECK(e <= prev * 1.1);
    prev = e;
  }
}

TEST_CASE("strip offsets must keep x + A positive") {
  CHECK_THROWS(build_strip_interpolation(constant_conductivity(1.0), unit_disk(), 4, 4, 0.5));
  CHECK_THROWS(build_strip_interpolation(constant_conductivity(1.0), unit_disk(), 0, 4));
  CHECK_THROWS(build_strip_interpolation(constant_conductivity(1.0), unit_disk(), 4, 1));
}

TEST_CASE("generating pairs are normalized and adjoints follow") {
  const TestCase c = builtin_case("separable_lorentzian", 0.0);
  auto strips = build_strip_interpolation(c.sigma, unit_disk(), 40, 40);
  std::vector<GeneratingSequence> seqs = {
      generating_sequence(c.sigma, SequenceMode::limiting_c1), generating_sequence(c.sigma, SequenceMode::ystrip_c2),
      generating_sequence(c.sigma, SequenceMode::separable_c2), generating_sequence(strips)};
  const RadialGrid g = build_radial_grid(unit_disk(), 0.7, 50);
  for (const auto& seq : seqs)
    for (int m = 0; m < 2; ++m) {
      PairSamples ps = sample_pair(seq, m, g);
      for (std::size_t k = 0; k < ps.F.size(); ++k) {
        CHECK(std::abs((std::conj(ps.F[k]) * ps.G[k]).imag() - 1.0) <= 1e-12);
        CHECK(ps.Fs[k] == cplx(0, -1) * ps.F[k]);
        CHECK(ps.Gs[k] == cplx(0, -1) * ps.G[k]);
      }
    }
  // period 1: both families coincide
  PairSamples a = sample_pair(seqs[0], 0, g), b = sample_pair(seqs[0], 1, g);
  for (std::size_t k = 0; k < a.F.size(); ++k) CHECK(a.F[k] == b.F[k]);
}

TEST_CASE("successor relations") {
  const TestCase lor = builtin_case("separable_lorentzian", 0.0);
  SUBCASE("separable sequence has period two") {
    auto seq = generating_sequence(lor.sigma, SequenceMode::separable_c2);
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0.3, -0.2}, {-0.5, 0.4}})
      for (int m = 0; m < 2; ++m) CHECK(successor_defect(seq, m, x, y) <= 1e-7);
  }
  SUBCASE("y-strip sequence holds for fields of x alone") {
    ConductivityField sx("sx", ConductivityField::Kind::analytic,
                         [](const SamplePoint& s) { return 1.0 / (s.x * s.x + 0.1); });
    auto seq = generating_sequence(sx, SequenceMode::ystrip_c2);
    for (int m = 0; m < 2; ++m) CHECK(successor_defect(seq, m, 0.3, -0.2) <= 1e-7);
    auto mixed = generating_sequence(lor.sigma, SequenceMode::ystrip_c2);
    CHECK(successor_defect(mixed, 0, 0.3, -0.4) > 1e-2);
  }
  SUBCASE("strip sequence inside one strip") {
    auto strips = build_strip_interpolation(lor.sigma, unit_disk(), 5, 400);
    auto seq = generating_sequence(strips);
    const double x = strips->midline(2) + 0.05;
    for (int m = 0; m < 2; ++m) CHECK(successor_defect(seq, m, x, 0.0123) <= 1e-6);
  }
  SUBCASE("the limiting pair is not its own successor") {
    auto seq = generating_sequence(lor.sigma, SequenceMode::limiting_c1);
    CHECK(successor_defect(seq, 0, 0.3, -0.2) > 1e-2);
  }
}

TEST_CASE("sequence mode names") {
  for (auto m : {SequenceMode::limiting_c1, SequenceMode::strip_c2, SequenceMode::ystrip_c2, SequenceMode::separable_c2})
    CHECK(parse_sequence_mode(to_string(m)) == m);
  CHECK_THROWS(parse_sequence_mode("c3"));
  CHECK_THROWS(generating_sequence(builtin_case("exponential", 1.0).sigma, SequenceMode::separable_c2));
}
