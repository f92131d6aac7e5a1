#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "vekua/conductivity.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/kernels.hpp"

using namespace vekua;

namespace {

struct SweepData {
  int steps, lanes;
  std::vector<double> p, inv_p, dzr, dzi, wr, wi, vr, vi;

  SweepData(int s, int l, unsigned seed) : steps(s), lanes(l) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.2, 3.0), any(-1.0, 1.0);
    const std::size_t n = static_cast<std::size_t>(s + 1) * l;
    for (std::size_t k = 0; k < n; ++k) {
      p.push_back(pos(rng));
      inv_p.push_back(1.0 / p.back());
      wr.push_back(any(rng));
      wi.push_back(any(rng));
    }
    for (std::size_t k = 0; k < static_cast<std::size_t>(s) * l; ++k) {
      dzr.push_back(1e-3 * any(rng));
      dzi.push_back(1e-3 * any(rng));
    }
    vr.assign(n, 0.0);
    vi.assign(n, 0.0);
  }

  kernels::BersSweep args(double scale) {
    return {steps, lanes, p.data(), inv_p.data(), dzr.data(), dzi.data(), wr.data(), wi.data(),
            vr.data(), vi.data(), scale};
  }
};

}  // namespace

TEST_CASE("isa selection") {
  CHECK(kernels::isa_supported(kernels::Isa::scalar));
  CHECK(kernels::parse_isa("scalar") == kernels::Isa::scalar);
  CHECK_THROWS(kernels::parse_isa("sse9"));
  kernels::set_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  kernels::reset_isa();
}

TEST_CASE("scalar sweep matches a direct complex trapezoid") {
  SweepData d(50, 3, 7);
  kernels::scalar::bers_sweep(d.args(2.0));
  for (int j = 0; j < 3; ++j) {
    cplx s_re = 0, s_im = 0;
    for (int s = 1; s <= 50; ++s) {
      auto at = [&](int k) { return static_cast<std::size_t>(k) * 3 + j; };
      cplx w0(d.wr[at(s - 1)], d.wi[at(s - 1)]), w1(d.wr[at(s)], d.wi[at(s)]);
      cplx dz(d.dzr[at(s - 1)], d.dzi[at(s - 1)]);
      s_re += 0.5 * (w0 / d.p[at(s - 1)] + w1 / d.p[at(s)]) * dz;
      s_im += 0.5 * (w0 * d.p[at(s - 1)] + w1 * d.p[at(s)]) * dz;
      CHECK(d.vr[at(s)] == doctest::Approx(2.0 * d.p[at(s)] * s_re.real()).epsilon(1e-12));
      CHECK(d.vi[at(s)] == doctest::Approx(2.0 * s_im.imag() / d.p[at(s)]).epsilon(1e-12));
    }
    CHECK(d.vr[j] == 0.0);
    CHECK(d.vi[j] == 0.0);
  }
}

#if defined(VEKUA_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  for (int lanes : {1, 3, 4, 7, 16}) {
    SweepData a(200, lanes, 11 + lanes), b(200, lanes, 11 + lanes);
    kernels::scalar::bers_sweep(a.args(3.0));
    kernels::avx2::bers_sweep(b.args(3.0));
    CAPTURE(lanes);
    CHECK(std::memcmp(a.vr.data(), b.vr.data(), a.vr.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(a.vi.data(), b.vi.data(), a.vi.size() * sizeof(double)) == 0);
  }

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {0u, 1u, 5u, 8u, 1001u}) {
    std::vector<double> x(n), y(n), w(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = u(rng), y[k] = u(rng), w[k] = 1 + u(rng);
    double s = kernels::scalar::weighted_dot(x.data(), y.data(), w.data(), n);
    double v = kernels::avx2::weighted_dot(x.data(), y.data(), w.data(), n);
    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound += std::abs(w[k] * x[k] * y[k]);
    CHECK(std::abs(s - v) <= 4 * n * 1.2e-16 * bound);
    CHECK(kernels::avx2::weighted_dot(x.data(), y.data(), nullptr, n) ==
          doctest::Approx(kernels::scalar::weighted_dot(x.data(), y.data(), nullptr, n)));

    std::vector<double> y1 = y, y2 = y;
    kernels::scalar::axpy(0.37, x.data(), y1.data(), n);
    kernels::avx2::axpy(0.37, x.data(), y2.data(), n);
    CHECK(y1 == y2);
  }
}

TEST_CASE("formal power tables do not depend on the isa") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  auto seq = generating_sequence(builtin_case("separable_lorentzian", 0.0).sigma, SequenceMode::separable_c2);
  AngleSet angles = build_angle_set(37);
  kernels::set_isa(kernels::Isa::scalar);
  auto a = build_formal_powers(seq, unit_disk(), angles, 120, 12);
  kernels::set_isa(kernels::Isa::avx2);
  auto b = build_formal_powers(seq, unit_disk(), angles, 120, 12);
  kernels::reset_isa();
  for (int q = 0; q < 37; ++q)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n <= 12; ++n) CHECK(a.boundary(q, m, coef_one, n) == b.boundary(q, m, coef_one, n));
}
#endif

TEST_CASE("thread count and block size do not change results") {
  auto seq = generating_sequence(builtin_case("exponential", 1.0).sigma, SequenceMode::limiting_c1);
  AngleSet angles = build_angle_set(53);
  BuildOptions one;
  one.threads = 1;
  BuildOptions many;
  many.threads = 5;
  many.block_lanes = 3;
  auto a = build_formal_powers(seq, unit_disk(), angles, 90, 9, {}, one);
  auto b = build_formal_powers(seq, unit_disk(), angles, 90, 9, {}, many);
  for (int q = 0; q < 53; ++q)
    for (int k = 0; k < 2; ++k)
      for (int n = 0; n <= 9; ++n) CHECK(a.boundary(q, 0, k, n) == b.boundary(q, 0, k, n));
}
