#pragma once

#include <cstddef>
#include <string>

namespace vekua::kernels {

enum class Isa { scalar, avx2 };

std::string to_string(Isa isa);
Isa parse_isa(const std::string& text);

bool isa_supported(Isa isa);
/// Best supported ISA unless a specific one was forced with set_isa.
Isa active_isa();
/// Forces the ISA used by the dispatched entry points. Throws if the CPU or the build
/// lacks it.
void set_isa(Isa isa);
/// Returns to automatic selection.
void reset_isa();

/// One Bers-integral sweep over a block of radii stored lane-interleaved: element
/// (s, j) of any array lives at index s * lanes + j, with s = 0..steps.
///
/// For the pair (p, i/p) the integral of W = wr + i wi reduces to two real cumulative
/// trapezoid sums along the path,
///   re(s) = Re sum (W / p) dz,   im(s) = Im sum (p W) dz,
/// and the output is v = scale * (p * re + i * im / p), with v(0) = 0. Sums are
/// Kahan-compensated.
struct BersSweep {
  int steps = 0;
  int lanes = 0;
  const double* p = nullptr;
  const double* inv_p = nullptr;
  const double* dzr = nullptr;  // steps * lanes
  const double* dzi = nullptr;
  const double* wr = nullptr;
  const double* wi = nullptr;
  double* vr = nullptr;
  double* vi = nullptr;
  double scale = 1.0;
};

void bers_sweep(const BersSweep& args);
/// sum_k w[k] * a[k] * b[k]; `w` may be null for an unweighted product.
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);
/// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

namespace scalar {
void bers_sweep(const BersSweep& args);
/// Reference sweep restricted to lanes [first, last).
void bers_sweep_lanes(const BersSweep& args, int first, int last);
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

#if defined(VEKUA_HAVE_AVX2)
namespace avx2 {
void bers_sweep(const BersSweep& args);
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace vekua::kernels
