#include "vekua/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace vekua::kernels {

namespace {

// -1 means "pick automatically"; otherwise the forced Isa value.
std::atomic<int> forced{-1};

bool cpu_has_avx2() {
#if defined(VEKUA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

}  // namespace

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa parse_isa(const std::string& text) {
  if (text == "scalar") return Isa::scalar;
  if (text == "avx2") return Isa::avx2;
  throw std::invalid_argument("unknown ISA: " + text);
}

bool isa_supported(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() {
  int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void set_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error("ISA not available: " + to_string(isa));
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { forced.store(-1, std::memory_order_relaxed); }

void bers_sweep(const BersSweep& args) {
#if defined(VEKUA_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::bers_sweep(args);
#endif
  scalar::bers_sweep(args);
}

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
#if defined(VEKUA_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::weighted_dot(a, b, w, n);
#endif
  return scalar::weighted_dot(a, b, w, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#if defined(VEKUA_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::axpy(alpha, x, y, n);
#endif
  scalar::axpy(alpha, x, y, n);
}

}  // namespace vekua::kernels
