#include "vekua/kernels.hpp"

#include <immintrin.h>

namespace vekua::kernels::avx2 {

void bers_sweep(const BersSweep& a) {
  const int L = a.lanes;
  const int vec_end = L - L % 4;
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d scale = _mm256_set1_pd(a.scale);
  const __m256d zero = _mm256_setzero_pd();

  for (int j = 0; j < vec_end; j += 4) {
    __m256d sum_re = zero, c_re = zero, sum_im = zero, c_im = zero;
    _mm256_storeu_pd(a.vr + j, zero);
    _mm256_storeu_pd(a.vi + j, zero);
    __m256d wr = _mm256_loadu_pd(a.wr + j), wi = _mm256_loadu_pd(a.wi + j);
    __m256d p = _mm256_loadu_pd(a.p + j), ip = _mm256_loadu_pd(a.inv_p + j);
    __m256d ur0 = _mm256_mul_pd(wr, ip), ui0 = _mm256_mul_pd(wi, ip);
    __m256d qr0 = _mm256_mul_pd(wr, p), qi0 = _mm256_mul_pd(wi, p);

    for (int s = 0; s < a.steps; ++s) {
      const std::size_t k = static_cast<std::size_t>(s) * L + j;
      const std::size_t k1 = k + L;
      wr = _mm256_loadu_pd(a.wr + k1);
      wi = _mm256_loadu_pd(a.wi + k1);
      p = _mm256_loadu_pd(a.p + k1);
      ip = _mm256_loadu_pd(a.inv_p + k1);
      const __m256d ur1 = _mm256_mul_pd(wr, ip), ui1 = _mm256_mul_pd(wi, ip);
      const __m256d qr1 = _mm256_mul_pd(wr, p), qi1 = _mm256_mul_pd(wi, p);
      const __m256d dzr = _mm256_loadu_pd(a.dzr + k), dzi = _mm256_loadu_pd(a.dzi + k);

      const __m256d t_re = _mm256_mul_pd(
          half, _mm256_sub_pd(_mm256_mul_pd(_mm256_add_pd(ur0, ur1), dzr),
                              _mm256_mul_pd(_mm256_add_pd(ui0, ui1), dzi)));
      const __m256d t_im = _mm256_mul_pd(
          half, _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(qr0, qr1), dzi),
                              _mm256_mul_pd(_mm256_add_pd(qi0, qi1), dzr)));

      __m256d y = _mm256_sub_pd(t_re, c_re);
      __m256d t = _mm256_add_pd(sum_re, y);
      c_re = _mm256_sub_pd(_mm256_sub_pd(t, sum_re), y);
      sum_re = t;

      y = _mm256_sub_pd(t_im, c_im);
      t = _mm256_add_pd(sum_im, y);
      c_im = _mm256_sub_pd(_mm256_sub_pd(t, sum_im), y);
      sum_im = t;

      _mm256_storeu_pd(a.vr + k1, _mm256_mul_pd(scale, _mm256_mul_pd(p, sum_re)));
      _mm256_storeu_pd(a.vi + k1, _mm256_mul_pd(scale, _mm256_mul_pd(ip, sum_im)));
      ur0 = ur1;
      ui0 = ui1;
      qr0 = qr1;
      qi0 = qi1;
    }
  }

  if (vec_end < L) scalar::bers_sweep_lanes(a, vec_end, L);
}

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  if (w) {
    for (; k + 8 <= n; k += 8) {
      __m256d x0 = _mm256_mul_pd(_mm256_loadu_pd(w + k), _mm256_loadu_pd(a + k));
      __m256d x1 = _mm256_mul_pd(_mm256_loadu_pd(w + k + 4), _mm256_loadu_pd(a + k + 4));
      acc0 = _mm256_fmadd_pd(x0, _mm256_loadu_pd(b + k), acc0);
      acc1 = _mm256_fmadd_pd(x1, _mm256_loadu_pd(b + k + 4), acc1);
    }
  } else {
    for (; k + 8 <= n; k += 8) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) s += (w ? w[k] : 1.0) * a[k] * b[k];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + k), _mm256_mul_pd(va, _mm256_loadu_pd(x + k)));
    _mm256_storeu_pd(y + k, r);
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

}  // namespace vekua::kernels::avx2
