#include "vekua/kernels.hpp"

namespace vekua::kernels::scalar {

// The AVX2 sweep performs exactly these operations in exactly this order, lane by lane,
// so both paths round identically. Keep the two in sync.
void bers_sweep_lanes(const BersSweep& a, int first, int last) {
  const int L = a.lanes;
  for (int j = first; j < last; ++j) {
    double sum_re = 0.0, c_re = 0.0;
    double sum_im = 0.0, c_im = 0.0;
    a.vr[j] = 0.0;
    a.vi[j] = 0.0;
    double ur0 = a.wr[j] * a.inv_p[j];
    double ui0 = a.wi[j] * a.inv_p[j];
    double qr0 = a.wr[j] * a.p[j];
    double qi0 = a.wi[j] * a.p[j];
    for (int s = 0; s < a.steps; ++s) {
      const std::size_t k = static_cast<std::size_t>(s) * L + j;
      const std::size_t k1 = k + L;
      const double ur1 = a.wr[k1] * a.inv_p[k1];
      const double ui1 = a.wi[k1] * a.inv_p[k1];
      const double qr1 = a.wr[k1] * a.p[k1];
      const double qi1 = a.wi[k1] * a.p[k1];
      const double dzr = a.dzr[k], dzi = a.dzi[k];

      const double t_re = 0.5 * ((ur0 + ur1) * dzr - (ui0 + ui1) * dzi);
      const double t_im = 0.5 * ((qr0 + qr1) * dzi + (qi0 + qi1) * dzr);

      double y = t_re - c_re;
      double t = sum_re + y;
      c_re = (t - sum_re) - y;
      sum_re = t;

      y = t_im - c_im;
      t = sum_im + y;
      c_im = (t - sum_im) - y;
      sum_im = t;

      a.vr[k1] = a.scale * (a.p[k1] * sum_re);
      a.vi[k1] = a.scale * (a.inv_p[k1] * sum_im);
      ur0 = ur1;
      ui0 = ui1;
      qr0 = qr1;
      qi0 = qi1;
    }
  }
}

void bers_sweep(const BersSweep& a) { bers_sweep_lanes(a, 0, a.lanes); }

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  double s = 0.0;
  if (w) {
    for (std::size_t k = 0; k < n; ++k) s += w[k] * a[k] * b[k];
  } else {
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  }
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

}  // namespace vekua::kernels::scalar
