#include "vekua/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vekua/geometry.hpp"

namespace vekua {

void solve_tridiagonal(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                       std::vector<double>& rhs) {
  const std::size_t n = b.size();
  for (std::size_t i = 1; i < n; ++i) {
    double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - c[i] * rhs[i + 1]) / b[i];
}

std::vector<double> periodic_spline_moments(std::span<const double> t, std::span<const double> y,
                                            double period) {
  const std::size_t n = t.size();
  if (n < 3) throw std::invalid_argument("periodic spline needs at least 3 knots");
  std::vector<double> h(n);
  for (std::size_t k = 0; k + 1 < n; ++k) h[k] = t[k + 1] - t[k];
  h[n - 1] = t[0] + period - t[n - 1];

  // Row k: h[k-1] M[k-1] + 2(h[k-1] + h[k]) M[k] + h[k] M[k+1] = 6 (slope[k] - slope[k-1]),
  // indices mod n. The cyclic corners are removed with Sherman-Morrison.
  std::vector<double> a(n), b(n), c(n), rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t km = (k + n - 1) % n, kp = (k + 1) % n;
    a[k] = h[km];
    b[k] = 2.0 * (h[km] + h[k]);
    c[k] = h[k];
    rhs[k] = 6.0 * ((y[kp] - y[k]) / h[k] - (y[k] - y[km]) / h[km]);
  }
  const double alpha = c[n - 1];  // A[n-1][0]
  const double beta = a[0];       // A[0][n-1]
  const double gamma = -b[0];
  std::vector<double> bb = b;
  bb[0] -= gamma;
  bb[n - 1] -= alpha * beta / gamma;

  std::vector<double> x = rhs;
  solve_tridiagonal(a, bb, c, x);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  solve_tridiagonal(a, bb, c, u);
  const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + u[0] + beta * u[n - 1] / gamma);
  for (std::size_t k = 0; k < n; ++k) x[k] -= fact * u[k];
  return x;
}

std::vector<double> not_a_knot_moments(std::span<const double> t, std::span<const double> y) {
  const std::size_t n = t.size();
  if (n < 2) throw std::invalid_argument("spline arc needs at least 2 knots");
  if (n == 2) return {0.0, 0.0};
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = t[k + 1] - t[k];
    d[k] = (y[k + 1] - y[k]) / h[k];
  }
  if (n == 3) {
    // The not-a-knot cubic through three points is their parabola: constant M.
    double m = 2.0 * (d[1] - d[0]) / (h[0] + h[1]);
    return {m, m, m};
  }
  // Interior unknowns M[1..n-2]; M[0] and M[n-1] follow from third-derivative continuity
  // at t[1] and t[n-2]:  M0 = M1 + h0 (M1 - M2) / h1, and the mirror relation.
  const std::size_t m = n - 2;
  std::vector<double> a(m), b(m), c(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = i + 1;
    a[i] = h[k - 1];
    b[i] = 2.0 * (h[k - 1] + h[k]);
    c[i] = h[k];
    rhs[i] = 6.0 * (d[k] - d[k - 1]);
  }
  {
    const double h0 = h[0], h1 = h[1];
    b[0] = 3.0 * h0 + 2.0 * h1 + h0 * h0 / h1;
    c[0] = h1 - h0 * h0 / h1;
  }
  {
    const double hl = h[n - 2], hp = h[n - 3];
    b[m - 1] = 3.0 * hl + 2.0 * hp + hl * hl / hp;
    a[m - 1] = hp - hl * hl / hp;
  }
  if (m == 1) {
    // n == 3 handled above; kept for safety.
    rhs[0] /= b[0];
  } else {
    solve_tridiagonal(a, b, c, rhs);
  }
  std::vector<double> M(n);
  for (std::size_t i = 0; i < m; ++i) M[i + 1] = rhs[i];
  M[0] = M[1] + h[0] * (M[1] - M[2]) / h[1];
  M[n - 1] = M[n - 2] + h[n - 2] * (M[n - 2] - M[n - 3]) / h[n - 3];
  return M;
}

BoundarySpline::BoundarySpline(std::span<const double> knots, std::span<const double> values,
                               std::span<const double> breaks) {
  const std::size_t n = knots.size();
  if (n != values.size()) throw std::invalid_argument("spline knots and values differ in size");
  if (n < 3) throw std::invalid_argument("boundary spline needs at least 3 knots");

  std::vector<std::size_t> cut;
  for (double br : breaks) {
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(angle_difference(knots[k], br)) <= 1e-12) {
        cut.push_back(k);
        break;
      }
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

  if (cut.empty()) {
    periodic_ = true;
    Arc arc;
    arc.t.assign(knots.begin(), knots.end());
    arc.y.assign(values.begin(), values.end());
    arc.m = periodic_spline_moments(arc.t, arc.y, two_pi);
    // Close the loop so evaluation never needs the wrap-around interval separately.
    arc.t.push_back(knots[0] + two_pi);
    arc.y.push_back(values[0]);
    arc.m.push_back(arc.m[0]);
    arcs_.push_back(std::move(arc));
    return;
  }

  periodic_ = false;
  for (std::size_t c = 0; c < cut.size(); ++c) {
    const std::size_t from = cut[c];
    const std::size_t to = (c + 1 < cut.size()) ? cut[c + 1] : cut[0] + n;
    Arc arc;
    for (std::size_t k = from; k <= to; ++k) {
      const std::size_t kk = k % n;
      arc.t.push_back(knots[kk] + (k >= n ? two_pi : 0.0));
      arc.y.push_back(values[kk]);
    }
    arc.m = not_a_knot_moments(arc.t, arc.y);
    arcs_.push_back(std::move(arc));
  }
}

double BoundarySpline::eval(const Arc& arc, double t) {
  const auto& x = arc.t;
  std::size_t k = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
  k = std::clamp<std::size_t>(k, 1, x.size() - 1) - 1;
  const double h = x[k + 1] - x[k];
  const double A = (x[k + 1] - t) / h, B = (t - x[k]) / h;
  return A * arc.y[k] + B * arc.y[k + 1] +
         ((A * A * A - A) * arc.m[k] + (B * B * B - B) * arc.m[k + 1]) * h * h / 6.0;
}

const BoundarySpline::Arc& BoundarySpline::locate(double theta, double& t) const {
  for (const Arc& arc : arcs_) {
    for (double shift : {0.0, two_pi, -two_pi}) {
      double tt = theta + shift;
      if (tt >= arc.t.front() && tt <= arc.t.back()) {
        t = tt;
        return arc;
      }
    }
  }
  throw std::logic_error("boundary spline: angle not covered");
}

double BoundarySpline::operator()(double theta) const {
  if (arcs_.empty()) throw std::logic_error("boundary spline is empty");
  double t = 0.0;
  const Arc& arc = locate(wrap_angle(theta), t);
  return eval(arc, t);
}

}  // namespace vekua
