#include "vekua/dense_lu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vekua {

std::vector<double> multiply(const Matrix& A, const std::vector<double>& x) {
  std::vector<double> y(A.rows, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

LuDecomposition::LuDecomposition(Matrix A) : lu_(std::move(A)) {
  if (lu_.rows != lu_.cols) throw std::invalid_argument("LU needs a square matrix");
  const std::size_t n = lu_.rows;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(lu_(i, j));
    norm1_ = std::max(norm1_, s);
  }
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), 0);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        piv = i;
      }
    if (best == 0.0) throw std::runtime_error("singular matrix: zero pivot in column " + std::to_string(k));
    if (piv != k) {
      std::swap_ranges(lu_.row(k), lu_.row(k) + n, lu_.row(piv));
      std::swap(perm_[k], perm_[piv]);
    }
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = lu_(i, k) * inv;
      lu_(i, k) = f;
      if (f == 0.0) continue;
      double* ri = lu_.row(i);
      const double* rk = lu_.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }
}

std::vector<double> LuDecomposition::solve(std::vector<double> b) const {
  const std::size_t n = lu_.rows;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

std::vector<double> LuDecomposition::solve_transposed(std::vector<double> b) const {
  // A^T = U^T L^T P, so solve U^T y = b, L^T z = y, then x = P^T z.
  const std::size_t n = lu_.rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) b[i] -= lu_(j, i) * b[j];
    b[i] /= lu_(i, i);
  }
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) b[i] -= lu_(j, i) * b[j];
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = b[i];
  return x;
}

double LuDecomposition::condition_estimate() const {
  const std::size_t n = lu_.rows;
  if (n == 0) return 0.0;
  auto sign = [](double v) { return v >= 0.0 ? 1.0 : -1.0; };

  std::vector<double> x(n, 1.0 / n);
  double est = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<double> y = solve(x);
    double ny = 0.0;
    for (double v : y) ny += std::abs(v);
    if (iter > 0 && ny <= est) break;
    est = ny;
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = sign(y[i]);
    std::vector<double> z = solve_transposed(s);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    if (iter > 0 && j == last_j) break;
    last_j = j;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
  }
  // Higham's alternating-sign vector guards against the estimator's known blind spots.
  std::vector<double> alt(n);
  for (std::size_t i = 0; i < n; ++i)
    alt[i] = (i % 2 ? -1.0 : 1.0) * (1.0 + static_cast<double>(i) / std::max<std::size_t>(n - 1, 1));
  std::vector<double> y = solve(alt);
  double ny = 0.0;
  for (double v : y) ny += std::abs(v);
  est = std::max(est, 2.0 * ny / (3.0 * n));
  return est * norm1_;
}

}  // namespace vekua
