#pragma once

#include <cstddef>
#include <vector>

namespace vekua {

/// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
};

std::vector<double> multiply(const Matrix& A, const std::vector<double>& x);

/// LU factorization with partial (row) pivoting, PA = LU.
class LuDecomposition {
 public:
  /// Throws std::runtime_error when a pivot is exactly zero.
  explicit LuDecomposition(Matrix A);

  std::vector<double> solve(std::vector<double> b) const;
  /// Solves A^T x = b.
  std::vector<double> solve_transposed(std::vector<double> b) const;

  /// 1-norm of the original matrix.
  double norm1() const { return norm1_; }
  /// Estimate of ||A||_1 ||A^-1||_1 (Hager's method with Higham's refinement).
  double condition_estimate() const;

  std::size_t size() const { return lu_.rows; }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  double norm1_ = 0.0;
};

}  // namespace vekua
