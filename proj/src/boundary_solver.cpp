#include "vekua/boundary_solver.hpp"

#include <algorithm>
#include <cmath>

#include "vekua/kernels.hpp"

namespace vekua {

Matrix boundary_traces(const FormalPowerTable& table) {
  const int N = table.degree();
  const int Q = table.radii();
  Matrix T(2 * N + 1, Q);
  for (int q = 0; q < Q; ++q) {
    const double p0 = table.boundary_pair(q);
    for (int k = 0; k < 2 * N + 1; ++k) {
      auto [a, n] = trace_label(k, N);
      T(k, q) = table.boundary(q, 0, a, n).real() / p0;
    }
  }
  return T;
}

std::pair<int, int> trace_label(int k, int degree) {
  if (k <= degree) return {coef_one, k};
  return {coef_i, k - degree};
}

BoundaryBasis orthonormalize(const Matrix& traces, std::span<const double> thetas,
                             std::span<const double> weights, std::span<const double> breaks) {
  const std::size_t K = traces.rows, Q = traces.cols;
  if (thetas.size() != Q || weights.size() != Q)
    throw std::invalid_argument("orthonormalize: angle and weight counts must match the traces");

  BoundaryBasis b;
  b.thetas.assign(thetas.begin(), thetas.end());
  b.weights.assign(weights.begin(), weights.end());
  b.raw = traces;
  b.values = traces;
  b.transform = Matrix(K, K);
  const double* w = b.weights.data();

  for (std::size_t k = 0; k < K; ++k) {
    double* v = b.values.row(k);
    const double norm0 = std::sqrt(kernels::weighted_dot(v, v, w, Q));
    std::vector<double> col(K, 0.0);  // column k of the transform
    col[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const double* u = b.values.row(j);
        const double c = kernels::weighted_dot(v, u, w, Q);
        kernels::axpy(-c, u, v, Q);
        for (std::size_t i = 0; i <= j; ++i) col[i] -= c * b.transform(i, j);
      }
    }
    const double norm = std::sqrt(kernels::weighted_dot(v, v, w, Q));
    if (!(norm > 1e-12 * norm0) || norm0 == 0.0)
      throw RankDeficiency(static_cast<int>(k),
                           "boundary traces are rank deficient at trace " + std::to_string(k));
    const double inv = 1.0 / norm;
    for (std::size_t q = 0; q < Q; ++q) v[q] *= inv;
    for (std::size_t i = 0; i <= k; ++i) b.transform(i, k) = col[i] * inv;
  }

  for (double br : breaks)
    for (double t : b.thetas)
      if (std::abs(angle_difference(t, br)) <= 1e-12) {
        b.breaks.push_back(br);
        break;
      }
  b.splines.reserve(K);
  for (std::size_t k = 0; k < K; ++k)
    b.splines.emplace_back(b.thetas, std::span<const double>(b.values.row(k), Q), b.breaks);
  return b;
}

double BoundaryBasis::eval(int k, double theta) const {
  theta = wrap_angle(theta);
  auto it = std::lower_bound(thetas.begin(), thetas.end(), theta);
  if (it != thetas.end() && *it == theta) return values(k, static_cast<std::size_t>(it - thetas.begin()));
  return splines[k](theta);
}

double gram_error(const BoundaryBasis& basis) {
  const std::size_t K = basis.values.rows, Q = basis.values.cols;
  double err = 0.0;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double g = kernels::weighted_dot(basis.values.row(i), basis.values.row(j), basis.weights.data(), Q);
      err = std::max(err, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return err;
}

double total_error(std::span<const double> residual, std::span<const double> weights) {
  if (residual.size() != weights.size()) throw std::invalid_argument("total_error: size mismatch");
  double s = 0.0;
  for (std::size_t q = 0; q < residual.size(); ++q) s += weights[q] * residual[q] * residual[q];
  return std::sqrt(s);
}

SolveReport collocation_fit(const BoundaryBasis& basis, const StarDomain& domain,
                            const PlaneFunction& boundary_condition, const CollocationOptions& options) {
  const int M = basis.size();
  const std::size_t Q = basis.thetas.size();
  SolveReport rep;
  AngleSet omega = build_angle_set(M, options.pinned);
  rep.collocation_angles = omega.angles;

  auto condition_at = [&](double theta) {
    cplx z = domain.boundary_point(theta);
    double v = boundary_condition(z.real(), z.imag());
    if (!std::isfinite(v))
      throw std::domain_error("boundary condition undefined at theta = " + std::to_string(theta));
    return v;
  };

  Matrix U(M, M);
  std::vector<double> gamma(M);
  for (int n = 0; n < M; ++n) {
    for (int k = 0; k < M; ++k) U(n, k) = basis.eval(k, omega.angles[n]);
    gamma[n] = condition_at(omega.angles[n]);
  }

  LuDecomposition lu(U);
  rep.condition = lu.condition_estimate();
  rep.ill_conditioned = !(rep.condition <= options.condition_limit);
  rep.alpha = lu.solve(gamma);
  std::vector<double> check = multiply(U, rep.alpha);
  for (int n = 0; n < M; ++n)
    rep.collocation_residual = std::max(rep.collocation_residual, std::abs(check[n] - gamma[n]));

  rep.beta.assign(M, 0.0);
  for (int j = 0; j < M; ++j)
    for (int k = j; k < M; ++k) rep.beta[j] += basis.transform(j, k) * rep.alpha[k];

  rep.thetas = basis.thetas;
  rep.weights = basis.weights;
  rep.boundary_values.resize(Q);
  rep.fitted.assign(Q, 0.0);
  rep.residual.resize(Q);
  for (int k = 0; k < M; ++k) kernels::axpy(rep.alpha[k], basis.values.row(k), rep.fitted.data(), Q);
  for (std::size_t q = 0; q < Q; ++q) {
    rep.boundary_values[q] = condition_at(basis.thetas[q]);
    rep.residual[q] = rep.fitted[q] - rep.boundary_values[q];
  }
  rep.total_error = total_error(rep.residual, rep.weights);
  rep.gram_error = gram_error(basis);
  return rep;
}

double evaluate_interior(const SolveReport& report, const GeneratingSequence& seq,
                         const StarDomain& domain, cplx z, int steps, const QuadratureConfig& config) {
  if (!domain.contains(z, 1e-9)) throw std::domain_error("evaluation point lies outside the domain");
  const int M = static_cast<int>(report.beta.size());
  const int N = (M - 1) / 2;
  std::vector<cplx> Z = formal_powers_at(seq, z, N, steps, config);
  const SamplePoint s = SamplePoint::at(z.real(), z.imag());
  const double p0 = seq.pair(0, s);
  double u = 0.0;
  for (int k = 0; k < M; ++k) {
    auto [a, n] = trace_label(k, N);
    u += report.beta[k] * Z[a * (N + 1) + n].real();
  }
  return u / p0;
}

}  // namespace vekua
