#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vekua/conductivity.hpp"
#include "vekua/dense_lu.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/geometry.hpp"
#include "vekua/spline.hpp"

namespace vekua {

/// Raised when a trace is numerically in the span of the previous ones.
class RankDeficiency : public std::runtime_error {
 public:
  RankDeficiency(int index, const std::string& what) : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Orthonormal functions on the boundary, sampled at the trace angles and interpolated by
/// boundary splines in between.
struct BoundaryBasis {
  std::vector<double> thetas;
  std::vector<double> weights;
  std::vector<double> breaks;  // spline break angles (domain corners among the thetas)
  Matrix raw;                  // traces, one per row
  Matrix values;               // orthonormal samples, one per row
  Matrix transform;            // upper triangular: values[k] = sum_j transform(j, k) raw[j]
  std::vector<BoundarySpline> splines;

  int size() const { return static_cast<int>(values.rows); }
  /// Exact sample when theta is a trace angle, spline value otherwise.
  double eval(int k, double theta) const;
};

/// Row k is Re Z_0^(n)(a, 0; z) / p_0(z) at the boundary end of each radius, with rows
/// (a = 1, n = 0..N) followed by (a = i, n = 1..N).
Matrix boundary_traces(const FormalPowerTable& table);

/// Index of the (coefficient, degree) pair behind trace row k for maximum degree N.
std::pair<int, int> trace_label(int k, int degree);

/// Modified Gram-Schmidt (two passes) under <f, g> = sum_q w_q f_q g_q.
BoundaryBasis orthonormalize(const Matrix& traces, std::span<const double> thetas,
                             std::span<const double> weights, std::span<const double> breaks = {});

/// max |<u_i, u_j> - delta_ij|
double gram_error(const BoundaryBasis& basis);

double total_error(std::span<const double> residual, std::span<const double> weights);

struct CollocationOptions {
  std::vector<double> pinned;  // collocation angles forced into the uniform set
  double condition_limit = 1e12;
};

struct SolveReport {
  std::vector<double> alpha;  // coefficients of the orthonormal basis
  std::vector<double> beta;   // coefficients of the raw traces
  std::vector<double> collocation_angles;
  std::vector<double> thetas, weights;
  std::vector<double> boundary_values, fitted, residual;
  double total_error = 0.0;
  double condition = 0.0;
  bool ill_conditioned = false;
  double collocation_residual = 0.0;
  double gram_error = 0.0;
};

/// Square collocation at 2N+1 boundary angles followed by the residual and E on the
/// trace angles.
SolveReport collocation_fit(const BoundaryBasis& basis, const StarDomain& domain,
                            const PlaneFunction& boundary_condition,
                            const CollocationOptions& options = {});

/// Fitted potential at an interior point: sum_k beta_k Re Z^(k)(z) / p_0(z), integrating
/// along [0, z] with `steps` trapezoid steps.
double evaluate_interior(const SolveReport& report, const GeneratingSequence& seq,
                         const StarDomain& domain, cplx z, int steps,
                         const QuadratureConfig& config = {});

}  // namespace vekua
