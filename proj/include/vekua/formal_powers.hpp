#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vekua/conductivity.hpp"
#include "vekua/geometry.hpp"

namespace vekua {

struct QuadratureConfig {
  /// Overall factor applied to every Bers integral. 1 is the only value for which the
  /// sigma = 1 powers reduce to z^n.
  double delta = 1.0;
};

enum class Retention {
  boundary,  // keep Z only at the last sample of each radius
  full,      // keep every sample (memory grows with Q * P * N)
};

struct BuildOptions {
  Retention retention = Retention::boundary;
  int threads = 0;      // 0: hardware concurrency
  int block_lanes = 16; // radii processed together by one sweep
};

/// Coefficient index: 0 stands for a = 1, 1 for a = i.
inline constexpr int coef_one = 0;
inline constexpr int coef_i = 1;

/// Z_m^(n)(a, 0; z) along every radius. Families m = 0, 1 alias each other when the
/// sequence has period 1.
class FormalPowerTable {
 public:
  int degree() const { return degree_; }
  int radii() const { return static_cast<int>(thetas_.size()); }
  int points() const { return points_; }
  int period() const { return period_; }
  Retention retention() const { return retention_; }
  double theta(int q) const { return thetas_[q]; }

  /// Value at the last sample r[P] of radius q.
  cplx boundary(int q, int m, int a, int n) const;
  /// p_0 at r[P]; boundary traces are Re Z_0 / p_0.
  double boundary_pair(int q) const { return boundary_p0_[q]; }

  /// Requires Retention::full.
  cplx value(int q, int m, int a, int n, int p) const;
  const RadialGrid& grid(int q) const;

 private:
  friend FormalPowerTable build_formal_powers(const GeneratingSequence&, std::span<const RadialGrid>,
                                              int, const QuadratureConfig&, const BuildOptions&);
  std::size_t bindex(int q, int m, int a, int n) const;

  int degree_ = 0, points_ = 0, period_ = 1;
  Retention retention_ = Retention::boundary;
  std::vector<double> thetas_;
  std::vector<double> boundary_p0_;
  std::vector<cplx> boundary_;
  std::vector<cplx> full_;
  std::vector<RadialGrid> grids_;
};

/// Bers (F_m, G_m)-integral of W along one radial path, V[0] = 0.
std::vector<cplx> fg_antiderivative(const RadialGrid& path, const GeneratingSequence& seq, int m,
                                    std::span<const cplx> W, const QuadratureConfig& config = {});

FormalPowerTable build_formal_powers(const GeneratingSequence& seq, std::span<const RadialGrid> grids,
                                     int degree, const QuadratureConfig& config = {},
                                     const BuildOptions& options = {});

/// Builds the radial grids for `angles` first. `pinned_radii`, when given, lists the radii
/// to pin on the ray at each angle.
FormalPowerTable build_formal_powers(const GeneratingSequence& seq, const StarDomain& domain,
                                     const AngleSet& angles, int points, int degree,
                                     const QuadratureConfig& config = {},
                                     const BuildOptions& options = {},
                                     const std::function<std::vector<double>(double)>& pinned_radii = {});

/// Z_0^(n)(a, 0; z[p]) for an arbitrary complex coefficient a along one path, built with
/// repeated Bers integrals. Result[n][p].
std::vector<std::vector<cplx>> formal_powers_along(const GeneratingSequence& seq, const RadialGrid& path,
                                                   cplx a, int degree, const QuadratureConfig& config = {});

/// Z_0^(n)(a, 0; z) for n = 0..degree and both coefficients at a single point, integrating
/// along the segment [0, z] with `steps` trapezoid steps. Index: a * (degree + 1) + n.
std::vector<cplx> formal_powers_at(const GeneratingSequence& seq, cplx z, int degree, int steps,
                                   const QuadratureConfig& config = {});

/// |d_zbar W - (d_zbar p / p) conj(W)| by central differences of step h, with the unscaled
/// operator d_zbar = d_x + i d_y.
double vekua_residual(const std::function<cplx(cplx)>& W, const std::function<double(cplx)>& p,
                      cplx z, double h);

struct AsymptoticSample {
  double r;
  cplx ratio;  // Z^(n)(a, 0; z) / (a z^n)
};

/// Ratio profile along radius q for p = 1..P (family 0). Requires Retention::full.
std::vector<AsymptoticSample> asymptotics_check(const FormalPowerTable& table, int q, int n, int a);

}  // namespace vekua
