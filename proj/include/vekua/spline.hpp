#pragma once

#include <span>
#include <vector>

namespace vekua {

/// Cubic interpolant of samples on a closed curve parametrized by angle.
///
/// Without breaks the spline is periodic and C2 everywhere. Each break angle that matches a
/// knot splits the curve into arcs. Every arc gets its own not-a-knot cubic, so the result
/// is only continuous at the breaks (where the curve itself has corners).
class BoundarySpline {
 public:
  BoundarySpline() = default;
  /// `knots` strictly increasing in [-pi, pi); `breaks` are matched against knots within 1e-12.
  BoundarySpline(std::span<const double> knots, std::span<const double> values,
                 std::span<const double> breaks = {});

  double operator()(double theta) const;
  bool periodic() const { return arcs_.size() == 1 && periodic_; }

 private:
  struct Arc {
    std::vector<double> t, y, m;  // knots (unwrapped, increasing), values, second derivatives
  };
  static double eval(const Arc& arc, double t);
  const Arc& locate(double theta, double& t) const;

  bool periodic_ = true;
  std::vector<Arc> arcs_;
};

/// Second derivatives of the periodic cubic spline through (t[k], y[k]) with period
/// `period` (t[n-1] - t[0] < period).
std::vector<double> periodic_spline_moments(std::span<const double> t, std::span<const double> y,
                                            double period);

/// Second derivatives of the not-a-knot cubic spline through (t[k], y[k]). Three points give
/// the interpolating parabola, two points a line.
std::vector<double> not_a_knot_moments(std::span<const double> t, std::span<const double> y);

/// Solves a tridiagonal system in place (Thomas algorithm); a[0] and c[n-1] are ignored.
void solve_tridiagonal(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                       std::vector<double>& rhs);

}  // namespace vekua
