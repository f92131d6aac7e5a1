#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vekua {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Maps any angle into [-pi, pi). Angles already in range are returned unchanged.
double wrap_angle(double theta);

/// Signed circular distance a - b folded into [-pi, pi).
double angle_difference(double a, double b);

/// A domain that is star-shaped with respect to the origin: every ray from 0 leaves
/// the domain exactly once, at radius rho(theta).
class StarDomain {
 public:
  StarDomain(std::string name, std::function<double(double)> boundary_radius,
             std::vector<double> corner_angles);

  const std::string& name() const { return name_; }

  /// rho(theta) > 0; theta is wrapped into [-pi, pi) first.
  double radius(double theta) const;
  cplx boundary_point(double theta) const;

  /// Angles in [-pi, pi) where the boundary is continuous but its tangent jumps.
  std::span<const double> corner_angles() const { return corners_; }
  bool has_corners() const { return !corners_.empty(); }

  bool contains(cplx z, double tolerance = 1e-12) const;

  /// Smallest and largest x over the closure of the domain.
  std::pair<double, double> x_extent() const;
  /// Lowest and highest y where the vertical line through x meets the domain.
  /// Returns {0, 0} when the line misses it.
  std::pair<double, double> vertical_chord(double x) const;

 private:
  void build_outline() const;

  std::string name_;
  std::function<double(double)> rho_;
  std::vector<double> corners_;
  mutable std::vector<cplx> outline_;  // dense closed polyline, built lazily
};

StarDomain unit_disk();

/// Unit circle left of x = cos(pi/10), capped on the right by the segments
/// y = -/+ 0.5629 x +/- 0.8443 that meet at (1.5, 0).
StarDomain beaked_domain();

/// Star domain from (theta, rho) knots, linearly interpolated and periodic.
StarDomain knot_domain(std::string name, std::vector<std::pair<double, double>> knots,
                       std::vector<double> corners = {});

/// Loads {"name": ..., "knots": [[theta, rho], ...], "corners": [...]} from a JSON file.
StarDomain load_domain_json(const std::string& path);

/// "unit_disk" or "beaked"; anything else is tried as a JSON file path.
StarDomain domain_by_name(const std::string& name);

struct RadialGrid {
  double theta = 0.0;
  std::vector<double> r;  // r[0] = 0, r.back() = rho(theta)
  std::vector<cplx> z;    // r[p] * (cos theta, sin theta)

  int points() const { return static_cast<int>(r.size()) - 1; }  // P
};

/// P + 1 equidistant samples on the ray at theta, with each pinned radius replacing the
/// nearest interior sample.
RadialGrid build_radial_grid(const StarDomain& domain, double theta, int points,
                             std::span<const double> pinned_radii = {});

/// Samples of the ray from 0 to an arbitrary point z (used for point evaluation).
RadialGrid ray_to(cplx z, int points);

struct AngleSet {
  std::vector<double> angles;  // in [-pi, pi), strictly increasing
  std::vector<double> pinned;  // exact values forced into `angles`

  int count() const { return static_cast<int>(angles.size()); }
  /// Index of an angle equal (mod 2pi, within tol) to theta, or -1.
  int find(double theta, double tolerance = 1e-12) const;
};

/// Q uniform angles q*2pi/Q; each pinned angle replaces the nearest uniform angle.
AngleSet build_angle_set(int count, std::span<const double> pinned = {});

/// Arc-length quadrature weights for the closed boundary sampled at `angles`: half of the
/// boundary length on each side of every point, measured along a polyline refined by
/// `subdivisions` chords per interval. Where rho jumps at a corner the radial segment joining
/// the two sides is counted as part of the boundary and assigned to that corner.
std::vector<double> arc_length_weights(const StarDomain& domain, const AngleSet& angles,
                                       int subdivisions = 8);

}  // namespace vekua
