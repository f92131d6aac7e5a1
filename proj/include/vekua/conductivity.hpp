#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vekua/geometry.hpp"

namespace vekua {

/// A query location. Radial grids know r and theta exactly, so fields that depend only
/// on the distance to the origin read `r` instead of recomputing hypot(x, y).
struct SamplePoint {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
  double theta = 0.0;

  static SamplePoint at(double x, double y);
  static SamplePoint polar(double r, double theta);
};

using FieldFunction = std::function<double(const SamplePoint&)>;
using PlaneFunction = std::function<double(double, double)>;

/// sigma(x, y) = sx(x) * sy(y)
struct SeparableFactors {
  std::function<double(double)> sx;
  std::function<double(double)> sy;
};

class ConductivityField {
 public:
  enum class Kind { analytic, geometric, strip, sampled };

  ConductivityField(std::string name, Kind kind, FieldFunction sigma,
                    std::optional<SeparableFactors> separable = std::nullopt);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }

  /// Evaluates sigma and throws if the value is not strictly positive.
  double operator()(const SamplePoint& s) const;
  double at(double x, double y) const { return (*this)(SamplePoint::at(x, y)); }

  const std::optional<SeparableFactors>& separable() const { return separable_; }

 private:
  std::string name_;
  Kind kind_;
  FieldFunction sigma_;
  std::optional<SeparableFactors> separable_;
};

/// sigma(x, y) = value everywhere; separable with sx = value, sy = 1.
ConductivityField constant_conductivity(double value);

/// A conductivity together with a Dirichlet condition and, when known, the exact potential.
struct TestCase {
  std::string name;
  ConductivityField sigma;
  PlaneFunction boundary_condition;
  std::optional<PlaneFunction> exact;
};

/// separable_lorentzian, exponential, polynomial, lorentzian, sinusoidal.
/// `bc_alpha` overrides alpha inside the boundary condition only (sinusoidal case).
TestCase builtin_case(const std::string& name, double alpha,
                      std::optional<double> bc_alpha = std::nullopt);

/// concentric_disks, offcenter_disk, square_inclusion, beaked_lorentzian,
/// beaked_concentric, beaked_square.
TestCase geometric_case(const std::string& name);

/// Either a builtin or a geometric case.
TestCase case_by_name(const std::string& name, double alpha,
                      std::optional<double> bc_alpha = std::nullopt);

/// Field from a CSV of (x, y, sigma) rows forming a rectilinear grid, bilinearly
/// interpolated and clamped outside the sampled rectangle.
ConductivityField load_sampled_field(const std::string& path);

/// Checks sigma > 0 at `samples` points per direction of a grid covering the domain.
void check_positive(const ConductivityField& sigma, const StarDomain& domain, int samples = 64);

/// Piecewise separable approximation built from K vertical strips:
/// on strip k, sigma_pw = ((x + A_k) / (chi_k + A_k)) * f_k(y), where f_k interpolates J
/// samples of sigma along the midline x = chi_k.
class StripInterpolation {
 public:
  StripInterpolation(const ConductivityField& sigma, const StarDomain& domain, int strips,
                     int samples, std::vector<double> offsets);

  int strips() const { return static_cast<int>(chi_.size()); }
  int samples() const { return samples_; }
  double edge(int k) const { return x0_ + k * width_; }  // x_0 .. x_K
  double midline(int k) const { return chi_[k]; }
  double offset(int k) const { return offsets_[k]; }

  int strip_of(double x) const;
  double f(int k, double y) const;
  double sigma_pw(double x, double y) const;
  /// Family-0 pair function ((chi_k + A_k) / (x + A_k) * f_k(y))^(1/2).
  double p0(double x, double y) const;

  /// The returned field refers to this object, which must outlive it.
  ConductivityField as_field() const;

 private:
  double x0_ = 0.0, width_ = 0.0;
  int samples_ = 0;
  std::vector<double> chi_, offsets_;
  std::vector<double> ylo_, yhi_;
  std::vector<double> values_;  // strips x samples
};

std::shared_ptr<const StripInterpolation> build_strip_interpolation(
    const ConductivityField& sigma, const StarDomain& domain, int strips, int samples,
    double offset = 60.0);

enum class SequenceMode { limiting_c1, strip_c2, ystrip_c2, separable_c2 };

std::string to_string(SequenceMode mode);
SequenceMode parse_sequence_mode(const std::string& text);

/// A Bers generating sequence made of pairs (p_m, i/p_m) with real positive p_m. When the
/// period is 1 both families share p_0.
struct GeneratingSequence {
  SequenceMode mode = SequenceMode::limiting_c1;
  int period = 1;
  std::function<double(const SamplePoint&)> p[2];

  double pair(int m, const SamplePoint& s) const { return p[period == 1 ? 0 : m](s); }
};

/// Sampled F_m, G_m and their adjoints F*_m = -i F_m, G*_m = -i G_m.
struct PairSamples {
  std::vector<cplx> F, G, Fs, Gs;
};

PairSamples sample_pair(const GeneratingSequence& seq, int m, const RadialGrid& grid);

GeneratingSequence generating_sequence(const ConductivityField& sigma, SequenceMode mode);
GeneratingSequence generating_sequence(std::shared_ptr<const StripInterpolation> strips);

}  // namespace vekua
