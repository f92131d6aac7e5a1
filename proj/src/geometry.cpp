#include "vekua/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace vekua {

double wrap_angle(double theta) {
  if (theta >= -pi && theta < pi) return theta;
  double t = theta - two_pi * std::floor((theta + pi) / two_pi);
  if (t >= pi) t -= two_pi;
  if (t < -pi) t += two_pi;
  return t;
}

double angle_difference(double a, double b) { return wrap_angle(a - b); }

StarDomain::StarDomain(std::string name, std::function<double(double)> boundary_radius,
                       std::vector<double> corner_angles)
    : name_(std::move(name)), rho_(std::move(boundary_radius)), corners_(std::move(corner_angles)) {
  for (double& c : corners_) c = wrap_angle(c);
  std::sort(corners_.begin(), corners_.end());
}

double StarDomain::radius(double theta) const {
  double r = rho_(wrap_angle(theta));
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::domain_error("domain '" + name_ + "': boundary radius must be positive");
  return r;
}

cplx StarDomain::boundary_point(double theta) const {
  double r = radius(theta);
  return {r * std::cos(theta), r * std::sin(theta)};
}

bool StarDomain::contains(cplx z, double tolerance) const {
  double r = std::abs(z);
  if (r == 0.0) return true;
  return r <= radius(std::arg(z)) * (1.0 + tolerance) + tolerance;
}

void StarDomain::build_outline() const {
  if (!outline_.empty()) return;
  constexpr int samples = 1 << 14;
  std::vector<double> thetas;
  thetas.reserve(samples + corners_.size());
  for (int k = 0; k < samples; ++k) thetas.push_back(-pi + two_pi * k / samples);
  thetas.insert(thetas.end(), corners_.begin(), corners_.end());
  std::sort(thetas.begin(), thetas.end());
  outline_.reserve(thetas.size());
  for (double t : thetas) outline_.push_back(boundary_point(t));
}

std::pair<double, double> StarDomain::x_extent() const {
  build_outline();
  auto [lo, hi] = std::minmax_element(outline_.begin(), outline_.end(),
                                      [](cplx a, cplx b) { return a.real() < b.real(); });
  return {lo->real(), hi->real()};
}

std::pair<double, double> StarDomain::vertical_chord(double x) const {
  build_outline();
  double ylo = INFINITY, yhi = -INFINITY;
  const std::size_t n = outline_.size();
  for (std::size_t k = 0; k < n; ++k) {
    cplx a = outline_[k], b = outline_[(k + 1) % n];
    double xa = a.real(), xb = b.real();
    if ((x < std::min(xa, xb)) || (x > std::max(xa, xb))) continue;
    double y;
    if (xa == xb) {
      ylo = std::min({ylo, a.imag(), b.imag()});
      yhi = std::max({yhi, a.imag(), b.imag()});
      continue;
    }
    double t = (x - xa) / (xb - xa);
    y = a.imag() + t * (b.imag() - a.imag());
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  }
  if (ylo > yhi) return {0.0, 0.0};
  return {ylo, yhi};
}

StarDomain unit_disk() {
  return StarDomain("unit_disk", [](double) { return 1.0; }, {});
}

StarDomain beaked_domain() {
  constexpr double slope = 0.5629;
  constexpr double intercept = 0.8443;
  auto rho = [](double theta) {
    double a = std::abs(theta);
    if (a >= pi / 10.0) return 1.0;
    return intercept / (std::sin(a) + slope * std::cos(a));
  };
  return StarDomain("beaked", rho, {-pi / 10.0, 0.0, pi / 10.0});
}

StarDomain knot_domain(std::string name, std::vector<std::pair<double, double>> knots,
                       std::vector<double> corners) {
  if (knots.size() < 3) throw std::invalid_argument("knot domain needs at least 3 knots");
  for (auto& [t, r] : knots) {
    t = wrap_angle(t);
    if (!(r > 0.0)) throw std::invalid_argument("knot domain radii must be positive");
  }
  std::sort(knots.begin(), knots.end());
  for (std::size_t k = 1; k < knots.size(); ++k)
    if (knots[k].first == knots[k - 1].first)
      throw std::invalid_argument("knot domain has duplicate angles");

  auto rho = [knots = std::move(knots)](double theta) {
    // Periodic linear interpolation between the bracketing knots.
    auto it = std::upper_bound(knots.begin(), knots.end(), theta,
                               [](double t, const auto& k) { return t < k.first; });
    const auto& hi = (it == knots.end()) ? knots.front() : *it;
    const auto& lo = (it == knots.begin()) ? knots.back() : *(it - 1);
    double span = hi.first - lo.first;
    double off = theta - lo.first;
    if (span <= 0.0) span += two_pi;
    if (off < 0.0) off += two_pi;
    return lo.second + (hi.second - lo.second) * (off / span);
  };
  return StarDomain(std::move(name), rho, std::move(corners));
}

StarDomain load_domain_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open domain file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<std::pair<double, double>> knots;
  for (const auto& k : doc.at("knots")) knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
  std::vector<double> corners = doc.value("corners", std::vector<double>{});
  return knot_domain(doc.value("name", path), std::move(knots), std::move(corners));
}

StarDomain domain_by_name(const std::string& name) {
  if (name == "unit_disk") return unit_disk();
  if (name == "beaked") return beaked_domain();
  return load_domain_json(name);
}

RadialGrid build_radial_grid(const StarDomain& domain, double theta, int points,
                             std::span<const double> pinned_radii) {
  if (points < 2) throw std::invalid_argument("radial grid needs P >= 2");
  const double rho = domain.radius(theta);
  RadialGrid g;
  g.theta = theta;
  g.r.resize(points + 1);
  for (int p = 0; p <= points; ++p) g.r[p] = p * rho / points;
  g.r[points] = rho;

  std::vector<char> taken(points + 1, 0);
  for (double pr : pinned_radii) {
    if (!(pr > 0.0 && pr < rho))
      throw std::invalid_argument("pinned radius outside (0, rho(theta))");
    int k = static_cast<int>(std::lround(pr * points / rho));
    k = std::clamp(k, 1, points - 1);
    if (taken[k]) throw std::invalid_argument("pinned radii collide on the same sample");
    taken[k] = 1;
    g.r[k] = pr;
  }
  for (int p = 1; p <= points; ++p)
    if (!(g.r[p] > g.r[p - 1])) throw std::invalid_argument("pinned radii break monotonicity");

  const double c = std::cos(theta), s = std::sin(theta);
  g.z.resize(points + 1);
  for (int p = 0; p <= points; ++p) g.z[p] = {g.r[p] * c, g.r[p] * s};
  return g;
}

RadialGrid ray_to(cplx z, int points) {
  if (points < 2) throw std::invalid_argument("radial grid needs P >= 2");
  RadialGrid g;
  const double r = std::abs(z);
  g.theta = (r == 0.0) ? 0.0 : std::arg(z);
  g.r.resize(points + 1);
  g.z.resize(points + 1);
  for (int p = 0; p <= points; ++p) {
    double t = static_cast<double>(p) / points;
    g.r[p] = t * r;
    g.z[p] = t * z;
  }
  g.r[points] = r;
  g.z[points] = z;
  return g;
}

int AngleSet::find(double theta, double tolerance) const {
  theta = wrap_angle(theta);
  auto it = std::lower_bound(angles.begin(), angles.end(), theta);
  int best = -1;
  double best_d = tolerance;
  auto consider = [&](std::size_t k) {
    double d = std::abs(angle_difference(angles[k], theta));
    if (d <= best_d) {
      best_d = d;
      best = static_cast<int>(k);
    }
  };
  if (angles.empty()) return -1;
  std::size_t k = static_cast<std::size_t>(it - angles.begin());
  consider(k % angles.size());
  consider((k + angles.size() - 1) % angles.size());
  consider(0);
  consider(angles.size() - 1);
  return best;
}

AngleSet build_angle_set(int count, std::span<const double> pinned) {
  if (count < 3) throw std::invalid_argument("angle set needs Q >= 3");
  const double step = two_pi / count;
  AngleSet set;
  set.angles.resize(count);
  for (int q = 0; q < count; ++q) set.angles[q] = wrap_angle(q * step);

  std::vector<double> pins(pinned.begin(), pinned.end());
  for (double& p : pins) p = wrap_angle(p);
  for (std::size_t i = 0; i < pins.size(); ++i)
    for (std::size_t j = i + 1; j < pins.size(); ++j)
      if (std::abs(angle_difference(pins[i], pins[j])) < 0.5 * step)
        throw std::invalid_argument("pinned angles closer than half an angular step");

  std::vector<int> target(count, -1);
  for (std::size_t i = 0; i < pins.size(); ++i) {
    // Nearest uniform angle; q*step is exact enough for rounding to pick the right one.
    double u = pins[i] < 0.0 ? pins[i] + two_pi : pins[i];
    int q = static_cast<int>(std::lround(u / step)) % count;
    if (target[q] >= 0) throw std::invalid_argument("two pinned angles replace the same angle");
    target[q] = static_cast<int>(i);
    set.angles[q] = pins[i];
  }
  std::sort(set.angles.begin(), set.angles.end());
  for (int q = 1; q < count; ++q)
    if (!(set.angles[q] > set.angles[q - 1]))
      throw std::invalid_argument("pinned angles break strict ordering");
  set.pinned = std::move(pins);
  return set;
}

std::vector<double> arc_length_weights(const StarDomain& domain, const AngleSet& angles,
                                       int subdivisions) {
  const int n = angles.count();
  if (n < 2) throw std::invalid_argument("arc_length_weights needs at least two angles");
  subdivisions = std::max(subdivisions, 1);
  const auto corners = domain.corner_angles();

  auto is_corner = [&](double t) {
    for (double c : corners)
      if (std::abs(angle_difference(t, c)) <= 1e-12) return true;
    return false;
  };
  // One-sided boundary points, so that a chord never bridges a jump of rho.
  auto point_after = [&](double t) {
    return is_corner(t) ? std::polar(domain.radius(std::nextafter(t, t + 1.0)), t) : domain.boundary_point(t);
  };
  auto point_before = [&](double t) {
    return is_corner(t) ? std::polar(domain.radius(std::nextafter(t, t - 1.0)), t) : domain.boundary_point(t);
  };
  // Radial segment of the boundary where rho jumps at a corner.
  auto jump = [&](double t) {
    return std::abs(domain.radius(std::nextafter(t, t + 1.0)) - domain.radius(std::nextafter(t, t - 1.0)));
  };

  std::vector<double> seg(n), extra(n, 0.0);
  std::vector<double> breaks;
  for (int q = 0; q < n; ++q) {
    double a = angles.angles[q];
    double b = (q + 1 < n) ? angles.angles[q + 1] : angles.angles[0] + two_pi;
    if (is_corner(a)) extra[q] = jump(a);
    // Corners strictly inside the interval become extra break points so that no chord
    // cuts across a kink.
    breaks.assign({a});
    for (double c : corners) {
      for (double shift : {0.0, two_pi}) {
        double cc = c + shift;
        if (cc > a && cc < b) breaks.push_back(cc);
      }
    }
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    double len = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      double t0 = breaks[k], t1 = breaks[k + 1];
      if (k > 0) len += jump(t0);
      cplx prev = point_after(t0);
      for (int s = 1; s <= subdivisions; ++s) {
        cplx cur = s == subdivisions ? point_before(t1) : domain.boundary_point(t0 + (t1 - t0) * s / subdivisions);
        len += std::abs(cur - prev);
        prev = cur;
      }
    }
    seg[q] = len;
  }
  std::vector<double> w(n);
  for (int q = 0; q < n; ++q) w[q] = 0.5 * (seg[(q + n - 1) % n] + seg[q]) + extra[q];
  return w;
}

}  // namespace vekua
