#include "vekua/conductivity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vekua {

SamplePoint SamplePoint::at(double x, double y) {
  return {x, y, std::hypot(x, y), std::atan2(y, x)};
}

SamplePoint SamplePoint::polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta), r, theta};
}

ConductivityField::ConductivityField(std::string name, Kind kind, FieldFunction sigma,
                                     std::optional<SeparableFactors> separable)
    : name_(std::move(name)), kind_(kind), sigma_(std::move(sigma)), separable_(std::move(separable)) {}

double ConductivityField::operator()(const SamplePoint& s) const {
  double v = sigma_(s);
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "conductivity '" << name_ << "' is not positive at (" << s.x << ", " << s.y << ")";
    throw std::domain_error(msg.str());
  }
  return v;
}

namespace {

ConductivityField analytic(std::string name, PlaneFunction f,
                           std::optional<SeparableFactors> sep = std::nullopt) {
  return ConductivityField(
      std::move(name), ConductivityField::Kind::analytic,
      [f = std::move(f)](const SamplePoint& s) { return f(s.x, s.y); }, std::move(sep));
}

ConductivityField geometric(std::string name, FieldFunction f) {
  return ConductivityField(std::move(name), ConductivityField::Kind::geometric, std::move(f));
}

double cubic_potential(double x, double y, double c) { return (x * x * x + y * y * y) / 3.0 + c * (x + y); }

double concentric_value(double r) {
  if (r < 0.2) return 100.0;
  if (r < 0.4) return 30.0;
  if (r < 0.6) return 20.0;
  if (r < 0.8) return 15.0;
  return 10.0;
}

// Corner points of the square land on pinned radial samples whose coordinates carry
// rounding noise, so membership is decided with a small slack.
bool in_square(double x, double y) {
  constexpr double half = 0.325 + 1e-12;
  return std::abs(x) <= half && std::abs(y) <= half;
}

}  // namespace

ConductivityField constant_conductivity(double value) {
  return ConductivityField(
      "constant", ConductivityField::Kind::analytic, [value](const SamplePoint&) { return value; },
      SeparableFactors{[value](double) { return value; }, [](double) { return 1.0; }});
}

TestCase builtin_case(const std::string& name, double alpha, std::optional<double> bc_alpha) {
  const double ba = bc_alpha.value_or(alpha);
  if (name == "separable_lorentzian") {
    auto sx = [](double x) { return 1.0 / (x * x + 0.1); };
    auto sy = [](double y) { return 1.0 / (y * y + 0.1); };
    auto u = [](double x, double y) { return cubic_potential(x, y, 0.1); };
    return {name,
            analytic(name, [=](double x, double y) { return sx(x) * sy(y); },
                     SeparableFactors{sx, sy}),
            u, u};
  }
  if (name == "exponential") {
    auto u = [ba](double x, double y) { return std::exp(-ba * x * y); };
    return {name, analytic(name, [alpha](double x, double y) { return std::exp(alpha * x * y); }),
            u, ba == alpha ? std::optional<PlaneFunction>(u) : std::nullopt};
  }
  if (name == "polynomial") {
    auto u = [ba](double x, double y) { return std::log(ba * (x + y) + 10.0); };
    return {name,
            analytic(name, [alpha](double x, double y) { return alpha * (x + y) + 10.0; }),
            u, ba == alpha ? std::optional<PlaneFunction>(u) : std::nullopt};
  }
  if (name == "lorentzian") {
    auto u = [ba](double x, double y) {
      double s = x + y;
      return s * s * s / 3.0 + ba * s;
    };
    return {name,
            analytic(name,
                     [alpha](double x, double y) {
                       double s = x + y;
                       return 1.0 / (s * s + alpha);
                     }),
            u, ba == alpha ? std::optional<PlaneFunction>(u) : std::nullopt};
  }
  if (name == "sinusoidal") {
    auto u = [ba](double x, double y) { return 1.0 / (std::tan(ba * x * y / 2.0) + 1.0); };
    return {name,
            analytic(name, [alpha](double x, double y) { return 1.0 + std::sin(alpha * x * y); }),
            u, ba == alpha ? std::optional<PlaneFunction>(u) : std::nullopt};
  }
  throw std::invalid_argument("unknown builtin case: " + name);
}

TestCase geometric_case(const std::string& name) {
  auto u_lor = [](double x, double y) { return cubic_potential(x, y, 0.1); };
  if (name == "concentric_disks" || name == "beaked_concentric") {
    auto field = geometric(name, [](const SamplePoint& s) { return concentric_value(s.r); });
    if (name == "beaked_concentric") return {name, field, u_lor, std::nullopt};
    return {name, field, [](double x, double y) { return cubic_potential(x, y, 0.01); }, std::nullopt};
  }
  if (name == "offcenter_disk") {
    auto field = geometric(name, [](const SamplePoint& s) {
      double dx = s.x - 0.6;
      return dx * dx + s.y * s.y <= 0.2 ? 100.0 : 10.0;
    });
    return {name, field, [](double x, double y) { return cubic_potential(x - 0.6, y, 0.01); },
            std::nullopt};
  }
  if (name == "square_inclusion" || name == "beaked_square") {
    auto field = geometric(name, [](const SamplePoint& s) { return in_square(s.x, s.y) ? 100.0 : 10.0; });
    return {name, field, u_lor, std::nullopt};
  }
  if (name == "beaked_lorentzian") {
    TestCase c = builtin_case("separable_lorentzian", 0.0);
    c.name = name;
    return c;
  }
  throw std::invalid_argument("unknown geometric case: " + name);
}

TestCase case_by_name(const std::string& name, double alpha, std::optional<double> bc_alpha) {
  static const char* builtins[] = {"separable_lorentzian", "exponential", "polynomial",
                                   "lorentzian", "sinusoidal"};
  for (const char* b : builtins)
    if (name == b) return builtin_case(name, alpha, bc_alpha);
  return geometric_case(name);
}

ConductivityField load_sampled_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open conductivity file: " + path);
  std::map<std::pair<double, double>, double> samples;
  std::vector<double> xs, ys;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x, y, s;
    if (!(row >> x >> y >> s)) continue;  // header or malformed row
    if (!(s > 0.0)) throw std::domain_error("sampled conductivity must be positive");
    samples[{x, y}] = s;
    xs.push_back(x);
    ys.push_back(y);
  }
  auto uniq = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs);
  uniq(ys);
  if (xs.size() < 2 || ys.size() < 2 || samples.size() != xs.size() * ys.size())
    throw std::runtime_error("conductivity CSV must form a complete rectilinear grid: " + path);

  std::vector<double> grid(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) grid[i * ys.size() + j] = samples.at({xs[i], ys[j]});

  auto locate = [](const std::vector<double>& axis, double v, std::size_t& k, double& t) {
    v = std::clamp(v, axis.front(), axis.back());
    k = static_cast<std::size_t>(std::upper_bound(axis.begin(), axis.end(), v) - axis.begin());
    k = std::clamp<std::size_t>(k, 1, axis.size() - 1) - 1;
    t = (v - axis[k]) / (axis[k + 1] - axis[k]);
  };
  auto f = [xs, ys, grid, locate](const SamplePoint& s) {
    std::size_t i, j;
    double tx, ty;
    locate(xs, s.x, i, tx);
    locate(ys, s.y, j, ty);
    const std::size_t n = ys.size();
    double a = grid[i * n + j], b = grid[(i + 1) * n + j];
    double c = grid[i * n + j + 1], d = grid[(i + 1) * n + j + 1];
    return (1 - tx) * (1 - ty) * a + tx * (1 - ty) * b + (1 - tx) * ty * c + tx * ty * d;
  };
  return ConductivityField(path, ConductivityField::Kind::sampled, f);
}

void check_positive(const ConductivityField& sigma, const StarDomain& domain, int samples) {
  auto [x0, x1] = domain.x_extent();
  for (int i = 0; i <= samples; ++i) {
    double x = x0 + (x1 - x0) * i / samples;
    auto [y0, y1] = domain.vertical_chord(x);
    for (int j = 0; j <= samples; ++j) {
      double y = y0 + (y1 - y0) * j / samples;
      (void)sigma(SamplePoint::at(x, y));  // throws when not positive
    }
  }
}

StripInterpolation::StripInterpolation(const ConductivityField& sigma, const StarDomain& domain,
                                       int strips, int samples, std::vector<double> offsets)
    : samples_(samples) {
  if (strips < 1) throw std::invalid_argument("strip interpolation needs K >= 1");
  if (samples < 2) throw std::invalid_argument("strip interpolation needs J >= 2");
  if (offsets.size() == 1) offsets.assign(strips, offsets[0]);
  if (static_cast<int>(offsets.size()) != strips)
    throw std::invalid_argument("strip interpolation needs one offset per strip");

  auto [xmin, xmax] = domain.x_extent();
  x0_ = xmin;
  width_ = (xmax - xmin) / strips;
  offsets_ = std::move(offsets);
  chi_.resize(strips);
  ylo_.resize(strips);
  yhi_.resize(strips);
  values_.resize(static_cast<std::size_t>(strips) * samples);

  for (int k = 0; k < strips; ++k) {
    const double a = offsets_[k];
    if (!(a > 0.0) || !(edge(k) + a > 0.0))
      throw std::invalid_argument("strip offsets must be positive with x + A > 0 on the strip");
    chi_[k] = x0_ + (k + 0.5) * width_;
    auto [lo, hi] = domain.vertical_chord(chi_[k]);
    ylo_[k] = lo;
    yhi_[k] = hi;
    for (int j = 0; j < samples; ++j) {
      double y = lo + (hi - lo) * j / (samples - 1);
      values_[static_cast<std::size_t>(k) * samples + j] = sigma(SamplePoint::at(chi_[k], y));
    }
  }
}

int StripInterpolation::strip_of(double x) const {
  int k = static_cast<int>(std::floor((x - x0_) / width_));
  return std::clamp(k, 0, strips() - 1);
}

double StripInterpolation::f(int k, double y) const {
  const double* v = values_.data() + static_cast<std::size_t>(k) * samples_;
  const double lo = ylo_[k], hi = yhi_[k];
  if (!(hi > lo)) return v[0];
  if (y <= lo) return v[0];
  if (y >= hi) return v[samples_ - 1];
  double s = (y - lo) / (hi - lo) * (samples_ - 1);
  int j = std::min(static_cast<int>(s), samples_ - 2);
  double t = s - j;
  return v[j] + t * (v[j + 1] - v[j]);
}

double StripInterpolation::sigma_pw(double x, double y) const {
  int k = strip_of(x);
  return (x + offsets_[k]) / (chi_[k] + offsets_[k]) * f(k, y);
}

double StripInterpolation::p0(double x, double y) const {
  int k = strip_of(x);
  return std::sqrt((chi_[k] + offsets_[k]) / (x + offsets_[k]) * f(k, y));
}

ConductivityField StripInterpolation::as_field() const {
  return ConductivityField("strip_interpolation", ConductivityField::Kind::strip,
                           [this](const SamplePoint& s) { return sigma_pw(s.x, s.y); });
}

std::shared_ptr<const StripInterpolation> build_strip_interpolation(
    const ConductivityField& sigma, const StarDomain& domain, int strips, int samples, double offset) {
  return std::make_shared<const StripInterpolation>(sigma, domain, strips, samples,
                                                    std::vector<double>{offset});
}

std::string to_string(SequenceMode mode) {
  switch (mode) {
    case SequenceMode::limiting_c1: return "c1";
    case SequenceMode::strip_c2: return "strip";
    case SequenceMode::ystrip_c2: return "ystrip";
    case SequenceMode::separable_c2: return "separable";
  }
  return "?";
}

SequenceMode parse_sequence_mode(const std::string& text) {
  if (text == "c1" || text == "limiting_c1") return SequenceMode::limiting_c1;
  if (text == "strip" || text == "strip_c2") return SequenceMode::strip_c2;
  if (text == "ystrip" || text == "ystrip_c2") return SequenceMode::ystrip_c2;
  if (text == "separable" || text == "separable_c2") return SequenceMode::separable_c2;
  throw std::invalid_argument("unknown sequence mode: " + text);
}

PairSamples sample_pair(const GeneratingSequence& seq, int m, const RadialGrid& grid) {
  PairSamples out;
  const std::size_t n = grid.r.size();
  out.F.resize(n);
  out.G.resize(n);
  out.Fs.resize(n);
  out.Gs.resize(n);
  const cplx i(0.0, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    SamplePoint s{grid.z[k].real(), grid.z[k].imag(), grid.r[k], grid.theta};
    double p = seq.pair(m, s);
    out.F[k] = p;
    out.G[k] = i / p;
    out.Fs[k] = -i * out.F[k];
    out.Gs[k] = -i * out.G[k];
  }
  return out;
}

GeneratingSequence generating_sequence(const ConductivityField& sigma, SequenceMode mode) {
  GeneratingSequence seq;
  seq.mode = mode;
  auto root = [sigma](const SamplePoint& s) { return std::sqrt(sigma(s)); };
  switch (mode) {
    case SequenceMode::limiting_c1:
      seq.period = 1;
      seq.p[0] = root;
      seq.p[1] = root;
      break;
    case SequenceMode::ystrip_c2:
      seq.period = 2;
      seq.p[0] = root;
      seq.p[1] = [sigma](const SamplePoint& s) { return 1.0 / std::sqrt(sigma(s)); };
      break;
    case SequenceMode::separable_c2: {
      if (!sigma.separable())
        throw std::invalid_argument("separable mode needs a field with separable factors");
      seq.period = 2;
      seq.p[0] = root;
      auto sep = *sigma.separable();
      seq.p[1] = [sep](const SamplePoint& s) { return std::sqrt(sep.sy(s.y)) / std::sqrt(sep.sx(s.x)); };
      break;
    }
    case SequenceMode::strip_c2:
      throw std::invalid_argument("strip mode needs a strip interpolation");
  }
  return seq;
}

GeneratingSequence generating_sequence(std::shared_ptr<const StripInterpolation> strips) {
  GeneratingSequence seq;
  seq.mode = SequenceMode::strip_c2;
  seq.period = 2;
  seq.p[0] = [strips](const SamplePoint& s) { return strips->p0(s.x, s.y); };
  seq.p[1] = [strips](const SamplePoint& s) { return std::sqrt(strips->sigma_pw(s.x, s.y)); };
  return seq;
}

}  // namespace vekua
