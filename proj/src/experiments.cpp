#include "vekua/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "vekua/kernels.hpp"

namespace vekua {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(4);
  s << std::scientific << v;
  return s.str();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (N < 0 || N > 64) throw std::invalid_argument("N must lie in 0..64");
  if (P < 2 || P > 100000) throw std::invalid_argument("P must lie in 2..100000");
  if (Q < 3 || Q > 100000) throw std::invalid_argument("Q must lie in 3..100000");
  if (Q < 2 * N + 1) throw std::invalid_argument("Q must be at least 2N+1 for a full-rank basis");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (mode == SequenceMode::strip_c2 && (K < 1 || J < 2 || !(A > 0.0)))
    throw std::invalid_argument("strip mode needs K >= 1, J >= 2 and A > 0");
}

GeneratingSequence sequence_for(const ExperimentConfig& config, const TestCase& test_case,
                                const StarDomain& domain) {
  if (config.mode == SequenceMode::strip_c2)
    return generating_sequence(build_strip_interpolation(test_case.sigma, domain, config.K, config.J, config.A));
  return generating_sequence(test_case.sigma, config.mode);
}

std::function<std::vector<double>(double)> radial_pins_for(const std::string& case_name,
                                                           const StarDomain& domain) {
  if (case_name != "square_inclusion" && case_name != "beaked_square") return {};
  const double corner_r = 0.325 * std::sqrt(2.0);
  return [corner_r, &domain](double theta) {
    std::vector<double> pins;
    for (double d : {pi / 4, 3 * pi / 4, -pi / 4, -3 * pi / 4})
      if (std::abs(angle_difference(theta, d)) < 1e-9 && corner_r < domain.radius(theta)) pins.push_back(corner_r);
    return pins;
  };
}

CaseResult run_case(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = clock_type::now();
  CaseResult out;
  out.config = config;
  out.isa = kernels::to_string(kernels::active_isa());

  const StarDomain domain = domain_by_name(config.domain);
  TestCase tc = case_by_name(config.case_name, config.alpha, config.bc_alpha);
  if (!config.sigma_csv.empty()) tc.sigma = load_sampled_field(config.sigma_csv);
  check_positive(tc.sigma, domain);

  const GeneratingSequence seq = sequence_for(config, tc, domain);
  const std::vector<double> corners(domain.corner_angles().begin(), domain.corner_angles().end());
  const std::vector<double> trace_pins = config.pinned_angles.value_or(corners);
  const std::vector<double> colloc_pins = config.collocation_pins.value_or(corners);

  const AngleSet angles = build_angle_set(config.Q, trace_pins);
  BuildOptions opts;
  opts.threads = config.threads;
  const FormalPowerTable table = build_formal_powers(seq, domain, angles, config.P, config.N, {config.delta},
                                                     opts, radial_pins_for(config.case_name, domain));
  const Matrix traces = boundary_traces(table);
  const std::vector<double> weights = arc_length_weights(domain, angles);
  const BoundaryBasis basis = orthonormalize(traces, angles.angles, weights, corners);

  CollocationOptions copts;
  copts.pinned = colloc_pins;
  out.report = collocation_fit(basis, domain, tc.boundary_condition, copts);
  out.seconds = seconds_since(t0);

  out.row.case_id = config.case_name;
  out.row.N = config.N;
  out.row.P = config.P;
  out.row.Q = config.Q;
  out.row.E = out.report.total_error;
  out.row.seconds = out.seconds;
  out.row.ill_conditioned = out.report.ill_conditioned;
  return out;
}

ExperimentConfig config_for_row(const TableSpec& spec, const TableSpec::Row& row) {
  ExperimentConfig c;
  c.case_name = spec.case_name;
  c.alpha = spec.alpha;
  c.bc_alpha = spec.bc_alpha;
  c.N = row.N;
  c.P = row.P;
  c.Q = row.Q;
  return c;
}

std::vector<TableRow> run_table(const TableSpec& spec, const std::function<bool(const TableSpec::Row&)>& filter,
                                int threads) {
  std::vector<TableRow> rows;
  for (const auto& r : spec.rows) {
    if (filter && !filter(r)) continue;
    ExperimentConfig c = config_for_row(spec, r);
    c.threads = threads;
    TableRow row;
    try {
      row = run_case(c).row;
    } catch (const std::exception& e) {
      row.case_id = spec.case_name;
      row.N = r.N;
      row.P = r.P;
      row.Q = r.Q;
      row.E = NAN;
      row.error = e.what();
    }
    row.table_id = spec.id;
    row.reference_E = r.reference_E;
    rows.push_back(row);
  }
  return rows;
}

ExperimentConfig beaked_config(const std::string& case_name, int basis_size) {
  if (basis_size < 3 || basis_size % 2 == 0) throw std::invalid_argument("basis size must be odd and >= 3");
  ExperimentConfig c;
  c.case_name = case_name;
  c.domain = "beaked";
  c.N = (basis_size - 1) / 2;
  c.P = 100;
  c.Q = 100;
  // The full basis is collocated at all three corners; the reduced ones only at the beak tip.
  if (basis_size != 91) c.collocation_pins = std::vector<double>{0.0};
  return c;
}

std::vector<BeakedEntry> run_beaked_suite(int threads) {
  const std::pair<const char*, int> plan[] = {
      {"beaked_lorentzian", 91}, {"beaked_lorentzian", 51}, {"beaked_concentric", 91},
      {"beaked_concentric", 51}, {"beaked_square", 91},     {"beaked_square", 71},
  };
  std::vector<BeakedEntry> out;
  for (auto [name, size] : plan) {
    ExperimentConfig c = beaked_config(name, size);
    c.threads = threads;
    out.push_back({name, size, run_case(c)});
  }
  return out;
}

double unit_power_error(int degree, int points, double theta, double delta) {
  const GeneratingSequence seq = generating_sequence(constant_conductivity(1.0), SequenceMode::limiting_c1);
  const RadialGrid g = build_radial_grid(unit_disk(), theta, points);
  QuadratureConfig qc;
  qc.delta = delta;
  const auto Z = formal_powers_along(seq, g, 1.0, degree, qc);
  double worst = 0.0;
  for (int n = 1; n <= degree; ++n) {
    double err = 0.0, scale = 0.0;
    for (int p = 0; p <= points; ++p) {
      cplx zn = std::pow(g.z[p], n);
      err = std::max(err, std::abs(Z[n][p] - zn));
      scale = std::max(scale, std::abs(zn));
    }
    worst = std::max(worst, err / scale);
  }
  return worst;
}

std::vector<OracleCheck> run_oracles(const OracleOptions& options) {
  std::vector<OracleCheck> out;
  const double theta = pi / 7;
  const GeneratingSequence unit = generating_sequence(constant_conductivity(1.0), SequenceMode::limiting_c1);
  QuadratureConfig qc;
  qc.delta = options.delta;

  {
    // |Z^(n) - z^n| <= C n^2 / P^2 with C <= 10.
    OracleCheck c{"unit_powers", true, 0.0, 10.0, ""};
    for (int P : {250, 500, 1000}) {
      const RadialGrid g = build_radial_grid(unit_disk(), theta, P);
      const auto Z = formal_powers_along(unit, g, 1.0, 10, qc);
      for (int n = 1; n <= 10; ++n) {
        double err = 0.0;
        for (int p = 0; p <= P; ++p) err = std::max(err, std::abs(Z[n][p] - std::pow(g.z[p], n)));
        c.value = std::max(c.value, err * P * P / (n * n));
      }
    }
    c.passed = c.value <= c.limit;
    c.detail = "observed C = " + format_double(c.value);
    out.push_back(c);
  }
  {
    OracleCheck c{"refinement_rate", true, 0.0, 0.3, ""};
    const double e1 = unit_power_error(10, 250, theta, options.delta);
    const double e2 = unit_power_error(10, 500, theta, options.delta);
    const double e3 = unit_power_error(10, 1000, theta, options.delta);
    const double r1 = std::log2(e1 / e2), r2 = std::log2(e2 / e3);
    c.value = std::max(std::abs(r1 - 2.0), std::abs(r2 - 2.0));
    c.passed = c.value <= c.limit;
    c.detail = "rates " + format_double(r1) + ", " + format_double(r2);
    out.push_back(c);
  }

  const TestCase lor = builtin_case("separable_lorentzian", 0.0);
  const GeneratingSequence lor_seq = generating_sequence(lor.sigma, SequenceMode::limiting_c1);
  {
    OracleCheck c{"pair_positivity", true, 0.0, 1e-12, ""};
    auto strips = build_strip_interpolation(lor.sigma, unit_disk(), 50, 50);
    std::vector<GeneratingSequence> seqs = {
        lor_seq, generating_sequence(lor.sigma, SequenceMode::ystrip_c2),
        generating_sequence(lor.sigma, SequenceMode::separable_c2), generating_sequence(strips)};
    for (const auto& s : seqs)
      for (double th : {0.0, 1.0, -2.5})
        for (int m = 0; m < 2; ++m) {
          const PairSamples ps = sample_pair(s, m, build_radial_grid(unit_disk(), th, 200));
          for (std::size_t k = 0; k < ps.F.size(); ++k)
            c.value = std::max(c.value, std::abs((std::conj(ps.F[k]) * ps.G[k]).imag() - 1.0));
        }
    c.passed = c.value <= c.limit;
    c.detail = "max |Im(conj F G) - 1| = " + format_double(c.value);
    out.push_back(c);
  }
  {
    OracleCheck c{"center_and_linearity", true, 0.0, 1e-12, ""};
    const RadialGrid g = build_radial_grid(unit_disk(), theta, 400);
    const cplx a(0.3, -1.7);
    const auto za = formal_powers_along(lor_seq, g, a, 8, qc);
    const auto z1 = formal_powers_along(lor_seq, g, 1.0, 8, qc);
    const auto zi = formal_powers_along(lor_seq, g, cplx(0.0, 1.0), 8, qc);
    double lin = 0.0, center = 0.0;
    for (int n = 0; n <= 8; ++n) {
      double scale = 0.0;
      for (int p = 0; p <= 400; ++p) scale = std::max(scale, std::abs(za[n][p]));
      for (int p = 0; p <= 400; ++p)
        lin = std::max(lin, std::abs(za[n][p] - (a.real() * z1[n][p] + a.imag() * zi[n][p])) / scale);
      if (n >= 1) center = std::max({center, std::abs(z1[n][0]), std::abs(zi[n][0])});
    }
    c.value = std::max(lin, center);
    c.passed = c.value <= c.limit;
    c.detail = "linearity " + format_double(lin) + ", |Z(0)| " + format_double(center);
    out.push_back(c);
  }
  {
    OracleCheck c{"asymptotics", true, 0.0, 0.05, ""};
    const RadialGrid g = build_radial_grid(unit_disk(), theta, 1000);
    const auto Z1 = formal_powers_along(lor_seq, g, 1.0, 2, qc);
    const int p01 = 10;  // r = 0.01
    c.value = std::abs(Z1[1][p01] / g.z[p01] - 1.0);
    // log-log slope of |Z^(2)| over r in [0.005, 0.05]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int p = 5; p <= 50; ++p) {
      double x = std::log(g.r[p]), y = std::log(std::abs(Z1[2][p]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++cnt;
    }
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    c.passed = c.value <= c.limit && std::abs(slope - 2.0) <= 0.1;
    c.detail = "ratio error " + format_double(c.value) + ", slope " + format_double(slope);
    out.push_back(c);
  }
  {
    OracleCheck c{"orthonormality", true, 0.0, 1e-8, ""};
    const AngleSet angles = build_angle_set(200);
    BuildOptions opts;
    const FormalPowerTable t = build_formal_powers(unit, unit_disk(), angles, 200, 10, qc, opts);
    const BoundaryBasis b = orthonormalize(boundary_traces(t), angles.angles, arc_length_weights(unit_disk(), angles));
    c.value = gram_error(b);
    c.passed = c.value <= c.limit;
    c.detail = "max |G - I| = " + format_double(c.value);
    out.push_back(c);

    OracleCheck e{"collocation_exactness", true, 0.0, 1e-8, ""};
    const SolveReport rep = collocation_fit(b, unit_disk(), [](double x, double) { return x; });
    e.value = rep.total_error;
    e.passed = e.value <= e.limit && rep.collocation_residual <= 1e-9;
    e.detail = "E = " + format_double(rep.total_error) + ", collocation residual " +
               format_double(rep.collocation_residual);
    out.push_back(e);
  }
  {
    OracleCheck c{"strip_convergence", true, 0.0, 1.1, ""};
    std::vector<double> errs;
    for (int k : {50, 100, 200, 400, 800, 1600}) {
      auto s = build_strip_interpolation(lor.sigma, unit_disk(), k, k);
      double err = 0.0;
      for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
          double x = -1.0 + 0.02 * i, y = -1.0 + 0.02 * j;
          if (x * x + y * y >= 1.0) continue;
          double exact = lor.sigma.at(x, y);
          err = std::max(err, std::abs(s->sigma_pw(x, y) - exact) / exact);
        }
      errs.push_back(err);
    }
    for (std::size_t k = 1; k < errs.size(); ++k) c.value = std::max(c.value, errs[k] / errs[k - 1]);
    c.passed = c.value <= c.limit;
    c.detail = "errors";
    for (double e : errs) c.detail += " " + format_double(e);
    out.push_back(c);
  }
  return out;
}

}  // namespace vekua
