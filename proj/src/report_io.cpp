#include "vekua/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vekua {

using nlohmann::json;

namespace {

// 17 significant digits round-trip every double.
std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

}  // namespace

json config_to_json(const ExperimentConfig& c) {
  json j = {
      {"case", c.case_name}, {"alpha", c.alpha},   {"domain", c.domain}, {"N", c.N},
      {"P", c.P},            {"Q", c.Q},           {"mode", to_string(c.mode)},
      {"K", c.K},            {"J", c.J},           {"A", c.A},           {"delta", c.delta},
      {"threads", c.threads},
  };
  if (c.bc_alpha) j["bc_alpha"] = *c.bc_alpha;
  if (!c.sigma_csv.empty()) j["sigma_csv"] = c.sigma_csv;
  if (c.pinned_angles) j["pinned_angles"] = *c.pinned_angles;
  if (c.collocation_pins) j["collocation_pins"] = *c.collocation_pins;
  if (!c.out_dir.empty()) j["out"] = c.out_dir;
  return j;
}

ExperimentConfig config_from_json(const json& j, ExperimentConfig c) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const json& v = it.value();
    if (k == "case") c.case_name = v.get<std::string>();
    else if (k == "alpha") c.alpha = v.get<double>();
    else if (k == "bc_alpha") c.bc_alpha = v.get<double>();
    else if (k == "domain") c.domain = v.get<std::string>();
    else if (k == "sigma_csv") c.sigma_csv = v.get<std::string>();
    else if (k == "N") c.N = v.get<int>();
    else if (k == "P") c.P = v.get<int>();
    else if (k == "Q") c.Q = v.get<int>();
    else if (k == "mode") c.mode = parse_sequence_mode(v.get<std::string>());
    else if (k == "K") c.K = v.get<int>();
    else if (k == "J") c.J = v.get<int>();
    else if (k == "A") c.A = v.get<double>();
    else if (k == "delta") c.delta = v.get<double>();
    else if (k == "threads") c.threads = v.get<int>();
    else if (k == "pinned_angles") c.pinned_angles = v.get<std::vector<double>>();
    else if (k == "collocation_pins") c.collocation_pins = v.get<std::vector<double>>();
    else if (k == "out") c.out_dir = v.get<std::string>();
    else throw std::invalid_argument("unknown config key: " + k);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config " + path);
  return config_from_json(json::parse(f), std::move(base));
}

json report_to_json(const CaseResult& r) {
  const SolveReport& s = r.report;
  json j;
  j["config"] = config_to_json(r.config);
  j["basis_size"] = s.alpha.size();
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  j["collocation_angles"] = s.collocation_angles;
  j["total_error"] = s.total_error;
  j["condition_estimate"] = s.condition;
  j["ill_conditioned"] = s.ill_conditioned;
  j["collocation_residual"] = s.collocation_residual;
  j["gram_error"] = s.gram_error;
  j["seconds"] = r.seconds;
  j["isa"] = r.isa;
  return j;
}

void write_residual_csv(std::ostream& out, const SolveReport& s) {
  out << "theta,u_c,fit,residual,weight\n";
  for (std::size_t q = 0; q < s.thetas.size(); ++q)
    out << exact(s.thetas[q]) << ',' << exact(s.boundary_values[q]) << ',' << exact(s.fitted[q]) << ','
        << exact(s.residual[q]) << ',' << exact(s.weights[q]) << '\n';
}

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
  out << "table,case,N,P,Q,E,reference_E,seconds,ill_conditioned,error\n";
  for (const auto& r : rows) {
    out << r.table_id << ',' << r.case_id << ',' << r.N << ',' << r.P << ',' << r.Q << ',' << exact(r.E) << ','
        << exact(r.reference_E) << ',' << r.seconds << ',' << (r.ill_conditioned ? 1 : 0) << ',';
    std::string e = r.error;
    for (char& ch : e)
      if (ch == ',' || ch == '\n') ch = ';';
    out << e << '\n';
  }
}

void write_case_outputs(const std::string& dir, const CaseResult& result) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path d(dir);
  open_out(d / "report.json") << report_to_json(result).dump(2) << '\n';
  auto res = open_out(d / "residual.csv");
  write_residual_csv(res, result.report);
  auto tab = open_out(d / "table.csv");
  write_table_csv(tab, std::span<const TableRow>(&result.row, 1));
}

void write_table_outputs(const std::string& dir, std::span<const TableRow> rows) {
  std::filesystem::create_directories(dir);
  auto tab = open_out(std::filesystem::path(dir) / "table.csv");
  write_table_csv(tab, rows);
}

double total_error_from_csv(std::istream& in) {
  std::string line;
  std::getline(in, line);
  std::vector<double> residual, weights;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() != 5) throw std::runtime_error("malformed residual row: " + line);
    residual.push_back(v[3]);
    weights.push_back(v[4]);
  }
  return total_error(residual, weights);
}

void write_formal_powers_csv(std::ostream& out, const FormalPowerTable& t) {
  out << "q,m,a,n,p,re,im\n";
  for (int q = 0; q < t.radii(); ++q)
    for (int m = 0; m < t.period(); ++m)
      for (int a = 0; a < 2; ++a)
        for (int n = 0; n <= t.degree(); ++n)
          for (int p = 0; p <= t.points(); ++p) {
            const cplx z = t.value(q, m, a, n, p);
            out << q << ',' << m << ',' << a << ',' << n << ',' << p << ',' << exact(z.real()) << ','
                << exact(z.imag()) << '\n';
          }
}

}  // namespace vekua
