#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vekua/boundary_solver.hpp"
#include "vekua/conductivity.hpp"
#include "vekua/formal_powers.hpp"

namespace vekua {

struct ExperimentConfig {
  std::string case_name = "separable_lorentzian";
  double alpha = 1.0;
  std::optional<double> bc_alpha;  // boundary-condition alpha when it differs from sigma's
  std::string domain = "unit_disk";
  std::string sigma_csv;           // sampled conductivity; replaces the case's sigma when set
  int N = 30;
  int P = 1000;
  int Q = 1000;
  SequenceMode mode = SequenceMode::limiting_c1;
  int K = 1000;
  int J = 1000;
  double A = 60.0;
  double delta = 1.0;
  /// Trace angles forced into the radius set; defaults to the domain corners.
  std::optional<std::vector<double>> pinned_angles;
  /// Collocation angles forced into the 2N+1 set; defaults to the domain corners.
  std::optional<std::vector<double>> collocation_pins;
  int threads = 0;
  std::string out_dir;

  /// Throws std::invalid_argument for out-of-range values.
  void validate() const;
};

struct TableRow {
  int table_id = 0;
  std::string case_id;
  int N = 0, P = 0, Q = 0;
  double E = 0.0;
  double reference_E = 0.0;  // reference value, 0 when none
  double seconds = 0.0;
  bool ill_conditioned = false;
  std::string error;          // non-empty when the row failed
};

struct CaseResult {
  ExperimentConfig config;
  SolveReport report;
  TableRow row;
  double seconds = 0.0;
  std::string isa;
};

/// Sequence used by a configuration (strip interpolation is built when needed).
GeneratingSequence sequence_for(const ExperimentConfig& config, const TestCase& test_case,
                                const StarDomain& domain);

/// Radii pinned on each ray: the square inclusion's corners when the ray hits one.
std::function<std::vector<double>(double)> radial_pins_for(const std::string& case_name,
                                                           const StarDomain& domain);

CaseResult run_case(const ExperimentConfig& config);

struct TableSpec {
  int id = 0;
  std::string case_name;
  double alpha = 1.0;
  std::optional<double> bc_alpha;
  std::string caption;
  struct Row {
    int N, P, Q;
    double reference_E;
  };
  std::vector<Row> rows;
};

/// Tables 1 to 11.
const TableSpec& table_spec(int id);
ExperimentConfig config_for_row(const TableSpec& spec, const TableSpec::Row& row);
/// Runs every row (or only the rows accepted by `filter`); failures are recorded per row.
std::vector<TableRow> run_table(const TableSpec& spec,
                                const std::function<bool(const TableSpec::Row&)>& filter = {},
                                int threads = 0);

struct BeakedEntry {
  std::string case_name;
  int basis_size;  // 2N+1
  CaseResult result;
};

ExperimentConfig beaked_config(const std::string& case_name, int basis_size);
/// Lorentzian, concentric and square cases on the beaked domain at P = Q = 100, each with
/// 91 basis functions and with 51 (71 for the square).
std::vector<BeakedEntry> run_beaked_suite(int threads = 0);

struct OracleCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double limit = 0.0;
  std::string detail;
};

struct OracleOptions {
  double delta = 1.0;
};

/// Property checks over all modules; each entry reports its own verdict.
std::vector<OracleCheck> run_oracles(const OracleOptions& options = {});

/// max over n = 1..N and all samples of |Z^(n)(1, 0; z) - z^n| / max |z^n| on the unit-disk
/// radius at theta for sigma = 1.
double unit_power_error(int degree, int points, double theta, double delta = 1.0);

}  // namespace vekua
