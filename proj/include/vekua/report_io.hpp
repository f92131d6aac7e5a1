#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vekua/experiments.hpp"

namespace vekua {

nlohmann::json config_to_json(const ExperimentConfig& config);
/// Keys mirror the CLI flags; keys that are absent keep their defaults.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

nlohmann::json report_to_json(const CaseResult& result);

/// theta, u_c, fit, residual, weight
void write_residual_csv(std::ostream& out, const SolveReport& report);
void write_table_csv(std::ostream& out, std::span<const TableRow> rows);

/// Writes report.json, residual.csv and table.csv into `dir` (created if needed).
void write_case_outputs(const std::string& dir, const CaseResult& result);
void write_table_outputs(const std::string& dir, std::span<const TableRow> rows);

/// Recomputes E from the residual CSV written by write_residual_csv.
double total_error_from_csv(std::istream& in);

/// q, m, a, n, p, Re Z, Im Z. Requires Retention::full.
void write_formal_powers_csv(std::ostream& out, const FormalPowerTable& table);

}  // namespace vekua
