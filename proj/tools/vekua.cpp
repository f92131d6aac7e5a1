// Command-line front end: solve one case, reproduce a table, run the beaked suite or the
// oracle checks.

#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vekua/experiments.hpp"
#include "vekua/kernels.hpp"
#include "vekua/report_io.hpp"

using namespace vekua;

namespace {

void print_row(const TableRow& r) {
  if (!r.error.empty()) {
    std::printf("N=%-3d P=%-5d Q=%-5d  failed: %s\n", r.N, r.P, r.Q, r.error.c_str());
    return;
  }
  std::printf("N=%-3d P=%-5d Q=%-5d  E=%.4e  reference=%.4e  %.2fs%s\n", r.N, r.P, r.Q, r.E, r.reference_E,
              r.seconds, r.ill_conditioned ? "  (ill-conditioned)" : "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoanalytic Dirichlet solver for div(sigma grad u) = 0"};
  app.require_subcommand(1);

  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel instruction set: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: all cores)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one case and write report.json, residual.csv, table.csv");
  ExperimentConfig cfg;
  std::string config_path, mode = "c1";
  std::optional<double> bc_alpha;
  std::vector<double> pins, colloc_pins;
  solve->add_option("--config", config_path, "JSON file mirroring these flags; flags override it");
  solve->add_option("--case", cfg.case_name, "Test case name");
  solve->add_option("--alpha", cfg.alpha, "Case parameter");
  solve->add_option("--bc-alpha", bc_alpha, "Parameter of the boundary condition when it differs");
  solve->add_option("--domain", cfg.domain, "unit_disk, beaked or a JSON knot file");
  solve->add_option("--sigma-csv", cfg.sigma_csv, "Sampled conductivity (x,y,sigma rows)");
  solve->add_option("-N", cfg.N, "Maximum formal power degree");
  solve->add_option("-P", cfg.P, "Points per radius");
  solve->add_option("-Q", cfg.Q, "Number of radii");
  solve->add_option("--mode", mode, "Generating sequence")
      ->check(CLI::IsMember({"c1", "strip", "ystrip", "separable"}));
  solve->add_option("--K", cfg.K, "Strips");
  solve->add_option("--J", cfg.J, "Samples per strip midline");
  solve->add_option("--A", cfg.A, "Strip offset");
  solve->add_option("--delta", cfg.delta, "Quadrature factor");
  solve->add_option("--pin", pins, "Trace angles to pin (default: domain corners)");
  solve->add_option("--collocation-pin", colloc_pins, "Collocation angles to pin (default: domain corners)");
  solve->add_option("--out", cfg.out_dir, "Output directory");

  // table
  auto* table = app.add_subcommand("table", "Reproduce one of the reference tables");
  int table_id = 1;
  std::vector<int> row_filter;
  std::string table_out;
  table->add_option("--id", table_id, "Table number")->check(CLI::Range(1, 11))->required();
  table->add_option("--row", row_filter, "Run only these row indices (0-based)");
  table->add_option("--out", table_out, "Output directory for table.csv");

  auto* beaked = app.add_subcommand("beaked", "Run the beaked-domain suite");
  std::string beaked_out;
  beaked->add_option("--out", beaked_out, "Output directory (one subdirectory per run)");

  auto* oracles = app.add_subcommand("oracles", "Run the property checks; exit 1 on failure");
  double oracle_delta = 1.0;
  oracles->add_option("--delta", oracle_delta, "Quadrature factor used by the checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (isa != "auto") kernels::set_isa(kernels::parse_isa(isa));

    if (*solve) {
      ExperimentConfig c = cfg;
      if (!config_path.empty()) {
        c = load_config(config_path);
        // Flags given explicitly on the command line win over the file.
        auto given = [&](const char* name) { return solve->count(name) > 0; };
        if (given("--case")) c.case_name = cfg.case_name;
        if (given("--alpha")) c.alpha = cfg.alpha;
        if (given("--domain")) c.domain = cfg.domain;
        if (given("--sigma-csv")) c.sigma_csv = cfg.sigma_csv;
        if (given("-N")) c.N = cfg.N;
        if (given("-P")) c.P = cfg.P;
        if (given("-Q")) c.Q = cfg.Q;
        if (given("--K")) c.K = cfg.K;
        if (given("--J")) c.J = cfg.J;
        if (given("--A")) c.A = cfg.A;
        if (given("--delta")) c.delta = cfg.delta;
        if (given("--out")) c.out_dir = cfg.out_dir;
      }
      if (bc_alpha) c.bc_alpha = bc_alpha;
      if (config_path.empty() || solve->count("--mode")) c.mode = parse_sequence_mode(mode);
      if (!pins.empty()) c.pinned_angles = pins;
      if (!colloc_pins.empty()) c.collocation_pins = colloc_pins;
      if (app.count("--threads")) c.threads = threads;

      const CaseResult r = run_case(c);
      std::printf("case=%s domain=%s mode=%s N=%d P=%d Q=%d isa=%s\n", c.case_name.c_str(), c.domain.c_str(),
                  to_string(c.mode).c_str(), c.N, c.P, c.Q, r.isa.c_str());
      std::printf("E=%.6e  cond=%.3e%s  %.2fs\n", r.report.total_error, r.report.condition,
                  r.report.ill_conditioned ? " (ill-conditioned)" : "", r.seconds);
      if (!c.out_dir.empty()) write_case_outputs(c.out_dir, r);
      return 0;
    }

    if (*table) {
      const TableSpec& spec = table_spec(table_id);
      std::printf("Table %d: %s\n", spec.id, spec.caption.c_str());
      std::vector<TableRow> rows;
      for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        if (!row_filter.empty() && std::find(row_filter.begin(), row_filter.end(), int(i)) == row_filter.end())
          continue;
        TableSpec one = spec;
        one.rows = {spec.rows[i]};
        auto out = run_table(one, {}, threads);
        print_row(out.front());
        std::fflush(stdout);
        rows.push_back(out.front());
      }
      if (!table_out.empty()) write_table_outputs(table_out, rows);
      return 0;
    }

    if (*beaked) {
      for (const auto& e : run_beaked_suite(threads)) {
        std::printf("%-18s basis=%-3d E=%.4e  %.2fs\n", e.case_name.c_str(), e.basis_size,
                    e.result.report.total_error, e.result.seconds);
        if (!beaked_out.empty())
          write_case_outputs(beaked_out + "/" + e.case_name + "_" + std::to_string(e.basis_size), e.result);
      }
      return 0;
    }

    if (*oracles) {
      bool ok = true;
      for (const auto& c : run_oracles({oracle_delta})) {
        std::printf("%-4s %-22s %s\n", c.passed ? "ok" : "FAIL", c.name.c_str(), c.detail.c_str());
        ok = ok && c.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
