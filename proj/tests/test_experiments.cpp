#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vekua/experiments.hpp"
#include "vekua/report_io.hpp"

using namespace vekua;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.case_name = "exponential";
  c.N = 8;
  c.P = 120;
  c.Q = 90;
  return c;
}

}  // namespace

TEST_CASE("configuration limits") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  c.N = 65;
  CHECK_THROWS(c.validate());
  c = {};
  c.Q = 40;
  CHECK_THROWS(c.validate());  // fewer radii than basis functions
  c = {};
  c.P = 100001;
  CHECK_THROWS(c.validate());
  c = {};
  c.delta = 0.0;
  CHECK_THROWS(c.validate());
}

TEST_CASE("configuration JSON round trip") {
  ExperimentConfig c = small_config();
  c.mode = SequenceMode::strip_c2;
  c.K = 77;
  c.bc_alpha = 2.5;
  c.collocation_pins = std::vector<double>{0.0};
  const ExperimentConfig back = config_from_json(config_to_json(c));
  CHECK(back.case_name == c.case_name);
  CHECK(back.N == c.N);
  CHECK(back.mode == c.mode);
  CHECK(back.K == 77);
  CHECK(back.bc_alpha == 2.5);
  CHECK(back.collocation_pins == c.collocation_pins);
  CHECK_FALSE(back.pinned_angles.has_value());
  CHECK_THROWS(config_from_json(nlohmann::json{{"N", 3}, {"bogus", 1}}));
}

TEST_CASE("reference table layout") {
  CHECK(table_spec(1).rows.size() == 20);
  CHECK(table_spec(3).rows.back().N == 5);
  CHECK(table_spec(3).rows.back().Q == 15);
  CHECK(table_spec(8).alpha == 5.0);
  CHECK(table_spec(8).bc_alpha == 1.0);
  CHECK(table_spec(6).alpha == 0.01);
  CHECK_THROWS(table_spec(12));
  const ExperimentConfig c = config_for_row(table_spec(4), table_spec(4).rows[0]);
  CHECK(c.case_name == "polynomial");
  CHECK(c.alpha == 5.0);
}

TEST_CASE("run_case and its outputs") {
  const ExperimentConfig c = small_config();
  const CaseResult r = run_case(c);
  CHECK(r.report.total_error >= 0.0);
  CHECK(r.report.total_error < 1e-3);
  CHECK(r.row.E == r.report.total_error);
  CHECK(r.report.alpha.size() == 17);

  const auto dir = std::filesystem::temp_directory_path() / "vekua_case_test";
  std::filesystem::remove_all(dir);
  write_case_outputs(dir.string(), r);
  for (const char* f : {"report.json", "residual.csv", "table.csv"}) CHECK(std::filesystem::exists(dir / f));

  std::ifstream res(dir / "residual.csv");
  CHECK(std::abs(total_error_from_csv(res) - r.report.total_error) <= 1e-12);

  const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(j["config"]["N"] == 8);
  CHECK(j["total_error"].get<double>() == r.report.total_error);

  // Determinism: a second run writes the same residual profile byte for byte.
  const auto dir2 = std::filesystem::temp_directory_path() / "vekua_case_test2";
  write_case_outputs(dir2.string(), run_case(c));
  CHECK(slurp(dir / "residual.csv") == slurp(dir2 / "residual.csv"));
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("table runs record failing rows and continue") {
  TableSpec spec{99, "polynomial", 1.0, std::nullopt, "test", {{5, 15, 15, 0.0}, {9, 20, 10, 0.0}, {3, 12, 12, 0.0}}};
  const auto rows = run_table(spec);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].error.empty());
  CHECK_FALSE(rows[1].error.empty());
  CHECK(std::isnan(rows[1].E));
  CHECK(rows[2].error.empty());
  CHECK(rows[2].table_id == 99);

  std::ostringstream csv;
  write_table_csv(csv, rows);
  CHECK(csv.str().rfind("table,case,N,P,Q,E", 0) == 0);

  const auto only_first = run_table(spec, [](const TableSpec::Row& r) { return r.N == 5; });
  CHECK(only_first.size() == 1);
}

TEST_CASE("square cases pin the inclusion corners on diagonal radii") {
  const auto pins = radial_pins_for("square_inclusion", unit_disk());
  REQUIRE(pins);
  CHECK(pins(pi / 4) == std::vector<double>{0.325 * std::sqrt(2.0)});
  CHECK(pins(-3 * pi / 4).size() == 1);
  CHECK(pins(0.3).empty());
  CHECK_FALSE(radial_pins_for("exponential", unit_disk()));
}

TEST_CASE("beaked configurations") {
  const ExperimentConfig c91 = beaked_config("beaked_lorentzian", 91);
  CHECK(c91.N == 45);
  CHECK(c91.P == 100);
  CHECK(c91.Q == 100);
  CHECK_FALSE(c91.collocation_pins.has_value());
  const ExperimentConfig c51 = beaked_config("beaked_lorentzian", 51);
  CHECK(c51.N == 25);
  CHECK(c51.collocation_pins == std::vector<double>{0.0});
  CHECK_THROWS(beaked_config("beaked_square", 70));
}

TEST_CASE("strip and sampled conductivity paths run end to end") {
  // As the strips narrow, the strip sequence approaches the limiting single-pair sequence.
  ExperimentConfig c;
  c.N = 20;
  c.P = 300;
  c.Q = 300;
  const double limiting = run_case(c).report.total_error;
  c.mode = SequenceMode::strip_c2;
  c.K = 100;
  c.J = 100;
  const double coarse = run_case(c).report.total_error;
  c.K = 800;
  c.J = 800;
  const double fine = run_case(c).report.total_error;
  CHECK(std::abs(fine - limiting) < std::abs(coarse - limiting));
  CHECK(fine == doctest::Approx(limiting).epsilon(0.01));

  const auto path = std::filesystem::temp_directory_path() / "vekua_sampled.csv";
  {
    std::ofstream f(path);
    f << "x,y,sigma\n";
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        double x = -1 + 0.05 * i, y = -1 + 0.05 * j;
        f << x << ',' << y << ',' << 10.0 + x + y << '\n';
      }
  }
  ExperimentConfig s;
  s.case_name = "polynomial";
  s.sigma_csv = path.string();
  s.N = 10;
  s.P = 200;
  s.Q = 200;
  // sigma = x + y + 10 is bilinear, so the sampled field matches the polynomial case
  CHECK(run_case(s).report.total_error < 1e-5);
  std::filesystem::remove(path);
}

TEST_CASE("oracle summary") {
  for (const auto& o : run_oracles()) {
    CAPTURE(o.name);
    CAPTURE(o.detail);
    CHECK(o.passed);
  }
  OracleOptions bad;
  bad.delta = 9.0;
  bool any_failed = false;
  for (const auto& o : run_oracles(bad))
    if (o.name == "unit_powers") any_failed = !o.passed;
  CHECK(any_failed);
}
