#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mslit/commands.hpp"
#include "mslit/config.hpp"
#include "mslit/validate.hpp"

using namespace mslit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mslit_test_" + std::to_string(counter()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int counter() {
    static int c = 0;
    return ++c;
  }
};

std::string write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kNaturalConfig = R"({
  "units": "natural",
  "aperture": {"mode": "double", "slit_width": 0.25, "separation": 1.0},
  "grating": {"type": "ideal", "Tprime_over_T": 1.1},
  "numerics": {"n_points": 4096, "extent_over_separation": 64}
})";

}  // namespace

TEST_CASE("config parsing") {
  LoadedConfig c = parse_config(kNaturalConfig);
  CHECK(c.natural_units);
  REQUIRE(c.experiment.has_value());
  CHECK(c.experiment->aperture.separation == 1.0);
  CHECK(std::holds_alternative<IdealGrating>(c.experiment->grating));
  // natural-units default geometry gives a unit momentum scale
  CHECK(c.experiment->geometry.scale() == doctest::Approx(1.0));

  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_config(R"({"units":"natural","bogus":1})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"units":"natural",
          "aperture": {"mode":"double","slit_width":0.2,"separation":1.0,
                       "extra":1},
          "grating": {"type":"ideal","Tprime_over_T":1.1}})"),
        ConfigError);
  }
  SUBCASE("si mode requires unit-suffixed keys") {
    CHECK_THROWS_AS(
        parse_config(R"({
          "aperture": {"mode":"double","slit_width":0.2,"separation":1.0},
          "grating": {"type":"ideal","Tprime_over_T":1.1},
          "geometry": {"L_m":0.55,"lambda_m":5.9e-7}})"),
        ConfigError);
  }
  SUBCASE("invariant violations") {
    CHECK_THROWS_AS(
        parse_config(R"({"units":"natural",
          "aperture": {"mode":"double","slit_width":1.0,"separation":1.0},
          "grating": {"type":"ideal","Tprime_over_T":1.1}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"units":"natural",
          "envelope": {"window":"rect","a":0.23,"T":1.0,"Tprime":1.0}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  }
  SUBCASE("wavelength inference") {
    LoadedConfig si = parse_config(R"({
      "aperture": {"mode":"double","slit_width_m":6.25e-5,
                   "separation_m":2.5e-4},
      "grating": {"type":"wires","n_wires":6,"wire_width_m":1.27e-4,
                  "wire_spacing_m":1.3e-3},
      "geometry": {"L_m":0.55,"lambda_m":"infer"}})");
    CHECK(si.experiment->geometry.lambda ==
          doctest::Approx(5.909e-7).epsilon(1e-3));
  }
}

TEST_CASE("cmd_simulate produces deterministic artifacts") {
  TempDir tmp;
  std::string cfg = write_file(tmp.path / "run.json", kNaturalConfig);
  std::string out1 = (tmp.path / "out1").string();
  std::string out2 = (tmp.path / "out2").string();
  REQUIRE(cmd_simulate(cfg, out1) == 0);
  REQUIRE(cmd_simulate(cfg, out2) == 0);
  for (const char* name :
       {"prepared_position.csv", "after_grating_momentum.csv", "summary.csv",
        "peaks.csv"}) {
    const std::string a = read_file(fs::path(out1) / name);
    const std::string b = read_file(fs::path(out2) / name);
    CHECK(!a.empty());
    CHECK(a == b);  // byte-identical reruns
    CHECK(a.find('\r') == std::string::npos);  // LF endings
  }
  const std::string summary = read_file(fs::path(out1) / "summary.csv");
  CHECK(summary.rfind("stage,probability,", 0) == 0);  // header row

  SUBCASE("schema violations exit 2") {
    std::string bad = write_file(tmp.path / "bad.json", R"({"units":"natural",
      "aperture": {"mode":"double","slit_width":2.0,"separation":1.0},
      "grating": {"type":"ideal","Tprime_over_T":1.1}})");
    CHECK(cmd_simulate(bad, (tmp.path / "x").string()) == 2);
    CHECK(cmd_simulate((tmp.path / "missing.json").string(),
                       (tmp.path / "x").string()) == 2);
  }
}

TEST_CASE("cmd_eigenstate") {
  TempDir tmp;
  std::string cfg = write_file(tmp.path / "env.json", R"({
    "units": "natural",
    "envelope": {"window":"rect","a":0.23,"T":1.0,"Tprime":1.1,
                 "n_terms":255,"n_points":65536,"extent_over_T":512}})");
  std::string out = (tmp.path / "out").string();
  REQUIRE(cmd_eigenstate(cfg, out) == 0);
  const std::string summary =
      read_file(fs::path(out) / "eigenstate_summary.csv");
  CHECK(summary.rfind("residual_position,residual_momentum", 0) == 0);

  std::string bad = write_file(tmp.path / "bad.json", R"({
    "units": "natural",
    "envelope": {"window":"rect","a":0.23,"T":1.0,"Tprime":1.0}})");
  CHECK(cmd_eigenstate(bad, out) == 2);
}

TEST_CASE("cmd_sweep") {
  TempDir tmp;
  std::string cfg = write_file(tmp.path / "run.json", kNaturalConfig);
  std::string out = (tmp.path / "out").string();
  REQUIRE(cmd_sweep(cfg, out, "Tprime", {1.05, 1.1, 1.2}) == 0);
  const std::string table = read_file(fs::path(out) / "sweep.csv");
  CHECK(table.rfind("Tprime,transmitted,leakage,fidelity_distance", 0) == 0);
  CHECK(cmd_sweep(cfg, out, "no_such", {1.0}) == 2);
  CHECK(cmd_sweep(cfg, out, "Tprime", {}) == 2);
}

TEST_CASE("validation suite detects an injected sign error") {
  std::vector<Check> mutated = run_validation_suite({1, true});
  bool parity_failed = false;
  for (const Check& c : mutated)
    if (c.name == "parity_is_double_fourier") parity_failed = !c.pass;
  CHECK(parity_failed);
}
