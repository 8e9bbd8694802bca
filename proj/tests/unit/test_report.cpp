#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "weylscope/catalog.hpp"
#include "weylscope/io.hpp"
#include "weylscope/suites.hpp"

using namespace weylscope;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("weylscope_test_" + name);
  fs::remove_all(p);
  return p;
}
}  // namespace

TEST_CASE("anchor registry") {
  std::set<std::string> keys;
  for (const auto& [k, v] : anchor_registry()) {
    CHECK_FALSE(v.empty());
    CHECK(keys.insert(k).second);
  }
  CHECK(anchor("plumbing") == "plumbing");
  CHECK(is_registered_anchor("plumbing"));
  CHECK_FALSE(is_registered_anchor("nowhere"));
  CHECK_THROWS_AS(anchor("no-such-key"), InputError);
}

TEST_CASE("empty report has the fixed schema") {
  Report r;
  const std::string text = report_json(r);
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"config_echo", "records", "summary", "versions"});
  CHECK(j["records"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["warn"] == 0);
  CHECK(r.ok());
}

TEST_CASE("floats use seventeen significant digits") {
  Report r;
  Recorder rec(r, "phase-core");
  rec.close("third", "plumbing", 1.0 / 3.0, 0.0, 1.0);
  CHECK(report_json(r).find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("tightened tolerance produces a fail record with both values") {
  Report r;
  Recorder rec(r, "phase-core", 0.01);
  rec.close("tight", "plumbing", 1.0 + 5e-7, 1.0, 1e-6);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].status == Status::fail);
  CHECK_FALSE(r.ok());
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["records"][0]["status"] == "fail");
  CHECK(j["records"][0]["computed"]["value"].get<double>() == doctest::Approx(1.0 + 5e-7));
  CHECK(j["records"][0]["expected"]["value"].get<double>() == 1.0);
}

TEST_CASE("diagnostics downgrade a pass to a warning") {
  Report r;
  Recorder rec(r, "stft");
  Diagnostics tail, edge;
  tail.tail = true;
  edge.boundary = true;
  rec.error("a", "plumbing", 0.0, 1.0, &tail);
  rec.error("b", "plumbing", 0.0, 1.0, &edge);
  rec.error("c", "plumbing", 2.0, 1.0, &edge);
  CHECK(to_string(r.records[0].status) == "warn-tail");
  CHECK(to_string(r.records[1].status) == "warn-boundary");
  CHECK(r.records[2].status == Status::fail);
  CHECK(r.summary().warn == 2);
}

TEST_CASE("phase-core suite passes and reports are byte-identical") {
  SuiteConfig cfg;
  cfg.suites = {"phase-core"};
  const Report a = run_suite(cfg), b = run_suite(cfg);
  CHECK(a.summary().fail == 0);
  CHECK(a.summary().pass > 0);
  for (const auto& rec : a.records) CHECK(is_registered_anchor(rec.anchor));
  const auto d1 = scratch("det1"), d2 = scratch("det2");
  emit_report(a, d1);
  emit_report(b, d2);
  CHECK(slurp(d1 / "report.json") == slurp(d2 / "report.json"));
  emit_report(a, d1);
  CHECK(slurp(d1 / "report.json") == slurp(d2 / "report.json"));
  CHECK(fs::exists(d1 / "timings.csv"));
}

TEST_CASE("empty suite list gives an empty report") {
  SuiteConfig cfg;
  const Report r = run_suite(cfg);
  CHECK(r.records.empty());
  CHECK(r.ok());
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "# comment\n"
      "suites = phase-core, stft\n"
      "dim = 1\nhalf_width = 6\npoints_per_axis = 64\n"
      "family = bracket\nparams = 1\nC0 = 2\nN0 = 1\n"
      "phase = radial\n");
  CHECK(cfg.suites == std::vector<std::string>{"phase-core", "stft"});
  CHECK(cfg.grid_N == 64);
  CHECK(cfg.grid_L == 6.0);
  REQUIRE(cfg.order.has_value());
  CHECK(cfg.order->C0() == 2.0);
  CHECK(cfg.phase_list() == std::vector<std::string>{"radial"});
}

TEST_CASE("config errors name the offending entry") {
  try {
    parse_config("suites = phase-core, bogus\n").validate();
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("colour = red\n"), InputError);
  CHECK_THROWS_AS(parse_config("grid_N = 64\ngrid_N = 32\n"), InputError);
  CHECK_THROWS_AS(parse_config("dim = 1\n"), InputError);
  CHECK_THROWS_AS(parse_config("tolerance_scale = 10\n").validate(), InputError);
  CHECK_NOTHROW(parse_config("tolerance_scale = 10\nallow_loosen = true\n").validate());
  CHECK_THROWS_AS(parse_config("phase = nowhere\n").validate(), InputError);
}

TEST_CASE("CSV exports carry the documented headers") {
  const auto dir = scratch("csv");
  const RealGrid g(1, 4.0, 16);
  const auto K = symbol_to_kernel(SymbolSpec::parse("f0").sample(weyl_phase_grid(g)));
  write_kernel_csv(dir / "k.csv", K);
  std::ifstream f(dir / "k.csv");
  std::string l1, l2;
  std::getline(f, l1);
  std::getline(f, l2);
  CHECK(l1.rfind("# dim=1", 0) == 0);
  CHECK(l2 == "i,j,x,y,re,im");
  std::size_t rows = 0;
  for (std::string l; std::getline(f, l);) ++rows;
  CHECK(rows == 256);

  const auto& p = phase_by_name("radial");
  const auto V = bargmann_transform(FunctionSpec::parse("e0").sample(g), p, ComplexBox::square(4.0, 8));
  write_complex_csv(dir / "v.csv", V, phi_weight(p));
  std::ifstream fv(dir / "v.csv");
  std::getline(fv, l1);
  CHECK(l1 == "re_x1,im_x1,re_val,im_val,weighted_modulus");

  const auto t = stft(SymbolSpec::parse("f0").sample(PhaseGrid::square(RealGrid(1, 4.0, 16))));
  write_stft_csv(dir / "s.csv", t, order_by_name("one"));
  std::ifstream fs_(dir / "s.csv");
  std::getline(fs_, l1);
  CHECK(l1 == "T1,T2,Xi1,Xi2,re,im,modulus,m,ratio");
}
