#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "weylscope/catalog.hpp"
#include "weylscope/io.hpp"
#include "weylscope/magnetic.hpp"
#include "weylscope/suites.hpp"

using namespace weylscope;
using nlohmann::ordered_json;

namespace {

struct Globals {
  int grid_N = 128;
  double grid_L = 8.0;
  int workers = 1;
  std::string out;
};

void emit_json(const ordered_json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
}

std::string or_default(const std::string& out, const char* fallback) { return out.empty() ? fallback : out; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Weyl calculus in Sjostrand classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* optN = app.add_option("--grid-N", g.grid_N, "Function grid points")->check(CLI::PositiveNumber);
  auto* optL = app.add_option("--grid-L", g.grid_L, "Function grid half-width")->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "OpenMP threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file, or directory for verify");

  std::string symbol, symbol2, order1, order2, order = "one", phase = "radial", pstr = "2", input, u, v;
  int nodes = 16, sym_N = 64;
  double radius = 5.0, sym_L = 6.0;

  auto* quantize = app.add_subcommand("quantize", "Weyl kernel of a symbol, written as CSV");
  quantize->add_option("--symbol", symbol, "Symbol spec")->required();

  auto* compose = app.add_subcommand("compose", "Weyl product of two symbols, or composed order function");
  compose->add_option("--symbol1", symbol);
  compose->add_option("--symbol2", symbol2);
  compose->add_option("--order1", order1);
  compose->add_option("--order2", order2);

  auto* stftc = app.add_subcommand("stft", "Windowed spectrum table as CSV");
  auto* snorm = app.add_subcommand("snorm", "Sjostrand-class norm of a symbol");
  for (auto* c : {stftc, snorm}) {
    c->add_option("--symbol", symbol, "Symbol spec")->required();
    c->add_option("--order", order, "Registered order function");
    c->add_option("--symbol-N", sym_N, "Symbol grid points per axis");
    c->add_option("--symbol-L", sym_L, "Symbol grid half-width");
  }

  auto* mnorm = app.add_subcommand("mnorm", "Modulation-space norm through a Bargmann transform");
  mnorm->add_option("--phase", phase);
  mnorm->add_option("--p", pstr, "1, 2 or inf");
  mnorm->add_option("--input", input, "Function spec")->required();

  auto* rankone = app.add_subcommand("rankone", "Coherent-state reconstruction of (a^w u, v)");
  rankone->add_option("--symbol", symbol)->required();
  rankone->add_option("--u", u)->required();
  rankone->add_option("--v", v)->required();
  rankone->add_option("--nodes", nodes)->check(CLI::Range(2, 256));
  rankone->add_option("--radius", radius)->check(CLI::PositiveNumber);
  rankone->add_option("--phase", phase);

  auto* verify = app.add_subcommand("verify", "Run check suites and write report.json");
  std::string config_path, suites, phases, corpus;
  double tol_scale = 0.0;
  bool loosen = false;
  verify->add_option("--config", config_path, "Config file");
  auto* optSuites = verify->add_option("--suites", suites, "Comma-separated suites or 'all' (default: all, or the config list)")
                        ->expected(0, 1);
  verify->add_option("--phase", phases, "Comma-separated phases");
  verify->add_option("--corpus", corpus, "default or small");
  verify->add_option("--tolerance-scale", tol_scale);
  verify->add_flag("--allow-loosen", loosen);

  CLI11_PARSE(app, argc, argv);

  try {
#ifdef _OPENMP
    omp_set_num_threads(g.workers);
#endif
    const RealGrid fg(1, g.grid_L, g.grid_N);
    const PhaseGrid pg = weyl_phase_grid(fg);

    if (*quantize) {
      Diagnostics d;
      const auto K = symbol_to_kernel(SymbolSpec::parse(symbol).sample(pg), &d);
      write_kernel_csv(or_default(g.out, "kernel.csv"), K);
      for (const auto& n : d.notes) std::cerr << "warning: " << n << "\n";
      return 0;
    }
    if (*compose) {
      if (!order1.empty() || !order2.empty()) {
        if (order1.empty() || order2.empty()) throw InputError("compose needs both --order1 and --order2");
        const auto co = compose_order_functions(order_by_name(order1), order_by_name(order2), RealGrid(2, 12.0, 48));
        ordered_json j;
        j["divergent"] = co.divergent;
        j["doubling_change"] = co.doubling_change;
        j["C0"] = co.certificate.C0;
        j["N0"] = co.m3.N0();
        j["m3"] = co.m3.describe();
        emit_json(j, g.out);
        return co.divergent ? 1 : 0;
      }
      if (symbol.empty() || symbol2.empty()) throw InputError("compose needs --symbol1 and --symbol2");
      Diagnostics d;
      const auto c = moyal_compose(SymbolSpec::parse(symbol).sample(pg), SymbolSpec::parse(symbol2).sample(pg), &d);
      write_symbol_csv(or_default(g.out, "compose.csv"), c);
      for (const auto& n : d.notes) std::cerr << "warning: " << n << "\n";
      return 0;
    }
    if (*stftc || *snorm) {
      const auto a = SymbolSpec::parse(symbol).sample(PhaseGrid::square(RealGrid(1, sym_L, sym_N)));
      const auto m = order_by_name(order);
      Diagnostics d;
      const auto t = stft(a, 4, &d);
      for (const auto& n : d.notes) std::cerr << "warning: " << n << "\n";
      if (*stftc) {
        write_stft_csv(or_default(g.out, "stft.csv"), t, m);
        return 0;
      }
      const auto nr = stilde_norm(t, m);
      ordered_json j;
      j["value"] = nr.value;
      j["argmax_T"] = {nr.T(0), nr.T(1)};
      j["argmax_Xi"] = {nr.Xi(0), nr.Xi(1)};
      j["boundary_flag"] = d.boundary;
      emit_json(j, "");
      return 0;
    }
    if (*mnorm) {
      const auto& p = phase_by_name(phase);
      const auto uu = FunctionSpec::parse(input).sample(fg);
      const ComplexBox box = default_box();
      Diagnostics d;
      const auto V = bargmann_transform(uu, p, box, &d);
      const Weight W = phi_weight(p);
      ordered_json j;
      j["phase"] = phase;
      j["p"] = pstr;
      j["value"] = hp_norm(V, W, pnorm_from_string(pstr), &d);
      j["boundary_flag"] = d.boundary;
      emit_json(j, "");
      if (!g.out.empty()) write_complex_csv(g.out, V, W);
      return 0;
    }
    if (*rankone) {
      const auto& p = phase_by_name(phase);
      const auto a = SymbolSpec::parse(symbol);
      const auto uu = FunctionSpec::parse(u).sample(fg), vv = FunctionSpec::parse(v).sample(fg);
      const auto quad = RankOneQuadrature::make(radius, nodes, chart_jacobian(p, phi_weight(p)));
      const auto res = rank_one_reconstruct(a.sample(PhaseGrid::square(RealGrid(1, 6.0, 64))), uu, vv, quad, p);
      const cd exact = apply_weyl(a.sample(pg), uu).inner(vv);
      ordered_json j;
      j["value_re"] = res.value.real();
      j["value_im"] = res.value.imag();
      j["oracle_re"] = exact.real();
      j["oracle_im"] = exact.imag();
      j["rel_error"] = std::abs(res.value - exact) / std::abs(exact);
      j["tail_flag"] = res.tail_flag;
      emit_json(j, g.out);
      return 0;
    }
    if (*verify) {
      SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : load_config(config_path);
      if (optN->count()) cfg.grid_N = g.grid_N;
      if (optL->count()) cfg.grid_L = g.grid_L;
      // A bare --suites selects nothing.
      if (config_path.empty() && !optSuites->count()) cfg.suites = suite_names();
      if (optSuites->count()) cfg.suites = suites == "all" ? suite_names() : split_list(suites);
      if (!phases.empty()) cfg.phases = split_list(phases);
      if (!corpus.empty()) cfg.corpus = corpus;
      if (tol_scale > 0.0) cfg.tolerance_scale = tol_scale;
      if (loosen) cfg.allow_loosen = true;
      if (!g.out.empty()) cfg.out = g.out;
      cfg.workers = g.workers;
      const Report r = run_suite(cfg);
      emit_report(r, cfg.out);
      const auto s = r.summary();
      std::printf("pass %d  fail %d  warn %d  -> %s\n", s.pass, s.fail, s.warn, (cfg.out / "report.json").c_str());
      return r.ok() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
