#include "weylscope/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace weylscope {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw InputError("config: " + key + " expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d)) throw InputError("config: " + key + " expects an integer, got '" + v + "'");
  return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError("config: " + key + " expects true or false, got '" + v + "'");
}

}  // namespace

void write_stft_csv(const std::filesystem::path& path, const STFTTable& t, const OrderFunction& m) {
  auto f = open_out(path);
  f << "T1,T2,Xi1,Xi2,re,im,modulus,m,ratio\n";
  const int nTx = t.T_grid.x.points_per_axis(), nTxi = t.T_grid.xi.points_per_axis();
  const int nXx = t.Xi_grid.x.points_per_axis(), nXxi = t.Xi_grid.xi.points_per_axis();
  Vec TXi(4);
  for (int i = 0; i < nTx; ++i)
    for (int j = 0; j < nTxi; ++j) {
      const Vec T = t.T(i, j);
      for (int k = 0; k < nXx; ++k)
        for (int l = 0; l < nXxi; ++l) {
          const Vec Xi = t.Xi(k, l);
          const cd v = t.at(i, j, k, l);
          TXi << T(0), T(1), Xi(0), Xi(1);
          const double mv = m(TXi);
          f << num(T(0)) << ',' << num(T(1)) << ',' << num(Xi(0)) << ',' << num(Xi(1)) << ',' << num(v.real())
            << ',' << num(v.imag()) << ',' << num(std::abs(v)) << ',' << num(mv) << ',' << num(std::abs(v) / mv)
            << '\n';
        }
    }
}

void write_kernel_csv(const std::filesystem::path& path, const KernelMatrix& K) {
  auto f = open_out(path);
  const RealGrid& g = K.grid;
  f << "# dim=" << g.dim() << " half_width=" << num(g.half_width()) << " points_per_axis=" << g.points_per_axis()
    << " spacing=" << num(g.spacing()) << " quad_weight=" << num(K.quad_weight) << '\n';
  f << "i,j,x,y,re,im\n";
  for (long i = 0; i < K.entries.rows(); ++i)
    for (long j = 0; j < K.entries.cols(); ++j) {
      const cd v = K.entries(i, j);
      f << i << ',' << j << ',' << num(g.node(static_cast<int>(i))) << ',' << num(g.node(static_cast<int>(j))) << ','
        << num(v.real()) << ',' << num(v.imag()) << '\n';
    }
}

void write_complex_csv(const std::filesystem::path& path, const ComplexGridFunction& V, const Weight& W) {
  auto f = open_out(path);
  f << "re_x1,im_x1,re_val,im_val,weighted_modulus\n";
  const auto wm = weighted_modulus(V, W);
  for (std::size_t k = 0; k < V.values.size(); ++k) {
    const cd x = V.box.point(k);
    f << num(x.real()) << ',' << num(x.imag()) << ',' << num(V.values[k].real()) << ',' << num(V.values[k].imag())
      << ',' << num(wm[k]) << '\n';
  }
}

void write_symbol_csv(const std::filesystem::path& path, const SampledSymbol& a) {
  auto f = open_out(path);
  f << "x,xi,re,im\n";
  for (int i = 0; i < a.nx(); ++i)
    for (int j = 0; j < a.nxi(); ++j)
      f << num(a.grid.x.node(i)) << ',' << num(a.grid.xi.node(j)) << ',' << num(a.at(i, j).real()) << ','
        << num(a.at(i, j).imag()) << '\n';
}

std::vector<std::string> suite_names() { return {"phase-core", "stft", "weyl", "bargmann", "rankone", "theorems"}; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void SuiteConfig::validate() const {
  const auto known = suite_names();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InputError("unknown suite: " + s);
  const auto pn = phase_names();
  for (const auto& p : phases)
    if (std::find(pn.begin(), pn.end(), p) == pn.end()) throw InputError("unknown phase: " + p);
  if (corpus != "default" && corpus != "small") throw InputError("unknown corpus: " + corpus);
  if (grid_N <= 0 || grid_N % 2) throw InputError("grid_N must be positive and even");
  if (symbol_N <= 0 || symbol_N % 2) throw InputError("symbol_N must be positive and even");
  if (grid_L <= 0.0 || symbol_L <= 0.0) throw InputError("grid half-widths must be positive");
  if (!(tolerance_scale > 0.0)) throw InputError("tolerance_scale must be positive");
  if (tolerance_scale > 1.0 && !allow_loosen) throw InputError("tolerance_scale > 1 loosens defaults; set allow_loosen = true");
  if (workers < 1) throw InputError("workers must be at least 1");
}

std::vector<std::string> SuiteConfig::phase_list() const { return phases.empty() ? phase_names() : phases; }

std::vector<std::pair<std::string, std::string>> SuiteConfig::echo() const {
  std::string s, p;
  for (const auto& x : suites) s += (s.empty() ? "" : ",") + x;
  for (const auto& x : phase_list()) p += (p.empty() ? "" : ",") + x;
  std::vector<std::pair<std::string, std::string>> e = {
      {"suites", s},
      {"grid_N", std::to_string(grid_N)},
      {"grid_L", num(grid_L)},
      {"symbol_N", std::to_string(symbol_N)},
      {"symbol_L", num(symbol_L)},
      {"phases", p},
      {"corpus", corpus},
      {"tolerance_scale", num(tolerance_scale)},
      {"workers", std::to_string(workers)},
  };
  if (order) e.emplace_back("order", order->describe());
  return e;
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw InputError("config: duplicate key " + key);
    kv[key] = trim(line.substr(eq + 1));
  }
  std::optional<int> dim, ppa;
  std::optional<double> hw, C0, N0;
  std::string family;
  std::vector<double> params;
  for (const auto& [key, v] : kv) {
    if (key == "suites") cfg.suites = split_list(v);
    else if (key == "phase" || key == "phases") cfg.phases = split_list(v);
    else if (key == "corpus") cfg.corpus = v;
    else if (key == "grid_N") cfg.grid_N = to_int(key, v);
    else if (key == "grid_L") cfg.grid_L = to_double(key, v);
    else if (key == "symbol_N") cfg.symbol_N = to_int(key, v);
    else if (key == "symbol_L") cfg.symbol_L = to_double(key, v);
    else if (key == "dim") dim = to_int(key, v);
    else if (key == "half_width") hw = to_double(key, v);
    else if (key == "points_per_axis") ppa = to_int(key, v);
    else if (key == "family") family = v;
    else if (key == "params") for (const auto& p : split_list(v)) params.push_back(to_double(key, p));
    else if (key == "C0") C0 = to_double(key, v);
    else if (key == "N0") N0 = to_double(key, v);
    else if (key == "tolerance_scale") cfg.tolerance_scale = to_double(key, v);
    else if (key == "allow_loosen") cfg.allow_loosen = to_bool(key, v);
    else if (key == "workers") cfg.workers = to_int(key, v);
    else if (key == "out") cfg.out = v;
    else throw InputError("config: unknown key " + key);
  }
  if (dim || hw || ppa) {
    if (!(dim && hw && ppa)) throw InputError("config: dim, half_width and points_per_axis go together");
    RealGrid(*dim, *hw, *ppa);  // validates
    if (*dim == 1) {
      cfg.grid_N = *ppa;
      cfg.grid_L = *hw;
    } else if (*dim == 2) {
      cfg.symbol_N = *ppa;
      cfg.symbol_L = *hw;
    } else {
      throw InputError("config: dim must be 1 (function grid) or 2 (symbol grid)");
    }
  }
  if (!family.empty())
    cfg.order = OrderFunction::from_spec(family, params, 1, C0.value_or(1.0), N0.value_or(0.0));
  else if (C0 || N0 || !params.empty())
    throw InputError("config: params, C0 and N0 need a family");
  cfg.validate();
  return cfg;
}

SuiteConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read config " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace weylscope
