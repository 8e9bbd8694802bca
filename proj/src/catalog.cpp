#include "weylscope/catalog.hpp"

#include <cmath>
#include <sstream>

namespace weylscope {
namespace {

std::vector<double> parse_params(const std::string& text, std::string& head) {
  std::vector<double> out;
  const auto colon = text.find(':');
  head = text.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad numeric parameter '" + item + "' in spec '" + text + "'");
    }
  }
  return out;
}

void need(const std::vector<double>& p, std::size_t n, const std::string& text) {
  if (p.size() != n)
    throw InputError("spec '" + text + "' expects " + std::to_string(n) + " parameters");
}

}  // namespace

double hermite_function(int k, double x) {
  if (k < 0) throw InputError("hermite_function: negative index");
  double hm1 = 0.0;
  double h = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int j = 0; j < k; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * x * h - std::sqrt(static_cast<double>(j) / (j + 1)) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

SymbolSpec SymbolSpec::parse(const std::string& text) {
  std::string head;
  const auto p = parse_params(text, head);
  SymbolSpec s;
  s.text_ = text;
  if (head == "zero") {
    s.f_ = [](double, double) { return cd{}; };
  } else if (head == "one") {
    s.f_ = [](double, double) { return cd{1.0}; };
    s.decaying_ = false;
  } else if (head == "x") {
    s.f_ = [](double x, double) { return cd{x}; };
    s.decaying_ = false;
  } else if (head == "xi") {
    s.f_ = [](double, double xi) { return cd{xi}; };
    s.decaying_ = false;
  } else if (head == "xxi") {
    s.f_ = [](double x, double xi) { return cd{x * xi}; };
    s.decaying_ = false;
  } else if (head == "harmonic") {
    s.f_ = [](double x, double xi) { return cd{x * x + xi * xi}; };
    s.decaying_ = false;
  } else if (head == "f0") {
    s.f_ = [](double x, double xi) { return cd{2.0 * std::exp(-(x * x + xi * xi))}; };
  } else if (head == "gauss") {
    need(p, 3, text);
    const double x0 = p[0], xi0 = p[1], w = p[2];
    s.f_ = [=](double x, double xi) {
      return cd{std::exp(-((x - x0) * (x - x0) + (xi - xi0) * (xi - xi0)) / (w * w))};
    };
  } else if (head == "aniso") {
    need(p, 4, text);
    const double x0 = p[0], xi0 = p[1], sx = p[2], sxi = p[3];
    s.f_ = [=](double x, double xi) {
      return cd{std::exp(-(x - x0) * (x - x0) / (sx * sx) - (xi - xi0) * (xi - xi0) / (sxi * sxi))};
    };
  } else if (head == "wave") {
    need(p, 5, text);
    const double x0 = p[0], xi0 = p[1], w = p[2], kx = p[3], kxi = p[4];
    s.f_ = [=](double x, double xi) {
      const double g = std::exp(-((x - x0) * (x - x0) + (xi - xi0) * (xi - xi0)) / (w * w));
      return g * std::exp(kI * (kx * x + kxi * xi));
    };
  } else if (head == "compact") {
    need(p, 3, text);
    const double x0 = p[0], xi0 = p[1], r = p[2];
    s.f_ = [=](double x, double xi) {
      const double t = ((x - x0) * (x - x0) + (xi - xi0) * (xi - xi0)) / (r * r);
      return t >= 1.0 ? cd{} : cd{std::exp(1.0 - 1.0 / (1.0 - t))};
    };
  } else {
    throw InputError("unknown symbol spec '" + text + "'");
  }
  return s;
}

std::vector<std::string> SymbolSpec::names() {
  return {"zero", "one", "x", "xi", "xxi", "harmonic", "f0", "gauss:x0,xi0,s", "aniso:x0,xi0,sx,sxi",
          "wave:x0,xi0,s,kx,kxi", "compact:x0,xi0,r"};
}

SampledSymbol SymbolSpec::sample(const PhaseGrid& g) const {
  if (g.n() != 1) throw InputError("SymbolSpec::sample: only n = 1 is supported");
  SampledSymbol a(g);
  const int nx = g.x.points_per_axis(), nxi = g.xi.points_per_axis();
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nxi; ++j) a.at(i, j) = f_(g.x.node(i), g.xi.node(j));
  return a;
}

FunctionSpec FunctionSpec::parse(const std::string& text) {
  std::string head;
  const auto p = parse_params(text, head);
  FunctionSpec s;
  s.text_ = text;
  if (head == "zero") {
    s.f_ = [](double) { return cd{}; };
  } else if (head == "e0") {
    s.f_ = [](double x) { return cd{hermite_function(0, x)}; };
  } else if (head == "hermite") {
    need(p, 1, text);
    const int k = static_cast<int>(p[0]);
    if (k < 0 || k != p[0]) throw InputError("hermite index must be a non-negative integer");
    s.f_ = [k](double x) { return cd{hermite_function(k, x)}; };
  } else if (head == "packet") {
    need(p, 3, text);
    const double x0 = p[0], k0 = p[1], w = p[2];
    const double c = std::pow(kPi * w * w, -0.25);
    s.f_ = [=](double x) {
      return c * std::exp(-(x - x0) * (x - x0) / (2.0 * w * w)) * std::exp(kI * (k0 * x));
    };
  } else {
    throw InputError("unknown function spec '" + text + "'");
  }
  return s;
}

SampledFunction FunctionSpec::sample(const RealGrid& g) const {
  if (g.dim() != 1) throw InputError("FunctionSpec::sample: only n = 1 is supported");
  SampledFunction u(g);
  for (int k = 0; k < g.points_per_axis(); ++k) u.values[k] = f_(g.node(k));
  return u;
}

std::vector<SampledFunction> hermite_batch(const RealGrid& g, int count) {
  std::vector<SampledFunction> out;
  for (int k = 0; k < count; ++k) out.push_back(FunctionSpec::parse("hermite:" + std::to_string(k)).sample(g));
  return out;
}

}  // namespace weylscope
