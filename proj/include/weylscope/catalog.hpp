#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weylscope/grid.hpp"

// Closed-form symbols and test functions (n = 1), addressed by short text specs such as
// "f0", "gauss:0.5,-0.3,1.2" or "hermite:3".
namespace weylscope {

/// Normalized Hermite function h_k(x).
double hermite_function(int k, double x);

class SymbolSpec {
 public:
  /// one, zero, x, xi, xxi, harmonic, f0, gauss:x0,xi0,s, aniso:x0,xi0,sx,sxi,
  /// wave:x0,xi0,s,kx,kxi, compact:x0,xi0,r
  static SymbolSpec parse(const std::string& text);
  static std::vector<std::string> names();

  cd operator()(double x, double xi) const { return f_(x, xi); }
  SampledSymbol sample(const PhaseGrid& g) const;
  const std::string& text() const { return text_; }
  /// False for the polynomial symbols, which grow at the grid edge.
  bool decaying() const { return decaying_; }

 private:
  std::string text_;
  std::function<cd(double, double)> f_;
  bool decaying_ = true;
};

class FunctionSpec {
 public:
  /// zero, e0, hermite:k, packet:x0,k0,s (L2-normalized Gaussian wave packet)
  static FunctionSpec parse(const std::string& text);

  cd operator()(double x) const { return f_(x); }
  SampledFunction sample(const RealGrid& g) const;
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::function<cd(double)> f_;
};

/// Hermite functions 0..4 on the grid.
std::vector<SampledFunction> hermite_batch(const RealGrid& g, int count = 5);

}  // namespace weylscope
