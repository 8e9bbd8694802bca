#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weylscope/grid.hpp"
#include "weylscope/symplectic.hpp"

namespace weylscope {

enum class OrderFamily { constant, bracket, anisotropic, product, tabulated };

std::string to_string(OrderFamily f);
OrderFamily order_family_from_string(const std::string& s);

/// Log-multilinear table. Coordinates are either (x, y) = q^{-1}(T, Xi) or Xi alone.
struct OrderTable {
  enum class Coords { xy, xi };
  Coords coords;
  RealGrid grid;
  std::vector<double> log_values;

  double eval(const Vec& TXi) const;
};

/// Positive weight m(T, Xi) on E x E*, ambient dimension 4n.
class OrderFunction {
 public:
  static OrderFunction constant(int n, double c = 1.0);
  /// <X>^s, certified with N0 = |s|, C0 = 2^{|s|/2}.
  static OrderFunction bracket(int n, double s);
  /// <T - t0>^{s1} <Xi>^{s2}.
  static OrderFunction anisotropic(int n, double s1, double s2, const Vec& t0 = Vec());
  static OrderFunction product(const OrderFunction& a, const OrderFunction& b);
  static OrderFunction tabulated(int n, OrderTable table, double C0, double N0);
  /// Generic constructor used by config files.
  static OrderFunction from_spec(const std::string& family, const std::vector<double>& params, int n, double C0,
                                 double N0);

  double operator()(const Vec& TXi) const;
  double eval_log(const Vec& TXi) const;

  OrderFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  int ambient_dim() const { return ambient_; }
  int n() const { return ambient_ / 4; }
  double C0() const { return C0_; }
  double N0() const { return N0_; }
  /// True when m does not depend on T (then m3 needs only a Xi table).
  bool translation_invariant() const;
  OrderFunction with_certificate(double C0, double N0) const;
  const OrderTable* table() const { return table_.get(); }
  std::string describe() const;

 private:
  OrderFamily family_ = OrderFamily::constant;
  std::vector<double> params_;
  int ambient_ = 4;
  double C0_ = 1.0;
  double N0_ = 0.0;
  std::vector<OrderFunction> factors_;
  std::shared_ptr<const OrderTable> table_;
};

struct CertifyResult {
  double C0 = 1.0;
  std::vector<double> X;  // maximizing pair
  std::vector<double> Y;
};

/// Max over grid pairs of m(X) / (<X-Y>^{N0} m(Y)). grid.dim() must equal m.ambient_dim().
/// Throws CertificationError at a non-positive or non-finite value.
CertifyResult certify_order_function(const OrderFunction& m, const RealGrid& grid, double N0);

/// Checks the stored (C0, N0) on the grid with relative slack.
bool check_certificate(const OrderFunction& m, const RealGrid& grid, double slack = 1e-12);

struct NamedOrder {
  std::string name;
  OrderFunction m;
};
/// Closed registry used by suites and the CLI (n = 1).
std::vector<NamedOrder> order_registry();
OrderFunction order_by_name(const std::string& name);

/// Gaussian surrogate exp(-|Xi|^2/4), tabulated on a Xi grid and certified there.
OrderFunction gaussian_surrogate(int n, const RealGrid& xi_grid);

}  // namespace weylscope
