#pragma once

#include "weylscope/grid.hpp"
#include "weylscope/lattice.hpp"
#include "weylscope/order.hpp"

namespace weylscope {

/// f_T(Y) = 2^n exp(-|Y - T|^2) sampled on g.
SampledSymbol gaussian_window_f(const Vec& T, const PhaseGrid& g);

/// Values F(f_T a)(Xi) for T on the decimated symbol grid and Xi on the dual grid.
/// Index: ((iT * nTxi + jT) * nXx + k) * nXxi + l.
struct STFTTable {
  PhaseGrid T_grid;
  PhaseGrid Xi_grid;
  std::vector<cd> values;

  cd at(int iT, int jT, int k, int l) const;
  Vec T(int iT, int jT) const;
  Vec Xi(int k, int l) const;
};

/// The window is periodized on the symbol box, so a = 1 gives the exact Gaussian transform.
/// stride: decimation of the T grid along each axis (must divide N into an even count).
STFTTable stft(const SampledSymbol& a, int stride = 4, Diagnostics* diag = nullptr);

struct NormResult {
  double value = 0.0;
  Vec T;   // arg-max
  Vec Xi;
};

/// max over (T, Xi) of |F(f_T a)(Xi)| / m(T, Xi).
NormResult stilde_norm(const SampledSymbol& a, const OrderFunction& m, int stride = 4, Diagnostics* diag = nullptr);
/// Same maximum over a precomputed table.
NormResult stilde_norm(const STFTTable& t, const OrderFunction& m);

/// l-infinity over gamma in the truncated lattice of ||chi_gamma^w a||_{L2(E)} / m(gamma).
/// The lattice must be diagonal with a gaussian or f0 window (separable quantization).
/// Every axis of a's grid is used as a function grid for the one-dimensional Weyl kernels.
NormResult lattice_stilde_norm(const SampledSymbol& a, const Lattice& lattice, const OrderFunction& m, double R,
                               Diagnostics* diag = nullptr);

/// psi(X) = exp(-|X|^2/2), phi = normalized Gaussian exp(-|X|^2/2) truncated to |X_k| <= box.
struct MollifierSpec {
  int nu = 1;
  double box = 8.0;

  double psi(const Vec& X) const;
  /// Integral of the truncated, renormalized phi computed by quadrature.
  double phi_mass(int points = 512) const;
};

/// psi(X/nu) (u * phi_{1/nu})(X), convolution by DFT.
SampledSymbol mollify(const SampledSymbol& u, const MollifierSpec& spec);

/// F_sigma b(X) = pi^{-n} int exp(2 i sigma(X, Y)) b(Y) dY on the grid of b.
SampledSymbol symplectic_fourier(const SampledSymbol& b, Diagnostics* diag = nullptr);

}  // namespace weylscope
