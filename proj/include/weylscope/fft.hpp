#pragma once

#include <vector>

#include "weylscope/types.hpp"

// FFTW wrappers. Arrays are row-major with the given dims.
namespace weylscope::fft {

/// Unnormalized DFT along one axis; sign = -1 forward, +1 backward.
void dft_axis(std::vector<cd>& data, const std::vector<int>& dims, int axis, int sign);
/// Unnormalized DFT along every axis.
void dft(std::vector<cd>& data, const std::vector<int>& dims, int sign);

/// F(xi_m) = sum_k exp(-i x_k xi_m) f_k along every axis, with x_k = -L + k h and
/// xi_m = (m - N/2) pi/L. No spacing factor is applied.
void centered_forward(std::vector<cd>& data, const std::vector<int>& dims);
/// f_k = sum_m exp(+i x_k xi_m) F_m, unnormalized.
void centered_inverse(std::vector<cd>& data, const std::vector<int>& dims);

}  // namespace weylscope::fft
