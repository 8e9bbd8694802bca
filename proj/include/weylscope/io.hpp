#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylscope/bargmann.hpp"
#include "weylscope/order.hpp"
#include "weylscope/stft.hpp"
#include "weylscope/weyl.hpp"

namespace weylscope {

/// Columns T1..T2n, Xi1..Xi2n, re, im, modulus, m, ratio.
void write_stft_csv(const std::filesystem::path& path, const STFTTable& t, const OrderFunction& m);
/// Header line with grid metadata, then i, j, x, y, re, im in row-major order.
void write_kernel_csv(const std::filesystem::path& path, const KernelMatrix& K);
/// Columns re_x1, im_x1, re_val, im_val, weighted_modulus.
void write_complex_csv(const std::filesystem::path& path, const ComplexGridFunction& V, const Weight& W);
/// Columns x, xi, re, im.
void write_symbol_csv(const std::filesystem::path& path, const SampledSymbol& a);

std::vector<std::string> suite_names();

/// key = value lines, '#' comments. Keys: suites, phase, corpus, grid_N, grid_L, symbol_N, symbol_L,
/// dim, half_width, points_per_axis, family, params, C0, N0, tolerance_scale, allow_loosen, workers, out.
struct SuiteConfig {
  std::vector<std::string> suites;
  int grid_N = 128;
  double grid_L = 8.0;
  int symbol_N = 64;
  double symbol_L = 6.0;
  std::vector<std::string> phases;  // empty: every registered phase
  std::string corpus = "default";   // default | small
  double tolerance_scale = 1.0;
  bool allow_loosen = false;
  int workers = 1;
  std::filesystem::path out = "weylscope-out";
  /// Extra order function from family/params/C0/N0, certified by the phase-core suite.
  std::optional<OrderFunction> order;

  /// Throws InputError naming the offending entry.
  void validate() const;
  std::vector<std::pair<std::string, std::string>> echo() const;
  std::vector<std::string> phase_list() const;
};

SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::filesystem::path& path);
/// Comma-separated list, whitespace trimmed, empty items dropped.
std::vector<std::string> split_list(const std::string& s);

}  // namespace weylscope
