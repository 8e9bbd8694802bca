#pragma once

#include <string>
#include <vector>

#include "weylscope/grid.hpp"
#include "weylscope/report.hpp"

namespace weylscope {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string anchor_key;
  bool pass = false;
  double runtime_s = 0.0;
  double budget_s = 0.0;
  std::vector<Quantity> values;
  std::string detail;
};

/// Symbol corpus shared by the operator-bound criteria.
std::vector<std::string> corpus_symbols();

struct ReconstructionTriple {
  std::string symbol;
  std::string u;
  std::string v;
};
std::vector<ReconstructionTriple> reconstruction_triples();

std::vector<int> criterion_ids();
/// Throws InputError for an unknown id. Runtime above the budget fails the criterion.
CriterionResult run_criterion(int id);

/// -i u' by DFT differentiation on the periodic grid.
SampledFunction spectral_derivative(const SampledFunction& u);

/// Least-squares slope of y against x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace weylscope
