#pragma once

#include "weylscope/io.hpp"
#include "weylscope/report.hpp"

namespace weylscope {

/// Runs cfg.suites in canonical order (suite_names()). cfg is validated first.
Report run_suite(const SuiteConfig& cfg);

/// Records of one suite appended to r.
void run_phase_core(const SuiteConfig& cfg, Report& r);
void run_stft_suite(const SuiteConfig& cfg, Report& r);
void run_weyl_suite(const SuiteConfig& cfg, Report& r);
void run_bargmann_suite(const SuiteConfig& cfg, Report& r);
void run_rankone_suite(const SuiteConfig& cfg, Report& r);
void run_theorems_suite(const SuiteConfig& cfg, Report& r);

}  // namespace weylscope
