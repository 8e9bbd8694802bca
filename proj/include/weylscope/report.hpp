#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "weylscope/types.hpp"

namespace weylscope {

enum class Status { pass, fail, warn_tail, warn_boundary };
std::string to_string(Status s);

struct Quantity {
  std::string name;
  double value;
};

struct CheckRecord {
  std::string suite;
  std::string name;
  std::string anchor;  // registry value, resolved from a key
  std::vector<Quantity> computed;
  std::vector<Quantity> expected;
  double tolerance = 0.0;
  Status status = Status::pass;
  double runtime_s = 0.0;  // kept out of report.json
};

/// Anchor registry: key -> anchor string. Keys are short names used by the suites.
const std::vector<std::pair<std::string, std::string>>& anchor_registry();
/// Throws InputError for an unknown key.
const std::string& anchor(const std::string& key);
bool is_registered_anchor(const std::string& value);

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int warn = 0;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<CheckRecord> records;

  ReportSummary summary() const;
  bool ok() const { return summary().fail == 0; }
};

/// Fixed key order, %.17g floats, two-space indentation.
std::string report_json(const Report& r);
/// Writes report.json and timings.csv into dir (created if missing).
void emit_report(const Report& r, const std::filesystem::path& dir);

/// Appends records for one suite; status is downgraded to a warning when a diagnostic fired.
class Recorder {
 public:
  /// tol_scale multiplies every tolerance of close() and error().
  Recorder(Report& report, std::string suite, double tol_scale = 1.0);

  /// err <= tol
  void error(const std::string& name, const std::string& key, double err, double tol,
             const Diagnostics* diag = nullptr);

  /// |computed - expected| <= tol
  void close(const std::string& name, const std::string& key, double computed, double expected, double tol,
             const Diagnostics* diag = nullptr);
  /// computed <= bound
  void upper(const std::string& name, const std::string& key, double computed, double bound,
             const Diagnostics* diag = nullptr);
  /// Generic predicate with named quantities.
  void holds(const std::string& name, const std::string& key, bool ok, std::vector<Quantity> computed,
             std::vector<Quantity> expected, double tol, const Diagnostics* diag = nullptr);

 private:
  void push(CheckRecord rec, const Diagnostics* diag);
  Report& report_;
  std::string suite_;
  double scale_;
  double last_;
};

}  // namespace weylscope
