#include "weylscope/report.hpp"

#include <Eigen/Core>
#include <fftw3.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace weylscope {
namespace {

#include "anchors.inc"

double seconds_now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void quantities(std::ostringstream& os, const std::vector<Quantity>& q, const std::string& pad) {
  if (q.empty()) {
    os << "{}";
    return;
  }
  os << "{\n";
  for (std::size_t k = 0; k < q.size(); ++k)
    os << pad << "  " << quote(q[k].name) << ": " << num(q[k].value) << (k + 1 < q.size() ? ",\n" : "\n");
  os << pad << "}";
}

std::vector<std::pair<std::string, std::string>> versions() {
  return {{"weylscope", WEYLSCOPE_VERSION},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"fftw", fftw_version},
          {"compiler", __VERSION__}};
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn_tail: return "warn-tail";
    case Status::warn_boundary: return "warn-boundary";
  }
  return "fail";
}

const std::vector<std::pair<std::string, std::string>>& anchor_registry() { return kAnchorRows; }

const std::string& anchor(const std::string& key) {
  for (const auto& [k, v] : kAnchorRows)
    if (k == key) return v;
  throw InputError("unknown anchor key: " + key);
}

bool is_registered_anchor(const std::string& value) {
  for (const auto& row : kAnchorRows)
    if (row.second == value) return true;
  return false;
}

ReportSummary Report::summary() const {
  ReportSummary s;
  for (const auto& r : records) {
    if (r.status == Status::pass) ++s.pass;
    else if (r.status == Status::fail) ++s.fail;
    else ++s.warn;
  }
  return s;
}

std::string report_json(const Report& r) {
  std::ostringstream os;
  os << "{\n  \"config_echo\": {";
  for (std::size_t k = 0; k < r.config_echo.size(); ++k)
    os << (k ? ",\n" : "\n") << "    " << quote(r.config_echo[k].first) << ": " << quote(r.config_echo[k].second);
  os << (r.config_echo.empty() ? "},\n" : "\n  },\n");
  os << "  \"records\": [";
  for (std::size_t k = 0; k < r.records.size(); ++k) {
    const auto& c = r.records[k];
    os << (k ? ",\n" : "\n") << "    {\n";
    os << "      \"suite\": " << quote(c.suite) << ",\n";
    os << "      \"name\": " << quote(c.name) << ",\n";
    os << "      \"anchor\": " << quote(c.anchor) << ",\n";
    os << "      \"computed\": ";
    quantities(os, c.computed, "      ");
    os << ",\n      \"expected\": ";
    quantities(os, c.expected, "      ");
    os << ",\n      \"tolerance\": " << num(c.tolerance) << ",\n";
    os << "      \"status\": " << quote(to_string(c.status)) << "\n    }";
  }
  os << (r.records.empty() ? "],\n" : "\n  ],\n");
  const auto s = r.summary();
  os << "  \"summary\": {\"pass\": " << s.pass << ", \"fail\": " << s.fail << ", \"warn\": " << s.warn << "},\n";
  os << "  \"versions\": {";
  const auto v = versions();
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << quote(v[k].first) << ": " << quote(v[k].second);
  os << "}\n}\n";
  return os.str();
}

void emit_report(const Report& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  const auto json_path = dir / "report.json";
  std::ofstream js(json_path, std::ios::binary | std::ios::trunc);
  if (!js) throw std::runtime_error("cannot write " + json_path.string());
  js << report_json(r);
  const auto csv_path = dir / "timings.csv";
  std::ofstream tc(csv_path, std::ios::binary | std::ios::trunc);
  if (!tc) throw std::runtime_error("cannot write " + csv_path.string());
  tc << "suite,name,runtime_s\n";
  for (const auto& c : r.records) tc << c.suite << "," << c.name << "," << num(c.runtime_s) << "\n";
}

Recorder::Recorder(Report& report, std::string suite, double tol_scale)
    : report_(report), suite_(std::move(suite)), scale_(tol_scale), last_(seconds_now()) {}

void Recorder::error(const std::string& name, const std::string& key, double err, double tol,
                     const Diagnostics* diag) {
  const double t = tol * scale_;
  holds(name, key, std::isfinite(err) && err <= t, {{"error", err}}, {{"tolerance", t}}, t, diag);
}

void Recorder::push(CheckRecord rec, const Diagnostics* diag) {
  rec.suite = suite_;
  const double t = seconds_now();
  rec.runtime_s = t - last_;
  last_ = t;
  if (rec.status == Status::pass && diag) {
    if (diag->tail) rec.status = Status::warn_tail;
    else if (diag->boundary || diag->aliasing || diag->growth) rec.status = Status::warn_boundary;
  }
  report_.records.push_back(std::move(rec));
}

void Recorder::close(const std::string& name, const std::string& key, double computed, double expected, double tol,
                     const Diagnostics* diag) {
  const double t = tol * scale_;
  const bool ok = std::isfinite(computed) && std::abs(computed - expected) <= t;
  holds(name, key, ok, {{"value", computed}}, {{"value", expected}}, t, diag);
}

void Recorder::upper(const std::string& name, const std::string& key, double computed, double bound,
                     const Diagnostics* diag) {
  const bool ok = std::isfinite(computed) && computed <= bound;
  holds(name, key, ok, {{"value", computed}}, {{"bound", bound}}, 0.0, diag);
}

void Recorder::holds(const std::string& name, const std::string& key, bool ok, std::vector<Quantity> computed,
                     std::vector<Quantity> expected, double tol, const Diagnostics* diag) {
  CheckRecord rec;
  rec.name = name;
  rec.anchor = anchor(key);
  rec.computed = std::move(computed);
  rec.expected = std::move(expected);
  rec.tolerance = tol;
  rec.status = ok ? Status::pass : Status::fail;
  push(std::move(rec), diag);
}

}  // namespace weylscope
