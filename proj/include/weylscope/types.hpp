#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylscope {

using cd = std::complex<double>;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cd kI{0.0, 1.0};

/// Bad arguments: shapes, dimensions, grid parameters, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An order function failed the (C0, N0) check or produced a non-positive value.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}
  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

/// Singular linear solve inside the quadratic-phase calculus.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Soft warnings. Operations that can detect them take an optional pointer.
struct Diagnostics {
  bool boundary = false;
  bool aliasing = false;
  bool tail = false;
  bool growth = false;
  bool divergence = false;
  std::vector<std::string> notes;

  void flag_boundary(const std::string& where) {
    boundary = true;
    notes.push_back("boundary mass: " + where);
  }
  void merge(const Diagnostics& o) {
    boundary |= o.boundary;
    aliasing |= o.aliasing;
    tail |= o.tail;
    growth |= o.growth;
    divergence |= o.divergence;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
  bool any() const { return boundary || aliasing || tail || growth || divergence; }
};

}  // namespace weylscope
