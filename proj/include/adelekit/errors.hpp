#pragma once

#include <stdexcept>
#include <string>

namespace adelekit {

/// Base class for all kernel errors.
struct kernel_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero. Unrecoverable by raising precision.
struct division_by_zero : kernel_error {
  division_by_zero() : kernel_error("division by zero") {}
  explicit division_by_zero(const std::string& what) : kernel_error(what) {}
};

/// The operand is indistinguishable from zero at the current precision.
/// Distinct from division_by_zero: retrying at higher precision may succeed.
struct insufficient_precision : kernel_error {
  explicit insufficient_precision(const std::string& what)
      : kernel_error("insufficient precision: " + what) {}
};

/// Structurally invalid input (bad label, malformed descriptor, index range).
struct bad_input : kernel_error {
  explicit bad_input(const std::string& what) : kernel_error(what) {}
};

/// Exact but out of the supported desk scale (e.g. degree-4 factorization over Q).
struct unsupported : kernel_error {
  explicit unsupported(const std::string& what) : kernel_error(what) {}
};

/// Windowed data of incompatible shapes combined.
struct window_mismatch : kernel_error {
  explicit window_mismatch(const std::string& what) : kernel_error(what) {}
};

}  // namespace adelekit
