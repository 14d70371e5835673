#pragma once

#include <cstdlib>
#include <string>

#include "adelekit/errors.hpp"

namespace adelekit {

/// Default absolute precision for series-backed computations. Overridable via
/// the ADELEKIT_PRECISION environment variable (read once per process).
inline int default_precision() {
  static const int value = [] {
    if (const char* env = std::getenv("ADELEKIT_PRECISION")) {
      try {
        const int n = std::stoi(env);
        if (n >= 2 && n <= 4096) return n;
      } catch (...) {
      }
      throw bad_input("ADELEKIT_PRECISION must be an integer in [2, 4096]");
    }
    return 16;
  }();
  return value;
}

/// Three-valued answer for questions that are decidable only below a
/// precision horizon.
enum class Tri { yes, no, unknown };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}

inline std::string tri_str(Tri t) {
  switch (t) {
    case Tri::yes: return "equal";
    case Tri::no: return "not-equal";
    default: return "indeterminate-at-precision";
  }
}

}  // namespace adelekit
