#pragma once

#include <string>

#include "adelekit/divisors.hpp"
#include "adelekit/points.hpp"

namespace adelekit {

/// Quasicoherent sheaf descriptor for the curve case: either a line bundle
/// twist O(D) or a finite-length skyscraper at a closed point.
struct Sheaf {
  enum class Kind { line_bundle, skyscraper };

  Kind kind = Kind::line_bundle;
  Divisor twist;      // line bundle: O(twist)
  Point sky_point;    // skyscraper: support
  int sky_length = 0; // skyscraper: length over the completed local ring

  static Sheaf structure_sheaf() { return line_bundle(Divisor{}); }

  static Sheaf line_bundle(Divisor d) {
    Sheaf s;
    s.kind = Kind::line_bundle;
    s.twist = std::move(d);
    return s;
  }

  /// O(n) = O(n * [inf]).
  static Sheaf twisting(int n) {
    return line_bundle(Divisor::single(Point::closed("inf", 1), n));
  }

  static Sheaf skyscraper(const Point& x, int length) {
    if (x.is_generic()) throw bad_input("skyscrapers are supported at closed points");
    if (length < 1) throw bad_input("skyscraper length must be positive");
    Sheaf s;
    s.kind = Kind::skyscraper;
    s.sky_point = x;
    s.sky_length = length;
    return s;
  }

  bool is_line_bundle() const { return kind == Kind::line_bundle; }
  bool is_skyscraper() const { return kind == Kind::skyscraper; }

  std::string str() const {
    if (is_skyscraper())
      return "sky(" + sky_point.label + "," + std::to_string(sky_length) + ")";
    return "O(" + twist.str() + ")";
  }

  bool operator==(const Sheaf&) const = default;
};

}  // namespace adelekit
