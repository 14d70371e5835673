#pragma once

#include <compare>
#include <string>

namespace adelekit {

/// A point class of the specialization poset: the generic point or a closed
/// point, identified by a canonical label. Labels: for P^1 over k a monic
/// irreducible polynomial in t (canonical string) or "inf"; for Spec Z a prime
/// written in decimal; "eta" for the generic point; FinitePoset elements use
/// their index as label.
struct Point {
  enum class Kind { closed, generic };

  Kind kind = Kind::closed;
  std::string label;
  int residue_degree = 1;

  static Point generic_point() { return {Kind::generic, "eta", 1}; }
  static Point closed(std::string label, int residue_degree = 1) {
    return {Kind::closed, std::move(label), residue_degree};
  }

  bool is_generic() const { return kind == Kind::generic; }
  bool is_closed() const { return kind == Kind::closed; }

  bool operator==(const Point& o) const { return kind == o.kind && label == o.label; }
  /// Canonical order: closed points by label, then the generic point.
  std::strong_ordering operator<=>(const Point& o) const {
    if (kind != o.kind) return kind == Kind::closed ? std::strong_ordering::less : std::strong_ordering::greater;
    return label.compare(o.label) <=> 0;
  }
};

}  // namespace adelekit
