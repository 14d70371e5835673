#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adelekit/errors.hpp"
#include "adelekit/points.hpp"
#include "adelekit/poly.hpp"

namespace adelekit {

/// The projective line over an exact field k. Closed points are monic
/// irreducible polynomials in t plus the point at infinity; the generic point
/// is eta. Specialization order: every closed point lies under eta.
template <ExactField K>
struct P1Model {
  static Point eta() { return Point::generic_point(); }
  static Point infinity() { return Point::closed("inf", 1); }

  static Point closed_point(const Poly<K>& pi) {
    if (!pi.is_monic()) throw bad_input("closed point label must be monic: " + pi.str());
    if (!is_irreducible(pi)) throw bad_input("closed point label must be irreducible: " + pi.str());
    return Point::closed(pi.str(), pi.deg());
  }

  static Point point_from_label(const std::string& label) {
    if (label == "eta") return eta();
    if (label == "inf") return infinity();
    return closed_point(Poly<K>::parse(label));
  }

  /// The label polynomial of a finite closed point (none for inf/eta).
  static std::optional<Poly<K>> label_poly(const Point& p) {
    if (p.is_generic() || p.label == "inf") return std::nullopt;
    return Poly<K>::parse(p.label);
  }

  static bool leq(const Point& a, const Point& b) {
    if (a == b) return true;
    return a.is_closed() && b.is_generic();
  }

  static constexpr int dimension() { return 1; }

  /// Finite closed points of the given residue degree, canonical order.
  /// Over Q only degree 1 is enumerable (t - 0, t - 1, t + 1, t - 2, ...,
  /// truncated to `limit`); over F_p all degrees.
  static std::vector<Point> finite_points_of_degree(int degree, int limit = 64) {
    std::vector<Point> out;
    if constexpr (K::characteristic() != 0) {
      for (const auto& pi : monic_irreducibles<K::characteristic()>(degree))
        out.push_back(Point::closed(pi.str(), degree));
    } else {
      if (degree != 1)
        throw unsupported("closed-point enumeration over Q is limited to degree 1");
      for (int i = 0; static_cast<int>(out.size()) < limit; ++i) {
        const int c = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);  // 0, -1, 1, -2, 2, ...
        Poly<K> pi{{K::from_int(-c), K::one()}};
        out.push_back(Point::closed(pi.str(), 1));
      }
    }
    if (static_cast<int>(out.size()) > limit) out.resize(static_cast<std::size_t>(limit));
    return out;
  }
};

/// Spec of a Dedekind domain at desk scale: Spec Z. Closed points are primes,
/// the generic point is eta. No base-field linear structure; only rank-level
/// cohomology and the product-family regression use this model.
struct SpecZModel {
  static Point eta() { return Point::generic_point(); }

  static Point closed_point(std::uint64_t p) {
    if (p < 2) throw bad_input("not a prime: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw bad_input("not a prime: " + std::to_string(p));
    return Point::closed(std::to_string(p), 1);
  }

  static Point point_from_label(const std::string& label) {
    if (label == "eta") return eta();
    try {
      return closed_point(std::stoull(label));
    } catch (const kernel_error&) {
      throw;
    } catch (const std::exception&) {
      throw bad_input("bad Spec Z point label: " + label);
    }
  }

  static bool leq(const Point& a, const Point& b) {
    if (a == b) return true;
    return a.is_closed() && b.is_generic();
  }

  static constexpr int dimension() { return 1; }

  static std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 2; n < bound; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(n);
    }
    return ps;
  }
};

/// An arbitrary finite poset, given by a relation table. Carries no ring
/// structure; exists to exercise the chain and homotopy machinery.
struct FinitePosetModel {
  int size = 0;
  std::vector<std::vector<bool>> le;  // le[i][j]  <=>  i <= j

  /// Builds the reflexive-transitive closure of the given pairs and checks
  /// antisymmetry. Pair (i, j) declares i <= j.
  static FinitePosetModel from_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 0) throw bad_input("poset must be nonempty");
    FinitePosetModel m;
    m.size = n;
    m.le.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [i, j] : pairs) {
      if (i < 0 || j < 0 || i >= n || j >= n) throw bad_input("relation index out of range");
      m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
              m.le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
            m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
            m.le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          throw bad_input("relation is not antisymmetric");
    return m;
  }

  /// A totally ordered chain poset 0 < 1 < ... < n-1.
  static FinitePosetModel chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_relation(n, pairs);
  }

  Point point(int i) const {
    if (i < 0 || i >= size) throw bad_input("poset element out of range");
    return Point::closed(std::to_string(i), 1);
  }

  int index_of(const Point& p) const {
    try {
      int i = std::stoi(p.label);
      if (i < 0 || i >= size) throw bad_input("point not in poset: " + p.label);
      return i;
    } catch (const kernel_error&) {
      throw;
    } catch (const std::exception&) {
      throw bad_input("point not in poset: " + p.label);
    }
  }

  bool leq(const Point& a, const Point& b) const {
    return le[static_cast<std::size_t>(index_of(a))][static_cast<std::size_t>(index_of(b))];
  }

  /// The maximum element if one exists.
  std::optional<Point> maximum() const {
    for (int j = 0; j < size; ++j) {
      bool top = true;
      for (int i = 0; i < size; ++i)
        if (!le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          top = false;
          break;
        }
      if (top) return point(j);
    }
    return std::nullopt;
  }
};

}  // namespace adelekit
