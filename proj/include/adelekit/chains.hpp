#pragma once

#include <string>
#include <vector>

#include "adelekit/errors.hpp"
#include "adelekit/models.hpp"
#include "adelekit/points.hpp"

namespace adelekit {

/// A chain sigma: [n] -> |X|: a weakly increasing tuple of points in the
/// specialization order. level() = n.
struct Chain {
  std::vector<Point> points;

  int level() const { return static_cast<int>(points.size()) - 1; }

  bool operator==(const Chain&) const = default;

  /// The underlying strictly increasing chain (adjacent duplicates removed).
  Chain support() const {
    Chain s;
    for (const Point& p : points)
      if (s.points.empty() || !(s.points.back() == p)) s.points.push_back(p);
    return s;
  }

  bool is_degenerate() const {
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (points[i] == points[i + 1]) return true;
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) s += ",";
      s += points[i].label;
    }
    return s + ")";
  }

  template <typename M>
  void validate(const M& model) const {
    if (points.empty()) throw bad_input("empty chain");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (!model.leq(points[i], points[i + 1]))
        throw bad_input("chain not weakly increasing: " + str());
  }
};

/// Deletes entry i.
inline Chain face(const Chain& c, int i) {
  if (c.level() < 1) throw bad_input("face of a 0-chain");
  if (i < 0 || i > c.level()) throw bad_input("face index out of range");
  Chain r = c;
  r.points.erase(r.points.begin() + i);
  return r;
}

/// Repeats entry i.
inline Chain degeneracy(const Chain& c, int i) {
  if (i < 0 || i > c.level()) throw bad_input("degeneracy index out of range");
  Chain r = c;
  r.points.insert(r.points.begin() + i, c.points[static_cast<std::size_t>(i)]);
  return r;
}

/// Reindexes along an order-preserving map f: [k] -> [n] given by its values:
/// result_j = c_{f(j)}. Faces and degeneracies are the special cases.
inline Chain reindex(const Chain& c, const std::vector<int>& f) {
  Chain r;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j > 0 && f[j] < f[j - 1]) throw bad_input("reindexing map not order-preserving");
    if (f[j] < 0 || f[j] > c.level()) throw bad_input("reindexing map out of range");
    r.points.push_back(c.points[static_cast<std::size_t>(f[j])]);
  }
  if (r.points.empty()) throw bad_input("empty reindexing map");
  return r;
}

/// The contraction underlying the chain homotopy: keeps the entries where
/// alpha = 0 and pads with eta where alpha = 1. alpha must be order-preserving
/// [n] -> [1], i.e. a block of 0s followed by a block of 1s; eta must bound
/// every point of the chain from above.
template <typename M>
Chain contract_chain(const M& model, const Chain& c, const std::vector<int>& alpha,
                     const Point& eta) {
  if (static_cast<int>(alpha.size()) != c.level() + 1)
    throw bad_input("alpha length must equal chain length");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0 && alpha[i] != 1) throw bad_input("alpha must take values in {0,1}");
    if (i > 0 && alpha[i] < alpha[i - 1]) throw bad_input("alpha must be order-preserving");
  }
  for (const Point& p : c.points)
    if (!model.leq(p, eta)) throw bad_input("eta is not an upper bound of the chain");
  Chain r;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    r.points.push_back(alpha[i] == 0 ? c.points[i] : eta);
  return r;
}

/// All chains of the finite poset at the given level, in canonical order.
inline std::vector<Chain> poset_chains(const FinitePosetModel& m, int level) {
  if (level < 0) throw bad_input("negative level");
  std::vector<Chain> out;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == level + 1) {
      Chain c;
      for (int i : idx) c.points.push_back(m.point(i));
      out.push_back(std::move(c));
      return;
    }
    for (int j = 0; j < m.size; ++j) {
      if (!idx.empty() &&
          !m.le[static_cast<std::size_t>(idx.back())][static_cast<std::size_t>(j)])
        continue;
      idx.push_back(j);
      self(self, depth + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Chain pattern on a one-dimensional model: a weakly increasing tuple in
/// which every closed slot holds the same (unspecified) closed point x and the
/// remaining slots hold eta. Patterns classify components of level-n adele
/// data: (x,...,x) is the integral pattern, (eta,...,eta) the rational one,
/// mixed patterns carry the restricted product.
struct CurvePattern {
  int closed_slots = 0;
  int eta_slots = 0;

  int level() const { return closed_slots + eta_slots - 1; }

  bool all_eta() const { return closed_slots == 0; }
  bool all_closed() const { return eta_slots == 0; }
  bool mixed() const { return closed_slots > 0 && eta_slots > 0; }

  bool operator==(const CurvePattern&) const = default;

  /// Canonical key, e.g. "x,x,eta". Lexicographic order on keys is the
  /// documented component order ("eta..." patterns sort first).
  std::string key() const {
    std::string s;
    for (int i = 0; i < closed_slots; ++i) {
      if (!s.empty()) s += ",";
      s += "x";
    }
    for (int i = 0; i < eta_slots; ++i) {
      if (!s.empty()) s += ",";
      s += "eta";
    }
    return s;
  }

  static CurvePattern parse(const std::string& key) {
    CurvePattern p;
    std::size_t i = 0;
    bool closed_done = false;
    while (i < key.size()) {
      if (key.compare(i, 1, "x") == 0) {
        if (closed_done) throw bad_input("bad pattern key: " + key);
        ++p.closed_slots;
        i += 1;
      } else if (key.compare(i, 3, "eta") == 0) {
        closed_done = true;
        ++p.eta_slots;
        i += 3;
      } else {
        throw bad_input("bad pattern key: " + key);
      }
      if (i < key.size()) {
        if (key[i] != ',') throw bad_input("bad pattern key: " + key);
        ++i;
        if (i == key.size()) throw bad_input("bad pattern key: " + key);
      }
    }
    if (p.level() < 0) throw bad_input("empty pattern key");
    return p;
  }

  /// The chain obtained by substituting the closed point x into the x-slots.
  Chain instantiate(const Point& x, const Point& eta) const {
    Chain c;
    for (int i = 0; i < closed_slots; ++i) c.points.push_back(x);
    for (int i = 0; i < eta_slots; ++i) c.points.push_back(eta);
    return c;
  }

  CurvePattern face(int i) const {
    if (level() < 1) throw bad_input("face of a 0-pattern");
    if (i < 0 || i > level()) throw bad_input("face index out of range");
    CurvePattern r = *this;
    if (i < closed_slots)
      --r.closed_slots;
    else
      --r.eta_slots;
    return r;
  }

  CurvePattern degeneracy(int i) const {
    if (i < 0 || i > level()) throw bad_input("degeneracy index out of range");
    CurvePattern r = *this;
    if (i < closed_slots)
      ++r.closed_slots;
    else
      ++r.eta_slots;
    return r;
  }

  /// All patterns at the given level, in canonical (key) order:
  /// all-eta first, then by increasing number of closed slots.
  static std::vector<CurvePattern> all(int level) {
    if (level < 0) throw bad_input("negative level");
    std::vector<CurvePattern> out;
    for (int closed = 0; closed <= level + 1; ++closed)
      out.push_back(CurvePattern{closed, level + 1 - closed});
    return out;
  }
};

}  // namespace adelekit
