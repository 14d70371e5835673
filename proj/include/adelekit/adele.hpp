#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adelekit/chains.hpp"
#include "adelekit/config.hpp"
#include "adelekit/divisors.hpp"
#include "adelekit/rng.hpp"
#include "adelekit/series.hpp"
#include "adelekit/sheaves.hpp"

namespace adelekit {

/// A local component value: exact rational function where possible, truncated
/// series where completion is essential. Conversions are explicit.
template <ExactField K>
using LocalValue = std::variant<Rat<K>, LocalSeries<K>>;

template <ExactField K>
bool lv_is_rat(const LocalValue<K>& v) {
  return std::holds_alternative<Rat<K>>(v);
}

template <ExactField K>
Valuation lv_valuation(const LocalValue<K>& v, const Point& x) {
  if (lv_is_rat(v)) return valuation_of(std::get<Rat<K>>(v), x);
  return std::get<LocalSeries<K>>(v).valuation();
}

/// Is the value integral (valuation >= bound)? Precision-honest.
template <ExactField K>
Tri lv_at_least(const LocalValue<K>& v, const Point& x, int bound) {
  const Valuation val = lv_valuation(v, x);
  if (std::holds_alternative<PlusInfinity>(val)) return Tri::yes;
  if (std::holds_alternative<int>(val))
    return std::get<int>(val) >= bound ? Tri::yes : Tri::no;
  return std::get<AtLeast>(val).bound >= bound ? Tri::yes : Tri::unknown;
}

template <ExactField K>
LocalValue<K> lv_neg(const LocalValue<K>& v) {
  if (lv_is_rat(v)) return LocalValue<K>{-std::get<Rat<K>>(v)};
  return LocalValue<K>{-std::get<LocalSeries<K>>(v)};
}

template <ExactField K>
LocalValue<K> lv_add(const LocalValue<K>& a, const LocalValue<K>& b, const Point& x) {
  if (lv_is_rat(a) && lv_is_rat(b))
    return LocalValue<K>{std::get<Rat<K>>(a) + std::get<Rat<K>>(b)};
  // Promote the rational side to a series at the series' own precision.
  auto promote_add = [&x](const Rat<K>& r, const LocalSeries<K>& s) -> LocalValue<K> {
    if (r.is_zero()) return LocalValue<K>{s};
    const int v = valuation_value(valuation_of(r, x));
    if (v >= s.prec) return LocalValue<K>{s};  // r vanishes below the horizon
    return LocalValue<K>{expand(r, x, s.prec) + s};
  };
  if (lv_is_rat(a)) return promote_add(std::get<Rat<K>>(a), std::get<LocalSeries<K>>(b));
  if (lv_is_rat(b)) return promote_add(std::get<Rat<K>>(b), std::get<LocalSeries<K>>(a));
  return LocalValue<K>{std::get<LocalSeries<K>>(a) + std::get<LocalSeries<K>>(b)};
}

template <ExactField K>
LocalValue<K> lv_mul(const LocalValue<K>& a, const LocalValue<K>& b, const Point& x) {
  if (lv_is_rat(a) && lv_is_rat(b))
    return LocalValue<K>{std::get<Rat<K>>(a) * std::get<Rat<K>>(b)};
  auto promote_mul = [&x](const Rat<K>& r, const LocalSeries<K>& s) -> LocalValue<K> {
    if (r.is_zero()) return LocalValue<K>{Rat<K>::zero()};
    const int v = valuation_value(valuation_of(r, x));
    const int rel = s.relative_precision();
    if (rel == 0) return LocalValue<K>{LocalSeries<K>::zero(x, s.prec + v)};
    return LocalValue<K>{expand(r, x, v + rel) * s};
  };
  if (lv_is_rat(a)) return promote_mul(std::get<Rat<K>>(a), std::get<LocalSeries<K>>(b));
  if (lv_is_rat(b)) return promote_mul(std::get<Rat<K>>(b), std::get<LocalSeries<K>>(a));
  return LocalValue<K>{std::get<LocalSeries<K>>(a) * std::get<LocalSeries<K>>(b)};
}

/// Equality of component values. Exact when both sides are rational; with a
/// series involved, a visible nonzero digit refutes and agreement below the
/// horizon stays indeterminate.
template <ExactField K>
Tri lv_equal(const LocalValue<K>& a, const LocalValue<K>& b, const Point& x) {
  if (a == b) return Tri::yes;  // identical presented data, including precision
  if (lv_is_rat(a) && lv_is_rat(b)) return Tri::no;
  const LocalValue<K> d = lv_add(a, lv_neg(b), x);
  if (lv_is_rat(d)) return std::get<Rat<K>>(d).is_zero() ? Tri::yes : Tri::no;
  return std::get<LocalSeries<K>>(d).known_nonzero() ? Tri::no : Tri::unknown;
}

template <ExactField K>
std::string lv_str(const LocalValue<K>& v) {
  if (lv_is_rat(v)) return std::get<Rat<K>>(v).str();
  return std::get<LocalSeries<K>>(v).str();
}

/// Component data for a pattern ranging over all closed points: finitely many
/// exceptional values plus a symbolic default (the component at every other
/// point x is the expansion of `tail` at x).
template <ExactField K>
struct ProductData {
  std::map<Point, LocalValue<K>> exceptions;
  Rat<K> tail;

  bool operator==(const ProductData&) const = default;

  /// The component at x as a value (exception, or the exact tail).
  LocalValue<K> value_at(const Point& x) const {
    auto it = exceptions.find(x);
    if (it != exceptions.end()) return it->second;
    return LocalValue<K>{tail};
  }
};

/// An element of the level-n adele ring of a curve model, presented per chain
/// pattern: all-eta patterns carry a rational function, patterns with closed
/// slots carry ProductData. The data layout is permissive (any value may be
/// stored in any slot); integrality of all-closed slots and module bounds are
/// validated on demand.
template <ExactField K>
struct Adele {
  int level = 0;
  std::map<std::string, std::variant<Rat<K>, ProductData<K>>> components;

  using Component = std::variant<Rat<K>, ProductData<K>>;

  static Adele zero(int level) { return constant_adele(level, Rat<K>::zero()); }
  static Adele one(int level) { return constant_adele(level, Rat<K>::one()); }

  static Adele constant_adele(int level, const Rat<K>& c) {
    if (c.den.deg() != 0) throw bad_input("constant_adele needs a polynomial-free denominator");
    Adele a;
    a.level = level;
    for (const auto& p : CurvePattern::all(level)) {
      if (p.all_eta())
        a.components[p.key()] = Component{c};
      else
        a.components[p.key()] = Component{ProductData<K>{{}, c}};
    }
    return a;
  }

  bool operator==(const Adele&) const = default;

  const Component& at(const std::string& key) const {
    auto it = components.find(key);
    if (it == components.end()) throw bad_input("no component for pattern " + key);
    return it->second;
  }
  Component& at(const std::string& key) {
    auto it = components.find(key);
    if (it == components.end()) throw bad_input("no component for pattern " + key);
    return it->second;
  }

  const Rat<K>& eta_component(const std::string& key) const {
    const Component& c = at(key);
    if (!std::holds_alternative<Rat<K>>(c))
      throw bad_input("pattern " + key + " is not an eta-chain component");
    return std::get<Rat<K>>(c);
  }
  const ProductData<K>& product_component(const std::string& key) const {
    const Component& c = at(key);
    if (!std::holds_alternative<ProductData<K>>(c))
      throw bad_input("pattern " + key + " has no point slots");
    return std::get<ProductData<K>>(c);
  }
  ProductData<K>& product_component(const std::string& key) {
    Component& c = at(key);
    if (!std::holds_alternative<ProductData<K>>(c))
      throw bad_input("pattern " + key + " has no point slots");
    return std::get<ProductData<K>>(c);
  }

  /// Shape check: the component set matches the level's pattern list exactly.
  void validate_shape() const {
    const auto expected = CurvePattern::all(level);
    if (components.size() != expected.size())
      throw bad_input("component count does not match the level");
    for (const auto& p : expected) {
      auto it = components.find(p.key());
      if (it == components.end()) throw bad_input("missing component for pattern " + p.key());
      if (p.all_eta() != std::holds_alternative<Rat<K>>(it->second))
        throw bad_input("component shape mismatch for pattern " + p.key());
    }
  }
};

namespace detail {

/// The closed points where f has a pole (including inf), with prepared
/// expansions at the given precision.
template <ExactField K>
std::map<Point, LocalValue<K>> pole_exceptions(const Rat<K>& f, int prec) {
  std::map<Point, LocalValue<K>> out;
  if (f.is_zero()) return out;
  for (const auto& [q, m] : factor(f.den)) {
    const Point x = Point::closed(q.str(), q.deg());
    out.emplace(x, LocalValue<K>{expand(f, x, prec)});
  }
  if (f.valuation_at_infinity() < 0) {
    const Point inf = Point::closed("inf", 1);
    out.emplace(inf, LocalValue<K>{expand(f, inf, prec)});
  }
  return out;
}

template <ExactField K>
ProductData<K> diag_product_data(const Rat<K>& f, int prec) {
  return ProductData<K>{pole_exceptions(f, prec), f};
}

}  // namespace detail

/// Diagonal embedding of a rational function: every component is the
/// appropriate expansion or copy of f; the exceptions are exactly its poles.
template <ExactField K>
Adele<K> diag(const Rat<K>& f, int level, int prec = default_precision()) {
  Adele<K> a;
  a.level = level;
  for (const auto& p : CurvePattern::all(level)) {
    if (p.all_eta())
      a.components[p.key()] = typename Adele<K>::Component{f};
    else
      a.components[p.key()] = typename Adele<K>::Component{detail::diag_product_data(f, prec)};
  }
  return a;
}

namespace detail {

/// Drop rational-valued exceptions that coincide with the tail (keeps the
/// exception list close to "exactly the non-default set" without guessing
/// about series-backed entries).
template <ExactField K>
void prune_exceptions(ProductData<K>& pd) {
  for (auto it = pd.exceptions.begin(); it != pd.exceptions.end();) {
    if (lv_is_rat(it->second) && std::get<Rat<K>>(it->second) == pd.tail)
      it = pd.exceptions.erase(it);
    else
      ++it;
  }
}

template <ExactField K>
ProductData<K> pd_combine(const ProductData<K>& a, const ProductData<K>& b, bool multiply) {
  ProductData<K> out;
  out.tail = multiply ? a.tail * b.tail : a.tail + b.tail;
  std::set<Point> pts;
  for (const auto& [x, v] : a.exceptions) pts.insert(x);
  for (const auto& [x, v] : b.exceptions) pts.insert(x);
  for (const Point& x : pts) {
    LocalValue<K> va = a.value_at(x), vb = b.value_at(x);
    out.exceptions.emplace(x, multiply ? lv_mul(va, vb, x) : lv_add(va, vb, x));
  }
  prune_exceptions(out);
  return out;
}

}  // namespace detail

template <ExactField K>
Adele<K> operator+(const Adele<K>& a, const Adele<K>& b) {
  if (a.level != b.level) throw window_mismatch("adele levels differ");
  Adele<K> out;
  out.level = a.level;
  for (const auto& [key, ca] : a.components) {
    const auto& cb = b.at(key);
    if (std::holds_alternative<Rat<K>>(ca))
      out.components[key] = typename Adele<K>::Component{std::get<Rat<K>>(ca) + std::get<Rat<K>>(cb)};
    else
      out.components[key] = typename Adele<K>::Component{
          detail::pd_combine(std::get<ProductData<K>>(ca), std::get<ProductData<K>>(cb), false)};
  }
  return out;
}

template <ExactField K>
Adele<K> operator-(const Adele<K>& a) {
  Adele<K> out;
  out.level = a.level;
  for (const auto& [key, c] : a.components) {
    if (std::holds_alternative<Rat<K>>(c))
      out.components[key] = typename Adele<K>::Component{-std::get<Rat<K>>(c)};
    else {
      const auto& pd = std::get<ProductData<K>>(c);
      ProductData<K> npd;
      npd.tail = -pd.tail;
      for (const auto& [x, v] : pd.exceptions) npd.exceptions.emplace(x, lv_neg(v));
      out.components[key] = typename Adele<K>::Component{std::move(npd)};
    }
  }
  return out;
}

template <ExactField K>
Adele<K> operator-(const Adele<K>& a, const Adele<K>& b) {
  return a + (-b);
}

template <ExactField K>
Adele<K> operator*(const Adele<K>& a, const Adele<K>& b) {
  if (a.level != b.level) throw window_mismatch("adele levels differ");
  Adele<K> out;
  out.level = a.level;
  for (const auto& [key, ca] : a.components) {
    const auto& cb = b.at(key);
    if (std::holds_alternative<Rat<K>>(ca))
      out.components[key] = typename Adele<K>::Component{std::get<Rat<K>>(ca) * std::get<Rat<K>>(cb)};
    else
      out.components[key] = typename Adele<K>::Component{
          detail::pd_combine(std::get<ProductData<K>>(ca), std::get<ProductData<K>>(cb), true)};
  }
  return out;
}

/// Coface map: the component of coface_i(a) at a pattern p is the image of
/// a's component at face_i(p) under the canonical inclusion. Orientation:
/// coface_0 at level 0 embeds the rational factor diagonally into the
/// restricted product; coface_1 embeds the integral factor.
template <ExactField K>
Adele<K> coface(const Adele<K>& a, int i, int prec = default_precision()) {
  if (i < 0 || i > a.level + 1) throw bad_input("coface index out of range");
  Adele<K> out;
  out.level = a.level + 1;
  for (const auto& p : CurvePattern::all(out.level)) {
    const CurvePattern q = p.face(i);
    const auto& src = a.at(q.key());
    if (p.all_eta()) {
      out.components[p.key()] = typename Adele<K>::Component{std::get<Rat<K>>(src)};
    } else if (std::holds_alternative<Rat<K>>(src)) {
      // All-eta source landing in a slotted pattern: diagonal materialization.
      out.components[p.key()] =
          typename Adele<K>::Component{detail::diag_product_data(std::get<Rat<K>>(src), prec)};
    } else {
      out.components[p.key()] = typename Adele<K>::Component{std::get<ProductData<K>>(src)};
    }
  }
  return out;
}

/// Codegeneracy map: the component at p is a's component at degeneracy_i(p).
template <ExactField K>
Adele<K> codegeneracy(const Adele<K>& a, int i) {
  if (a.level < 1) throw bad_input("codegeneracy needs level >= 1");
  if (i < 0 || i > a.level - 1) throw bad_input("codegeneracy index out of range");
  Adele<K> out;
  out.level = a.level - 1;
  for (const auto& p : CurvePattern::all(out.level)) {
    const CurvePattern q = p.degeneracy(i);
    out.components[p.key()] = a.at(q.key());
  }
  return out;
}

/// Faithful componentwise equality: exact on rational-backed data,
/// indeterminate only where a series horizon hides the answer.
template <ExactField K>
Tri adele_equal(const Adele<K>& a, const Adele<K>& b) {
  if (a.level != b.level) return Tri::no;
  Tri acc = Tri::yes;
  for (const auto& [key, ca] : a.components) {
    const auto& cb = b.at(key);
    if (std::holds_alternative<Rat<K>>(ca)) {
      if (!(std::get<Rat<K>>(ca) == std::get<Rat<K>>(cb))) return Tri::no;
      continue;
    }
    const auto& pa = std::get<ProductData<K>>(ca);
    const auto& pb = std::get<ProductData<K>>(cb);
    // Tails govern all but finitely many points: a mismatch is a definite
    // inequality at infinitely many of them.
    if (!(pa.tail == pb.tail)) return Tri::no;
    std::set<Point> pts;
    for (const auto& [x, v] : pa.exceptions) pts.insert(x);
    for (const auto& [x, v] : pb.exceptions) pts.insert(x);
    for (const Point& x : pts) acc = tri_and(acc, lv_equal(pa.value_at(x), pb.value_at(x), x));
    if (acc == Tri::no) return Tri::no;
  }
  return acc;
}

/// Restriction to the open complement of a finite closed set S: components
/// indexed by chains meeting S are dropped.
template <ExactField K>
Adele<K> restrict_to(const Adele<K>& a, const std::set<Point>& removed) {
  for (const Point& x : removed)
    if (x.is_generic()) throw bad_input("cannot remove the generic point");
  Adele<K> out = a;
  for (auto& [key, c] : out.components)
    if (std::holds_alternative<ProductData<K>>(c)) {
      auto& pd = std::get<ProductData<K>>(c);
      for (const Point& x : removed) pd.exceptions.erase(x);
    }
  return out;
}

/// Extension by zero from the open complement of S back to the whole curve:
/// the S-indexed components are set to 0. A linear one-sided inverse to
/// restriction.
template <ExactField K>
Adele<K> extend_by_zero(const Adele<K>& a, const std::set<Point>& removed) {
  for (const Point& x : removed)
    if (x.is_generic()) throw bad_input("cannot remove the generic point");
  Adele<K> out = a;
  for (auto& [key, c] : out.components)
    if (std::holds_alternative<ProductData<K>>(c)) {
      auto& pd = std::get<ProductData<K>>(c);
      for (const Point& x : removed)
        pd.exceptions.insert_or_assign(x, LocalValue<K>{Rat<K>::zero()});
    }
  return out;
}

/// One reported defect of an integrality / module-bound check.
struct SlotViolation {
  std::string pattern;
  Point point;
  std::string reason;
  Tri verdict = Tri::no;  // no = definite violation, unknown = precision-limited
};

/// Check a level-n element against the membership bounds of a sheaf:
/// - O(D): all-closed slots need v_x >= -D_x at every point; mixed slots need
///   it at all but the finitely many listed exceptions (automatic here).
/// - skyscraper: every component off the support must vanish; on-support
///   values must be integral jets.
/// Returns the violations; empty with all checks certain means valid.
template <ExactField K>
std::vector<SlotViolation> module_violations(const Adele<K>& a, const Sheaf& sheaf) {
  std::vector<SlotViolation> out;
  auto record = [&out](const std::string& pattern, const Point& x, const std::string& why,
                       Tri verdict) {
    out.push_back(SlotViolation{pattern, x, why, verdict});
  };

  for (const auto& [key, c] : a.components) {
    const CurvePattern p = CurvePattern::parse(key);
    if (p.all_eta()) {
      if (sheaf.is_skyscraper() && !std::get<Rat<K>>(c).is_zero())
        record(key, Point::generic_point(), "generic stalk of a skyscraper is zero", Tri::no);
      continue;
    }
    const auto& pd = std::get<ProductData<K>>(c);

    if (sheaf.is_skyscraper()) {
      if (!pd.tail.is_zero())
        record(key, Point::generic_point(), "skyscraper components vanish off the support",
               Tri::no);
      for (const auto& [x, v] : pd.exceptions) {
        if (x == sheaf.sky_point) {
          const Tri ok = lv_at_least(v, x, 0);
          if (ok != Tri::yes) record(key, x, "jet at the support must be integral", ok);
        } else {
          const Tri zero = lv_equal(v, LocalValue<K>{Rat<K>::zero()}, x);
          if (zero != Tri::yes)
            record(key, x, "component off the skyscraper support must vanish", zero);
        }
      }
      continue;
    }

    // Line bundle O(D): pointwise bound v_x >= -D_x.
    const Divisor& D = sheaf.twist;
    auto check_point = [&](const Point& x, const LocalValue<K>& v) {
      const Tri ok = lv_at_least(v, x, -D.at(x));
      if (ok != Tri::yes)
        record(key, x, "valuation below the twist bound -" + std::to_string(D.at(x)), ok);
    };
    if (p.all_closed()) {
      for (const auto& [x, v] : pd.exceptions) check_point(x, v);
      if (!pd.tail.is_zero()) {
        // The tail governs every non-exception point: each of its poles (and
        // each support point of D with a negative multiplicity) must satisfy
        // the bound or be overridden by an exception.
        for (const auto& [x, v] : detail::pole_exceptions(pd.tail, 2))
          if (!pd.exceptions.count(x)) check_point(x, LocalValue<K>{pd.tail});
        for (const auto& [x, n] : D.mult)
          if (n < 0 && !pd.exceptions.count(x)) check_point(x, LocalValue<K>{pd.tail});
      } else {
        for (const auto& [x, n] : D.mult)
          if (n < 0 && !pd.exceptions.count(x)) check_point(x, LocalValue<K>{pd.tail});
      }
    }
    // Mixed slots: the restricted-product condition asks the bound at all but
    // finitely many points; a finite exception list satisfies it by shape.
  }
  return out;
}

/// Summary verdict of module_violations.
template <ExactField K>
Tri module_valid(const Adele<K>& a, const Sheaf& sheaf) {
  Tri acc = Tri::yes;
  for (const auto& v : module_violations(a, sheaf)) acc = tri_and(acc, v.verdict);
  return acc;
}

/// An adelic element tagged with the sheaf whose bounds it must satisfy.
template <ExactField K>
struct AdeleModuleElt {
  Sheaf sheaf;
  Adele<K> data;
};

/// Wrap an adele as an O(D)- or skyscraper-module element, checking bounds.
/// A definite violation is an error; precision-limited checks pass through
/// (the caller can re-validate at higher precision).
template <ExactField K>
AdeleModuleElt<K> module_adele(const Sheaf& sheaf, const Adele<K>& data) {
  auto vs = module_violations(data, sheaf);
  for (const auto& v : vs)
    if (v.verdict == Tri::no)
      throw bad_input("module bound violated at pattern " + v.pattern + ", point " +
                      v.point.label + ": " + v.reason);
  return AdeleModuleElt<K>{sheaf, data};
}

/// The adelization of a skyscraper jet: identical finite data at every level.
template <ExactField K>
AdeleModuleElt<K> skyscraper_adele(const Point& x, int length, const LocalSeries<K>& jet,
                                   int level) {
  const Sheaf sheaf = Sheaf::skyscraper(x, length);
  if (!(jet.point == x)) throw bad_input("jet attached to the wrong point");
  if (lv_at_least(LocalValue<K>{jet}, x, 0) == Tri::no)
    throw bad_input("skyscraper jet must be integral");
  Adele<K> a = Adele<K>::zero(level);
  for (auto& [key, c] : a.components)
    if (std::holds_alternative<ProductData<K>>(c))
      std::get<ProductData<K>>(c).exceptions.emplace(x, LocalValue<K>{jet.truncated(length)});
  return AdeleModuleElt<K>{sheaf, a};
}

/// Split a restricted-product component into a global rational function
/// carrying all the pole parts plus an integral remainder: pd = diag(f) + o
/// with o integral everywhere (within the precision window). This is the
/// constructive form of the exactness of [O -> F (+) O-hat -> A] at the
/// restricted product, and the engine that reduces degree-1 cocycle data to
/// integral form.
template <ExactField K>
std::pair<Rat<K>, ProductData<K>> split_off_poles(const ProductData<K>& pd,
                                                  int prec = default_precision()) {
  Rat<K> f = Rat<K>::zero();
  for (const auto& [x, v] : pd.exceptions) {
    // Principal part of the value at x, lifted to an exact rational function.
    int lead_val = 0;
    const Valuation val = lv_valuation(v, x);
    if (std::holds_alternative<int>(val))
      lead_val = std::get<int>(val);
    else
      continue;  // indistinguishable from zero (or exactly zero): no pole part
    if (lead_val >= 0) continue;

    const LocalSeries<K> s =
        lv_is_rat(v) ? expand(std::get<Rat<K>>(v), x, 0) : std::get<LocalSeries<K>>(v);
    const bool at_inf = x.label == "inf";
    const Rat<K> pi = at_inf ? Rat<K>::one() / Rat<K>::t() : Rat<K>{Poly<K>::parse(x.label)};
    Rat<K> pp = Rat<K>::zero();
    Rat<K> pik = Rat<K>::one();
    for (int i = 0; i > s.val; --i) pik = pik / pi;
    for (int k = s.val; k < 0 && k < s.prec; ++k) {
      pp = pp + Rat<K>{s.digit(k)} * pik;
      pik = pik * pi;
    }
    f = f + pp;
  }

  ProductData<K> rest;
  rest.tail = pd.tail - f;
  for (const auto& [x, v] : pd.exceptions)
    rest.exceptions.emplace(
        x, lv_add(v, LocalValue<K>{-f}, x));
  detail::prune_exceptions(rest);
  return {f, rest};
}

/// A well-formed random adele: tails with materialized poles, extra random
/// exceptions (series-backed), integral all-closed slots.
template <ExactField K>
Adele<K> random_adele(Rng& rng, int level, const std::vector<Point>& pool,
                      int prec = default_precision()) {
  if (pool.empty()) throw bad_input("random_adele needs candidate points");
  Adele<K> a;
  a.level = level;
  for (const auto& p : CurvePattern::all(level)) {
    if (p.all_eta()) {
      a.components[p.key()] = typename Adele<K>::Component{rng.ratfun<K>(2)};
      continue;
    }
    ProductData<K> pd;
    if (p.all_closed()) {
      pd.tail = Rat<K>{Poly<K>::constant(rng.scalar<K>())};
      const int extras = static_cast<int>(rng.uniform(0, 2));
      for (int e = 0; e < extras; ++e) {
        const Point x = pool[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
        const int v = static_cast<int>(rng.uniform(0, 2));
        std::vector<Poly<K>> digits;
        const Poly<K> mod = residue_context<K>(x).modulus;
        for (int i = v; i < prec; ++i) {
          std::vector<K> cs(static_cast<std::size_t>(mod.deg()));
          for (auto& cc : cs) cc = rng.scalar<K>();
          digits.push_back(Poly<K>{std::move(cs)});
        }
        pd.exceptions.insert_or_assign(x, LocalValue<K>{LocalSeries<K>(x, mod, v, digits, prec)});
      }
    } else {
      const Rat<K> tail = rng.ratfun<K>(2);
      pd = detail::diag_product_data(tail, prec);
      const int extras = static_cast<int>(rng.uniform(0, 2));
      for (int e = 0; e < extras; ++e) {
        const Point x = pool[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
        const int v = static_cast<int>(rng.uniform(-3, 3));
        std::vector<Poly<K>> digits;
        const Poly<K> mod = residue_context<K>(x).modulus;
        for (int i = v; i < prec; ++i) {
          std::vector<K> cs(static_cast<std::size_t>(mod.deg()));
          for (auto& cc : cs) cc = rng.scalar<K>();
          digits.push_back(Poly<K>{std::move(cs)});
        }
        pd.exceptions.insert_or_assign(x, LocalValue<K>{LocalSeries<K>(x, mod, v, digits, prec)});
      }
    }
    a.components[p.key()] = typename Adele<K>::Component{std::move(pd)};
  }
  return a;
}

}  // namespace adelekit
