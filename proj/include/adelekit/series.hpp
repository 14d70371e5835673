#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adelekit/errors.hpp"
#include "adelekit/points.hpp"
#include "adelekit/poly.hpp"
#include "adelekit/ratfun.hpp"

namespace adelekit {

/// Exactly zero: every digit vanishes.
struct PlusInfinity {
  friend bool operator==(PlusInfinity, PlusInfinity) { return true; }
};

/// Indistinguishable from zero below the precision horizon: v >= bound, and
/// no digit up to the bound is nonzero. Raising precision may sharpen this.
struct AtLeast {
  int bound = 0;
  friend bool operator==(AtLeast, AtLeast) = default;
};

using Valuation = std::variant<int, PlusInfinity, AtLeast>;

inline bool valuation_is_finite(const Valuation& v) { return std::holds_alternative<int>(v); }

inline int valuation_value(const Valuation& v) {
  if (!valuation_is_finite(v)) throw bad_input("valuation is not finite");
  return std::get<int>(v);
}

inline std::string valuation_str(const Valuation& v) {
  if (std::holds_alternative<int>(v)) return std::to_string(std::get<int>(v));
  if (std::holds_alternative<PlusInfinity>(v)) return "+infinity";
  return ">=" + std::to_string(std::get<AtLeast>(v).bound) + " (precision-limited)";
}

/// Residue-field arithmetic kappa(x) = K[t]/(modulus) for a monic irreducible
/// modulus. All elements are polynomials of degree < deg(modulus).
template <ExactField K>
struct ResidueCtx {
  Poly<K> modulus;

  explicit ResidueCtx(Poly<K> m) : modulus(std::move(m)) {
    if (modulus.deg() < 1 || !modulus.is_monic())
      throw bad_input("residue modulus must be monic of positive degree");
  }

  Poly<K> reduce(const Poly<K>& a) const { return a % modulus; }
  Poly<K> add(const Poly<K>& a, const Poly<K>& b) const { return reduce(a + b); }
  Poly<K> sub(const Poly<K>& a, const Poly<K>& b) const { return reduce(a - b); }
  Poly<K> mul(const Poly<K>& a, const Poly<K>& b) const { return reduce(a * b); }
  Poly<K> neg(const Poly<K>& a) const { return reduce(Poly<K>{} - a); }

  Poly<K> inv(const Poly<K>& a) const {
    const Poly<K> r = reduce(a);
    if (r.is_zero()) throw division_by_zero("inverse of zero in residue field");
    auto [g, u, v] = ext_gcd(r, modulus);
    if (g.deg() != 0) throw bad_input("residue modulus is not irreducible");
    // g is monic of degree 0, hence 1; u*r = 1 mod modulus.
    return reduce(u);
  }
};

/// Residue context for a point on the projective line: the label polynomial at
/// a finite closed point, and t (standing for the uniformizer 1/t) at inf.
template <ExactField K>
ResidueCtx<K> residue_context(const Point& x) {
  if (x.is_generic()) throw bad_input("no residue context at the generic point");
  if (x.label == "inf") return ResidueCtx<K>(Poly<K>::parse("t"));
  return ResidueCtx<K>(Poly<K>::parse(x.label));
}

namespace detail {

/// The low `count` pi-adic digits of a polynomial: repeated divmod by pi.
template <ExactField K>
std::vector<Poly<K>> extract_digits(Poly<K> u, const Poly<K>& pi, int count) {
  std::vector<Poly<K>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    auto [q, digit] = u.divmod(pi);
    out.push_back(std::move(digit));
    u = std::move(q);
  }
  return out;
}

}  // namespace detail

/// Truncated Laurent expansion at a point: sum_{i=val}^{prec-1} coeffs[i-val] *
/// pi^i + O(pi^prec), with digits in the residue field kappa(x). Invariants:
/// coeffs.size() == prec - val; the leading digit is nonzero unless the element
/// is indistinguishable from zero (then coeffs is empty and val == prec).
template <ExactField K>
class LocalSeries {
 public:
  Point point;
  Poly<K> modulus;
  int val = 0;
  std::vector<Poly<K>> coeffs;
  int prec = 0;

  LocalSeries(Point x, Poly<K> mod, int v, std::vector<Poly<K>> digits, int p)
      : point(std::move(x)), modulus(std::move(mod)), val(v), coeffs(std::move(digits)), prec(p) {
    if (prec - val != static_cast<int>(coeffs.size()))
      throw bad_input("series digit count must equal prec - val");
    ResidueCtx<K> ctx(modulus);
    for (auto& c : coeffs) c = ctx.reduce(c);
    normalize();
  }

  static LocalSeries zero(const Point& x, int prec) {
    return LocalSeries(x, residue_context<K>(x).modulus, prec, {}, prec);
  }

  static LocalSeries from_digits(const Point& x, int v, std::vector<Poly<K>> digits, int prec) {
    return LocalSeries(x, residue_context<K>(x).modulus, v, std::move(digits), prec);
  }

  ResidueCtx<K> ctx() const { return ResidueCtx<K>(modulus); }

  /// True when the leading digit is a known nonzero residue.
  bool known_nonzero() const { return !coeffs.empty(); }

  int relative_precision() const { return prec - val; }

  Valuation valuation() const {
    if (known_nonzero()) return val;
    return AtLeast{prec};
  }

  /// The digit at exponent k (zero if outside the stored range; caller must
  /// keep k below prec).
  Poly<K> digit(int k) const {
    if (k < val || k >= prec) return Poly<K>{};
    return coeffs[static_cast<std::size_t>(k - val)];
  }

  /// Forget digits at and above new_prec.
  LocalSeries truncated(int new_prec) const {
    if (new_prec >= prec) return *this;
    if (new_prec <= val) return LocalSeries(point, modulus, new_prec, {}, new_prec);
    std::vector<Poly<K>> d(coeffs.begin(), coeffs.begin() + (new_prec - val));
    return LocalSeries(point, modulus, val, std::move(d), new_prec);
  }

  /// Multiply by pi^k (exact: shifts the window).
  LocalSeries shifted(int k) const {
    return LocalSeries(point, modulus, val + k, coeffs, prec + k);
  }

  friend LocalSeries operator+(const LocalSeries& a, const LocalSeries& b) {
    a.require_same_point(b);
    const int p = std::min(a.prec, b.prec);
    const int lo = std::min(std::min(a.val, b.val), p);
    ResidueCtx<K> ctx(a.modulus);
    std::vector<Poly<K>> d;
    for (int k = lo; k < p; ++k) d.push_back(ctx.add(a.digit(k), b.digit(k)));
    return LocalSeries(a.point, a.modulus, lo, std::move(d), p);
  }

  friend LocalSeries operator-(const LocalSeries& a, const LocalSeries& b) { return a + (-b); }

  LocalSeries operator-() const {
    ResidueCtx<K> c(modulus);
    std::vector<Poly<K>> d;
    for (const auto& a : coeffs) d.push_back(c.neg(a));
    return LocalSeries(point, modulus, val, std::move(d), prec);
  }

  /// The unit part as a plain polynomial: sum_i lift(coeffs[i]) * pi^i. The
  /// windowed ring O-hat/pi^rel is exactly K[t]/pi^rel, so ring operations are
  /// done on these lifts and digits are re-extracted (digit representatives
  /// of degree < deg pi are not closed under multiplication, so a digitwise
  /// convolution would drop the carries between digits).
  Poly<K> unit_lift() const {
    Poly<K> u, pik = Poly<K>::one();
    for (const auto& d : coeffs) {
      u = u + d * pik;
      pik = pik * modulus;
    }
    return u;
  }

  friend LocalSeries operator*(const LocalSeries& a, const LocalSeries& b) {
    a.require_same_point(b);
    // Known digits: the shorter relative window of the two factors.
    const int rel = std::min(a.relative_precision(), b.relative_precision());
    const int v = a.val + b.val;
    auto d = detail::extract_digits(a.unit_lift() * b.unit_lift(), a.modulus, rel);
    return LocalSeries(a.point, a.modulus, v, std::move(d), v + rel);
  }

  /// Invert a series whose leading digit is known nonzero. Relative precision
  /// is preserved: invert(a) * a = 1 + O(pi^relative_precision).
  LocalSeries invert() const {
    if (!known_nonzero())
      throw insufficient_precision("inverting an element indistinguishable from zero below pi^" +
                                   std::to_string(prec));
    const int rel = relative_precision();
    const Poly<K> window = poly_pow(modulus, static_cast<unsigned>(rel));
    auto [g, u, w] = ext_gcd(unit_lift() % window, window);
    if (g.deg() != 0) throw kernel_error("unit part not invertible in its window");
    // ext_gcd returns monic g, so g = 1 and u * unit = 1 mod pi^rel.
    auto d = detail::extract_digits(u % window, modulus, rel);
    return LocalSeries(point, modulus, -val, std::move(d), -val + rel);
  }

  friend bool operator==(const LocalSeries& a, const LocalSeries& b) {
    return a.point == b.point && a.modulus == b.modulus && a.val == b.val && a.prec == b.prec &&
           a.coeffs == b.coeffs;
  }

  /// True when a and b have no distinguishable digit on the common window.
  friend bool agree(const LocalSeries& a, const LocalSeries& b) {
    return !(a - b).known_nonzero();
  }

  std::string str() const {
    if (coeffs.empty()) return "O(pi^" + std::to_string(prec) + ")";
    std::string out;
    for (int k = val; k < prec; ++k) {
      const Poly<K> d = digit(k);
      if (d.is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string ds = d.str();
      const bool composite = ds.find('+') != std::string::npos ||
                             ds.rfind('-', 0) != std::string::npos ||
                             ds.find('-') != std::string::npos;
      const bool is_one = (d.deg() == 0 && d.at(0) == K::one());
      if (k == 0) {
        out += composite ? "(" + ds + ")" : ds;
      } else {
        std::string pi_pow = (k == 1) ? "pi" : "pi^" + std::to_string(k);
        if (is_one)
          out += pi_pow;
        else
          out += (composite ? "(" + ds + ")" : ds) + "*" + pi_pow;
      }
    }
    if (out.empty()) out = "0";  // cannot happen after normalize; defensive
    return out + " + O(pi^" + std::to_string(prec) + ")";
  }

 private:
  void normalize() {
    while (!coeffs.empty() && coeffs.front().is_zero()) {
      coeffs.erase(coeffs.begin());
      ++val;
    }
    if (coeffs.empty()) val = prec;
  }

  void require_same_point(const LocalSeries& b) const {
    if (!(point == b.point) || !(modulus == b.modulus))
      throw bad_input("series at different points cannot be combined");
  }
};

/// Exact valuation of a rational function at a point of the projective line.
template <ExactField K>
Valuation valuation_of(const Rat<K>& f, const Point& x) {
  if (x.is_generic()) throw bad_input("no valuation at the generic point");
  if (f.num.is_zero()) return PlusInfinity{};
  if (x.label == "inf") return f.valuation_at_infinity();
  const Poly<K> pi = Poly<K>::parse(x.label);
  return multiplicity(pi, f.num) - multiplicity(pi, f.den);
}

template <ExactField K>
Valuation valuation_of(const LocalSeries<K>& s, const Point&) {
  return s.valuation();
}

/// The residue class of f in kappa(x), defined when v_x(f) >= 0.
template <ExactField K>
Poly<K> residue_of(const Rat<K>& f, const Point& x) {
  const Valuation v = valuation_of(f, x);
  if (std::holds_alternative<PlusInfinity>(v)) return Poly<K>{};
  if (valuation_value(v) < 0) throw bad_input("residue of a function with a pole");
  if (valuation_value(v) > 0) return Poly<K>{};
  if (x.label == "inf") {
    // Ratio of leading coefficients, as a constant.
    return Poly<K>{{f.num.lead() * f.den.lead().inv()}};
  }
  ResidueCtx<K> ctx = residue_context<K>(x);
  return ctx.mul(ctx.reduce(f.num), ctx.inv(ctx.reduce(f.den)));
}

namespace detail {

/// Digit extraction for u0/d0 in K[t] with both prime to pi: writes the
/// pi-adic expansion with digits in K[t]/(pi), exactly, one digit at a time.
template <ExactField K>
std::vector<Poly<K>> expand_unit_digits(Poly<K> r, const Poly<K>& d0, const Poly<K>& pi,
                                        int digits) {
  ResidueCtx<K> ctx(pi);
  const Poly<K> d0_inv = ctx.inv(ctx.reduce(d0));
  std::vector<Poly<K>> out;
  out.reserve(static_cast<std::size_t>(digits));
  for (int i = 0; i < digits; ++i) {
    const Poly<K> a = ctx.mul(ctx.reduce(r), d0_inv);
    out.push_back(a);
    auto [q, rem] = (r - a * d0).divmod(pi);
    if (!rem.is_zero()) throw kernel_error("digit extraction lost exactness");
    r = std::move(q);
  }
  return out;
}

}  // namespace detail

/// Expand a rational function into its truncated Laurent series at a point,
/// known modulo pi^N. Exact below the horizon: re-expansion at higher N agrees
/// on every shared digit.
template <ExactField K>
LocalSeries<K> expand(const Rat<K>& f, const Point& x, int N) {
  if (x.is_generic()) throw bad_input("expansion at the generic point is the function itself");
  if (f.num.is_zero()) return LocalSeries<K>::zero(x, N);

  Poly<K> pi, num = f.num, den = f.den;
  int v = 0;
  if (x.label == "inf") {
    v = f.den.deg() - f.num.deg();
    pi = Poly<K>::parse("t");
    num = f.num.reversed();
    den = f.den.reversed();
  } else {
    pi = Poly<K>::parse(x.label);
    const int vn = multiplicity(pi, num);
    const int vd = multiplicity(pi, den);
    v = vn - vd;
    for (int i = 0; i < vn; ++i) num = num / pi;
    for (int i = 0; i < vd; ++i) den = den / pi;
  }
  if (N <= v)
    throw insufficient_precision("no significant digit of a valuation-" + std::to_string(v) +
                                 " element fits below pi^" + std::to_string(N));
  auto digits = detail::expand_unit_digits(num, den, pi, N - v);
  return LocalSeries<K>(x, pi, v, std::move(digits), N);
}

/// Expansion with respect to an arbitrary uniformizer given as a rational
/// function with v_x(pi_alt) = 1. Slower than expand (works in exact rational
/// arithmetic) but independent of the canonical uniformizer choice. The digits
/// depend on the uniformizer; the leading exponent (the valuation) does not.
template <ExactField K>
LocalSeries<K> expand_wrt(const Rat<K>& f, const Point& x, const Rat<K>& pi_alt, int N) {
  if (x.is_generic()) throw bad_input("expansion at the generic point is the function itself");
  {
    const Valuation vp = valuation_of(pi_alt, x);
    if (!valuation_is_finite(vp) || valuation_value(vp) != 1)
      throw bad_input("alternative uniformizer must have valuation 1");
  }
  const Poly<K> modulus = residue_context<K>(x).modulus;
  if (f.num.is_zero()) return LocalSeries<K>::zero(x, N);

  const int v = valuation_value(valuation_of(f, x));
  if (N <= v)
    throw insufficient_precision("no significant digit of a valuation-" + std::to_string(v) +
                                 " element fits below pi^" + std::to_string(N));

  // Remainder r always satisfies v_x(r) >= current exponent; subtracting the
  // lifted digit times pi_alt^k raises the valuation strictly.
  std::vector<Poly<K>> digits(static_cast<std::size_t>(N - v));
  Rat<K> r = f;
  Rat<K> pik = Rat<K>::one();
  for (int i = 0; i < v; ++i) pik = pik * pi_alt;
  for (int i = 0; i > v; --i) pik = pik / pi_alt;
  for (int k = v; k < N; ++k) {
    Poly<K> digit;
    if (!r.num.is_zero()) {
      const Valuation vr = valuation_of(r, x);
      if (valuation_is_finite(vr) && valuation_value(vr) == k) {
        digit = residue_of(r / pik, x);
        r = r - Rat<K>(digit) * pik;
      }
    }
    digits[static_cast<std::size_t>(k - v)] = digit;
    pik = pik * pi_alt;
  }
  return LocalSeries<K>(x, modulus, v, std::move(digits), N);
}

}  // namespace adelekit
