#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "adelekit/errors.hpp"
#include "adelekit/fields.hpp"

namespace adelekit {

/// Dense univariate polynomial over an exact field, in the fixed variable t.
/// Invariant: no trailing zero coefficients (zero polynomial has empty c).
template <ExactField K>
struct Poly {
  std::vector<K> c;  // c[i] is the coefficient of t^i

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly one() { return constant(K::one()); }
  static Poly t() { return Poly{{K::zero(), K::one()}}; }
  static Poly constant(const K& a) {
    Poly p;
    if (!a.is_zero()) p.c = {a};
    return p;
  }
  /// c0 + c1 t + ... from integer literals.
  static Poly from_ints(std::initializer_list<std::int64_t> coeffs) {
    std::vector<K> v;
    v.reserve(coeffs.size());
    for (auto n : coeffs) v.push_back(K::from_int(n));
    return Poly{std::move(v)};
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }  // zero -> -1
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == K::one(); }
  K at(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K::zero();
  }
  K lead() const { return c.empty() ? K::zero() : c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == K::one(); }

  bool operator==(const Poly&) const = default;

  Poly operator+(const Poly& o) const {
    std::vector<K> r(std::max(c.size(), o.c.size()), K::zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(static_cast<int>(i)) + o.at(static_cast<int>(i));
    return Poly{std::move(r)};
  }
  Poly operator-(const Poly& o) const {
    std::vector<K> r(std::max(c.size(), o.c.size()), K::zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(static_cast<int>(i)) - o.at(static_cast<int>(i));
    return Poly{std::move(r)};
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<K> r(c.size() + o.c.size() - 1, K::zero());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return Poly{std::move(r)};
  }
  Poly operator*(const K& a) const {
    Poly r = *this;
    for (auto& x : r.c) x *= a;
    r.trim();
    return r;
  }

  /// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly q, r = *this;
    const K dl_inv = d.lead().inv();
    while (!r.is_zero() && r.deg() >= d.deg()) {
      const int shift = r.deg() - d.deg();
      const K coef = r.lead() * dl_inv;
      std::vector<K> mono(static_cast<std::size_t>(shift) + 1, K::zero());
      mono.back() = coef;
      const Poly m{std::move(mono)};
      q = q + m;
      r = r - m * d;
    }
    return {q, r};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& f) const { return f.divmod(*this).second.is_zero(); }

  Poly monic() const {
    if (is_zero()) return zero();
    return *this * lead().inv();
  }

  Poly derivative() const {
    if (c.size() <= 1) return zero();
    std::vector<K> r(c.size() - 1, K::zero());
    for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * K::from_int(static_cast<std::int64_t>(i));
    return Poly{std::move(r)};
  }

  K eval(const K& x) const {
    K acc = K::zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// t^(deg) * f(1/t); used for expansions at infinity.
  Poly reversed() const {
    std::vector<K> r(c.rbegin(), c.rend());
    return Poly{std::move(r)};
  }

  /// Canonical display: terms by decreasing degree, unit coefficients elided.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
      const K a = at(i);
      if (a.is_zero()) continue;
      std::string coef = a.str();
      bool neg = false;
      if (!coef.empty() && coef[0] == '-') {
        neg = true;
        coef = coef.substr(1);
      }
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      if (i == 0) {
        out += coef;
      } else {
        if (coef != "1") out += coef + "*";
        out += (i == 1) ? "t" : "t^" + std::to_string(i);
      }
    }
    return out;
  }

  static Poly parse(const std::string& input) {
    std::string s;
    for (char ch : input)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw bad_input("empty polynomial");
    Poly acc = zero();
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
      bool neg = false;
      if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
      } else if (!first) {
        throw bad_input("bad polynomial: " + input);
      }
      first = false;
      // coefficient literal (may be absent)
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      std::string lit = s.substr(start, i - start);
      K coef = K::one();
      bool have_coef = !lit.empty();
      if (have_coef) coef = K::parse(lit);
      int exp = 0;
      if (i < s.size() && (s[i] == '*' || s[i] == 't')) {
        if (s[i] == '*') {
          ++i;
          if (i >= s.size() || s[i] != 't') throw bad_input("bad polynomial: " + input);
        }
        ++i;  // consume 't'
        exp = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          start = i;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
          if (start == i) throw bad_input("bad polynomial: " + input);
          exp = std::stoi(s.substr(start, i - start));
        }
      } else if (!have_coef) {
        throw bad_input("bad polynomial: " + input);
      }
      if (neg) coef = -coef;
      std::vector<K> mono(static_cast<std::size_t>(exp) + 1, K::zero());
      mono.back() = coef;
      acc = acc + Poly{std::move(mono)};
    }
    return acc;
  }

 private:
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

template <ExactField K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, u, v) with u*a + v*b = g = gcd(a,b), g monic.
template <ExactField K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> u0 = Poly<K>::one(), u1 = Poly<K>::zero();
  Poly<K> v0 = Poly<K>::zero(), v1 = Poly<K>::one();
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    r0 = std::exchange(r1, r2);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const K s = r0.lead().inv();
  return {r0 * s, u0 * s, v0 * s};
}

/// a^e mod m, with a big-integer exponent.
template <ExactField K>
Poly<K> pow_mod(Poly<K> a, BigInt e, const Poly<K>& m) {
  if (m.deg() < 1) throw bad_input("pow_mod modulus must be nonconstant");
  Poly<K> acc = Poly<K>::one() % m;
  a = a % m;
  while (e > 0) {
    if ((e & 1) != 0) acc = (acc * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return acc;
}

template <ExactField K>
Poly<K> poly_pow(Poly<K> a, unsigned e) {
  Poly<K> acc = Poly<K>::one();
  while (e) {
    if (e & 1) acc = acc * a;
    a = a * a;
    e >>= 1;
  }
  return acc;
}

/// Multiplicity of the (nonconstant) factor d in f; f nonzero.
template <ExactField K>
int multiplicity(const Poly<K>& d, Poly<K> f) {
  if (f.is_zero()) throw bad_input("multiplicity in zero polynomial");
  int m = 0;
  for (;;) {
    auto [q, r] = f.divmod(d);
    if (!r.is_zero()) return m;
    f = std::move(q);
    ++m;
  }
}

namespace detail {

inline std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace detail

/// Rabin's irreducibility test over F_p.
template <unsigned P>
bool is_irreducible(const Poly<Fp<P>>& f) {
  using PK = Poly<Fp<P>>;
  const int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  const PK t = PK::t();
  BigInt pn = boost::multiprecision::pow(BigInt(P), static_cast<unsigned>(n));
  if (pow_mod(t, pn, f) != t % f) return false;
  for (unsigned r : detail::prime_divisors(static_cast<unsigned>(n))) {
    BigInt e = boost::multiprecision::pow(BigInt(P), static_cast<unsigned>(n) / r);
    PK g = gcd(pow_mod(t, e, f) - t, f);
    if (g.deg() != 0) return false;
  }
  return true;
}

namespace detail {

template <unsigned P>
Poly<Fp<P>> random_poly_below(int degree, std::mt19937_64& rng) {
  std::vector<Fp<P>> c(static_cast<std::size_t>(degree));
  std::uniform_int_distribution<unsigned> d(0, P - 1);
  for (auto& a : c) a = Fp<P>::from_int(d(rng));
  return Poly<Fp<P>>{std::move(c)};
}

/// Cantor–Zassenhaus equal-degree splitting: f monic squarefree, all
/// irreducible factors of degree d, deg f > d.
template <unsigned P>
void equal_degree_split(const Poly<Fp<P>>& f, int d, std::mt19937_64& rng,
                        std::vector<Poly<Fp<P>>>& out) {
  using PK = Poly<Fp<P>>;
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  PK h;
  for (;;) {
    PK a = random_poly_below<P>(f.deg(), rng);
    if (a.deg() < 1) continue;
    if constexpr (P == 2) {
      PK tr = PK::zero();
      PK pw = a;
      for (int i = 0; i < d; ++i) {
        tr = (tr + pw) % f;
        pw = (pw * pw) % f;
      }
      h = gcd(tr, f);
    } else {
      BigInt e = (boost::multiprecision::pow(BigInt(P), static_cast<unsigned>(d)) - 1) / 2;
      h = gcd(pow_mod(a, e, f) - PK::one(), f);
    }
    if (h.deg() > 0 && h.deg() < f.deg()) break;
  }
  equal_degree_split<P>(h, d, rng, out);
  equal_degree_split<P>(f / h, d, rng, out);
}

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
template <unsigned P>
std::vector<Poly<Fp<P>>> factor_squarefree(Poly<Fp<P>> f, std::mt19937_64& rng) {
  using PK = Poly<Fp<P>>;
  std::vector<PK> out;
  const PK t = PK::t();
  PK h = t;
  for (int d = 1; f.deg() > 0 && 2 * d <= f.deg(); ++d) {
    h = pow_mod(h, BigInt(P), f);
    PK g = gcd(h - t, f);
    if (g.deg() > 0) {
      equal_degree_split<P>(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.deg() > 0) out.push_back(f);
  return out;
}

}  // namespace detail

template <unsigned P>
struct PolyLess {
  bool operator()(const Poly<Fp<P>>& a, const Poly<Fp<P>>& b) const {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
      if (a.at(i).v != b.at(i).v) return a.at(i).v < b.at(i).v;
    return false;
  }
};

/// Complete factorization over F_p into monic irreducibles with multiplicity.
/// Deterministic: the internal equal-degree splitting uses a fixed seed.
template <unsigned P>
std::vector<std::pair<Poly<Fp<P>>, int>> factor(const Poly<Fp<P>>& input) {
  using PK = Poly<Fp<P>>;
  std::map<PK, int, PolyLess<P>> acc;
  std::mt19937_64 rng(0x5eed'ade1ULL);

  auto add = [&acc](const PK& q, int m) { acc[q] += m; };
  // Recursive worker; multiplier tracks p-power substitutions t -> t^p.
  auto work = [&](auto&& self, PK f, int mult) -> void {
    f = f.monic();
    if (f.deg() <= 0) return;
    PK d = f.derivative();
    if (d.is_zero()) {
      // f = h(t^P); over the prime field coefficients are their own p-th roots.
      std::vector<Fp<P>> hc;
      for (int i = 0; i <= f.deg(); i += static_cast<int>(P)) hc.push_back(f.at(i));
      self(self, PK{std::move(hc)}, mult * static_cast<int>(P));
      return;
    }
    PK g = gcd(f, d);
    PK w = (g.deg() == 0) ? f : f / g;
    PK rem = f;
    for (const PK& q : detail::factor_squarefree<P>(w.monic(), rng)) {
      int m = 0;
      while (q.divides(rem)) {
        rem = rem / q;
        ++m;
      }
      add(q, m * mult);
    }
    if (rem.deg() > 0) self(self, rem, mult);
  };
  work(work, input, 1);
  return {acc.begin(), acc.end()};
}

/// All monic irreducibles of the given degree over F_p, in canonical order.
template <unsigned P>
std::vector<Poly<Fp<P>>> monic_irreducibles(int degree) {
  using PK = Poly<Fp<P>>;
  if (degree < 1) throw bad_input("degree must be >= 1");
  std::vector<PK> out;
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= P;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Fp<P>> c(static_cast<std::size_t>(degree) + 1);
    std::uint64_t x = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = Fp<P>::from_int(static_cast<std::int64_t>(x % P));
      x /= P;
    }
    c.back() = Fp<P>::one();
    PK f{std::move(c)};
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

namespace detail {

/// Divisors of |n| (n != 0), by trial division; desk scale only.
inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) throw bad_input("divisors of zero");
  if (n > BigInt("1000000000000"))
    throw unsupported("integer too large for desk-scale divisor enumeration");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rational roots of a nonzero polynomial over Q, each with multiplicity
/// removed from the returned deflated polynomial.
inline std::pair<std::vector<Q>, Poly<Q>> strip_rational_roots(Poly<Q> f) {
  std::vector<Q> roots;
  // Strip t = 0 roots first.
  while (!f.is_zero() && f.at(0).is_zero() && f.deg() >= 1) {
    roots.push_back(Q::zero());
    std::vector<Q> shifted(f.c.begin() + 1, f.c.end());
    f = Poly<Q>{std::move(shifted)};
  }
  if (f.deg() < 1) return {roots, f};
  // Clear denominators: integer polynomial with the same roots.
  BigInt lcm = 1;
  for (const Q& a : f.c) lcm = boost::multiprecision::lcm(lcm, a.den());
  std::vector<BigInt> ic;
  ic.reserve(f.c.size());
  for (const Q& a : f.c) ic.push_back(a.num() * (lcm / a.den()));
  for (;;) {
    if (f.deg() < 1) break;
    bool found = false;
    for (const BigInt& p : divisors(ic.front())) {
      for (const BigInt& q : divisors(ic.back())) {
        for (int sign : {1, -1}) {
          Q cand(sign * p, q);
          if (f.eval(cand).is_zero()) {
            roots.push_back(cand);
            auto [quot, rem] = f.divmod(Poly<Q>{{-cand, Q::one()}});
            f = quot;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    // Refresh the integer model after deflation. Deflating by a nonzero root
    // cannot introduce a zero root, so ic.front() stays nonzero.
    ic.clear();
    lcm = 1;
    for (const Q& a : f.c) lcm = boost::multiprecision::lcm(lcm, a.den());
    for (const Q& a : f.c) ic.push_back(a.num() * (lcm / a.den()));
  }
  return {roots, f};
}

}  // namespace detail

/// Irreducibility over Q, decidable at desk scale for degree <= 3.
inline bool is_irreducible(const Poly<Q>& f) {
  const int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n > 3)
    throw unsupported("irreducibility over Q implemented for degree <= 3 only");
  auto [roots, rest] = detail::strip_rational_roots(f);
  return roots.empty() && rest.deg() == n;
}

/// Factorization over Q: complete whenever every irreducible factor has
/// degree <= 3 (linear factors found exactly; residual factors certified
/// irreducible); otherwise raises `unsupported`.
inline std::vector<std::pair<Poly<Q>, int>> factor(const Poly<Q>& input) {
  Poly<Q> f = input.monic();
  if (f.deg() <= 0) return {};
  std::vector<std::pair<Poly<Q>, int>> out;
  auto [roots, rest] = detail::strip_rational_roots(f);
  std::map<std::string, std::pair<Poly<Q>, int>> acc;
  for (const Q& r : roots) {
    Poly<Q> lin{{-r, Q::one()}};
    auto& slot = acc[lin.str()];
    if (slot.second == 0) slot.first = lin;
    slot.second += 1;
  }
  if (rest.deg() > 0) {
    // No rational roots remain; a squarefree check plus degree cap certifies.
    if (rest.deg() > 3) {
      Poly<Q> g = gcd(rest, rest.derivative());
      if (g.deg() > 0) {
        // Repeated factor: recurse on the squarefree parts.
        for (auto& [q, m] : factor(rest / g)) {
          int tot = multiplicity(q, rest);
          auto& slot = acc[q.str()];
          if (slot.second == 0) slot.first = q;
          slot.second += tot;
        }
      } else {
        throw unsupported(
            "factorization over Q implemented only when all irreducible factors "
            "have degree <= 3");
      }
    } else {
      auto& slot = acc[rest.str()];
      if (slot.second == 0) slot.first = rest;
      slot.second += 1;
    }
  }
  for (auto& [_, pr] : acc) out.push_back(pr);
  return out;
}

}  // namespace adelekit
