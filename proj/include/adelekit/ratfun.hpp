#pragma once

#include <string>
#include <utility>

#include "adelekit/errors.hpp"
#include "adelekit/poly.hpp"

namespace adelekit {

/// Rational function over the base field: num/den in lowest terms, den monic.
template <ExactField K>
struct Rat {
  Poly<K> num;
  Poly<K> den = Poly<K>::one();

  Rat() = default;
  Rat(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  explicit Rat(Poly<K> n) : num(std::move(n)) {}
  explicit Rat(const K& a) : num(Poly<K>::constant(a)) {}

  static Rat zero() { return Rat{}; }
  static Rat one() { return Rat{Poly<K>::one()}; }
  static Rat t() { return Rat{Poly<K>::t()}; }
  static Rat from_int(std::int64_t n) { return Rat{Poly<K>::constant(K::from_int(n))}; }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_polynomial() const { return den.is_one(); }
  bool is_constant() const { return num.deg() <= 0 && den.is_one(); }

  bool operator==(const Rat&) const = default;

  Rat operator+(const Rat& o) const { return Rat{num * o.den + o.num * den, den * o.den}; }
  Rat operator-(const Rat& o) const { return Rat{num * o.den - o.num * den, den * o.den}; }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }
  Rat operator*(const Rat& o) const { return Rat{num * o.num, den * o.den}; }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw division_by_zero("rational function division by zero");
    return Rat{num * o.den, den * o.num};
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  Rat inv() const {
    if (is_zero()) throw division_by_zero("inverse of zero rational function");
    return Rat{den, num};
  }

  /// Order of vanishing along the monic irreducible pi (negative for poles).
  int valuation(const Poly<K>& pi) const {
    if (is_zero()) throw bad_input("valuation of zero is +infinity");
    return multiplicity(pi, num) - multiplicity(pi, den);
  }

  /// Valuation at infinity of P^1: deg(den) - deg(num).
  int valuation_at_infinity() const {
    if (is_zero()) throw bad_input("valuation of zero is +infinity");
    return den.deg() - num.deg();
  }

  std::string str() const {
    if (is_polynomial()) return num.str();
    std::string n = num.str();
    if (num.deg() > 0) n = "(" + n + ")";
    return n + "/(" + den.str() + ")";
  }

 private:
  void reduce() {
    if (den.is_zero()) throw division_by_zero("zero denominator");
    if (num.is_zero()) {
      den = Poly<K>::one();
      return;
    }
    Poly<K> g = gcd(num, den);
    if (g.deg() > 0) {
      num = num / g;
      den = den / g;
    }
    const K scale = den.lead().inv();
    num = num * scale;
    den = den * scale;
  }
};

}  // namespace adelekit
