#pragma once

#include <map>
#include <string>

#include "adelekit/errors.hpp"
#include "adelekit/points.hpp"
#include "adelekit/ratfun.hpp"
#include "adelekit/series.hpp"

namespace adelekit {

/// Finite formal sum of closed points with integer multiplicities.
struct Divisor {
  std::map<Point, int> mult;  // invariant: no zero multiplicities, closed points only

  Divisor() = default;

  static Divisor single(const Point& x, int n) {
    Divisor d;
    d.set(x, n);
    return d;
  }

  void set(const Point& x, int n) {
    if (x.is_generic()) throw bad_input("divisors are supported on closed points");
    if (n == 0)
      mult.erase(x);
    else
      mult[x] = n;
  }

  int at(const Point& x) const {
    auto it = mult.find(x);
    return it == mult.end() ? 0 : it->second;
  }

  bool is_zero() const { return mult.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [x, n] : mult) d += n * x.residue_degree;
    return d;
  }

  Divisor operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [x, n] : o.mult) r.set(x, r.at(x) + n);
    return r;
  }
  Divisor operator-(const Divisor& o) const { return *this + (-o); }
  Divisor operator-() const {
    Divisor r;
    for (const auto& [x, n] : mult) r.mult[x] = -n;
    return r;
  }
  Divisor operator*(int k) const {
    Divisor r;
    if (k != 0)
      for (const auto& [x, n] : mult) r.mult[x] = k * n;
    return r;
  }

  /// max(D, 0) pointwise: the effective part.
  Divisor positive_part() const {
    Divisor r;
    for (const auto& [x, n] : mult)
      if (n > 0) r.mult[x] = n;
    return r;
  }

  bool operator==(const Divisor&) const = default;

  std::string str() const {
    if (mult.empty()) return "0";
    std::string out;
    for (const auto& [x, n] : mult) {
      if (!out.empty()) out += n >= 0 ? " + " : " - ";
      else if (n < 0) out += "-";
      const int a = n >= 0 ? n : -n;
      if (a != 1) out += std::to_string(a);
      out += "[" + x.label + "]";
    }
    return out;
  }
};

/// The divisor of zeros and poles of a nonzero rational function on the
/// projective line (finite points from factorization, plus the point at
/// infinity). Its degree is always 0.
template <ExactField K>
Divisor divisor_of(const Rat<K>& f) {
  if (f.is_zero()) throw bad_input("the zero function has no divisor");
  Divisor d;
  for (const auto& [p, m] : factor(f.num.monic()))
    d.set(Point::closed(p.str(), p.deg()), d.at(Point::closed(p.str(), p.deg())) + m);
  for (const auto& [p, m] : factor(f.den.monic()))
    d.set(Point::closed(p.str(), p.deg()), d.at(Point::closed(p.str(), p.deg())) - m);
  const Point inf = Point::closed("inf", 1);
  d.set(inf, f.valuation_at_infinity());
  return d;
}

}  // namespace adelekit
