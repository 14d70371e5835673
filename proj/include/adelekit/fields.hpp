#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>

#include "adelekit/errors.hpp"

namespace adelekit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact field scalar: value semantics, total equality, no precision loss.
template <typename K>
concept ExactField = std::regular<K> && requires(K a, K b, const std::string& s) {
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { K::from_int(std::int64_t{}) } -> std::same_as<K>;
  { K::parse(s) } -> std::same_as<K>;
  { K::characteristic() } -> std::convertible_to<std::uint64_t>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

/// Prime field F_p for a small compile-time prime p.
template <unsigned P>
struct Fp {
  static_assert(P >= 2 && P < (1u << 15), "small primes only");
  unsigned v = 0;

  constexpr Fp() = default;
  constexpr explicit Fp(std::int64_t n)
      : v(static_cast<unsigned>(((n % static_cast<std::int64_t>(P)) + P) % P)) {}

  static constexpr Fp zero() { return Fp{}; }
  static constexpr Fp one() { return Fp{1}; }
  static constexpr Fp from_int(std::int64_t n) { return Fp{n}; }
  static constexpr std::uint64_t characteristic() { return P; }

  bool is_zero() const { return v == 0; }
  bool operator==(const Fp&) const = default;

  Fp operator+(Fp o) const { return raw((v + o.v) % P); }
  Fp operator-(Fp o) const { return raw((v + P - o.v) % P); }
  Fp operator-() const { return raw(v == 0 ? 0 : P - v); }
  Fp operator*(Fp o) const {
    return raw(static_cast<unsigned>((std::uint64_t{v} * o.v) % P));
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inv() const {
    if (v == 0) throw division_by_zero();
    // Fermat: v^(P-2) mod P.
    std::uint64_t base = v, acc = 1;
    unsigned e = P - 2;
    while (e) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return raw(static_cast<unsigned>(acc));
  }
  Fp operator/(Fp o) const { return *this * o.inv(); }

  std::string str() const { return std::to_string(v); }

  static Fp parse(const std::string& s) {
    if (s.empty()) throw bad_input("empty scalar");
    std::size_t pos = 0;
    long long n = 0;
    try {
      n = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw bad_input("bad F_p scalar: " + s);
    }
    if (pos != s.size()) throw bad_input("bad F_p scalar: " + s);
    return Fp{n};
  }

 private:
  static constexpr Fp raw(unsigned x) {
    Fp r;
    r.v = x;
    return r;
  }
};

/// The rational numbers, exact.
struct Q {
  BigRat v;

  Q() = default;
  explicit Q(std::int64_t n) : v(n) {}
  explicit Q(BigRat r) : v(std::move(r)) {}
  Q(BigInt num, BigInt den) {
    // The two-argument BigRat constructor requires a positive denominator.
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v = BigRat(std::move(num), std::move(den));
  }

  static Q zero() { return Q{}; }
  static Q one() { return Q{1}; }
  static Q from_int(std::int64_t n) { return Q{n}; }
  static constexpr std::uint64_t characteristic() { return 0; }

  bool is_zero() const { return v.is_zero(); }
  bool operator==(const Q&) const = default;

  Q operator+(const Q& o) const { return Q{BigRat(v + o.v)}; }
  Q operator-(const Q& o) const { return Q{BigRat(v - o.v)}; }
  Q operator-() const { return Q{BigRat(-v)}; }
  Q operator*(const Q& o) const { return Q{BigRat(v * o.v)}; }
  Q& operator+=(const Q& o) { v += o.v; return *this; }
  Q& operator-=(const Q& o) { v -= o.v; return *this; }
  Q& operator*=(const Q& o) { v *= o.v; return *this; }

  Q inv() const {
    if (is_zero()) throw division_by_zero();
    BigInt n = numerator(v), d = denominator(v);
    if (n < 0) {
      n = -n;
      d = -d;
    }
    return Q{BigRat(std::move(d), std::move(n))};
  }
  Q operator/(const Q& o) const { return *this * o.inv(); }

  BigInt num() const { return numerator(v); }
  BigInt den() const { return denominator(v); }

  /// "a" or "a/b", lowest terms, b > 0.
  std::string str() const {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
  }

  static Q parse(const std::string& s) {
    if (s.empty()) throw bad_input("empty scalar");
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Q{BigRat(BigInt(s))};
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw division_by_zero("zero denominator in scalar: " + s);
      return Q{std::move(num), std::move(den)};
    } catch (const division_by_zero&) {
      throw;
    } catch (const std::exception&) {
      throw bad_input("bad rational scalar: " + s);
    }
  }
};

static_assert(ExactField<Fp<5>>);
static_assert(ExactField<Q>);

}  // namespace adelekit
