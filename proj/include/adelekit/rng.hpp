#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adelekit/poly.hpp"
#include "adelekit/ratfun.hpp"

namespace adelekit {

/// Deterministic random source for property tests and sampled suites: the
/// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  bool coin() { return uniform(0, 1) == 1; }

  template <ExactField K>
  K scalar() {
    if constexpr (K::characteristic() == 0) {
      return K::from_int(uniform(-4, 4));
    } else {
      return K::from_int(uniform(0, static_cast<std::int64_t>(K::characteristic()) - 1));
    }
  }

  template <ExactField K>
  Poly<K> poly(int max_deg) {
    std::vector<K> c(static_cast<std::size_t>(uniform(0, max_deg)) + 1);
    for (auto& a : c) a = scalar<K>();
    return Poly<K>{std::move(c)};
  }

  template <ExactField K>
  Poly<K> nonzero_poly(int max_deg) {
    for (;;) {
      Poly<K> p = poly<K>(max_deg);
      if (!p.is_zero()) return p;
    }
  }

  template <ExactField K>
  Rat<K> ratfun(int max_deg) {
    return Rat<K>{poly<K>(max_deg), nonzero_poly<K>(max_deg)};
  }

  template <ExactField K>
  Rat<K> nonzero_ratfun(int max_deg) {
    for (;;) {
      Rat<K> f = ratfun<K>(max_deg);
      if (!f.is_zero()) return f;
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adelekit
