#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adelekit/fields.hpp"
#include "adelekit/linalg.hpp"
#include "adelekit/poly.hpp"
#include "adelekit/ratfun.hpp"

using namespace adelekit;

using F5 = Fp<5>;
using P5 = Poly<F5>;
using PQ = Poly<Q>;

namespace {

template <unsigned P>
Poly<Fp<P>> random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<unsigned> dc(0, P - 1);
  const int d = dd(rng);
  std::vector<Fp<P>> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Fp<P>::from_int(dc(rng));
  return Poly<Fp<P>>{std::move(c)};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  for (unsigned a = 0; a < 5; ++a)
    for (unsigned b = 0; b < 5; ++b) {
      CHECK(F5::from_int(a) + F5::from_int(b) == F5::from_int((a + b) % 5));
      CHECK(F5::from_int(a) * F5::from_int(b) == F5::from_int(a * b % 5));
    }
  for (unsigned a = 1; a < 5; ++a) {
    CHECK(F5::from_int(a) * F5::from_int(a).inv() == F5::one());
  }
  CHECK_THROWS_AS(F5::zero().inv(), division_by_zero);
  CHECK(F5::from_int(-3) == F5::from_int(2));
  CHECK(F5::parse("7") == F5::from_int(2));
  CHECK(F5::from_int(3).str() == "3");
}

TEST_CASE("rational scalar arithmetic") {
  Q a(2, 3), b(1, 6);
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/9");
  CHECK((a - a).is_zero());
  CHECK(a.inv().str() == "3/2");
  CHECK_THROWS_AS(Q::zero().inv(), division_by_zero);
  CHECK(Q::parse("-4/6").str() == "-2/3");
  CHECK(Q::parse("17").str() == "17");
  CHECK_THROWS_AS(Q::parse("1/0"), division_by_zero);
  CHECK_THROWS_AS(Q::parse("x"), bad_input);
}

TEST_CASE("polynomial parse/print canonical round trip") {
  for (const char* s : {"0", "1", "t", "t^2+1", "t^3+2*t^2+4*t+1", "2*t", "4*t^3+t"}) {
    CHECK(P5::parse(s).str() == s);
  }
  for (const char* s : {"t^2-1/2*t+3", "-t+1", "-1/3"}) {
    CHECK(PQ::parse(s).str() == s);
  }
  CHECK(P5::parse("6*t+7").str() == "t+2");  // reduction mod 5
  CHECK_THROWS_AS(P5::parse("t+"), bad_input);
  CHECK_THROWS_AS(P5::parse("**"), bad_input);
  CHECK_THROWS_AS(P5::parse(""), bad_input);
}

TEST_CASE("polynomial division and gcd properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    P5 a = random_poly<5>(rng, 6);
    P5 b = random_poly<5>(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
    P5 g = gcd(a, b);
    if (!a.is_zero()) {
      CHECK(g.divides(a));
      CHECK(g.divides(b));
      auto [gg, u, v] = ext_gcd(a, b);
      CHECK(gg == g);
      CHECK(u * a + v * b == gg);
    }
  }
}

TEST_CASE("derivative and evaluation") {
  P5 f = P5::parse("t^3+2*t+4");
  CHECK(f.derivative().str() == "3*t^2+2");
  CHECK(f.eval(F5::from_int(1)) == F5::from_int(2));  // 1+2+4 = 7 = 2
  PQ g = PQ::parse("t^2-1/2*t+3");
  CHECK(g.eval(Q(2, 1)).str() == "6");  // 4 - 1 + 3
}

TEST_CASE("irreducibility over F5") {
  CHECK(is_irreducible(P5::parse("t^2+2")));   // -2 = 3 is a non-square mod 5
  CHECK(!is_irreducible(P5::parse("t^2+1")));  // (t+2)(t+3)
  CHECK(is_irreducible(P5::parse("t+4")));
  CHECK(!is_irreducible(P5::parse("4")));
}

TEST_CASE("monic irreducible counts match the necklace formula") {
  // #irreducibles of degree d over F_p: d=1 -> p, d=2 -> (p^2-p)/2, d=3 -> (p^3-p)/3.
  CHECK(monic_irreducibles<5>(1).size() == 5);
  CHECK(monic_irreducibles<5>(2).size() == 10);
  CHECK(monic_irreducibles<5>(3).size() == 40);
  CHECK(monic_irreducibles<2>(4).size() == 3);
}

TEST_CASE("product of irreducibles of degree dividing n equals t^(p^n) - t") {
  SECTION("F2, n = 4") {
    Poly<Fp<2>> prod = Poly<Fp<2>>::one();
    for (int d : {1, 2, 4})
      for (const auto& f : monic_irreducibles<2>(d)) prod = prod * f;
    Poly<Fp<2>> target = Poly<Fp<2>>::zero();
    {
      std::vector<Fp<2>> c(17, Fp<2>::zero());
      c[16] = Fp<2>::one();
      c[1] = Fp<2>::one();  // t^16 - t = t^16 + t in char 2
      target = Poly<Fp<2>>{std::move(c)};
    }
    CHECK(prod == target);
  }
  SECTION("F5, n = 2") {
    P5 prod = P5::one();
    for (int d : {1, 2})
      for (const auto& f : monic_irreducibles<5>(d)) prod = prod * f;
    std::vector<F5> c(26, F5::zero());
    c[25] = F5::one();
    c[1] = -F5::one();
    CHECK(prod == P5{std::move(c)});
  }
}

TEST_CASE("factorization over F5") {
  auto fs = factor(P5::parse("t^2+1"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first.str() == "t+2");
  CHECK(fs[1].first.str() == "t+3");

  P5 f = P5::parse("t^2+2");
  P5 g = (f * f) * P5::t();
  auto fs2 = factor(g);
  REQUIRE(fs2.size() == 2);
  CHECK(fs2[0].first.str() == "t");
  CHECK(fs2[0].second == 1);
  CHECK(fs2[1].first.str() == "t^2+2");
  CHECK(fs2[1].second == 2);

  // p-th power: (t+1)^5 = t^5 + 1 in char 5.
  auto fs3 = factor(P5::parse("t^5+1"));
  REQUIRE(fs3.size() == 1);
  CHECK(fs3[0].first.str() == "t+1");
  CHECK(fs3[0].second == 5);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    P5 h = random_poly<5>(rng, 6);
    if (h.deg() < 1) continue;
    P5 prod = P5::constant(h.lead());
    for (const auto& [q, m] : factor(h)) {
      CHECK(is_irreducible(q));
      prod = prod * poly_pow(q, static_cast<unsigned>(m));
    }
    CHECK(prod == h);
  }
}

TEST_CASE("irreducibility and factorization over Q") {
  CHECK(is_irreducible(PQ::parse("t^2+1")));
  CHECK(is_irreducible(PQ::parse("t^3-2")));
  CHECK(!is_irreducible(PQ::parse("t^2-1")));
  CHECK(!is_irreducible(PQ::parse("t^2-1/4")));
  CHECK_THROWS_AS(is_irreducible(PQ::parse("t^4+1")), unsupported);

  auto fs = factor(PQ::parse("t^2-1"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first.str() == "t+1");
  CHECK(fs[1].first.str() == "t-1");

  PQ f = PQ::parse("t^2+1");
  PQ g = f * f * PQ::parse("t-3");
  auto fs2 = factor(g);
  REQUIRE(fs2.size() == 2);
  bool saw_quad = false, saw_lin = false;
  for (const auto& [q, m] : fs2) {
    if (q.str() == "t^2+1") {
      saw_quad = true;
      CHECK(m == 2);
    }
    if (q.str() == "t-3") {
      saw_lin = true;
      CHECK(m == 1);
    }
  }
  CHECK(saw_quad);
  CHECK(saw_lin);
  // Squarefree with a degree-4 irreducible-over-Q-but-rootless factor: refuse.
  CHECK_THROWS_AS(factor(PQ::parse("t^4+4")), unsupported);
}

TEST_CASE("rational functions reduce to lowest terms") {
  // t^2+1 = (t+2)(t+3) over F5, so the fraction reduces.
  Rat<F5> r{P5::parse("t^2+1"), P5::parse("t+2")};
  CHECK(r.is_polynomial());
  CHECK(r.num.str() == "t+3");

  Rat<F5> s{P5::one(), P5::parse("2*t+2")};
  CHECK(s.den.str() == "t+1");  // monic denominator
  CHECK(s.num.str() == "3");    // 1/2 = 3 mod 5

  Rat<F5> x = Rat<F5>::t();
  Rat<F5> inv_x = x.inv();
  CHECK((x * inv_x).is_one());
  CHECK((x + (-x)).is_zero());
  CHECK_THROWS_AS(Rat<F5>::zero().inv(), division_by_zero);
}

TEST_CASE("valuations of rational functions") {
  Rat<F5> f{P5::parse("t^2"), P5::parse("t+1")};
  CHECK(f.valuation(P5::t()) == 2);
  CHECK(f.valuation(P5::parse("t+1")) == -1);
  CHECK(f.valuation(P5::parse("t+2")) == 0);
  CHECK(f.valuation_at_infinity() == -1);
  CHECK(Rat<F5>::one().valuation(P5::t()) == 0);
  CHECK_THROWS_AS(Rat<F5>::zero().valuation(P5::t()), bad_input);
  // v(fg) = v(f) + v(g), v(f+g) >= min(v f, v g)
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    P5 n1 = random_poly<5>(rng, 4), d1 = random_poly<5>(rng, 3);
    P5 n2 = random_poly<5>(rng, 4), d2 = random_poly<5>(rng, 3);
    if (n1.is_zero() || d1.is_zero() || n2.is_zero() || d2.is_zero()) continue;
    Rat<F5> a{n1, d1}, b{n2, d2};
    P5 pi = P5::t();
    CHECK((a * b).valuation(pi) == a.valuation(pi) + b.valuation(pi));
    if (!(a + b).is_zero()) CHECK((a + b).valuation(pi) >= std::min(a.valuation(pi), b.valuation(pi)));
  }
}

TEST_CASE("exact linear algebra over F5") {
  Mat<F5> m(3, 3);
  int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = F5::from_int(vals[i][j]);
  CHECK(m.rank() == 2);  // row 2 = 2 * row 1
  CHECK(m.det().is_zero());
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 1);
  for (const auto& v : ker) {
    auto mv = m.apply(v);
    for (const auto& x : mv) CHECK(x.is_zero());
  }
}

TEST_CASE("exact linear algebra over Q") {
  Mat<Q> m(2, 2);
  m.at(0, 0) = Q(1, 2);
  m.at(0, 1) = Q(1, 3);
  m.at(1, 0) = Q(1, 4);
  m.at(1, 1) = Q(1, 5);
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((m * *inv) == Mat<Q>::identity(2));
  CHECK(m.det() == Q(1, 60));  // 1/10 - 1/12 = 1/60

  auto sol = m.solve({Q(1, 1), Q(0, 1)});
  REQUIRE(sol.has_value());
  auto chk = m.apply(*sol);
  CHECK(chk[0] == Q(1, 1));
  CHECK(chk[1] == Q::zero());
}

TEST_CASE("solve reports inconsistency") {
  Mat<Q> m(2, 1);
  m.at(0, 0) = Q(1, 1);
  m.at(1, 0) = Q(1, 1);
  CHECK_FALSE(m.solve({Q(1, 1), Q(2, 1)}).has_value());
  CHECK(m.solve({Q(3, 1), Q(3, 1)}).has_value());
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Mat<F5> a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a.at(i, j) = F5::from_int(d(rng));
        b.at(i, j) = F5::from_int(d(rng));
      }
    CHECK((a * b).det() == a.det() * b.det());
  }
}
