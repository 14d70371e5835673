#include <catch2/catch_amalgamated.hpp>

#include "adelekit/adele.hpp"
#include "adelekit/models.hpp"

using namespace adelekit;

using F5 = Fp<5>;
using P5 = Poly<F5>;
using R5 = Rat<F5>;
using A5 = Adele<F5>;

namespace {

const std::vector<Point> kPool = {Point::closed("t", 1), Point::closed("t+1", 1),
                                  Point::closed("t+2", 1), Point::closed("t^2+2", 2),
                                  Point::closed("inf", 1)};

constexpr int kPrec = 8;

A5 sample(Rng& rng, int level) { return random_adele<F5>(rng, level, kPool, kPrec); }

}  // namespace

TEST_CASE("diagonal adele of 1/t") {
  const R5 f = R5::one() / R5::t();
  const A5 a = diag(f, 1);
  CHECK(a.eta_component("eta,eta") == f);
  const auto& mixed = a.product_component("x,eta");
  CHECK(mixed.tail == f);
  REQUIRE(mixed.exceptions.size() == 1);
  const auto& [x, v] = *mixed.exceptions.begin();
  CHECK(x == Point::closed("t", 1));
  REQUIRE(!lv_is_rat(v));
  const auto& s = std::get<LocalSeries<F5>>(v);
  CHECK(s.val == -1);
  CHECK(s.digit(-1) == P5::one());
  CHECK(s.prec == default_precision());

  CHECK(diag(R5::zero(), 3) == A5::zero(3));
  a.validate_shape();
}

TEST_CASE("diagonal embedding is multiplicative") {
  Rng rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    const R5 f = rng.ratfun<F5>(2), g = rng.ratfun<F5>(2);
    for (int level = 0; level <= 2; ++level) {
      CHECK(adele_equal(diag(f, level, kPrec) * diag(g, level, kPrec), diag(f * g, level, kPrec)) !=
            Tri::no);
      CHECK(adele_equal(diag(f, level, kPrec) + diag(g, level, kPrec), diag(f + g, level, kPrec)) !=
            Tri::no);
    }
  }
}

TEST_CASE("coface orientation at the restricted-product slot") {
  Rng rng(1002);
  const A5 a = sample(rng, 0);
  const A5 d0 = coface(a, 0, kPrec), d1 = coface(a, 1, kPrec);
  // One coface embeds the rational factor diagonally, the other includes the
  // integral factor canonically.
  CHECK(d0.product_component("x,eta") == detail::diag_product_data(a.eta_component("eta"), kPrec));
  CHECK(d1.product_component("x,eta") == a.product_component("x"));
  // Degenerate slots: both cofaces copy the matching degenerate data.
  CHECK(d0.eta_component("eta,eta") == a.eta_component("eta"));
  CHECK(d1.eta_component("eta,eta") == a.eta_component("eta"));
  CHECK(d0.product_component("x,x") == a.product_component("x"));
  CHECK(d1.product_component("x,x") == a.product_component("x"));

  CHECK_THROWS_AS(coface(a, 2), bad_input);
  CHECK_THROWS_AS(codegeneracy(a, 0), bad_input);
}

TEST_CASE("one-truncation identities") {
  Rng rng(1003);
  for (int trial = 0; trial < 5; ++trial) {
    const A5 a = sample(rng, 0);
    CHECK(codegeneracy(coface(a, 0, kPrec), 0) == a);
    CHECK(codegeneracy(coface(a, 1, kPrec), 0) == a);
    CHECK(coface(coface(a, 0, kPrec), 1, kPrec) == coface(coface(a, 0, kPrec), 0, kPrec));
  }
}

TEST_CASE("cosimplicial identities hold exactly on random adeles") {
  Rng rng(1004);
  for (int trial = 0; trial < 3; ++trial) {
    // Coface-coface: d^j d^i = d^i d^{j-1} for i < j.
    for (int n = 0; n <= 1; ++n) {
      const A5 a = sample(rng, n);
      for (int j = 1; j <= n + 2; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(coface(coface(a, i, kPrec), j, kPrec) ==
                coface(coface(a, j - 1, kPrec), i, kPrec));
    }
    // Codegeneracy-codegeneracy: s^j s^i = s^i s^{j+1} for i <= j.
    for (int n = 2; n <= 3; ++n) {
      const A5 a = sample(rng, n);
      for (int j = 0; j <= n - 2; ++j)
        for (int i = 0; i <= j; ++i)
          CHECK(codegeneracy(codegeneracy(a, i), j) == codegeneracy(codegeneracy(a, j + 1), i));
    }
    // Mixed relations through one coface and one codegeneracy.
    for (int n = 0; n <= 2; ++n) {
      const A5 a = sample(rng, n);
      for (int i = 0; i <= n + 1; ++i)
        for (int j = 0; j <= n; ++j) {
          const A5 lhs = codegeneracy(coface(a, i, kPrec), j);
          if (i == j || i == j + 1) {
            CHECK(lhs == a);
          } else if (i < j) {
            CHECK(lhs == coface(codegeneracy(a, j - 1), i, kPrec));
          } else {
            CHECK(lhs == coface(codegeneracy(a, j), i - 1, kPrec));
          }
        }
    }
  }
}

TEST_CASE("equality is faithful and precision-honest") {
  const Point x0 = Point::closed("t", 1);
  const R5 f{P5::parse("t+1"), P5::parse("t^2+2")};
  CHECK(adele_equal(diag(f, 1, kPrec), diag(f, 1, kPrec)) == Tri::yes);
  CHECK(adele_equal(diag(f, 1, kPrec), diag(f + R5::one(), 1, kPrec)) == Tri::no);

  // Same tail, an extra series exception agreeing with the tail's expansion:
  // indeterminate below the horizon.
  A5 a = diag(R5::one(), 1, kPrec);
  A5 b = a;
  b.product_component("x,eta").exceptions.emplace(
      x0, LocalValue<F5>{expand(R5::one(), x0, 4)});
  CHECK(adele_equal(a, b) == Tri::unknown);

  // A visible digit difference refutes.
  A5 c = a;
  c.product_component("x,eta").exceptions.emplace(
      x0, LocalValue<F5>{expand(R5::t() + R5::one(), x0, 4)});
  CHECK(adele_equal(a, c) == Tri::no);

  // Differing tails differ at infinitely many points: definite.
  A5 d = a;
  d.product_component("x,eta").tail = R5::t();
  CHECK(adele_equal(a, d) == Tri::no);
}

TEST_CASE("restriction and extension by zero") {
  Rng rng(1005);
  const std::set<Point> S = {Point::closed("t", 1), Point::closed("inf", 1)};
  for (int trial = 0; trial < 10; ++trial) {
    const A5 a = sample(rng, 1);
    const A5 over_u = restrict_to(a, S);
    // restrict o extend_by_zero = identity, exactly.
    CHECK(restrict_to(extend_by_zero(over_u, S), S) == over_u);
    // extend_by_zero o restrict differs from a exactly in S-indexed slots.
    const A5 ext = extend_by_zero(over_u, S);
    for (const auto& [key, comp] : ext.components) {
      if (std::holds_alternative<R5>(comp)) {
        CHECK(std::get<R5>(comp) == a.eta_component(key));
        continue;
      }
      const auto& pe = std::get<ProductData<F5>>(comp);
      const auto& pa = a.product_component(key);
      CHECK(pe.tail == pa.tail);
      for (const auto& [x, v] : pe.exceptions) {
        if (S.count(x))
          CHECK((lv_is_rat(v) && std::get<R5>(v).is_zero()));
        else
          CHECK(v == pa.value_at(x));
      }
    }
  }
  CHECK_THROWS_AS(restrict_to(sample(rng, 0), {Point::generic_point()}), bad_input);
}

TEST_CASE("extension by zero is linear over the global adele action") {
  Rng rng(1006);
  const std::set<Point> S = {Point::closed("t+1", 1)};
  for (int trial = 0; trial < 10; ++trial) {
    const A5 r = sample(rng, 1);
    const A5 s = restrict_to(sample(rng, 1), S);
    const A5 lhs = extend_by_zero(restrict_to(r, S) * s, S);
    const A5 rhs = r * extend_by_zero(s, S);
    CHECK(adele_equal(lhs, rhs) != Tri::no);
  }
}

TEST_CASE("sampled kernels over an open extend to kernels everywhere") {
  // For a 2x3 adelic matrix with rows orthogonal to a sampled vector, the
  // extension-by-zero of a kernel element over U stays in the kernel.
  Rng rng(1007);
  const std::set<Point> S = {Point::closed("t", 1)};
  for (int trial = 0; trial < 5; ++trial) {
    const A5 k1 = restrict_to(sample(rng, 1), S);
    const A5 k2 = restrict_to(sample(rng, 1), S);
    const A5 k3 = restrict_to(sample(rng, 1), S);
    const A5 zero = A5::zero(1);
    const A5 f[2][3] = {{zero, k3, -k2}, {k3, zero, -k1}};
    const A5 e[3] = {extend_by_zero(k1, S), extend_by_zero(k2, S), extend_by_zero(k3, S)};
    for (int row = 0; row < 2; ++row) {
      A5 acc = A5::zero(1);
      for (int col = 0; col < 3; ++col) acc = acc + f[row][col] * e[col];
      CHECK(adele_equal(acc, A5::zero(1)) != Tri::no);
    }
  }
}

TEST_CASE("skyscraper adelization is the identity at every level") {
  const Point x0 = Point::closed("t", 1);
  const LocalSeries<F5> jet =
      LocalSeries<F5>::from_digits(x0, 0, {P5::from_ints({2}), P5::from_ints({3})}, 2);
  std::vector<AdeleModuleElt<F5>> elts;
  for (int level = 0; level <= 3; ++level) elts.push_back(skyscraper_adele(x0, 2, jet, level));
  for (const auto& elt : elts) {
    CHECK(module_valid(elt.data, elt.sheaf) == Tri::yes);
    for (const auto& [key, comp] : elt.data.components) {
      if (std::holds_alternative<R5>(comp)) {
        CHECK(std::get<R5>(comp).is_zero());
        continue;
      }
      const auto& pd = std::get<ProductData<F5>>(comp);
      CHECK(pd.tail.is_zero());
      REQUIRE(pd.exceptions.size() == 1);
      CHECK(pd.exceptions.begin()->first == x0);
      // The same finite data at every level and pattern: the identity map.
      CHECK(std::get<LocalSeries<F5>>(pd.exceptions.begin()->second) == jet);
    }
  }
  CHECK_THROWS_AS(skyscraper_adele(x0, 2, expand(R5::one() / R5::t(), x0, 4), 1), bad_input);
}

TEST_CASE("twisted integrality bounds") {
  const R5 f = R5::one() / (R5::t() * R5::t());
  const A5 a = diag(f, 1, kPrec);
  const Point t0 = Point::closed("t", 1);
  // 1/t^2 is integral for the twist O(2[t=0]) but not for O([t=0]).
  CHECK(module_violations(a, Sheaf::line_bundle(Divisor::single(t0, 2))).empty());
  const auto vs = module_violations(a, Sheaf::line_bundle(Divisor::single(t0, 1)));
  CHECK(!vs.empty());
  for (const auto& v : vs) CHECK(v.verdict == Tri::no);
  CHECK_THROWS_AS(module_adele(Sheaf::line_bundle(Divisor::single(t0, 1)), a), bad_input);

  // O(0) module elements are plain adeles; a valid one passes through.
  Rng rng(1008);
  const A5 b = sample(rng, 1);
  CHECK(module_adele(Sheaf::structure_sheaf(), b).data == b);

  // Nonconstant rational functions always violate integrality somewhere:
  // the kernel of F (+) O-hat -> A is the constants.
  for (int trial = 0; trial < 10; ++trial) {
    const R5 g = rng.ratfun<F5>(2);
    const auto viol = module_violations(diag(g, 0, kPrec), Sheaf::structure_sheaf());
    if (g.is_constant())
      CHECK(viol.empty());
    else
      CHECK(!viol.empty());
  }
}

TEST_CASE("pole splitting realizes exactness at the restricted product") {
  Rng rng(1009);
  for (int trial = 0; trial < 15; ++trial) {
    const A5 a = sample(rng, 1);
    const auto& pd = a.product_component("x,eta");
    const auto [f, rest] = split_off_poles(pd, kPrec);
    // The remainder is integral everywhere, within the window.
    for (const auto& [x, v] : rest.exceptions) CHECK(lv_at_least(v, x, 0) != Tri::no);
    if (!rest.tail.is_zero()) {
      for (const auto& [q, m] : factor(rest.tail.den))
        CHECK(rest.exceptions.count(Point::closed(q.str(), q.deg())) > 0);
      if (rest.tail.valuation_at_infinity() < 0)
        CHECK(rest.exceptions.count(Point::closed("inf", 1)) > 0);
    }
    // diag(f) + remainder reassembles the input within the window.
    ProductData<F5> back = detail::pd_combine(detail::diag_product_data(f, kPrec), rest, false);
    CHECK(back.tail == pd.tail);
    std::set<Point> pts;
    for (const auto& [x, v] : back.exceptions) pts.insert(x);
    for (const auto& [x, v] : pd.exceptions) pts.insert(x);
    for (const Point& x : pts)
      CHECK(lv_equal(back.value_at(x), pd.value_at(x), x) != Tri::no);
  }

  // A pole-free component splits trivially.
  const auto [f0, rest0] = split_off_poles(ProductData<F5>{{}, R5::one()}, kPrec);
  CHECK(f0.is_zero());
  CHECK(rest0.tail == R5::one());
}

TEST_CASE("component shape is validated") {
  A5 a = A5::zero(2);
  a.validate_shape();
  A5 broken = a;
  broken.components.erase("x,eta,eta");
  CHECK_THROWS_AS(broken.validate_shape(), bad_input);
  A5 wrong = a;
  wrong.components["eta,eta,eta"] = A5::Component{ProductData<F5>{}};
  CHECK_THROWS_AS(wrong.validate_shape(), bad_input);
  CHECK_THROWS_AS(a.at("x,x"), bad_input);
}
