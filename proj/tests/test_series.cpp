#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "skewps/errors.hpp"
#include "skewps/series.hpp"

using namespace skewps;

namespace {

Context zp_plain(int p, int cap) { return make_context(RingDescriptor::zp(p, cap), Twist{}); }

struct M2 {
  Ring ring = RingDescriptor::matrix(2, RingDescriptor::zp(2, 6));
  Element e(int i, int j) const { return Element::matrix_unit(ring, i, j); }
  Element c(int64_t n) const { return Element::from_int(ring, n); }
  Context inner_ctx() const {
    return make_context(ring, Twist{AutoDescriptor::identity(), DerivDescriptor::inner(c(2) * e(0, 1))});
  }
};

SkewSeries poly(const Context& ctx, const std::vector<int64_t>& cs) {
  std::vector<Element> out;
  for (auto v : cs) out.push_back(Element::from_int(ctx->ring, v));
  while (static_cast<int>(out.size()) < ctx->cap) out.push_back(Element::zero(ctx->ring));
  return SkewSeries(ctx, out);
}

/// Contexts covering commutative, inner, conjugation, Frobenius and product twists.
std::vector<Context> contexts() {
  M2 m;
  const Ring f4 = RingDescriptor::fq_series(4, 8);
  const Ring prod = RingDescriptor::product({RingDescriptor::zp(2, 6), RingDescriptor::zp(2, 6)});
  const Element pt = Element::product(prod, {Element::zp(prod->factors[0], 2), Element::zp(prod->factors[1], 6)});
  const AutoDescriptor swap = AutoDescriptor::factor_permutation({1, 0});
  const AutoDescriptor ca = AutoDescriptor::conjugation(Element::one(m.ring) + m.e(0, 1));
  return {
      zp_plain(2, 8),
      m.inner_ctx(),
      make_context(m.ring, Twist{ca, DerivDescriptor::inner_with(m.c(2) * m.e(1, 0), ca)}),
      make_context(f4, Twist{AutoDescriptor::frobenius(1), DerivDescriptor::inner_tau_times(uniformiser(f4))}),
      make_context(prod, Twist{swap, DerivDescriptor::inner_with(pt, swap)}),
  };
}

}  // namespace

TEST_CASE("sps_val examples") {
  const Context ctx = zp_plain(2, 8);
  CHECK(sps_val(poly(ctx, {2, 1})) == Level::exact(1));
  CHECK(sps_val(poly(ctx, {0, 0, 0, 1})) == Level::exact(3));
  CHECK(sps_val(SkewSeries::zero(ctx)) == Level::at_least(8));
  CHECK(sps_precision(poly(ctx, {1, 2, 3})) == 8);
}

TEST_CASE("x_mul_coeff examples") {
  M2 m;
  const auto [s0, d0] = x_mul_coeff(Twist{}, m.e(1, 0));
  CHECK(congruent(s0, m.e(1, 0)));
  CHECK(d0.is_zero());
  const Twist tw = m.inner_ctx()->twist;
  const auto [s1, d1] = x_mul_coeff(tw, m.e(1, 0));
  CHECK(congruent(s1, m.e(1, 0)));
  CHECK(congruent(d1, m.c(2) * (m.e(0, 0) - m.e(1, 1))));
  const auto [s2, d2] = x_mul_coeff(tw, Element::one(m.ring));
  CHECK(congruent(s2, Element::one(m.ring)));
  CHECK(d2.is_zero());
}

TEST_CASE("sps_mul examples") {
  const Context ctx = zp_plain(2, 8);
  const SkewSeries one_x = poly(ctx, {1, 1});
  CHECK(congruent(one_x * one_x, poly(ctx, {1, 2, 1})));

  M2 m;
  const Context mc = m.inner_ctx();
  const SkewSeries lhs = SkewSeries::x(mc) * SkewSeries::monomial(mc, m.e(1, 0), 1);
  const SkewSeries want =
      SkewSeries::monomial(mc, m.e(1, 0), 2) + SkewSeries::monomial(mc, m.c(2) * (m.e(0, 0) - m.e(1, 1)), 1);
  CHECK(congruent(lhs, want));

  const Context plain = make_context(m.ring, Twist{});
  const Element r = m.c(3) + m.e(0, 1), s = m.e(1, 0);
  CHECK(congruent(SkewSeries::constant(plain, r) * SkewSeries::monomial(plain, s, 1),
                  SkewSeries::monomial(plain, r * s, 1)));
}

TEST_CASE("sps_add and scalar examples") {
  const Context ctx = zp_plain(2, 8);
  const SkewSeries a = poly(ctx, {3, 0, 5});
  CHECK(congruent(a + SkewSeries::zero(ctx), a));
  CHECK(congruent(sps_scalar_mul(Element::one(ctx->ring), a), a));
  const SkewSeries x = SkewSeries::x(ctx);
  CHECK(sps_val(x + sps_scalar_mul(Element::from_int(ctx->ring, -1), x)) == Level::at_least(8));
}

TEST_CASE("sps_invert_unit examples") {
  const Context ctx = zp_plain(2, 6);
  CHECK(congruent(sps_invert_unit(SkewSeries::one(ctx)), SkewSeries::one(ctx)));
  CHECK(congruent(sps_invert_unit(poly(ctx, {1, -1})), poly(ctx, {1, 1, 1, 1, 1, 1})));
  CHECK_THROWS_AS(sps_invert_unit(poly(ctx, {2, 1})), NotAUnit);
}

TEST_CASE("cap and twist mismatches are errors") {
  const Context a = zp_plain(2, 8);
  const Context b = make_context(RingDescriptor::zp(2, 8), Twist{}, ContextOptions{.cap = 4});
  CHECK_THROWS_AS(SkewSeries::x(a) * SkewSeries::x(b), TwistMismatch);
  CHECK_THROWS_AS(SkewSeries::x(a) + SkewSeries::x(b), TwistMismatch);
}

TEST_CASE("property: products agree with the word-expansion oracle") {
  Rng rng(101);
  for (const Context& ctx : contexts()) {
    CAPTURE(ctx->key);
    for (int t = 0; t < 30; ++t) {
      const SkewSeries a = random_series(ctx, rng, 5), b = random_series(ctx, rng);
      REQUIRE(oracle::product_agrees(a, b, a * b));
    }
  }
}

TEST_CASE("property: ring axioms at precision") {
  Rng rng(202);
  for (const Context& ctx : contexts()) {
    CAPTURE(ctx->key);
    const int N = ctx->cap;
    for (int t = 0; t < 60; ++t) {
      const SkewSeries a = random_series(ctx, rng), b = random_series(ctx, rng), c = random_series(ctx, rng);
      REQUIRE(congruent((a * b) * c, a * (b * c)));
      REQUIRE(congruent(a * (b + c), a * b + a * c));
      REQUIRE(congruent((a + b) * c, a * c + b * c));
      const Element r = random_element(ctx->ring, rng);
      REQUIRE(congruent(sps_scalar_mul(r, a * b), sps_scalar_mul(r, a) * b));
      const Level fa = sps_val(a), fb = sps_val(b);
      if (!fa.is_infinite() && !fb.is_infinite()) {
        REQUIRE(sps_val(a * b).at_least_value(std::min<int64_t>(fa.value() + fb.value(), N)));
        REQUIRE(sps_val(a + b).at_least_value(std::min(fa.value(), fb.value())));
      }
      if (!fa.is_infinite()) REQUIRE(sps_val(SkewSeries::x(ctx) * a).at_least_value(std::min<int64_t>(fa.value() + 1, N)));
    }
  }
}

TEST_CASE("property: unit series have two-sided inverses") {
  Rng rng(303);
  for (const Context& ctx : contexts()) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Element> cs = random_series(ctx, rng).coeffs();
      cs[0] = random_unit(ctx->ring, rng);
      const SkewSeries u(ctx, cs);
      const SkewSeries v = sps_invert_unit(u);
      REQUIRE(congruent(u * v, SkewSeries::one(ctx)));
      REQUIRE(congruent(v * u, SkewSeries::one(ctx)));
    }
  }
}

TEST_CASE("series literals round-trip") {
  Rng rng(404);
  for (const Context& ctx : contexts()) {
    for (int t = 0; t < 20; ++t) {
      const SkewSeries s = random_series(ctx, rng);
      const json j = series_to_json(s);
      REQUIRE(series_to_json(series_from_json(ctx, j)) == j);
    }
  }
  const Context ctx = zp_plain(2, 8);
  CHECK_THROWS_AS(series_from_json(ctx, json::parse(R"({"coeffs":[1,2],"cap":4})")), TwistMismatch);
  CHECK_THROWS_AS(series_from_json(ctx, json::parse(R"({"coeffs":"x"})")), ParseError);
}
