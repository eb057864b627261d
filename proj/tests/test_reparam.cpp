#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "skewps/errors.hpp"
#include "skewps/reparam.hpp"

using namespace skewps;

namespace {

struct M2 {
  Ring ring = RingDescriptor::matrix(2, RingDescriptor::zp(2, 8));
  Element e(int i, int j) const { return Element::matrix_unit(ring, i, j); }
  Element c(int64_t n) const { return Element::from_int(ring, n); }
  Element one() const { return Element::one(ring); }
};

/// Coefficients of f^n by repeated word-expansion products, f = c_0 + c_1 x.
std::vector<Element> oracle_power(const Twist& tw, const Element& c0, const Element& c1, int n) {
  std::vector<Element> acc{Element::one(c0.ring())};
  for (int k = 0; k < n; ++k) acc = oracle::skew_product(tw, {c0, c1}, acc, static_cast<int>(acc.size()) + 1);
  return acc;
}

int64_t binom(int n, int k) {
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("beta tables") {
  M2 m;
  const Twist plain{};
  const Element t = m.c(2) * m.e(0, 0) + m.c(4) * m.e(1, 0);
  const BetaTable b1 = beta_coeffs(plain, t, 1);
  CHECK(congruent(b1.at(1, 1), -t));

  // central t, commutative twist: binomial coefficients
  const Ring zp = RingDescriptor::zp(3, 8);
  const Element tc = Element::zp(zp, 6);
  const BetaTable bc = beta_coeffs(Twist{}, tc, 8);
  for (int n = 0; n <= 8; ++n) {
    Element pw = Element::one(zp);
    for (int i = 0; i <= n; ++i) {
      CHECK(congruent(bc.at(n, i), Element::from_int(zp, binom(n, i)) * pw));
      pw = pw * (-tc);
    }
  }

  // twisted: (x − t)^3 expanded by the word oracle
  const Twist tw{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e(0, 1))};
  const Element t2 = m.c(2) * m.e(0, 0);
  const BetaTable b3 = beta_coeffs(tw, t2, 3);
  for (int n = 0; n <= 3; ++n) {
    const auto ref = oracle_power(tw, -t2, m.one(), n);
    for (int i = 0; i <= n; ++i) CHECK(congruent(b3.at(n, i), ref[n - i]));
  }

  CHECK_THROWS_AS(beta_coeffs(tw, m.one(), 3), ValueTooLow);
}

TEST_CASE("gamma tables") {
  M2 m;
  const Element a = m.one() + m.c(2) * m.e(0, 1);
  const GammaTable g0 = gamma_coeffs(Twist{}, a, 4);
  Element pw = m.one();
  for (int n = 0; n <= 4; ++n) {
    CHECK(congruent(g0.at(n, 0), pw));
    pw = pw * a;
  }

  const Twist tw{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e(1, 0))};
  const GammaTable g1 = gamma_coeffs(tw, m.one(), 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(congruent(g1.at(n, 0), m.one()));
    const auto ref = oracle_power(tw, Element::zero(m.ring), m.one(), n);
    for (int i = 0; i <= n; ++i) CHECK(congruent(g1.at(n, i), ref[n - i]));
  }

  const GammaTable g3 = gamma_coeffs(tw, a, 3);
  for (int n = 0; n <= 3; ++n) {
    const auto ref = oracle_power(tw, Element::zero(m.ring), a, n);
    for (int i = 0; i <= n; ++i) CHECK(congruent(g3.at(n, i), ref[n - i]));
  }

  CHECK_THROWS_AS(gamma_coeffs(tw, m.c(2), 3), NotAUnit);
}

TEST_CASE("property: table entries gain one level per step") {
  Rng rng(31);
  M2 m;
  const Twist tw{AutoDescriptor::conjugation(m.one() + m.e(0, 1)),
                 DerivDescriptor::inner_with(m.c(2) * m.e(1, 1), AutoDescriptor::conjugation(m.one() + m.e(0, 1)))};
  for (int k = 0; k < 10; ++k) {
    const BetaTable b = beta_coeffs(tw, random_val_at_least(m.ring, 1, rng), 12);
    const GammaTable g = gamma_coeffs(tw, random_unit(m.ring, rng), 12);
    for (int n = 0; n <= 12; ++n)
      for (int i = 0; i <= n; ++i) {
        REQUIRE(val(b.at(n, i)).at_least_value(std::min(i, 8)));
        REQUIRE(val(g.at(n, i)).at_least_value(std::min(i, 8)));
      }
  }
}

TEST_CASE("substitution examples") {
  const Ring zp = RingDescriptor::zp(2, 8);
  const Context ctx = make_context(zp, Twist{});
  const Element t = Element::zp(zp, 6);
  const SkewSeries p = SkewSeries::monomial(ctx, Element::one(zp), 2);
  const SkewSeries want = SkewSeries::monomial(ctx, Element::one(zp), 2) +
                          SkewSeries::monomial(ctx, Element::from_int(zp, -12), 1) +
                          SkewSeries::constant(ctx, Element::from_int(zp, 36));
  CHECK(congruent(substitute_shift(p, t), want));

  // y^3 with y = x + 1, written in x, is (x + 1)^3
  const Polynomial y3{Element::zero(zp), Element::zero(zp), Element::zero(zp), Element::one(zp)};
  const Polynomial got = poly_substitute_shift(Twist{}, y3, Element::from_int(zp, -1), true);
  const std::vector<int64_t> want3{1, 3, 3, 1};
  REQUIRE(got.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(congruent(got[i], Element::from_int(zp, want3[i])));
  CHECK_THROWS_AS(poly_substitute_shift(Twist{}, y3, Element::from_int(zp, -1)), ValueTooLow);
}

TEST_CASE("moved twists") {
  M2 m;
  const Context plain = make_context(m.ring, Twist{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e(0, 1))});
  Rng rng(41);

  // central t with σ = id: the inner part vanishes
  const Move central = Move::shift(m.c(4));
  const Context c1 = moved_context(plain, central);
  for (int k = 0; k < 50; ++k) {
    const Element r = random_element(m.ring, rng);
    CHECK(congruent(apply_delta(c1->twist, r), apply_delta(plain->twist, r)));
  }

  // general shift: δ'(r) = δ(r) − (t r − σ(r) t), read off from y·r
  const Element t = m.c(2) * m.e(0, 0) + m.c(2) * m.e(1, 0);
  const Move shift = Move::shift(t);
  const Twist moved = moved_twist(plain->twist, shift);
  for (int k = 0; k < 200; ++k) {
    const Element r = random_element(m.ring, rng);
    const auto [s_read, d_read] = read_off_twist(plain, shift, r);
    const Element d_formula = apply_delta(plain->twist, r) - (t * r - apply_sigma(plain->twist, r) * t);
    REQUIRE(congruent(d_read, d_formula));
    REQUIRE(congruent(apply_delta(moved, r), d_formula));
    REQUIRE(congruent(s_read, r));
  }

  // scale: σ' = c_a∘σ, δ' = a·δ
  const Element a = m.one() + m.e(0, 1);
  const Move scale = Move::scale(a);
  const Element a_inv = invert_unit(a);
  for (int k = 0; k < 200; ++k) {
    const Element r = random_element(m.ring, rng);
    const auto [s_read, d_read] = read_off_twist(plain, scale, r);
    REQUIRE(congruent(s_read, a * apply_sigma(plain->twist, r) * a_inv));
    REQUIRE(congruent(d_read, a * apply_delta(plain->twist, r)));
  }

  CHECK_THROWS_AS(moved_context(plain, Move::shift(m.one())), HypothesisViolated);
  CHECK_THROWS_AS(moved_context(plain, Move::scale(m.c(2))), HypothesisViolated);
}

TEST_CASE("property: change of variable round-trips and preserves f") {
  M2 m;
  const Context ctx = make_context(m.ring, Twist{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e(0, 1))});
  Rng rng(53);
  for (int k = 0; k < 40; ++k) {
    const Move move = k % 2 == 0 ? Move::shift(random_val_at_least(m.ring, 1, rng)) : Move::scale(random_unit(m.ring, rng));
    const SkewSeries s = random_series(ctx, rng);
    const ChangeOfVariable cv = change_variable(s, move);
    REQUIRE(congruent(change_variable_back(ctx, cv.image, move), s));
    REQUIRE(sps_val(cv.image) == sps_val(s));
  }
}

TEST_CASE("filtration equality checks") {
  const Ring zp = RingDescriptor::zp(2, 8);
  const Context ctx = make_context(zp, Twist{});
  CHECK(check_filtration_equality(ctx, Move::shift(Element::zp(zp, 2)), 50, 1).passed);
  CHECK(check_filtration_equality(ctx, Move::scale(Element::zp(zp, 3)), 50, 1).passed);

  // t = 1: f_{v,x}((x+1)^n) = 0 while the same element has f_{v,y} = n
  const CheckReport rep = check_unit_shift_counterexample(zp, 7);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.witness.size() == 7);
  for (const auto& row : rep.witness) {
    CHECK(row.at("f_x") == "0");
    CHECK(row.at("f_y") == std::to_string(row.at("n").get<int>()));
  }
  for (int n = 1; n <= 7; ++n) {
    Polynomial p(n + 1, Element::zero(zp));
    p[n] = Element::one(zp);
    const Polynomial in_x = poly_substitute_shift(Twist{}, p, Element::from_int(zp, -1), true);
    CHECK(poly_val(in_x) == Level::exact(0));
    CHECK(poly_val(p) == Level::exact(n));
  }
}
