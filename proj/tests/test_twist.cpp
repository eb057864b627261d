#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewps/errors.hpp"
#include "skewps/random.hpp"
#include "skewps/series.hpp"
#include "skewps/twist.hpp"

using namespace skewps;

namespace {

struct M2 {
  Ring ring = RingDescriptor::matrix(2, RingDescriptor::zp(2, 6));
  Element e11 = Element::matrix_unit(ring, 0, 0), e12 = Element::matrix_unit(ring, 0, 1);
  Element e21 = Element::matrix_unit(ring, 1, 0), e22 = Element::matrix_unit(ring, 1, 1);
  Element one = Element::one(ring);
  Element c(int64_t n) const { return Element::from_int(ring, n); }
};

/// Product of explicit 2x2 integer matrices mod 2^6, written out by hand.
Element conj_oracle(const M2& m, const Element& a, const Element& a_inv, const Element& r) {
  auto entry = [](const Element& x, int i, int j) { return static_cast<int64_t>(x.entry(i, j).zp_residue()); };
  auto matmul = [&](const Element& x, const Element& y) {
    std::vector<Element> out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.push_back(Element::zp(m.ring->inner, (entry(x, i, 0) * entry(y, 0, j) + entry(x, i, 1) * entry(y, 1, j)) % 64));
    return Element::matrix(m.ring, out);
  };
  return matmul(matmul(a, r), a_inv);
}

}  // namespace

TEST_CASE("apply_sigma examples") {
  M2 m;
  CHECK(congruent(apply_sigma(AutoDescriptor::identity(), m.e21), m.e21));
  const Element a = m.one + m.e12;
  const Element got = apply_sigma(AutoDescriptor::conjugation(a), m.e21);
  CHECK(congruent(got, m.e21 + m.e11 - m.e22 - m.e12));
  CHECK(congruent(got, conj_oracle(m, a, m.one - m.e12, m.e21)));

  const Ring f4 = RingDescriptor::fq_series(4, 3);
  const Element w = Element::fq_series(f4, {2});
  CHECK(congruent(apply_sigma(AutoDescriptor::frobenius(1), w), Element::fq_series(f4, {3})));
}

TEST_CASE("conjugation agrees with explicit matrix products on samples") {
  M2 m;
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Element a = random_unit(m.ring, rng), r = random_element(m.ring, rng);
    CHECK(congruent(apply_sigma(AutoDescriptor::conjugation(a), r), conj_oracle(m, a, invert_unit(a), r)));
  }
}

TEST_CASE("apply_delta examples") {
  M2 m;
  const Twist inner{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e12)};
  CHECK(congruent(apply_delta(inner, m.e21), m.c(2) * (m.e11 - m.e22)));
  CHECK(apply_delta(Twist{}, m.e21).is_zero());
  const Twist central{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(6))};
  Rng rng(5);
  for (int t = 0; t < 50; ++t) CHECK(apply_delta(central, random_element(m.ring, rng)).is_zero());
  CHECK(apply_delta(inner, m.one).is_zero());
}

TEST_CASE("inner derivations gain precision") {
  const Ring zp = RingDescriptor::zp(2, 8);
  const Element t = Element::zp(zp, 4);
  const Twist tw{AutoDescriptor::identity(), DerivDescriptor::inner(t)};
  CHECK(structural_gain(tw.delta) == 2);
  CHECK(structural_gain(DerivDescriptor::pi_derivative()) == -1);
  CHECK(structural_gain(DerivDescriptor::zero()) >= kInfiniteGain);
}

TEST_CASE("property: automorphisms are ring maps and invert") {
  M2 m;
  Rng rng(17);
  const Ring f9 = RingDescriptor::fq_series(9, 5);
  const Ring prod = RingDescriptor::product({RingDescriptor::zp(3, 4), RingDescriptor::zp(3, 4)});
  struct Case {
    Ring ring;
    AutoDescriptor sigma;
  };
  const std::vector<Case> cases = {
      {m.ring, AutoDescriptor::conjugation(m.one + m.c(2) * m.e21)},
      {m.ring, compose(AutoDescriptor::conjugation(m.one + m.e12), AutoDescriptor::conjugation(m.one + m.e21))},
      {f9, AutoDescriptor::frobenius(1)},
      {f9, compose(AutoDescriptor::frobenius(1), AutoDescriptor::scale_uniformiser(Element::fq_series(f9, {2, 1})))},
      {prod, AutoDescriptor::factor_permutation({1, 0})},
  };
  for (const auto& c : cases) {
    const AutoDescriptor inv = inverse(c.sigma);
    for (int t = 0; t < 200; ++t) {
      const Element r = random_stratified(c.ring, rng), s = random_stratified(c.ring, rng);
      const Element sr = apply_sigma(c.sigma, r), ss = apply_sigma(c.sigma, s);
      REQUIRE(congruent(apply_sigma(c.sigma, r + s), sr + ss));
      REQUIRE(congruent(apply_sigma(c.sigma, r * s), sr * ss));
      REQUIRE(congruent(apply_sigma(inv, sr), r));
      REQUIRE(val(sr) == val(r));
    }
    CHECK(congruent(apply_sigma(c.sigma, Element::one(c.ring)), Element::one(c.ring)));
  }
}

TEST_CASE("property: derivation gains hold on every val level") {
  Rng rng(23);
  const Ring m = RingDescriptor::matrix(2, RingDescriptor::zp(2, 6));
  const Element t = Element::from_int(m, 2) * Element::matrix_unit(m, 0, 1);
  const Twist inner{AutoDescriptor::identity(), DerivDescriptor::inner(t)};
  const Ring f4 = RingDescriptor::fq_series(4, 8);
  const Twist tautimes{AutoDescriptor::frobenius(1), DerivDescriptor::inner_tau_times(uniformiser(f4))};
  for (int k = 0; k < 6; ++k)
    for (int s = 0; s < 20; ++s) {
      const Element r = random_with_val(m, k, rng);
      CHECK(val(apply_delta(inner, r)).at_least_value(std::min(k + 1, 6)));
      const Element q = random_with_val(f4, k, rng);
      CHECK(val(apply_delta(tautimes, q)).at_least_value(std::min(k + 1, 8)));
    }
}

TEST_CASE("check_leibniz") {
  M2 m;
  CHECK(check_leibniz(m.ring, Twist{}, 64, 1).passed);
  const Twist inner{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e12)};
  CHECK(check_leibniz(m.ring, inner, 64, 1).passed);

  // d_{c_a, t} is a c_a-derivation; declaring σ = id must be caught
  const AutoDescriptor ca = AutoDescriptor::conjugation(m.one + m.e12);
  const Twist corrupted{AutoDescriptor::identity(), DerivDescriptor::inner_with(m.c(2) * m.e12, ca)};
  const CheckReport rep = check_leibniz(m.ring, corrupted, 64, 1);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.witness.is_null());
  // the witness pair really violates the identity
  const Element r = element_from_json(m.ring, rep.witness.at("r"));
  const Element s = element_from_json(m.ring, rep.witness.at("s"));
  const Element lhs = apply_delta(corrupted, r * s);
  const Element rhs = apply_delta(corrupted, r) * s + apply_sigma(corrupted, r) * apply_delta(corrupted, s);
  CHECK_FALSE(congruent(lhs, rhs));
}

TEST_CASE("check_compatible") {
  M2 m;
  CHECK(check_compatible(m.ring, Twist{}, 64, 1).passed);
  const Twist inner{AutoDescriptor::identity(), DerivDescriptor::inner(m.c(2) * m.e12)};
  CHECK(check_compatible(m.ring, inner, 64, 1).passed);

  const Ring f4 = RingDescriptor::fq_series(4, 8);
  const Twist dpi{AutoDescriptor::identity(), DerivDescriptor::pi_derivative()};
  CHECK(congruent(apply_delta(dpi, uniformiser(f4)), Element::one(f4)));
  const CheckReport rep = check_compatible(f4, dpi, 64, 1);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.witness.is_null());
  CHECK_THROWS_AS(make_context(f4, dpi), NotCompatible);
  // a unit inner element is not compatible either: v(δ(r)) = v(r) is possible
  const Twist unit_inner{AutoDescriptor::identity(), DerivDescriptor::inner(m.e12)};
  CHECK_FALSE(check_compatible(m.ring, unit_inner, 64, 1).passed);
}

TEST_CASE("twist literals round-trip and reject malformed input") {
  const Ring f4 = RingDescriptor::fq_series(4, 8);
  const json j = json::parse(R"({"sigma":[{"frob":1}],"delta":[{"tautimes":[0,1]}]})");
  const Twist tw = twist_from_json(f4, j);
  CHECK(twist_to_json(twist_from_json(f4, twist_to_json(tw))) == twist_to_json(tw));
  CHECK_THROWS_AS(twist_from_json(f4, json::parse(R"({"sigma":[{"nope":1}],"delta":[]})")), ParseError);
  CHECK_THROWS_AS(twist_from_json(f4, json::parse(R"({"sigma":[{"conj":{}}],"delta":[]})")), ParseError);
}
