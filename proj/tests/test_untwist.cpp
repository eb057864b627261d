#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "skewps/errors.hpp"
#include "skewps/untwist.hpp"

using namespace skewps;

#ifndef SKEWPS_TEST_DATA
#define SKEWPS_TEST_DATA "tests/data"
#endif

namespace {

struct M2 {
  Ring base = RingDescriptor::zp(2, 8);
  Ring ring = RingDescriptor::matrix(2, base);
  Element e(int i, int j) const { return Element::matrix_unit(ring, i, j); }
  Element c(int64_t n) const { return Element::from_int(ring, n); }
  Element one() const { return Element::one(ring); }
};

json load(const std::string& name) { return parse_file(std::string(SKEWPS_TEST_DATA) + "/" + name); }

/// y·I in the target as a matrix series.
MatrixSeries y_identity(const UntwistingIsomorphism& phi) {
  return MatrixSeries::identity(phi.target(), phi.n()).scaled(SkewSeries::x(phi.target()));
}

}  // namespace

TEST_CASE("split_orbits") {
  const Ring f = RingDescriptor::zp(3, 5);
  const Ring prod = RingDescriptor::product({f, f});
  const Context swap = make_context(prod, Twist{AutoDescriptor::factor_permutation({1, 0}), {}});
  CHECK(split_orbits(swap, {0, 1}).trivial);
  CHECK_THROWS_AS(split_orbits(swap, {0}), OrbitNotClosed);

  const Ring single = RingDescriptor::product({f});
  CHECK(split_orbits(make_context(single, Twist{}), {0}).trivial);

  const Element t = Element::product(prod, {Element::zp(f, 3), Element::zp(f, 9)});
  const Context fixed = make_context(prod, Twist{AutoDescriptor::identity(), DerivDescriptor::inner(t)});
  const OrbitSplit split = split_orbits(fixed, {1});
  REQUIRE_FALSE(split.trivial);
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const SkewSeries s = random_series(fixed, rng);
    const auto [sb, sc] = split.apply(s);
    REQUIRE(congruent(split.unapply(sb, sc), s));
    REQUIRE(sps_val(s) == Level::min(sps_val(sb), sps_val(sc)));
    const SkewSeries s2 = random_series(fixed, rng);
    const auto [tb, tc] = split.apply(s * s2);
    const auto [ub, uc] = split.apply(s2);
    REQUIRE(congruent(tb, sb * ub));
    REQUIRE(congruent(tc, sc * uc));
  }
}

TEST_CASE("normalize_inner examples") {
  M2 m;
  const Element u = m.one() + m.c(2) * m.e(0, 1);
  const NormalizedSigma n0 = normalize_inner(m.ring, {u, {}});
  CHECK(n0.k == 0);
  CHECK(congruent(n0.b, u));
  CHECK(n0.check.passed);

  const NormalizedSigma n1 = normalize_inner(m.ring, {uniformiser(m.ring), {}});
  CHECK(n1.k == 1);
  CHECK(congruent(n1.b, m.one()));

  const NormalizedSigma n2 = normalize_inner(m.ring, {m.c(2) * u, {}});
  CHECK(n2.k == 1);
  CHECK(congruent(n2.b, u));
  CHECK(val(n2.b) == Level::exact(0));
  CHECK(val(invert_unit(n2.b)) == Level::exact(0));

  CHECK_THROWS_AS(normalize_inner(m.ring, {m.e(0, 0), {}}), NotInvertible);
  // invertible over Frac D but not a uniformiser power times a unit
  CHECK_THROWS_AS(normalize_inner(m.ring, {m.e(0, 0) + m.c(2) * m.e(1, 1), {}}), NotInvertible);
}

TEST_CASE("untwist_delta examples") {
  M2 m;
  const UntwistedDelta z = untwist_delta(m.ring, {DerivDescriptor::zero(), Element::zero(m.ring)}, {});
  CHECK(z.u_prime.is_zero());

  const Element c = Element::zp(m.base, 5);
  const UntwistedDelta s = untwist_delta(m.ring, {DerivDescriptor::zero(), Element::scalar_matrix(m.ring, c)}, {});
  CHECK(s.u_prime.is_zero());
  CHECK(congruent(s.u11, c));
  // θ' = θ + d_{τ,c} vanishes on the commutative base for τ = id
  Rng rng(71);
  for (int k = 0; k < 20; ++k)
    CHECK(apply_delta(s.theta_prime, AutoDescriptor::identity(), random_element(m.base, rng)).is_zero());

  const UntwistedDelta g = untwist_delta(m.ring, {DerivDescriptor::zero(), m.one() + m.c(2) * m.e(0, 1)}, {});
  CHECK(congruent(g.u_prime, m.c(2) * m.e(0, 1)));
  CHECK(val(g.u_prime) == Level::exact(1));
  CHECK(g.check.passed);

  CHECK_THROWS_AS(untwist_delta(m.ring, {DerivDescriptor::zero(), m.e(0, 1)}, {}), NotCompatible);
}

TEST_CASE("clean witnesses give the transpose regrouping") {
  M2 m;
  WitnessedContext w;
  w.ring = m.ring;
  w.sigma = {m.one(), {}};
  w.delta = {DerivDescriptor::zero(), Element::zero(m.ring)};
  const UntwistingIsomorphism phi = UntwistingIsomorphism::build(w);
  Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    const SkewSeries s = random_series(phi.source(), rng);
    const MatrixSeries img = phi.apply(s);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int d = 0; d < s.cap(); ++d) REQUIRE(congruent(img.at(i, j).coeff(d), s.coeff(d).entry(i, j)));
  }
  CHECK(congruent(phi.apply(SkewSeries::x(phi.source())), y_identity(phi)));
}

TEST_CASE("witnessed file context: image of the new variable and ring-map checks") {
  const WitnessedContext w = witnessed_from_json(load("witnessed_m2_zp2.json"));
  const UntwistingIsomorphism phi = UntwistingIsomorphism::build(w, 64, 5);
  for (const auto& stage : phi.certificates()) CHECK_MESSAGE(stage.check.passed, stage.stage);
  CHECK(congruent(phi.apply(phi.new_variable_in_source()), y_identity(phi)));

  Rng rng(97);
  for (int k = 0; k < 200; ++k) {
    const SkewSeries r = random_series(phi.source(), rng), s = random_series(phi.source(), rng);
    const MatrixSeries pr = phi.apply(r), ps = phi.apply(s);
    REQUIRE(congruent(phi.apply(r * s), pr * ps));
    REQUIRE(congruent(phi.apply(r + s), pr + ps));
    REQUIRE(matrix_series_val(pr) == sps_val(r));
    REQUIRE(congruent(phi.unapply(pr), r));
  }
  const Element r0 = random_element(w.ring, rng);
  CHECK(congruent(phi.apply(SkewSeries::constant(phi.source(), r0)), phi.iota(r0)));
}

TEST_CASE("property: random witnessed contexts over Zp and F_q") {
  Rng rng(113);
  for (const Ring& base : {RingDescriptor::zp(3, 6), RingDescriptor::fq_series(4, 6)}) {
    for (int c = 0; c < 5; ++c) {
      Rng cr = rng.child(static_cast<uint64_t>(c));
      const WitnessedContext w = random_witnessed_context(base, 2, 6, cr);
      const UntwistingIsomorphism phi = UntwistingIsomorphism::build(w, 32, cr.child("build").seed());
      CHECK(val(phi.normalized().b) == Level::exact(0));
      CHECK(val(phi.untwisted().u_prime).at_least_value(1));
      CHECK(congruent(phi.apply(phi.new_variable_in_source()), y_identity(phi)));
      for (int k = 0; k < 30; ++k) {
        const SkewSeries r = random_series(phi.source(), cr), s = random_series(phi.source(), cr);
        REQUIRE(congruent(phi.apply(r * s), phi.apply(r) * phi.apply(s)));
        REQUIRE(congruent(phi.unapply(phi.apply(r)), r));
        REQUIRE(matrix_series_val(phi.apply(r)) == sps_val(r));
      }
    }
  }
}

TEST_CASE("witness literals round-trip") {
  const json j = load("witnessed_m2_zp2.json");
  const WitnessedContext w = witnessed_from_json(j);
  CHECK(witnessed_to_json(witnessed_from_json(witnessed_to_json(w))) == witnessed_to_json(w));
  json bad = j;
  bad.erase("sigma_witness");
  CHECK_THROWS_AS(witnessed_from_json(bad), ParseError);
}
