#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "skewps/errors.hpp"
#include "skewps/random.hpp"
#include "skewps/ring.hpp"
#include "skewps/serialize.hpp"

using namespace skewps;

namespace {

Element zp(const Ring& r, int64_t v) { return Element::zp(r, v); }

}  // namespace

TEST_CASE("Zp arithmetic at the cap") {
  const Ring r = RingDescriptor::zp(2, 6);
  CHECK((zp(r, 5) + zp(r, 11)).zp_residue() == 16);
  CHECK((zp(r, 3) * zp(r, 11)).zp_residue() == 33);
  CHECK(val(zp(r, 12)) == Level::exact(2));
  CHECK(val(Element::zero(r)).is_infinite());
  CHECK((zp(r, 40) * zp(r, 40)).zp_residue() == (40 * 40) % 64);
  CHECK((-zp(r, 1)).zp_residue() == 63);
}

TEST_CASE("Zp inversion agrees with the extended Euclidean algorithm") {
  const Ring r4 = RingDescriptor::zp(2, 4);
  CHECK(invert_unit(zp(r4, 3)).zp_residue() == 11);
  CHECK_THROWS_AS(invert_unit(zp(r4, 2)), NotAUnit);

  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    const Ring r = RingDescriptor::zp(p, 5);
    uint64_t m = 1;
    for (int i = 0; i < 5; ++i) m *= p;
    for (uint64_t a = 1; a < m; ++a) {
      if (a % p == 0) continue;
      CHECK(invert_unit(zp(r, static_cast<int64_t>(a))).zp_residue() == oracle::inverse_mod(a, m));
    }
  }
}

TEST_CASE("jagged precision: sums and products keep the smaller level") {
  const Ring r = RingDescriptor::zp(3, 6);
  const Element a = Element::zp(r, 5, 2), b = Element::zp(r, 7);
  CHECK((a + b).precision() == 2);
  // (a + O(3^2))·(3b) is known modulo 3^3
  CHECK((a * (b * zp(r, 3))).precision() == 3);
  CHECK(val(Element::zp(r, 9, 2)) == Level::at_least(2));
  CHECK(Element::zero(r).precision() == Element::kExact);
}

TEST_CASE("matrix rings") {
  const Ring m = RingDescriptor::matrix(2, RingDescriptor::zp(2, 6));
  const Element e12 = Element::matrix_unit(m, 0, 1), e21 = Element::matrix_unit(m, 1, 0);
  const Element e11 = Element::matrix_unit(m, 0, 0), e22 = Element::matrix_unit(m, 1, 1);
  CHECK(congruent(e12 * e21, e11));
  CHECK(congruent(e21 * e12, e22));
  CHECK((e12 * e12).is_zero());
  const Element two = Element::from_int(m, 2), four = Element::from_int(m, 4);
  CHECK(val(two * e11 + four * e22) == Level::exact(1));

  const Ring m3 = RingDescriptor::matrix(2, RingDescriptor::zp(3, 5));
  const Element pi = uniformiser(m3);
  CHECK(congruent(pi, Element::from_int(m3, 3)));

  // singular residue matrix is not a unit even though every entry is
  CHECK_THROWS_AS(invert_unit(e11 + e12 + e21 + e22), NotAUnit);
  const Element u = Element::one(m) + two * e12;
  CHECK(congruent(u * invert_unit(u), Element::one(m)));
}

TEST_CASE("FqSeries arithmetic") {
  const Ring r = RingDescriptor::fq_series(2, 4);
  const Element a = Element::fq_series(r, {1, 1});
  const Element sq = a * a;
  CHECK(sq.fq_coeffs() == std::vector<uint32_t>{1, 0, 1, 0});
  CHECK(val(Element::fq_series(r, {0, 0, 1})) == Level::exact(2));
  CHECK(congruent(uniformiser(r), Element::fq_series(r, {0, 1})));

  const Ring r9 = RingDescriptor::fq_series(9, 5);
  const Element u = Element::fq_series(r9, {5, 2, 7});
  CHECK(congruent(u * invert_unit(u), Element::one(r9)));
  CHECK_THROWS_AS(invert_unit(Element::fq_series(r9, {0, 1})), NotAUnit);
}

TEST_CASE("finite field tables agree with schoolbook arithmetic on all pairs") {
  for (uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u}) {
    CAPTURE(q);
    const auto f = FiniteField::get(q);
    const oracle::FieldOracle o(f->p(), f->modulus());
    REQUIRE(o.q == q);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        REQUIRE(f->add(a, b) == o.add(a, b));
        REQUIRE(f->mul(a, b) == o.mul(a, b));
      }
      if (a != 0) REQUIRE(f->inv(a) == o.inv(a));
    }
    // the defining polynomial is primitive: w generates F_q^×
    CHECK(o.order(f->p()) == q - 1);
  }
}

TEST_CASE("Frobenius on F4 sends w to w+1") {
  const auto f = FiniteField::get(4);
  CHECK(f->frobenius(2, 1) == 3);
  CHECK(f->frobenius(2, 2) == 2);
  CHECK(f->frobenius(3, -1) == 2);
}

TEST_CASE("product rings and factor maps") {
  const Ring a = RingDescriptor::zp(2, 4), b = RingDescriptor::zp(2, 6);
  const Ring prod = RingDescriptor::product({a, b});
  const Element x = Element::product(prod, {zp(a, 2), zp(b, 8)});
  CHECK(val(x) == Level::exact(1));
  CHECK(prod->level_cap() == 4);
  const Element y = Element::product(prod, {zp(a, 3), zp(b, 5)});
  CHECK(congruent((x * y).parts()[1], zp(b, 40)));
  const Element proj = project_factors(a, {0}, x);
  CHECK(congruent(proj, zp(a, 2)));
  CHECK(congruent(embed_factors(prod, {1}, zp(b, 8)), Element::product(prod, {Element::zero(a), zp(b, 8)})));
  CHECK_THROWS_AS(uniformiser(RingDescriptor::product({a, RingDescriptor::zp(3, 4)})), NoUniformiser);
}

TEST_CASE("property: val is a filtration on random samples") {
  Rng rng(7);
  const std::vector<Ring> rings = {
      RingDescriptor::zp(2, 8),
      RingDescriptor::fq_series(9, 6),
      RingDescriptor::matrix(2, RingDescriptor::zp(3, 5)),
      RingDescriptor::product({RingDescriptor::zp(2, 5), RingDescriptor::zp(2, 5)}),
  };
  for (const Ring& r : rings) {
    const int cap = r->level_cap();
    for (int t = 0; t < 200; ++t) {
      const Element a = random_stratified(r, rng), b = random_stratified(r, rng);
      const Level va = val(a), vb = val(b);
      // v(a + b) >= min(v(a), v(b)); v(ab) >= v(a) + v(b)
      const Level m = Level::min(va, vb);
      if (!m.is_infinite()) CHECK(val(a + b).at_least_value(m.value()));
      if (!va.is_infinite() && !vb.is_infinite())
        CHECK(val(a * b).at_least_value(std::min<int64_t>(va.value() + vb.value(), cap)));
      // unit residues
      const Element u = random_unit(r, rng);
      CHECK(val(u) == Level::exact(0));
      CHECK(val(invert_unit(u)) == Level::exact(0));
    }
  }
}

TEST_CASE("element literals round-trip") {
  const Ring m = ring_from_json(json::parse(R"({"kind":"Matrix","n":2,"inner":{"kind":"FqSeries","q":4,"N":3}})"));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Element e = random_element(m, rng);
    const json j = element_to_json(e);
    CHECK(element_to_json(element_from_json(m, j)) == j);
  }
  CHECK_THROWS_AS(element_from_json(m, json::parse("[[1,2]]")), ParseError);
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"kind":"FqSeries","q":6,"N":3})")), ParseError);
}
