#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewps/errors.hpp"
#include "skewps/expr.hpp"

using namespace skewps;

namespace {

Context zp_ctx() { return make_context(RingDescriptor::zp(2, 6), Twist{}); }

SkewSeries as_series(const ExprValue& v) { return std::get<SkewSeries>(v); }

SkewSeries poly(const Context& ctx, const std::vector<int64_t>& cs) {
  std::vector<Element> out;
  for (auto v : cs) out.push_back(Element::from_int(ctx->ring, v));
  while (static_cast<int>(out.size()) < ctx->cap) out.push_back(Element::zero(ctx->ring));
  return SkewSeries(ctx, out);
}

/// Byte offset reported in a ParseError message.
size_t error_position(const std::string& text, const Context& ctx) {
  try {
    evaluate(text, ctx);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const std::string prefix = "at position ";
    REQUIRE(msg.rfind(prefix, 0) == 0);
    return std::stoul(msg.substr(prefix.size()));
  }
  FAIL("no ParseError for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("arithmetic expressions") {
  const Context ctx = zp_ctx();
  CHECK(congruent(as_series(evaluate("(1+x)^2", ctx)), poly(ctx, {1, 2, 1})));
  CHECK(congruent(as_series(evaluate("(1 + x) * (1 + x)", ctx)), poly(ctx, {1, 2, 1})));
  CHECK(congruent(as_series(evaluate("inv(1 - x)", ctx)), poly(ctx, {1, 1, 1, 1, 1, 1})));
  CHECK(congruent(as_series(evaluate("-x + 3", ctx)), poly(ctx, {3, -1})));
  CHECK(congruent(as_series(evaluate("[5, 0, 1]", ctx)), poly(ctx, {5, 0, 1})));
  CHECK(congruent(as_series(evaluate("2·x", ctx)), poly(ctx, {0, 2})));
  CHECK(std::get<Level>(evaluate("val(2 + x)", ctx)) == Level::exact(1));
  CHECK(std::get<Level>(evaluate("val(x^3)", ctx)) == Level::exact(3));
  CHECK(std::get<Level>(evaluate("val(0)", ctx)) == Level::at_least(6));
}

TEST_CASE("named series") {
  const Context ctx = zp_ctx();
  const std::map<std::string, SkewSeries> names{{"a", poly(ctx, {1, 1})}, {"b", poly(ctx, {0, 3})}};
  CHECK(congruent(as_series(evaluate("a*b - b", ctx, names)), poly(ctx, {0, 0, 3})));
}

TEST_CASE("twisted products through the parser") {
  const Ring m = RingDescriptor::matrix(2, RingDescriptor::zp(2, 6));
  const Element t = Element::from_int(m, 2) * Element::matrix_unit(m, 0, 1);
  const Context ctx = make_context(m, Twist{AutoDescriptor::identity(), DerivDescriptor::inner(t)});
  const SkewSeries got = as_series(evaluate("x * ([[[0,0],[1,0]]] * x)", ctx));
  const Element e21 = Element::matrix_unit(m, 1, 0);
  const Element d = Element::from_int(m, 2) * (Element::matrix_unit(m, 0, 0) - Element::matrix_unit(m, 1, 1));
  CHECK(congruent(got, SkewSeries::monomial(ctx, e21, 2) + SkewSeries::monomial(ctx, d, 1)));
}

TEST_CASE("errors carry positions") {
  const Context ctx = zp_ctx();
  CHECK(error_position("1 + * x", ctx) == 4);
  CHECK(error_position("(1 + x", ctx) == 6);
  CHECK(error_position("1 + y", ctx) == 4);
  CHECK(error_position("x ^ -1", ctx) == 4);
  CHECK(error_position("x )", ctx) == 2);
  CHECK(error_position("[1, 2", ctx) == 0);
  CHECK(error_position("val(x) + 1", ctx) == 0);
  CHECK_THROWS_AS(evaluate("inv(2 + x)", ctx), NotAUnit);
}
