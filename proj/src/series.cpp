#include "skewps/series.hpp"

#include <algorithm>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

void require_same(const SkewSeries& a, const SkewSeries& b, const char* op) {
  if (a.context() != b.context() && a.context()->key != b.context()->key)
    throw TwistMismatch(std::string(op) + ": series live in different rings R[[x;sigma,delta]] (" +
                        a.context()->key + " vs " + b.context()->key + ")");
}

std::vector<Element> settle(const Context& ctx, std::vector<Element> c) {
  c.resize(ctx->cap, Element::zero(ctx->ring));
  for (int i = 0; i < ctx->cap; ++i) c[i] = c[i].truncated(ctx->cap - i);
  return c;
}

}  // namespace

Context make_context(const Ring& ring, const Twist& twist, const ContextOptions& opts) {
  auto ctx = std::make_shared<SeriesContext>();
  ctx->ring = ring;
  ctx->twist = twist;
  ctx->cap = opts.cap < 0 ? ring->level_cap() : opts.cap;
  if (ctx->cap < 1 || ctx->cap > ring->level_cap())
    throw ValueTooLow("series cap must lie in 1.." + std::to_string(ring->level_cap()));
  ctx->gain = structural_gain(twist.delta);
  ctx->certified = ctx->gain >= 1;
  // validate shapes once: evaluation raises ShapeMismatch on a malformed twist
  apply_sigma(twist, Element::one(ring));
  apply_delta(twist, Element::one(ring));
  if (opts.checked) {
    if (!ctx->certified) {
      CheckReport c = check_compatible(ring, twist, opts.trials, opts.seed);
      if (!c.passed)
        throw NotCompatible("twist is not compatible with the filtration (" + c.detail + "): " + c.witness.dump());
    }
    CheckReport l = check_leibniz(ring, twist, opts.trials, opts.seed);
    if (!l.passed) throw HypothesisViolated("delta is not a sigma-derivation: " + l.witness.dump());
  }
  ctx->key = json{{"ring", ring_to_json(ring)}, {"twist", twist_to_json(twist)}, {"cap", ctx->cap}}.dump();
  return ctx;
}

json context_to_json(const Context& ctx) {
  return {{"ring", ring_to_json(ctx->ring)}, {"twist", twist_to_json(ctx->twist)}, {"cap", ctx->cap}};
}

// ------------------------------------------------------------------ series

SkewSeries::SkewSeries(Context ctx, std::vector<Element> coeffs) : ctx_(std::move(ctx)) {
  if (static_cast<int>(coeffs.size()) > ctx_->cap) coeffs.resize(ctx_->cap);
  for (const auto& c : coeffs)
    if (!same_ring(c.ring(), ctx_->ring)) throw DescriptorMismatch("series coefficient from another ring");
  coeffs_ = settle(ctx_, std::move(coeffs));
}

SkewSeries SkewSeries::zero(const Context& ctx) { return SkewSeries(ctx, {}); }
SkewSeries SkewSeries::one(const Context& ctx) { return SkewSeries(ctx, {Element::one(ctx->ring)}); }
SkewSeries SkewSeries::constant(const Context& ctx, const Element& r) { return SkewSeries(ctx, {r}); }

SkewSeries SkewSeries::monomial(const Context& ctx, const Element& r, int k) {
  std::vector<Element> c(std::min(k + 1, ctx->cap), Element::zero(ctx->ring));
  if (k < ctx->cap) c[k] = r;
  return SkewSeries(ctx, std::move(c));
}

SkewSeries SkewSeries::operator+(const SkewSeries& o) const { return sps_add(*this, o); }
SkewSeries SkewSeries::operator-() const {
  std::vector<Element> c;
  for (const auto& e : coeffs_) c.push_back(-e);
  return SkewSeries(ctx_, std::move(c));
}
SkewSeries SkewSeries::operator-(const SkewSeries& o) const { return sps_add(*this, -o); }
SkewSeries SkewSeries::operator*(const SkewSeries& o) const { return sps_mul(*this, o); }

Level sps_val(const SkewSeries& s) {
  Level f = Level::infinity();
  for (int i = 0; i < s.cap(); ++i) f = Level::min(f, s.coeff(i).val().plus(i));
  return f.clamped(s.cap());
}

std::pair<Element, Element> x_mul_coeff(const Twist& twist, const Element& r) {
  return {apply_sigma(twist, r), apply_delta(twist, r)};
}

std::vector<Element> x_times(const Twist& twist, const std::vector<Element>& c) {
  if (c.empty()) return {};
  const Ring& ring = c[0].ring();
  std::vector<Element> out(c.size() + 1, Element::zero(ring));
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_exact_zero()) continue;
    auto [s, d] = x_mul_coeff(twist, c[k]);
    out[k + 1] = out[k + 1] + s;
    out[k] = out[k] + d;
  }
  return out;
}

SkewSeries sps_add(const SkewSeries& a, const SkewSeries& b) {
  require_same(a, b, "sps_add");
  std::vector<Element> c(a.cap());
  for (int i = 0; i < a.cap(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return SkewSeries(a.context(), std::move(c));
}

SkewSeries sps_scalar_mul(const Element& r, const SkewSeries& a) {
  if (!same_ring(r.ring(), a.context()->ring)) throw DescriptorMismatch("scalar from another ring");
  std::vector<Element> c(a.cap());
  for (int i = 0; i < a.cap(); ++i) c[i] = r * a.coeff(i);
  return SkewSeries(a.context(), std::move(c));
}

int sps_precision(const SkewSeries& s) {
  int64_t level = s.cap();
  for (int i = 0; i < s.cap(); ++i) level = std::min<int64_t>(level, int64_t{s.coeff(i).precision()} + i);
  return static_cast<int>(level);
}

SkewSeries sps_mul(const SkewSeries& a, const SkewSeries& b) {
  require_same(a, b, "sps_mul");
  const Context& ctx = a.context();
  const int n = ctx->cap;
  // a = ã + ε_a with f(ε_a) >= L_a, likewise b, so ab is known modulo
  // level min(N, L_a + f(b), L_b + f(a)); for full jagged inputs this is N.
  auto lower = [&](const Level& f) { return f.is_infinite() ? int64_t{n} : f.value(); };
  const int64_t level = std::min<int64_t>(
      {int64_t{n}, sps_precision(a) + lower(sps_val(b)), sps_precision(b) + lower(sps_val(a))});
  // B_i = x^i·b on lifted representatives; the product is settled afterwards.
  std::vector<Element> shifted;
  for (const auto& c : b.coeffs()) shifted.push_back(c.lifted());
  std::vector<Element> acc(n, Element::zero(ctx->ring));
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      shifted = x_times(ctx->twist, shifted);
      shifted.resize(n);
    }
    const Element& ai = a.coeff(i);
    if (ai.is_exact_zero() || ai.is_zero()) continue;
    const Element lift = ai.lifted();
    for (int j = 0; j < n; ++j)
      if (!shifted[j].is_exact_zero()) acc[j] = acc[j] + lift * shifted[j];
  }
  for (int j = 0; j < n; ++j) acc[j] = acc[j].truncated(static_cast<int>(std::max<int64_t>(0, level - j)));
  return SkewSeries(ctx, std::move(acc));
}

SkewSeries sps_invert_unit(const SkewSeries& a) {
  const Context& ctx = a.context();
  Element c0 = a.coeff(0).lifted().invert_unit();  // NotAUnit
  SkewSeries one = SkewSeries::one(ctx);
  SkewSeries c = SkewSeries::constant(ctx, c0);
  // Newton: each pass at least doubles the f-adic agreement
  for (int pass = 0; pass <= ctx->cap + 1; ++pass) {
    SkewSeries next = c + c * (one - a * c);
    if (congruent(next, c)) break;
    c = next;
  }
  return c;
}

bool congruent(const SkewSeries& a, const SkewSeries& b) {
  require_same(a, b, "congruent");
  for (int i = 0; i < a.cap(); ++i)
    if (!congruent(a.coeff(i), b.coeff(i))) return false;
  return true;
}

Element random_coefficient(const Ring& ring, Rng& rng) {
  switch (rng.below(3)) {
    case 0:
      return random_element(ring, rng);
    case 1:
      return random_stratified(ring, rng);
    default:
      return random_val_at_least(ring, rng.uniform_int(0, ring->level_cap()), rng);
  }
}

SkewSeries random_series(const Context& ctx, Rng& rng, int max_degree) {
  if (max_degree < 0 || max_degree >= ctx->cap) max_degree = ctx->cap - 1;
  std::vector<Element> c;
  const int degree = rng.uniform_int(0, max_degree);
  for (int i = 0; i <= degree; ++i) c.push_back(random_coefficient(ctx->ring, rng));
  return SkewSeries(ctx, std::move(c));
}

json series_to_json(const SkewSeries& s) {
  json coeffs = json::array();
  for (int i = 0; i < s.cap(); ++i) {
    const Element& c = s.coeff(i);
    // slot i is implicitly known modulo level N − i; only report a lower precision
    coeffs.push_back(c.precision() < s.cap() - i ? element_to_json(c) : element_to_json(c.lifted()));
  }
  return {{"coeffs", coeffs}, {"cap", s.cap()}};
}

SkewSeries series_from_json(const Context& ctx, const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("series literal needs {\"coeffs\":[...],\"cap\":N}");
  if (j.contains("cap")) {
    if (!j.at("cap").is_number_integer()) throw ParseError("series cap must be an integer");
    if (j.at("cap").get<int>() != ctx->cap)
      throw TwistMismatch("series cap " + j.at("cap").dump() + " does not match context cap " +
                          std::to_string(ctx->cap));
  }
  const json& cs = j.at("coeffs");
  if (!cs.is_array()) throw ParseError("series coeffs must be a list");
  if (static_cast<int>(cs.size()) > ctx->cap)
    throw ParseError("series literal has " + std::to_string(cs.size()) + " coefficients, cap is " +
                     std::to_string(ctx->cap));
  std::vector<Element> c;
  for (const auto& e : cs) c.push_back(element_from_json(ctx->ring, e));
  return SkewSeries(ctx, std::move(c));
}

}  // namespace skewps
