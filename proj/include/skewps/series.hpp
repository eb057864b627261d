#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewps/random.hpp"
#include "skewps/ring.hpp"
#include "skewps/serialize.hpp"
#include "skewps/twist.hpp"

namespace skewps {

/// The ring R[[x;σ,δ]] truncated at level N: ring, twist and cap.
struct SeriesContext {
  Ring ring;
  Twist twist;
  int cap = 0;
  std::string key;  // canonical identity used for mismatch checks
  int gain = 0;     // structural δ gain (see structural_gain)
  bool certified = false;  // structural certificate (gain >= 1) available
};
using Context = std::shared_ptr<const SeriesContext>;

struct ContextOptions {
  int cap = -1;          // -1: the ring's level cap
  bool checked = true;   // refuse twists that fail compatibility / Leibniz
  int trials = 64;
  uint64_t seed = 0;
};

/// Builds a context. When `checked`, a twist without a structural certificate
/// is sampled on every val level; NotCompatible / HypothesisViolated on failure.
Context make_context(const Ring& ring, const Twist& twist, const ContextOptions& opts = {});

/// Σ r_i x^i modulo level N; coefficient i is stored at precision N − i.
class SkewSeries {
 public:
  SkewSeries() = default;
  SkewSeries(Context ctx, std::vector<Element> coeffs);

  static SkewSeries zero(const Context& ctx);
  static SkewSeries one(const Context& ctx);
  static SkewSeries constant(const Context& ctx, const Element& r);
  /// r·x^k
  static SkewSeries monomial(const Context& ctx, const Element& r, int k);
  static SkewSeries x(const Context& ctx) { return monomial(ctx, Element::one(ctx->ring), 1); }

  const Context& context() const { return ctx_; }
  int cap() const { return ctx_->cap; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  const Element& coeff(int i) const { return coeffs_[i]; }

  SkewSeries operator+(const SkewSeries& o) const;
  SkewSeries operator-(const SkewSeries& o) const;
  SkewSeries operator-() const;
  SkewSeries operator*(const SkewSeries& o) const;

 private:
  Context ctx_;
  std::vector<Element> coeffs_;
};

/// f(Σ r_i x^i) = min_i v(r_i) + i, clamped to ">= N".
Level sps_val(const SkewSeries& s);
/// Certified level L of the stored data: min_i prec(r_i) + i, at most N.
/// Equal to N for series at full jagged precision.
int sps_precision(const SkewSeries& s);
/// x·r = σ(r)x + δ(r): returns (σ(r), δ(r)).
std::pair<Element, Element> x_mul_coeff(const Twist& twist, const Element& r);
SkewSeries sps_add(const SkewSeries& a, const SkewSeries& b);
SkewSeries sps_mul(const SkewSeries& a, const SkewSeries& b);
SkewSeries sps_scalar_mul(const Element& r, const SkewSeries& a);
/// Two-sided inverse of a series with unit constant term (NotAUnit otherwise).
SkewSeries sps_invert_unit(const SkewSeries& a);
/// Equality of all jagged residues.
bool congruent(const SkewSeries& a, const SkewSeries& b);

/// Left multiplication by x on a coefficient list of arbitrary length; the
/// coefficients are used as given (no truncation). Building block for the
/// structure-constant recurrences and the expansion of products.
std::vector<Element> x_times(const Twist& twist, const std::vector<Element>& c);

/// Random coefficient mixing uniform, exact-val and val->=k draws.
Element random_coefficient(const Ring& ring, Rng& rng);
/// Random series of random degree (< max_degree+1, default cap) with
/// coefficients from random_coefficient.
SkewSeries random_series(const Context& ctx, Rng& rng, int max_degree = -1);

// {"coeffs":[<elt>...],"cap":N}
json series_to_json(const SkewSeries& s);
SkewSeries series_from_json(const Context& ctx, const json& j);
json context_to_json(const Context& ctx);

}  // namespace skewps
