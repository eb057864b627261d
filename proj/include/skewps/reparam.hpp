#pragma once

#include <string>
#include <vector>

#include "skewps/series.hpp"

namespace skewps {

/// (x − t)^n = Σ_i β_{n,i} x^{n−i}, β_{n,0} = 1.
struct BetaTable {
  Element t;
  std::vector<std::vector<Element>> rows;  // rows[n][i], 0 <= i <= n
  const Element& at(int n, int i) const { return rows[n][i]; }
  int n_max() const { return static_cast<int>(rows.size()) - 1; }
};

/// (a x)^n = Σ_i γ_{n,i} x^{n−i}.
struct GammaTable {
  Element a;
  std::vector<std::vector<Element>> rows;
  const Element& at(int n, int i) const { return rows[n][i]; }
  int n_max() const { return static_cast<int>(rows.size()) - 1; }
};

/// β_{n+1,i} = σ(β_{n,i}) + δ(β_{n,i−1}) − tβ_{n,i−1}. ValueTooLow when
/// v(t) = 0 unless `allow_unit_t` (used only to exhibit the counterexample).
BetaTable beta_coeffs(const Twist& twist, const Element& t, int n_max, bool allow_unit_t = false);
/// γ_{n+1,i} = aσ(γ_{n,i}) + aδ(γ_{n,i−1}); NotAUnit unless a is a unit.
GammaTable gamma_coeffs(const Twist& twist, const Element& a, int n_max);

/// Reads p = Σ r_n y^n with y = x − t and returns it written in x
/// (coefficient j = Σ_n r_n β_{n,n−j}), in p's own context.
SkewSeries substitute_shift(const SkewSeries& p, const Element& t);
/// Same for y = a x: coefficient j = Σ_n r_n γ_{n,n−j}.
SkewSeries substitute_scale(const SkewSeries& p, const Element& a);
/// The substitution for a precomputed table (rows of beta_coeffs or
/// gamma_coeffs for p's twist, at least cap − 1 rows); for repeated use of
/// one change of variable.
SkewSeries substitute_with_table(const SkewSeries& p, const std::vector<std::vector<Element>>& rows);

// Polynomial mode: full-precision coefficient lists of arbitrary degree, no
// truncation in x. Needed where the series model is meaningless (v(t) = 0).
using Polynomial = std::vector<Element>;
Polynomial poly_substitute_shift(const Twist& twist, const Polynomial& p, const Element& t, bool allow_unit_t = false);
Polynomial poly_substitute_scale(const Twist& twist, const Polynomial& p, const Element& a);
/// min_i v(r_i) + i without clamping (∞ for the zero polynomial).
Level poly_val(const Polynomial& p);
/// Product of polynomials in R[x;σ,δ]: Σ a_i·(x^i·b), the x^i·b expanded by
/// repeated left multiplication with x. No truncation in the degree.
Polynomial poly_mul(const Twist& twist, const Polynomial& a, const Polynomial& b);

enum class MoveKind { Shift, Scale };
struct Move {
  MoveKind kind;
  Element elt;  // t (shift, y = x − t) or a (scale, y = a x)
  static Move shift(const Element& t) { return {MoveKind::Shift, t}; }
  static Move scale(const Element& a) { return {MoveKind::Scale, a}; }
};

/// Twist of the new variable y, from the descriptors:
///   shift: (σ, δ − d_{σ,t})     scale: (c_a∘σ, a·δ)
Twist moved_twist(const Twist& twist, const Move& move);

/// Context of R[[y; σ', δ']] with the same ring and cap. Verifies the
/// hypothesis (v(t) >= 1, resp. a a unit; HypothesisViolated otherwise), that
/// σ', δ' agree with the values read off from y·r = σ'(r)y + δ'(r) computed in
/// R[[x;σ,δ]] on samples, and that the new twist is compatible.
Context moved_context(const Context& ctx, const Move& move, int trials = 32, uint64_t seed = 0);

/// (σ'(r), δ'(r)) read off from the product y·r inside R[[x;σ,δ]].
std::pair<Element, Element> read_off_twist(const Context& ctx, const Move& move, const Element& r);

struct ChangeOfVariable {
  Context target;  // R[[y;σ',δ']]
  SkewSeries image;
};
/// Re-expresses s ∈ R[[x;σ,δ]] in the new variable y.
ChangeOfVariable change_variable(const SkewSeries& s, const Move& move);
/// Inverse direction: q ∈ R[[y;σ',δ']] written back in x (in `source`).
SkewSeries change_variable_back(const Context& source, const SkewSeries& q, const Move& move);

/// Samples polynomials and compares f_{v,x} with f_{v,y} in both directions,
/// plus the round trip. The report carries the first mismatch as witness.
CheckReport check_filtration_equality(const Context& ctx, const Move& move, int trials, uint64_t seed);

/// The unit-shift counterexample: over the given (commutative, untwisted) context and t = −1,
/// compares f_{v,x}((x+1)^n) with f_{v,y}(y^n) for n = 1..n_max. The report
/// fails with the first n where they differ, which is the expected outcome.
CheckReport check_unit_shift_counterexample(const Ring& ring, int n_max);

}  // namespace skewps
