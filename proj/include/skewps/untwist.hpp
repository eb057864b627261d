#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewps/random.hpp"
#include "skewps/reparam.hpp"
#include "skewps/series.hpp"

namespace skewps {

// ------------------------------------------------------------------ orbits

/// R = B × C along a σ-stable factor subset, with the componentwise maps.
struct OrbitSplit {
  bool trivial = false;  // subset empty or everything: B = R, no C
  Context whole;
  Context b, c;
  std::vector<int> b_factors, c_factors;

  /// φ: R[[x]] → B[[x_B]] × C[[x_C]]
  std::pair<SkewSeries, SkewSeries> apply(const SkewSeries& s) const;
  /// θ = φ^{-1}
  SkewSeries unapply(const SkewSeries& sb, const SkewSeries& sc) const;
};

/// OrbitNotClosed when σ or δ mixes the chosen factors with the others.
OrbitSplit split_orbits(const Context& ctx, std::vector<int> factors, int trials = 64, uint64_t seed = 0);

// ------------------------------------------------------------------ witnesses

/// σ = c_a ∘ M_n(τ) on O = M_n(D); a need only be invertible in M_n(Frac D).
struct FactoredSigma {
  Element inner;     // a
  AutoDescriptor tau;  // automorphism of D
};

/// b^{-1}δ = M_n(θ) + d_{M_n(τ),u}, δ the derivation of the presented ring.
struct FactoredDelta {
  DerivDescriptor theta;  // τ-derivation of D
  Element u;              // element of O
};

struct NormalizedSigma {
  Element b;   // unit with a = π^k b
  int k = 0;
  AutoDescriptor tau;  // τ' = c_Π∘τ = τ since D is commutative
  CheckReport check;   // c_b∘M_n(τ') = c_a∘M_n(τ) on samples
};

/// a = π^k·b with b a unit of O; NotInvertible otherwise (a singular, or not
/// of the form uniformiser power times unit).
NormalizedSigma normalize_inner(const Ring& o, const FactoredSigma& f, int trials = 64, uint64_t seed = 0);

struct UntwistedDelta {
  Element u11;           // scalar of D
  Element u_prime;       // u − u11·I, f(u') >= 1
  DerivDescriptor theta_prime;  // θ + d_{τ,u11}
  CheckReport check;     // M_n(θ') + d(u') = M_n(θ) + d(u) on samples
};

/// NotCompatible when u is not congruent to u11·I modulo F_1 O, or when
/// M_n(θ) + d_{M_n(τ),u} fails the compatibility check.
UntwistedDelta untwist_delta(const Ring& o, const FactoredDelta& f, const AutoDescriptor& tau, int trials = 64,
                             uint64_t seed = 0);

/// Twist descriptors of the presented ring O[[x;σ,δ]] for normalized witnesses:
/// σ = c_b∘M_n(τ), δ = b·(M_n(θ) + d_{M_n(τ),u}).
Twist presented_twist(const Element& b, const AutoDescriptor& tau, const FactoredDelta& f);

// ------------------------------------------------------------------ matrices of series

/// An element of M_n(D[[y;τ,θ]]).
struct MatrixSeries {
  Context ctx;  // D[[y;τ,θ]]
  int n = 0;
  std::vector<SkewSeries> entries;  // row-major

  static MatrixSeries zero(const Context& ctx, int n);
  static MatrixSeries identity(const Context& ctx, int n);
  /// s at (i, j), zero elsewhere
  static MatrixSeries unit(const Context& ctx, int n, int i, int j, const SkewSeries& s);

  const SkewSeries& at(int i, int j) const { return entries[i * n + j]; }
  SkewSeries& at(int i, int j) { return entries[i * n + j]; }
  MatrixSeries operator+(const MatrixSeries& o) const;
  MatrixSeries operator*(const MatrixSeries& o) const;
  MatrixSeries scaled(const SkewSeries& s) const;  // s·I times this
};
Level matrix_series_val(const MatrixSeries& m);
bool congruent(const MatrixSeries& a, const MatrixSeries& b);
json matrix_series_to_json(const MatrixSeries& m);
MatrixSeries matrix_series_from_json(const Context& ctx, int n, const json& j);

// ------------------------------------------------------- untwisting isomorphism

/// Witness data for O[[x;σ,δ]] with O = M_n(D).
struct WitnessedContext {
  Ring ring;  // Matrix(n, D) with D a Zp or FqSeries ring
  FactoredSigma sigma;
  FactoredDelta delta;
  std::optional<Twist> declared;  // optional explicit (σ, δ), verified on samples
  int cap = -1;
};

WitnessedContext witnessed_from_json(const json& j);
json witnessed_to_json(const WitnessedContext& w);

struct CertificateStage {
  std::string stage;
  CheckReport check;
  json witness;
  json to_json() const;
};

/// φ: O[[x;σ,δ]] → M_n(D[[y;τ,θ']]) with y = b^{-1}x − u'.
class UntwistingIsomorphism {
 public:
  /// Runs normalize_inner → scale by b^{-1} → untwist_delta → shift by u' →
  /// transpose, verifying each stage; throws the stage's error on failure.
  static UntwistingIsomorphism build(const WitnessedContext& w, int trials = 64, uint64_t seed = 0);

  MatrixSeries apply(const SkewSeries& s) const;
  SkewSeries unapply(const MatrixSeries& m) const;

  /// ι: O → M_n(D), the identity identification of coefficients.
  MatrixSeries iota(const Element& r) const;

  const Context& source() const { return ctx0_; }  // O[[x;σ,δ]]
  const Context& scaled() const { return ctx1_; }  // O[[x';M_n(τ),M_n(θ)+d(u)]], x' = b^{-1}x
  const Context& shifted() const { return ctx2_; } // O[[x'';M_n(τ),M_n(θ')]], x'' = x' − u'
  const Context& target() const { return dctx_; }  // D[[y;τ,θ']]
  int n() const { return n_; }
  const NormalizedSigma& normalized() const { return norm_; }
  const UntwistedDelta& untwisted() const { return untw_; }
  const Element& b_inverse() const { return b_inv_; }
  /// The statement's parametrisation y = a x − t: a = b^{-1}, t = u'.
  SkewSeries new_variable_in_source() const;
  const std::vector<CertificateStage>& certificates() const { return chain_; }
  json certificate_chain() const;

 private:
  Context ctx0_, ctx1_, ctx2_, dctx_;
  int n_ = 0;
  NormalizedSigma norm_;
  UntwistedDelta untw_;
  Element b_inv_;
  std::vector<CertificateStage> chain_;
  // substitution tables: apply = scale by b in ctx1, shift by −u' in ctx2;
  // unapply = shift by u' in ctx1, scale by b^{-1} in ctx0
  std::vector<std::vector<Element>> apply_scale_, apply_shift_, unapply_shift_, unapply_scale_;
};

/// A random context satisfying the untwisting hypotheses over the leaf ring
/// `base` (Zp or FqSeries), n×n matrices.
WitnessedContext random_witnessed_context(const Ring& base, int n, int cap, Rng& rng);

/// Random compatible twist on a leaf ring D (τ, θ) with θ a τ-derivation.
Twist random_leaf_twist(const Ring& base, Rng& rng);

}  // namespace skewps
