#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewps/ring.hpp"
#include "skewps/serialize.hpp"

namespace skewps {

struct AutoDescriptor;

/// One invertible, filtration-preserving automorphism.
struct AutoPrimitive {
  enum class Kind {
    Frobenius,         // c ↦ c^(p^e) on the F_q coefficients of an FqSeries
    ScaleUniformiser,  // π ↦ uπ on an FqSeries, u a unit
    Conjugation,       // r ↦ a r a^{-1}, a a unit
    MatrixLift,        // M_n(τ): τ applied entrywise
    FactorPermutation, // (r_i) ↦ s with s_perm[i] = r_i
    Factorwise,        // independent automorphism on each product factor
    Restrict,          // π_B ∘ σ ∘ j_B for a factor subset B of a parent product
  };
  Kind kind{};
  int64_t exponent = 0;
  Element elt;      // u (scale) or a (conjugation)
  Element elt_inv;  // a^{-1} (conjugation)
  std::vector<AutoDescriptor> inner;
  std::vector<int> indices;  // permutation, or restricted factor indices
  Ring parent;               // Restrict
};

/// σ = seq[0] ∘ seq[1] ∘ ... ∘ seq[k-1]; the empty sequence is the identity.
struct AutoDescriptor {
  std::vector<AutoPrimitive> seq;

  static AutoDescriptor identity() { return {}; }
  static AutoDescriptor frobenius(int64_t e);
  static AutoDescriptor scale_uniformiser(const Element& u);
  static AutoDescriptor conjugation(const Element& a);
  static AutoDescriptor matrix_lift(AutoDescriptor inner);
  static AutoDescriptor factor_permutation(std::vector<int> perm);
  static AutoDescriptor factorwise(std::vector<AutoDescriptor> per_factor);
  static AutoDescriptor restrict_to(const Ring& parent, std::vector<int> factors, AutoDescriptor parent_sigma);

  bool is_identity() const { return seq.empty(); }
};

/// a ∘ b
AutoDescriptor compose(const AutoDescriptor& a, const AutoDescriptor& b);
AutoDescriptor inverse(const AutoDescriptor& s);

struct DerivDescriptor;

/// One σ-derivation term. Terms that need an automorphism use the ambient σ
/// supplied at evaluation unless they carry an explicit override.
struct DerivPrimitive {
  enum class Kind {
    Zero,
    Inner,          // d_{σ,t}(r) = t r − σ(r) t
    InnerTauTimes,  // r ↦ t (r − τ(r)) on commutative rings
    MatrixLift,     // M_n(θ): θ entrywise, θ a τ-derivation of the inner ring
    LeftMultiple,   // r ↦ a·δ(r); a (c_a∘σ)-derivation when δ is a σ-derivation
    PiDerivative,   // d/dπ on FqSeries (a derivation for σ = id, never compatible)
    Restrict,       // π_B ∘ δ ∘ j_B
  };
  Kind kind{};
  Element elt;
  std::optional<AutoDescriptor> sigma;  // Inner/InnerTauTimes override, MatrixLift τ, Restrict parent σ
  std::vector<DerivDescriptor> inner;
  std::vector<int> indices;
  Ring parent;
};

/// δ = Σ terms; the empty sum is zero.
struct DerivDescriptor {
  std::vector<DerivPrimitive> terms;

  static DerivDescriptor zero() { return {}; }
  static DerivDescriptor inner(const Element& t);
  static DerivDescriptor inner_with(const Element& t, AutoDescriptor sigma);
  static DerivDescriptor inner_tau_times(const Element& t);
  static DerivDescriptor matrix_lift(DerivDescriptor inner, std::optional<AutoDescriptor> tau = std::nullopt);
  static DerivDescriptor left_multiple(const Element& a, DerivDescriptor inner);
  static DerivDescriptor pi_derivative();
  static DerivDescriptor restrict_to(const Ring& parent, std::vector<int> factors, AutoDescriptor parent_sigma,
                                     DerivDescriptor parent_delta);

  bool is_zero() const { return terms.empty(); }
};

DerivDescriptor sum(const DerivDescriptor& a, const DerivDescriptor& b);

/// A skew derivation (σ, δ).
struct Twist {
  AutoDescriptor sigma;
  DerivDescriptor delta;
};

Element apply_sigma(const AutoDescriptor& s, const Element& r);
/// δ(r) where σ-dependent terms use `ambient` as σ.
Element apply_delta(const DerivDescriptor& d, const AutoDescriptor& ambient, const Element& r);
inline Element apply_sigma(const Twist& t, const Element& r) { return apply_sigma(t.sigma, r); }
inline Element apply_delta(const Twist& t, const Element& r) { return apply_delta(t.delta, t.sigma, r); }

constexpr int kInfiniteGain = 1 << 20;

/// Certified lower bound g with v(δ(r)) >= v(r) + g for every r, derived
/// per primitive (Inner(t): v(t); MatrixLift: inner gain; PiDerivative: -1).
/// A gain >= 1 is a structural proof of the compatibility inequality, and is
/// also the precision contract: input mod level k fixes output mod k + g.
int structural_gain(const DerivDescriptor& d);

struct CheckReport {
  std::string property;
  bool passed = true;
  int trials = 0;
  uint64_t seed = 0;
  bool structural = false;  // a per-primitive certificate was available
  json witness;             // first counterexample when !passed
  std::string detail;

  json to_json() const;
};

CheckReport check_leibniz(const Ring& ring, const Twist& twist, int trials, uint64_t seed);
/// Samples every val level 0..N-1; fails on the first r with v(σ r) != v(r)
/// or v(δ r) <= v(r).
CheckReport check_compatible(const Ring& ring, const Twist& twist, int trials, uint64_t seed);

// Serialization: {"sigma":[...], "delta":[...]}
json auto_to_json(const AutoDescriptor& s);
json deriv_to_json(const DerivDescriptor& d);
json twist_to_json(const Twist& t);
AutoDescriptor auto_from_json(const Ring& ring, const json& j);
DerivDescriptor deriv_from_json(const Ring& ring, const json& j);
Twist twist_from_json(const Ring& ring, const json& j);

}  // namespace skewps
