#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "skewps/finite_field.hpp"
#include "skewps/level.hpp"

namespace skewps {

enum class RingKind { Zp, FqSeries, Matrix, Product };

struct RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

/// Tree describing a complete positively filtered base ring.
///
///  - Zp(p, N):        Z_p truncated at p^N, filtered by the p-adic valuation.
///  - FqSeries(q, N):  F_q[[π]] truncated at π^N, filtered by π-adic order.
///  - Matrix(n, R):    M_n(R) with the matrix filtration min_{ij} f(a_ij).
///  - Product(R_1..R_k): R_1 × ... × R_k with the product filtration.
///
/// Descriptors are immutable and shared; two descriptors are the same ring
/// iff their canonical serializations agree.
struct RingDescriptor {
  RingKind kind;
  uint64_t p = 0;  // Zp prime, or characteristic of F_q
  uint32_t q = 0;
  int cap = 0;     // level cap N of a leaf
  int n = 0;       // matrix size
  Ring inner;
  std::vector<Ring> factors;
  std::shared_ptr<const FiniteField> field;
  std::vector<uint64_t> ppow;  // Zp: p^0 .. p^cap
  std::string canonical;

  static Ring zp(uint64_t p, int cap);
  static Ring fq_series(uint32_t q, int cap);
  static Ring matrix(int n, Ring inner);
  static Ring product(std::vector<Ring> factors);

  bool is_leaf() const { return kind == RingKind::Zp || kind == RingKind::FqSeries; }
  /// Smallest leaf cap; the working level of anything built on this ring.
  int level_cap() const;
  bool is_commutative() const;
};

bool same_ring(const Ring& a, const Ring& b);

/// A value of a descriptor's ring with jagged precision. Every leaf stores a
/// canonical residue together with the level k it is known modulo
/// (p^k resp. π^k). The literal zero is the only value with unbounded
/// precision; it is the only value whose val is ∞.
class Element {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  Element() = default;

  static Element zero(const Ring& ring);
  static Element one(const Ring& ring);
  static Element from_int(const Ring& ring, int64_t n);
  /// prec < 0 means the ring cap.
  static Element zp(const Ring& ring, int64_t value, int prec = -1);
  static Element fq_series(const Ring& ring, std::vector<uint32_t> coeffs, int prec = -1);
  /// Row-major n*n entries.
  static Element matrix(const Ring& ring, std::vector<Element> entries);
  static Element product(const Ring& ring, std::vector<Element> parts);
  /// e_ij (0-based), entries 0 and 1 at full precision.
  static Element matrix_unit(const Ring& ring, int i, int j);
  /// Scalar a·I.
  static Element scalar_matrix(const Ring& ring, const Element& a);

  const Ring& ring() const { return ring_; }
  RingKind kind() const { return ring_->kind; }

  /// Minimum leaf precision (kExact for the literal zero).
  int precision() const;
  bool is_exact_zero() const;
  /// Residue is zero at its own precision.
  bool is_zero() const;
  Level val() const;

  uint64_t zp_residue() const { return zp_; }
  const std::vector<uint32_t>& fq_coeffs() const { return fq_; }
  /// Leaf precision (kExact for a literal zero leaf).
  int leaf_precision() const { return prec_; }
  const std::vector<Element>& parts() const { return parts_; }
  const Element& entry(int i, int j) const { return parts_[i * ring_->n + j]; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;

  /// Throws NotAUnit when val > 0 or the residue matrix is singular.
  Element invert_unit() const;
  /// Same residues, declared known at the full ring cap.
  Element lifted() const;
  /// Forget precision above level k on every leaf.
  Element truncated(int k) const;
  /// Multiply by π^k (central scalar power of the uniformiser).
  Element times_uniformiser_power(int k) const;
  /// Exact division by π^k; precision drops by k. Throws NotSolvable when
  /// some leaf is not divisible.
  Element divided_by_uniformiser_power(int k) const;

 private:
  friend class ElementAccess;
  Ring ring_;
  int prec_ = 0;                // leaves
  uint64_t zp_ = 0;             // Zp leaf residue
  std::vector<uint32_t> fq_;    // FqSeries coefficients, size == prec_ unless exact zero
  std::vector<Element> parts_;  // Matrix (row-major) or Product
};

/// a ≡ b at the smaller of their precisions.
bool congruent(const Element& a, const Element& b);

// Named operations of the base-ring contract.
Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Level val(const Element& a);
Element invert_unit(const Element& a);
/// p, π, or π·I; refuses products whose factors differ (NoUniformiser).
Element uniformiser(const Ring& ring);

/// The factor ring of a product for a nonempty index subset: the factor
/// itself for a single index, otherwise the product of the chosen factors.
Ring restricted_ring(const Ring& parent, const std::vector<int>& idx);
/// j_B: element of the restricted ring placed in the parent, zero elsewhere.
Element embed_factors(const Ring& parent, const std::vector<int>& idx, const Element& b);
/// π_B: the chosen parts of a parent element, as an element of `sub`.
Element project_factors(const Ring& sub, const std::vector<int>& idx, const Element& r);

}  // namespace skewps
