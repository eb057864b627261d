#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace skewps {

/// F_q = F_p[w]/(m(w)) with m the Conway polynomial for q. Elements are
/// encoded as integers 0..q-1 whose base-p digits are the coefficients of
/// 1, w, w^2, ... (so in F_4, w is 2 and w+1 is 3).
class FiniteField {
 public:
  using Elt = uint32_t;

  /// Shared instance for q; throws ParseError for unsupported q.
  static std::shared_ptr<const FiniteField> get(uint32_t q);

  uint32_t q() const { return q_; }
  uint32_t p() const { return p_; }
  uint32_t degree() const { return degree_; }
  /// Modulus coefficients, lowest degree first, monic top omitted.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  /// Inverse of a nonzero element.
  Elt inv(Elt a) const { return inv_[a]; }
  /// a^(p^e); e is taken modulo the degree, negative e allowed.
  Elt frobenius(Elt a, int64_t e) const;
  Elt from_int(int64_t n) const;

 private:
  explicit FiniteField(uint32_t q);

  uint32_t q_, p_, degree_;
  std::vector<uint32_t> modulus_;
  std::vector<Elt> add_, mul_, neg_, inv_;
};

/// The prime powers with a built-in defining polynomial, for documentation.
std::vector<uint32_t> supported_field_orders();

}  // namespace skewps
