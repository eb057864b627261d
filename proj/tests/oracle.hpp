#pragma once

// Independent reference computations used by the tests. None of these calls
// into the kernel's multiplication, inversion or structure-constant code:
//  - Zp inverses by the extended Euclidean algorithm on plain integers;
//  - F_q arithmetic by schoolbook polynomial multiplication modulo the
//    defining polynomial, and inverses by exhaustive search;
//  - skew products by expanding x^i·r over all words in {σ, δ}^i.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "skewps/series.hpp"

namespace oracle {

using skewps::Element;

/// a^{-1} mod m by the extended Euclidean algorithm; 0 when gcd(a, m) != 1.
inline uint64_t inverse_mod(uint64_t a, uint64_t m) {
  int64_t r0 = static_cast<int64_t>(m), r1 = static_cast<int64_t>(a % m);
  int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) return 0;
  const int64_t mm = static_cast<int64_t>(m);
  return static_cast<uint64_t>(((s0 % mm) + mm) % mm);
}

/// F_q = F_p[w]/(f) with f monic of degree n given by its low coefficients;
/// elements encoded by base-p digits (digit k = coefficient of w^k).
struct FieldOracle {
  uint32_t p, n, q;
  std::vector<uint32_t> low;  // f = w^n + Σ low[k] w^k

  FieldOracle(uint32_t p_, std::vector<uint32_t> low_) : p(p_), n(static_cast<uint32_t>(low_.size())), low(std::move(low_)) {
    q = 1;
    for (uint32_t i = 0; i < n; ++i) q *= p;
  }

  std::vector<uint32_t> digits(uint32_t a) const {
    std::vector<uint32_t> d(n);
    for (uint32_t k = 0; k < n; ++k, a /= p) d[k] = a % p;
    return d;
  }
  uint32_t encode(const std::vector<uint32_t>& d) const {
    uint32_t a = 0;
    for (uint32_t k = n; k-- > 0;) a = a * p + d[k];
    return a;
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (uint32_t k = 0; k < n; ++k) x[k] = (x[k] + y[k]) % p;
    return encode(x);
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<uint32_t> prod(2 * n, 0);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    // reduce w^k for k >= n using w^n = −Σ low[k] w^k
    for (uint32_t k = 2 * n - 1; k >= n; --k) {
      const uint32_t c = prod[k];
      prod[k] = 0;
      for (uint32_t j = 0; j < n; ++j) prod[k - n + j] = (prod[k - n + j] + (p - low[j]) % p * c) % p;
    }
    prod.resize(n);
    return encode(prod);
  }
  uint32_t inv(uint32_t a) const {
    for (uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  /// Multiplicative order of a nonzero element.
  uint32_t order(uint32_t a) const {
    uint32_t x = a, k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

/// x^i·r = Σ_{w ∈ {σ,δ}^i} w(r) x^{#σ in w}, the letters applied innermost
/// first. Returns coefficients of x^0..x^i.
inline std::vector<Element> x_power_times(const skewps::Twist& tw, int i, const Element& r) {
  std::vector<Element> out(i + 1, Element::zero(r.ring()));
  std::function<void(int, int, const Element&)> rec = [&](int left, int sigmas, const Element& v) {
    if (left == 0) {
      out[sigmas] = out[sigmas] + v;
      return;
    }
    rec(left - 1, sigmas + 1, skewps::apply_sigma(tw, v));
    rec(left - 1, sigmas, skewps::apply_delta(tw, v));
  };
  rec(i, 0, r);
  return out;
}

/// (Σ a_i x^i)(Σ b_j x^j) by word expansion, coefficients up to degree < limit.
inline std::vector<Element> skew_product(const skewps::Twist& tw, const std::vector<Element>& a,
                                         const std::vector<Element>& b, int limit) {
  const skewps::Ring& ring = a.at(0).ring();
  std::vector<Element> out(limit, Element::zero(ring));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      if (a[i].is_exact_zero() || b[j].is_exact_zero()) continue;
      const std::vector<Element> xb = x_power_times(tw, static_cast<int>(i), b[j].lifted());
      for (size_t k = 0; k < xb.size(); ++k)
        if (static_cast<int>(k + j) < limit) out[k + j] = out[k + j] + a[i].lifted() * xb[k];
    }
  return out;
}

/// Product of two series by word expansion, compared slot by slot at the
/// precision the kernel claims: returns true when every slot agrees.
inline bool product_agrees(const skewps::SkewSeries& a, const skewps::SkewSeries& b, const skewps::SkewSeries& got) {
  const auto ref = skew_product(a.context()->twist, a.coeffs(), b.coeffs(), a.cap());
  for (int k = 0; k < a.cap(); ++k)
    if (!skewps::congruent(ref[k], got.coeff(k))) return false;
  return true;
}

}  // namespace oracle
