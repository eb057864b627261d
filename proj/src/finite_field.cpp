#include "skewps/finite_field.hpp"

#include <map>
#include <mutex>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

struct Conway {
  uint32_t p;
  uint32_t degree;
  std::vector<uint32_t> low;  // coefficients of w^0..w^(degree-1)
};

// Conway polynomials; the monic top term is implicit.
const std::map<uint32_t, Conway>& conway_table() {
  static const std::map<uint32_t, Conway> table = {
      {4, {2, 2, {1, 1}}},          // w^2 + w + 1
      {8, {2, 3, {1, 1, 0}}},       // w^3 + w + 1
      {16, {2, 4, {1, 1, 0, 0}}},   // w^4 + w + 1
      {32, {2, 5, {1, 0, 1, 0, 0}}},  // w^5 + w^2 + 1
      {64, {2, 6, {1, 1, 0, 1, 1, 0}}},  // w^6 + w^4 + w^3 + w + 1
      {9, {3, 2, {2, 2}}},          // w^2 + 2w + 2
      {27, {3, 3, {1, 2, 0}}},      // w^3 + 2w + 1
      {81, {3, 4, {2, 0, 0, 2}}},   // w^4 + 2w^3 + 2
      {25, {5, 2, {2, 4}}},         // w^2 + 4w + 2
      {125, {5, 3, {3, 3, 0}}},     // w^3 + 3w + 3
      {49, {7, 2, {3, 6}}},         // w^2 + 6w + 3
      {121, {11, 2, {2, 7}}},       // w^2 + 7w + 2
      {169, {13, 2, {2, 12}}},      // w^2 + 12w + 2
  };
  return table;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> digits(uint32_t a, uint32_t p, uint32_t len) {
  std::vector<uint32_t> out(len);
  for (uint32_t i = 0; i < len; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

uint32_t undigits(const std::vector<uint32_t>& d, uint32_t p) {
  uint32_t a = 0;
  for (size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

std::vector<uint32_t> supported_field_orders() {
  std::vector<uint32_t> out;
  for (uint32_t p = 2; p < 256; ++p)
    if (is_prime(p)) out.push_back(p);
  for (const auto& [q, c] : conway_table()) out.push_back(q);
  return out;
}

std::shared_ptr<const FiniteField> FiniteField::get(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const FiniteField>(new FiniteField(q));
  cache.emplace(q, f);
  return f;
}

FiniteField::FiniteField(uint32_t q) : q_(q) {
  if (is_prime(q) && q < 256) {
    p_ = q;
    degree_ = 1;
    modulus_ = {};
  } else {
    auto it = conway_table().find(q);
    if (it == conway_table().end())
      throw ParseError("unsupported field order q=" + std::to_string(q) +
                       " (use a prime < 256 or a tabulated prime power)");
    p_ = it->second.p;
    degree_ = it->second.degree;
    modulus_ = it->second.low;
  }
  const uint32_t n = q_ * q_;
  add_.resize(n);
  mul_.resize(n);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    auto da = digits(a, p_, degree_);
    std::vector<uint32_t> dn(degree_);
    for (uint32_t i = 0; i < degree_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (uint32_t b = 0; b < q_; ++b) {
      auto db = digits(b, p_, degree_);
      std::vector<uint32_t> ds(degree_);
      for (uint32_t i = 0; i < degree_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = undigits(ds, p_);
      // schoolbook product, then reduce by the monic modulus from the top
      std::vector<uint32_t> prod(2 * degree_ - 1, 0);
      for (uint32_t i = 0; i < degree_; ++i)
        for (uint32_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (size_t k = prod.size(); k-- > degree_;) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < degree_; ++i) {
          size_t pos = k - degree_ + i;
          prod[pos] = (prod[pos] + (p_ - c) * modulus_[i]) % p_;
        }
      }
      prod.resize(degree_);
      mul_[a * q_ + b] = undigits(prod, p_);
    }
  }
  for (uint32_t a = 1; a < q_; ++a)
    for (uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

FiniteField::Elt FiniteField::frobenius(Elt a, int64_t e) const {
  int64_t k = e % static_cast<int64_t>(degree_);
  if (k < 0) k += degree_;
  for (int64_t step = 0; step < k; ++step) {
    Elt r = 1;
    for (uint32_t i = 0; i < p_; ++i) r = mul(r, a);
    a = r;
  }
  return a;
}

FiniteField::Elt FiniteField::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

}  // namespace skewps
