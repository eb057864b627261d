#include "skewps/ring.hpp"

#include <algorithm>
#include <json.hpp>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<u128>(a) * b) % m);
}

uint64_t reduce_signed(int64_t v, uint64_t m) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<uint64_t>(r);
}

// Inverse of a modulo m for gcd(a, m) = 1.
uint64_t modinv(uint64_t a, uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    __int128 tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_same(const Element& a, const Element& b, const char* op) {
  if (!same_ring(a.ring(), b.ring()))
    throw DescriptorMismatch(std::string(op) + ": " + a.ring()->canonical + " vs " +
                             b.ring()->canonical);
}

}  // namespace

// Grants the free helpers below access to Element's representation.
class ElementAccess {
 public:
  static Element leaf(const Ring& ring, int prec) {
    Element e;
    e.ring_ = ring;
    e.prec_ = prec;
    if (ring->kind == RingKind::FqSeries && prec != Element::kExact) e.fq_.assign(prec, 0);
    return e;
  }
  static Element composite(const Ring& ring, std::vector<Element> parts) {
    Element e;
    e.ring_ = ring;
    e.parts_ = std::move(parts);
    return e;
  }
  static uint64_t& zp(Element& e) { return e.zp_; }
  static std::vector<uint32_t>& fq(Element& e) { return e.fq_; }
  static int& prec(Element& e) { return e.prec_; }
  static std::vector<Element>& parts(Element& e) { return e.parts_; }
};

using A = ElementAccess;

// ---------------------------------------------------------------- descriptors

Ring RingDescriptor::zp(uint64_t p, int cap) {
  if (!is_prime64(p)) throw ParseError("Zp: p=" + std::to_string(p) + " is not prime");
  if (cap < 1) throw ParseError("Zp: level cap must be >= 1");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Zp;
  d->p = p;
  d->cap = cap;
  d->ppow.push_back(1);
  for (int i = 0; i < cap; ++i) {
    u128 next = static_cast<u128>(d->ppow.back()) * p;
    if (next > (static_cast<u128>(1) << 62))
      throw ParseError("Zp: p^N exceeds 2^62 (p=" + std::to_string(p) + ", N=" +
                       std::to_string(cap) + ")");
    d->ppow.push_back(static_cast<uint64_t>(next));
  }
  nlohmann::json j = {{"kind", "Zp"}, {"p", p}, {"N", cap}};
  d->canonical = j.dump();
  return d;
}

Ring RingDescriptor::fq_series(uint32_t q, int cap) {
  if (cap < 1) throw ParseError("FqSeries: level cap must be >= 1");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::FqSeries;
  d->field = FiniteField::get(q);
  d->p = d->field->p();
  d->q = q;
  d->cap = cap;
  nlohmann::json j = {{"kind", "FqSeries"}, {"q", q}, {"N", cap}};
  d->canonical = j.dump();
  return d;
}

Ring RingDescriptor::matrix(int n, Ring inner) {
  if (n < 1) throw ParseError("Matrix: n must be >= 1");
  if (!inner) throw ParseError("Matrix: missing inner ring");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Matrix;
  d->n = n;
  d->inner = std::move(inner);
  d->canonical = "{\"inner\":" + d->inner->canonical + ",\"kind\":\"Matrix\",\"n\":" +
                 std::to_string(n) + "}";
  return d;
}

Ring RingDescriptor::product(std::vector<Ring> factors) {
  if (factors.empty()) throw ParseError("Product: needs at least one factor");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Product;
  d->factors = std::move(factors);
  std::string s = "{\"factors\":[";
  for (size_t i = 0; i < d->factors.size(); ++i) {
    if (i) s += ",";
    s += d->factors[i]->canonical;
  }
  s += "],\"kind\":\"Product\"}";
  d->canonical = s;
  return d;
}

int RingDescriptor::level_cap() const {
  switch (kind) {
    case RingKind::Zp:
    case RingKind::FqSeries:
      return cap;
    case RingKind::Matrix:
      return inner->level_cap();
    case RingKind::Product: {
      int c = factors.front()->level_cap();
      for (const auto& f : factors) c = std::min(c, f->level_cap());
      return c;
    }
  }
  return 0;
}

bool RingDescriptor::is_commutative() const {
  switch (kind) {
    case RingKind::Zp:
    case RingKind::FqSeries:
      return true;
    case RingKind::Matrix:
      return n == 1 && inner->is_commutative();
    case RingKind::Product:
      return std::all_of(factors.begin(), factors.end(),
                         [](const Ring& f) { return f->is_commutative(); });
  }
  return false;
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && a->canonical == b->canonical);
}

// ---------------------------------------------------------------- construction

Element Element::zero(const Ring& ring) {
  if (ring->is_leaf()) return A::leaf(ring, kExact);
  std::vector<Element> parts;
  if (ring->kind == RingKind::Matrix) {
    parts.assign(ring->n * ring->n, zero(ring->inner));
  } else {
    for (const auto& f : ring->factors) parts.push_back(zero(f));
  }
  return A::composite(ring, std::move(parts));
}

Element Element::one(const Ring& ring) { return from_int(ring, 1); }

Element Element::from_int(const Ring& ring, int64_t n) {
  switch (ring->kind) {
    case RingKind::Zp:
      return zp(ring, n);
    case RingKind::FqSeries: {
      std::vector<uint32_t> c(ring->cap, 0);
      c[0] = ring->field->from_int(n);
      return fq_series(ring, std::move(c));
    }
    case RingKind::Matrix:
      return scalar_matrix(ring, from_int(ring->inner, n));
    case RingKind::Product: {
      std::vector<Element> parts;
      for (const auto& f : ring->factors) parts.push_back(from_int(f, n));
      return A::composite(ring, std::move(parts));
    }
  }
  return {};
}

Element Element::zp(const Ring& ring, int64_t value, int prec) {
  if (ring->kind != RingKind::Zp) throw ShapeMismatch("Element::zp on " + ring->canonical);
  if (prec < 0) prec = ring->cap;
  if (prec > ring->cap) throw ParseError("precision above the ring cap");
  Element e = A::leaf(ring, prec);
  A::zp(e) = reduce_signed(value, ring->ppow[prec]);
  return e;
}

Element Element::fq_series(const Ring& ring, std::vector<uint32_t> coeffs, int prec) {
  if (ring->kind != RingKind::FqSeries)
    throw ShapeMismatch("Element::fq_series on " + ring->canonical);
  if (prec < 0) prec = ring->cap;
  if (prec > ring->cap) throw ParseError("precision above the ring cap");
  if (static_cast<int>(coeffs.size()) > prec)
    throw ParseError("FqSeries literal has " + std::to_string(coeffs.size()) +
                     " coefficients but precision " + std::to_string(prec));
  for (auto c : coeffs)
    if (c >= ring->q) throw ParseError("F_q coefficient out of range: " + std::to_string(c));
  coeffs.resize(prec, 0);
  Element e = A::leaf(ring, prec);
  A::fq(e) = std::move(coeffs);
  return e;
}

Element Element::matrix(const Ring& ring, std::vector<Element> entries) {
  if (ring->kind != RingKind::Matrix) throw ShapeMismatch("Element::matrix on " + ring->canonical);
  if (static_cast<int>(entries.size()) != ring->n * ring->n)
    throw ShapeMismatch("matrix literal has wrong number of entries");
  for (const auto& e : entries)
    if (!same_ring(e.ring(), ring->inner)) throw DescriptorMismatch("matrix entry ring");
  return A::composite(ring, std::move(entries));
}

Element Element::product(const Ring& ring, std::vector<Element> parts) {
  if (ring->kind != RingKind::Product)
    throw ShapeMismatch("Element::product on " + ring->canonical);
  if (parts.size() != ring->factors.size()) throw ShapeMismatch("product arity");
  for (size_t i = 0; i < parts.size(); ++i)
    if (!same_ring(parts[i].ring(), ring->factors[i])) throw DescriptorMismatch("product factor");
  return A::composite(ring, std::move(parts));
}

Element Element::matrix_unit(const Ring& ring, int i, int j) {
  if (ring->kind != RingKind::Matrix) throw ShapeMismatch("matrix_unit on " + ring->canonical);
  std::vector<Element> parts(ring->n * ring->n, zero(ring->inner));
  parts[i * ring->n + j] = one(ring->inner);
  return A::composite(ring, std::move(parts));
}

Element Element::scalar_matrix(const Ring& ring, const Element& a) {
  if (ring->kind != RingKind::Matrix) throw ShapeMismatch("scalar_matrix on " + ring->canonical);
  std::vector<Element> parts(ring->n * ring->n, zero(ring->inner));
  for (int i = 0; i < ring->n; ++i) parts[i * ring->n + i] = a;
  return A::composite(ring, std::move(parts));
}

// ---------------------------------------------------------------- queries

int Element::precision() const {
  if (ring_->is_leaf()) return prec_;
  int p = kExact;
  for (const auto& e : parts_) p = std::min(p, e.precision());
  return p;
}

bool Element::is_exact_zero() const {
  if (ring_->is_leaf()) return prec_ == kExact;
  return std::all_of(parts_.begin(), parts_.end(), [](const Element& e) { return e.is_exact_zero(); });
}

bool Element::is_zero() const {
  switch (ring_->kind) {
    case RingKind::Zp:
      return zp_ == 0;
    case RingKind::FqSeries:
      return std::all_of(fq_.begin(), fq_.end(), [](uint32_t c) { return c == 0; });
    default:
      return std::all_of(parts_.begin(), parts_.end(), [](const Element& e) { return e.is_zero(); });
  }
}

Level Element::val() const {
  switch (ring_->kind) {
    case RingKind::Zp: {
      if (prec_ == kExact) return Level::infinity();
      if (zp_ == 0) return Level::at_least(prec_);
      int64_t v = 0;
      uint64_t r = zp_;
      while (r % ring_->p == 0) {
        r /= ring_->p;
        ++v;
      }
      return Level::exact(v);
    }
    case RingKind::FqSeries: {
      if (prec_ == kExact) return Level::infinity();
      for (size_t i = 0; i < fq_.size(); ++i)
        if (fq_[i] != 0) return Level::exact(static_cast<int64_t>(i));
      return Level::at_least(prec_);
    }
    default: {
      Level l = Level::infinity();
      for (const auto& e : parts_) l = Level::min(l, e.val());
      return l;
    }
  }
}

// ---------------------------------------------------------------- arithmetic

Element Element::operator+(const Element& o) const {
  require_same(*this, o, "add");
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i] + o.parts_[i];
    return A::composite(ring_, std::move(parts));
  }
  if (prec_ == kExact) return o;
  if (o.prec_ == kExact) return *this;
  int prec = std::min(prec_, o.prec_);
  Element r = A::leaf(ring_, prec);
  if (ring_->kind == RingKind::Zp) {
    uint64_t m = ring_->ppow[prec];
    A::zp(r) = (zp_ % m + o.zp_ % m) % m;
  } else {
    const auto& f = *ring_->field;
    for (int i = 0; i < prec; ++i) A::fq(r)[i] = f.add(fq_[i], o.fq_[i]);
  }
  return r;
}

Element Element::operator-() const {
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = -parts_[i];
    return A::composite(ring_, std::move(parts));
  }
  if (prec_ == kExact) return *this;
  Element r = *this;
  if (ring_->kind == RingKind::Zp) {
    uint64_t m = ring_->ppow[prec_];
    A::zp(r) = (m - zp_ % m) % m;
  } else {
    for (auto& c : A::fq(r)) c = ring_->field->neg(c);
  }
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
  require_same(*this, o, "mul");
  switch (ring_->kind) {
    case RingKind::Matrix: {
      const int n = ring_->n;
      std::vector<Element> parts(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Element acc = zero(ring_->inner);
          for (int k = 0; k < n; ++k) {
            const Element& a = parts_[i * n + k];
            const Element& b = o.parts_[k * n + j];
            if (a.is_exact_zero() || b.is_exact_zero()) continue;
            acc = acc + a * b;
          }
          parts[i * n + j] = std::move(acc);
        }
      return A::composite(ring_, std::move(parts));
    }
    case RingKind::Product: {
      std::vector<Element> parts(parts_.size());
      for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i] * o.parts_[i];
      return A::composite(ring_, std::move(parts));
    }
    default:
      break;
  }
  if (prec_ == kExact || o.prec_ == kExact) return zero(ring_);
  // f(ab - a'b') >= min(k_a + v(b), k_b + v(a))
  const int64_t va = val().value();
  const int64_t vb = o.val().value();
  int prec = static_cast<int>(
      std::min<int64_t>({prec_ + vb, o.prec_ + va, static_cast<int64_t>(ring_->cap)}));
  Element r = A::leaf(ring_, prec);
  if (ring_->kind == RingKind::Zp) {
    A::zp(r) = mulmod(zp_, o.zp_, ring_->ppow[prec]);
  } else {
    const auto& f = *ring_->field;
    auto& out = A::fq(r);
    for (int i = 0; i < prec && i < prec_; ++i) {
      if (fq_[i] == 0) continue;
      for (int j = 0; i + j < prec && j < o.prec_; ++j)
        out[i + j] = f.add(out[i + j], f.mul(fq_[i], o.fq_[j]));
    }
  }
  return r;
}

Element Element::invert_unit() const {
  switch (ring_->kind) {
    case RingKind::Zp: {
      if (prec_ == kExact || prec_ == 0 || zp_ % ring_->p == 0)
        throw NotAUnit("element of val " + val().str() + " is not a unit in " + ring_->canonical);
      Element r = A::leaf(ring_, prec_);
      A::zp(r) = modinv(zp_, ring_->ppow[prec_]);
      return r;
    }
    case RingKind::FqSeries: {
      if (prec_ == kExact || prec_ == 0 || fq_[0] == 0)
        throw NotAUnit("element of val " + val().str() + " is not a unit in " + ring_->canonical);
      const auto& f = *ring_->field;
      Element r = A::leaf(ring_, prec_);
      auto& b = A::fq(r);
      const uint32_t c0inv = f.inv(fq_[0]);
      b[0] = c0inv;
      for (int k = 1; k < prec_; ++k) {
        uint32_t s = 0;
        for (int j = 1; j <= k; ++j) s = f.add(s, f.mul(fq_[j], b[k - j]));
        b[k] = f.neg(f.mul(c0inv, s));
      }
      return r;
    }
    case RingKind::Product: {
      std::vector<Element> parts(parts_.size());
      for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i].invert_unit();
      return A::composite(ring_, std::move(parts));
    }
    case RingKind::Matrix:
      break;
  }
  // Gauss-Jordan with left row operations; pivots must be units of the
  // inner ring, which exist exactly when the residue matrix is invertible.
  const int n = ring_->n;
  std::vector<std::vector<Element>> a(n), b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i].push_back(entry(i, j));
      b[i].push_back(i == j ? one(ring_->inner) : zero(ring_->inner));
    }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    Element pinv;
    for (int r = c; r < n && pivot < 0; ++r) {
      Level v = a[r][c].val();
      if (!v.is_exact() || v.is_infinite() || v.value() != 0) continue;
      try {
        pinv = a[r][c].invert_unit();
        pivot = r;
      } catch (const NotAUnit&) {
      }
    }
    if (pivot < 0) throw NotAUnit("residue matrix is singular in " + ring_->canonical);
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int j = 0; j < n; ++j) {
      a[c][j] = pinv * a[c][j];
      b[c][j] = pinv * b[c][j];
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_exact_zero()) continue;
      Element factor = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - factor * a[c][j];
        b[r][j] = b[r][j] - factor * b[c][j];
      }
    }
  }
  std::vector<Element> parts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) parts.push_back(b[i][j]);
  return A::composite(ring_, std::move(parts));
}

Element Element::lifted() const {
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i].lifted();
    return A::composite(ring_, std::move(parts));
  }
  if (prec_ == kExact) return *this;
  Element r = *this;
  A::prec(r) = ring_->cap;
  if (ring_->kind == RingKind::FqSeries) A::fq(r).resize(ring_->cap, 0);
  return r;
}

Element Element::truncated(int k) const {
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i].truncated(k);
    return A::composite(ring_, std::move(parts));
  }
  k = std::max(0, std::min(k, ring_->cap));
  if (prec_ != kExact && prec_ <= k) return *this;
  Element r = A::leaf(ring_, k);
  if (prec_ == kExact) return r;
  if (ring_->kind == RingKind::Zp) {
    A::zp(r) = zp_ % ring_->ppow[k];
  } else {
    std::copy(fq_.begin(), fq_.begin() + k, A::fq(r).begin());
  }
  return r;
}

Element Element::times_uniformiser_power(int k) const {
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i].times_uniformiser_power(k);
    return A::composite(ring_, std::move(parts));
  }
  if (prec_ == kExact || k == 0) return *this;
  int prec = std::min(prec_ + k, ring_->cap);
  Element r = A::leaf(ring_, prec);
  if (ring_->kind == RingKind::Zp) {
    A::zp(r) = k >= prec ? 0 : mulmod(zp_, ring_->ppow[k], ring_->ppow[prec]);
  } else {
    for (int i = 0; i + k < prec; ++i) A::fq(r)[i + k] = fq_[i];
  }
  return r;
}

Element Element::divided_by_uniformiser_power(int k) const {
  if (!ring_->is_leaf()) {
    std::vector<Element> parts(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) parts[i] = parts_[i].divided_by_uniformiser_power(k);
    return A::composite(ring_, std::move(parts));
  }
  if (prec_ == kExact || k == 0) return *this;
  const int known = std::min(prec_, k);
  if (!truncated(known).is_zero())
    throw NotSolvable("element is not divisible by the uniformiser power " + std::to_string(k));
  int prec = std::max(0, prec_ - k);
  Element r = A::leaf(ring_, prec);
  if (prec == 0) return r;
  if (ring_->kind == RingKind::Zp) {
    A::zp(r) = zp_ / ring_->ppow[k];
  } else {
    for (int i = 0; i < prec; ++i) A::fq(r)[i] = fq_[i + k];
  }
  return r;
}

bool congruent(const Element& a, const Element& b) { return (a - b).is_zero(); }

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
Level val(const Element& a) { return a.val(); }
Element invert_unit(const Element& a) { return a.invert_unit(); }

Element uniformiser(const Ring& ring) {
  switch (ring->kind) {
    case RingKind::Zp:
      return Element::from_int(ring, static_cast<int64_t>(ring->p));
    case RingKind::FqSeries: {
      if (ring->cap < 2) return Element::fq_series(ring, {0});
      return Element::fq_series(ring, {0, 1});
    }
    case RingKind::Matrix:
      return Element::scalar_matrix(ring, uniformiser(ring->inner));
    case RingKind::Product: {
      for (const auto& f : ring->factors)
        if (!same_ring(f, ring->factors.front()))
          throw NoUniformiser("product factors differ: " + ring->canonical);
      std::vector<Element> parts;
      for (const auto& f : ring->factors) parts.push_back(uniformiser(f));
      return Element::product(ring, std::move(parts));
    }
  }
  throw NoUniformiser(ring->canonical);
}

// ------------------------------------------------------------------ factor subsets

Ring restricted_ring(const Ring& parent, const std::vector<int>& idx) {
  if (parent->kind != RingKind::Product) throw ShapeMismatch("restriction needs a product ring");
  if (idx.empty()) throw ShapeMismatch("restriction to an empty factor set");
  for (int i : idx)
    if (i < 0 || i >= static_cast<int>(parent->factors.size()))
      throw ShapeMismatch("restricted factor index out of range");
  if (idx.size() == 1) return parent->factors[idx[0]];
  std::vector<Ring> fs;
  for (int i : idx) fs.push_back(parent->factors[i]);
  return RingDescriptor::product(std::move(fs));
}

Element embed_factors(const Ring& parent, const std::vector<int>& idx, const Element& b) {
  std::vector<Element> parts;
  for (const auto& f : parent->factors) parts.push_back(Element::zero(f));
  if (idx.size() == 1) {
    parts[idx[0]] = b;
  } else {
    for (size_t k = 0; k < idx.size(); ++k) parts[idx[k]] = b.parts()[k];
  }
  return Element::product(parent, std::move(parts));
}

Element project_factors(const Ring& sub, const std::vector<int>& idx, const Element& r) {
  if (idx.size() == 1) return r.parts()[idx[0]];
  std::vector<Element> parts;
  for (int i : idx) parts.push_back(r.parts()[i]);
  return Element::product(sub, std::move(parts));
}

}  // namespace skewps
