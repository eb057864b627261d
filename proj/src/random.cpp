#include "skewps/random.hpp"

#include "skewps/errors.hpp"

namespace skewps {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::child(uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream))); }

Rng Rng::child(std::string_view label) const {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return child(h);
}

namespace {

Element random_leaf_unit(const Ring& ring, int prec, Rng& rng) {
  if (ring->kind == RingKind::Zp) {
    uint64_t m = ring->ppow[prec];
    uint64_t r;
    do {
      r = rng.below(m);
    } while (r % ring->p == 0);
    return Element::zp(ring, static_cast<int64_t>(r), prec);
  }
  std::vector<uint32_t> c(prec);
  for (int i = 0; i < prec; ++i) c[i] = static_cast<uint32_t>(rng.below(ring->q));
  while (c[0] == 0) c[0] = static_cast<uint32_t>(rng.below(ring->q));
  return Element::fq_series(ring, std::move(c), prec);
}

}  // namespace

Element random_element(const Ring& ring, Rng& rng) {
  switch (ring->kind) {
    case RingKind::Zp:
      return Element::zp(ring, static_cast<int64_t>(rng.below(ring->ppow[ring->cap])));
    case RingKind::FqSeries: {
      std::vector<uint32_t> c(ring->cap);
      for (auto& x : c) x = static_cast<uint32_t>(rng.below(ring->q));
      return Element::fq_series(ring, std::move(c));
    }
    case RingKind::Matrix: {
      std::vector<Element> e;
      for (int i = 0; i < ring->n * ring->n; ++i) e.push_back(random_element(ring->inner, rng));
      return Element::matrix(ring, std::move(e));
    }
    case RingKind::Product: {
      std::vector<Element> e;
      for (const auto& f : ring->factors) e.push_back(random_element(f, rng));
      return Element::product(ring, std::move(e));
    }
  }
  return {};
}

Element random_with_val(const Ring& ring, int k, Rng& rng) {
  const int cap = ring->level_cap();
  if (k < 0 || k >= cap) throw ValueTooLow("random_with_val: level outside 0..cap-1");
  switch (ring->kind) {
    case RingKind::Zp:
    case RingKind::FqSeries: {
      // π^k times a unit known to the remaining precision
      Element u = random_leaf_unit(ring, ring->cap - k, rng);
      return u.lifted().times_uniformiser_power(k).lifted();
    }
    case RingKind::Matrix: {
      const int nn = ring->n * ring->n;
      const int pinned = static_cast<int>(rng.below(nn));
      std::vector<Element> e;
      for (int i = 0; i < nn; ++i)
        e.push_back(i == pinned ? random_with_val(ring->inner, k, rng)
                                : random_val_at_least(ring->inner, k, rng));
      return Element::matrix(ring, std::move(e));
    }
    case RingKind::Product: {
      const int pinned = static_cast<int>(rng.below(ring->factors.size()));
      std::vector<Element> e;
      for (size_t i = 0; i < ring->factors.size(); ++i)
        e.push_back(static_cast<int>(i) == pinned ? random_with_val(ring->factors[i], k, rng)
                                                  : random_val_at_least(ring->factors[i], k, rng));
      return Element::product(ring, std::move(e));
    }
  }
  return {};
}

Element random_val_at_least(const Ring& ring, int k, Rng& rng) {
  const int cap = ring->level_cap();
  if (k >= cap) return Element::zero(ring).truncated(cap).lifted();
  if (ring->is_leaf()) {
    // pick a level in k..cap, cap meaning zero
    int level = rng.uniform_int(k, ring->cap);
    if (level == ring->cap) return Element::zero(ring).truncated(ring->cap);
    return random_with_val(ring, level, rng);
  }
  if (ring->kind == RingKind::Matrix) {
    std::vector<Element> e;
    for (int i = 0; i < ring->n * ring->n; ++i) e.push_back(random_val_at_least(ring->inner, k, rng));
    return Element::matrix(ring, std::move(e));
  }
  std::vector<Element> e;
  for (const auto& f : ring->factors) e.push_back(random_val_at_least(f, k, rng));
  return Element::product(ring, std::move(e));
}

Element random_unit(const Ring& ring, Rng& rng) {
  if (ring->is_leaf()) return random_leaf_unit(ring, ring->cap, rng);
  if (ring->kind == RingKind::Product) {
    std::vector<Element> e;
    for (const auto& f : ring->factors) e.push_back(random_unit(f, rng));
    return Element::product(ring, std::move(e));
  }
  for (;;) {
    Element m = random_element(ring, rng);
    try {
      m.invert_unit();
      return m;
    } catch (const NotAUnit&) {
    }
  }
}

Element random_stratified(const Ring& ring, Rng& rng) {
  return random_with_val(ring, rng.uniform_int(0, ring->level_cap() - 1), rng);
}

}  // namespace skewps
