#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "skewps/ring.hpp"

namespace skewps {

/// Seeded generator with a splittable child scheme: child(k) reseeds from
/// splitmix64(seed ^ splitmix64(k)), so every suite, configuration and
/// trial owns an independent reproducible stream derived from one seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

  uint64_t seed() const { return seed_; }
  Rng child(uint64_t stream) const;
  Rng child(std::string_view label) const;

  uint64_t below(uint64_t n) { return std::uniform_int_distribution<uint64_t>(0, n - 1)(eng_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return below(2) == 1; }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
};

uint64_t splitmix64(uint64_t x);

/// Uniform canonical residue at full precision (val distributed as it falls).
Element random_element(const Ring& ring, Rng& rng);
/// Element whose val is exactly k (k < level cap), uniform among canonical
/// residues of that val. Stratifying by k avoids never sampling high vals.
Element random_with_val(const Ring& ring, int k, Rng& rng);
/// Element with val >= k (may be zero).
Element random_val_at_least(const Ring& ring, int k, Rng& rng);
/// Unit with val(u) = val(u^{-1}) = 0.
Element random_unit(const Ring& ring, Rng& rng);
/// Random element whose val level is drawn uniformly from 0..cap-1.
Element random_stratified(const Ring& ring, Rng& rng);

}  // namespace skewps
