#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace skewps {

/// A filtration value in N ∪ {∞}. Values computed from truncated data are
/// either exact or only known to be at least `value`.
class Level {
 public:
  static Level exact(int64_t v) { return Level(v, false, true); }
  static Level at_least(int64_t v) { return Level(v, false, false); }
  static Level infinity() { return Level(0, true, true); }

  bool is_infinite() const { return infinite_; }
  bool is_exact() const { return exact_; }
  /// Undefined for infinite levels; callers check is_infinite() first.
  int64_t value() const { return value_; }

  /// Shift by an integer (used for v(r_i) + i).
  Level plus(int64_t k) const {
    if (infinite_) return *this;
    return Level(value_ + k, false, exact_);
  }

  /// min that keeps track of exactness: min(3, >=3) is exactly 3,
  /// min(>=2, 3) is only >=2.
  static Level min(const Level& a, const Level& b) {
    if (a.infinite_) return b;
    if (b.infinite_) return a;
    if (a.value_ < b.value_) return a;
    if (b.value_ < a.value_) return b;
    return Level(a.value_, false, a.exact_ || b.exact_);
  }

  /// True when the level is certainly >= k.
  bool at_least_value(int64_t k) const { return infinite_ || value_ >= k; }
  /// True when the level is certainly > k.
  bool greater_than(int64_t k) const { return infinite_ || value_ > k; }
  /// Clamp to a cap: anything >= cap collapses to the lower bound ">= cap".
  Level clamped(int64_t cap) const {
    if (infinite_ || value_ >= cap) return at_least(cap);
    return *this;
  }

  std::string str() const {
    if (infinite_) return "inf";
    return (exact_ ? "" : ">=") + std::to_string(value_);
  }

  friend bool operator==(const Level& a, const Level& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_ && a.exact_ == b.exact_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Level& l) { return os << l.str(); }

 private:
  Level(int64_t v, bool inf, bool ex) : value_(v), infinite_(inf), exact_(ex) {}
  int64_t value_;
  bool infinite_;
  bool exact_;
};

}  // namespace skewps
