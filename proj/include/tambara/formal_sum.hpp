#pragma once

// Finite Z-linear combinations of canonical keys, with overflow-checked
// 64-bit coefficients and no stored zeros.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace tambara {

using Coef = std::int64_t;

inline Coef checked_add(Coef a, Coef b) {
  Coef r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coef checked_mul(Coef a, Coef b) {
  Coef r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

template <class Key>
class FormalSum {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Coef>;

  FormalSum() = default;

  static FormalSum single(Key k, Coef c = 1) {
    FormalSum s;
    s.add_term(std::move(k), c);
    return s;
  }

  void add_term(const Key& k, Coef c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, checked_mul(c, -1));
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

  FormalSum scaled(Coef n) const {
    FormalSum out;
    if (n == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, checked_mul(c, n));
    return out;
  }
  FormalSum negated() const { return scaled(-1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coef coef(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_nonnegative() const {
    for (const auto& [k, c] : terms_)
      if (c < 0) return false;
    return true;
  }
  FormalSum positive_part() const {
    FormalSum out;
    for (const auto& [k, c] : terms_)
      if (c > 0) out.terms_.emplace(k, c);
    return out;
  }
  /// The negative part, with its signs flipped.
  FormalSum negative_part() const {
    FormalSum out;
    for (const auto& [k, c] : terms_)
      if (c < 0) out.terms_.emplace(k, -c);
    return out;
  }

  bool operator==(const FormalSum&) const = default;
  bool operator<(const FormalSum& o) const { return terms_ < o.terms_; }

 private:
  Terms terms_;
};

}  // namespace tambara
