#pragma once

// Finite linear combinations of basis labels with scalar coefficients.
// No zero coefficient is ever stored, so equality is structural.  The Tag
// parameter keeps elements of different modules (free algebra, shuffle side,
// Verma tensors, ...) from being mixed by accident.

#include <map>

#include "qsh/fraction.hpp"

namespace qsh {

template <class Key, class Tag>
class Combination {
 public:
  using Map = std::map<Key, Scalar>;

  Combination() = default;
  explicit Combination(const Key& k, Scalar c = Scalar(1L)) { add(k, std::move(c)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
  Combination operator-() const { return Scalar(-1L) * *this; }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

}  // namespace qsh
