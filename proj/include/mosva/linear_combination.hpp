#ifndef MOSVA_LINEAR_COMBINATION_HPP
#define MOSVA_LINEAR_COMBINATION_HPP

#include <map>
#include <ostream>
#include <utility>

#include "mosva/scalar.hpp"

namespace mosva {

/// Finite formal sum of basis keys with exact coefficients; zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using container = std::map<Key, Scalar>;
  using const_iterator = typename container::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key k, Scalar c = Scalar(1)) { add(std::move(k), std::move(c)); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& scale = Scalar(1)) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, scale.is_one() ? c : c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinearCombination& a, const LinearCombination& b) { return !(a == b); }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  friend std::ostream& operator<<(std::ostream& os, const LinearCombination& lc) {
    if (lc.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [k, c] : lc.terms_) {
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) os << c << "*";
      os << k;
    }
    return os;
  }

 private:
  container terms_;
};

}  // namespace mosva

#endif  // MOSVA_LINEAR_COMBINATION_HPP
