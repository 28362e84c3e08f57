#include "solvcoh/character.hpp"

#include <algorithm>
#include <cstdlib>

namespace solvcoh {

Character::Character(std::vector<int> exponents) : exps_(std::move(exponents)) { trim(); }

Character Character::basis(std::size_t k, int exponent) {
  std::vector<int> e(k + 1, 0);
  e[k] = exponent;
  return Character(std::move(e));
}

void Character::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Character Character::operator*(const Character& o) const {
  std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = exponent(k) + o.exponent(k);
  return Character(std::move(e));
}

Character Character::inverse() const {
  std::vector<int> e = exps_;
  for (int& x : e) x = -x;
  return Character(std::move(e));
}

Character Character::pow(int k) const {
  std::vector<int> e = exps_;
  for (int& x : e) x *= k;
  return Character(std::move(e));
}

int Character::depth() const {
  int d = 0;
  for (int x : exps_) d = std::max(d, std::abs(x));
  return d;
}

std::strong_ordering operator<=>(const Character& a, const Character& b) {
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.exponent(k) <=> b.exponent(k); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Character::str() const {
  if (exps_.empty()) return "1";
  std::string s = "[";
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(exps_[k]);
  }
  return s + "]";
}

}  // namespace solvcoh
