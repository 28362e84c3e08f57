#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace solvcoh {

/// A unitary character written multiplicatively over the model's declared
/// basis characters: chi = prod_k chi_k^{e_k}. Only the integer exponent
/// vector is stored; weights and log-derivatives are looked up through the
/// model. Trailing zero exponents are trimmed so equality is structural.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<int> exponents);

  static Character basis(std::size_t k, int exponent = 1);

  const std::vector<int>& exponents() const { return exps_; }
  int exponent(std::size_t k) const { return k < exps_.size() ? exps_[k] : 0; }
  bool is_trivial() const { return exps_.empty(); }

  Character operator*(const Character& o) const;
  Character inverse() const;
  /// Characters are unitary, so conjugation is inversion.
  Character conjugate() const { return inverse(); }
  Character pow(int k) const;
  /// Largest absolute exponent.
  int depth() const;

  friend bool operator==(const Character&, const Character&) = default;
  /// Lexicographic on zero-padded exponent vectors.
  friend std::strong_ordering operator<=>(const Character& a, const Character& b);

  /// Debug form, e.g. "[0,-1]" or "1" for the trivial character.
  std::string str() const;

 private:
  void trim();
  std::vector<int> exps_;
};

}  // namespace solvcoh
