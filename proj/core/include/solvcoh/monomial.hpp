#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace solvcoh {

using Mask = std::uint32_t;
inline constexpr int kMaxCoframe = 32;

/// Basis element phi^I ^ phibar^J of the bigraded exterior algebra. Index i
/// (1-based) is stored as bit i-1. The canonical factor order is holomorphic
/// indices ascending, then antiholomorphic indices ascending.
struct FormMonomial {
  Mask holo = 0;
  Mask anti = 0;

  /// Indices are 1-based and must be strictly increasing.
  static FormMonomial from_indices(std::span<const int> holo, std::span<const int> anti);

  int p() const;
  int q() const;
  int degree() const { return p() + q(); }
  std::vector<int> holo_indices() const;
  std::vector<int> anti_indices() const;
  std::uint64_t key() const { return (std::uint64_t(holo) << 32) | anti; }

  /// "phi1^phi3^phibar2" given coframe labels; "1" for the empty monomial.
  std::string str(const std::vector<std::string>& labels) const;

  friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

/// Total order: by bidegree, then holomorphic index list lexicographically,
/// then antiholomorphic index list.
bool monomial_less(const FormMonomial& a, const FormMonomial& b);

/// Lexicographic comparison of two index sets of equal size.
bool mask_lex_less(Mask a, Mask b);

/// A monomial with a sign in {-1, 0, +1}; sign 0 means the product vanished.
struct SignedMonomial {
  int sign = 0;
  FormMonomial mono;
};

SignedMonomial wedge(const FormMonomial& a, const FormMonomial& b);
/// conj(phi^I ^ phibar^J) = phibar^I ^ phi^J, brought to canonical order.
SignedMonomial conjugate(const FormMonomial& a);

/// All monomials of bidegree (p,q) over n coframe elements in canonical
/// (lexicographic) order, with a reverse lookup.
class MonomialBasis {
 public:
  MonomialBasis(int n, int p, int q);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const FormMonomial& operator[](int i) const { return monos_[i]; }
  const std::vector<FormMonomial>& monomials() const { return monos_; }
  /// -1 if the monomial is not of this bidegree.
  int index_of(const FormMonomial& m) const;

 private:
  int n_, p_, q_;
  std::vector<FormMonomial> monos_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Index subsets of {1..n} of size k, as masks, in lexicographic order.
std::vector<Mask> subsets_lex(int n, int k);

long binomial(int n, int k);

}  // namespace solvcoh
