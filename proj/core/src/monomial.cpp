#include "solvcoh/monomial.hpp"

#include <bit>
#include <stdexcept>

namespace solvcoh {

namespace {

Mask to_mask(std::span<const int> idx) {
  Mask m = 0;
  int last = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxCoframe) throw std::out_of_range("coframe index out of range");
    if (i <= last) throw std::invalid_argument("index list must be strictly increasing");
    m |= Mask(1) << (i - 1);
    last = i;
  }
  return m;
}

std::vector<int> to_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Number of pairs (a in first, b in second) with a > b.
int inversions(Mask first, Mask second) {
  int count = 0;
  while (second) {
    const int b = std::countr_zero(second);
    const std::uint64_t above = ~((std::uint64_t(2) << b) - 1);
    count += std::popcount(std::uint64_t(first) & above);
    second &= second - 1;
  }
  return count;
}

void subsets_rec(int n, int k, int start, Mask acc, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - k + 1; ++i) {
    subsets_rec(n, k - 1, i + 1, acc | (Mask(1) << (i - 1)), out);
  }
}

}  // namespace

FormMonomial FormMonomial::from_indices(std::span<const int> holo, std::span<const int> anti) {
  return FormMonomial{to_mask(holo), to_mask(anti)};
}

int FormMonomial::p() const { return std::popcount(holo); }
int FormMonomial::q() const { return std::popcount(anti); }
std::vector<int> FormMonomial::holo_indices() const { return to_indices(holo); }
std::vector<int> FormMonomial::anti_indices() const { return to_indices(anti); }

std::string FormMonomial::str(const std::vector<std::string>& labels) const {
  std::string out;
  auto label = [&](int i, bool bar) {
    std::string l = (i - 1) < static_cast<int>(labels.size()) ? labels[i - 1] : "e" + std::to_string(i);
    if (!bar) return l;
    size_t cut = l.size();
    while (cut > 0 && l[cut - 1] >= '0' && l[cut - 1] <= '9') --cut;
    return l.substr(0, cut) + "bar" + l.substr(cut);
  };
  for (int i : holo_indices()) out += (out.empty() ? "" : "^") + label(i, false);
  for (int i : anti_indices()) out += (out.empty() ? "" : "^") + label(i, true);
  return out.empty() ? "1" : out;
}

bool mask_lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

bool monomial_less(const FormMonomial& a, const FormMonomial& b) {
  if (a.p() != b.p()) return a.p() < b.p();
  if (a.q() != b.q()) return a.q() < b.q();
  if (a.holo != b.holo) return mask_lex_less(a.holo, b.holo);
  return mask_lex_less(a.anti, b.anti);
}

SignedMonomial wedge(const FormMonomial& a, const FormMonomial& b) {
  if ((a.holo & b.holo) || (a.anti & b.anti)) return {};
  int swaps = std::popcount(a.anti) * std::popcount(b.holo);
  swaps += inversions(a.holo, b.holo);
  swaps += inversions(a.anti, b.anti);
  return {swaps % 2 ? -1 : 1, FormMonomial{a.holo | b.holo, a.anti | b.anti}};
}

SignedMonomial conjugate(const FormMonomial& a) {
  const int swaps = std::popcount(a.holo) * std::popcount(a.anti);
  return {swaps % 2 ? -1 : 1, FormMonomial{a.anti, a.holo}};
}

std::vector<Mask> subsets_lex(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  subsets_rec(n, k, 1, 0, out);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MonomialBasis::MonomialBasis(int n, int p, int q) : n_(n), p_(p), q_(q) {
  if (n < 0 || n > kMaxCoframe) throw std::out_of_range("coframe dimension out of range");
  const auto hs = subsets_lex(n, p);
  const auto as = subsets_lex(n, q);
  monos_.reserve(hs.size() * as.size());
  for (Mask h : hs) {
    for (Mask a : as) {
      index_.emplace(FormMonomial{h, a}.key(), static_cast<int>(monos_.size()));
      monos_.push_back(FormMonomial{h, a});
    }
  }
}

int MonomialBasis::index_of(const FormMonomial& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

}  // namespace solvcoh
