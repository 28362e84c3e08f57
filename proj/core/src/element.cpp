#include "solvcoh/element.hpp"

#include <stdexcept>

namespace solvcoh {

Element Element::monomial(int dim, const FormMonomial& m, const Scalar& c, const Character& chi) {
  Element e(dim);
  e.add_term(chi, m, c);
  return e;
}

Element Element::constant(int dim, const Scalar& c, const Character& chi) {
  return monomial(dim, FormMonomial{}, c, chi);
}

void Element::add_term(const Character& chi, const FormMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(TermKey{chi, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Element::coefficient(const Character& chi, const FormMonomial& m) const {
  auto it = terms_.find(TermKey{chi, m});
  return it == terms_.end() ? Scalar{} : it->second;
}

std::optional<std::pair<int, int>> Element::bidegree() const {
  std::optional<std::pair<int, int>> bd;
  for (const auto& [key, c] : terms_) {
    std::pair<int, int> cur{key.mono.p(), key.mono.q()};
    if (bd && *bd != cur) return std::nullopt;
    bd = cur;
  }
  return bd;
}

std::optional<int> Element::degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    if (deg && *deg != key.mono.degree()) return std::nullopt;
    deg = key.mono.degree();
  }
  return deg;
}

std::set<Character> Element::characters() const {
  std::set<Character> out;
  for (const auto& [key, c] : terms_) out.insert(key.chi);
  return out;
}

Element Element::character_component(const Character& chi) const {
  Element out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key.chi == chi) out.terms_.emplace(key, c);
  }
  return out;
}

Element Element::times_character(const Character& chi) const {
  Element out(dim_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(TermKey{key.chi * chi, key.mono}, c);
  return out;
}

void Element::check_dim(const Element& o) const {
  if (dim_ != o.dim_) {
    throw std::invalid_argument("coframe dimension mismatch: " + std::to_string(dim_) + " vs " +
                                std::to_string(o.dim_));
  }
}

Element& Element::operator+=(const Element& o) {
  check_dim(o);
  for (const auto& [key, c] : o.terms_) add_term(key.chi, key.mono, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_dim(o);
  for (const auto& [key, c] : o.terms_) add_term(key.chi, key.mono, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [key, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.dim_ != b.dim_) return false;
  return a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first.chi == y.first.chi && x.first.mono == y.first.mono &&
                             x.second == y.second;
                    });
}

std::string character_str(const Character& chi, const std::vector<std::string>& labels) {
  if (chi.is_trivial()) return "";
  std::string out;
  for (std::size_t k = 0; k < chi.exponents().size(); ++k) {
    const int e = chi.exponent(k);
    if (e == 0) continue;
    std::string l = k < labels.size() ? labels[k] : "chi" + std::to_string(k + 1);
    if (!out.empty()) out += "*";
    out += e == 1 ? l : l + "{" + std::to_string(e) + "}";
  }
  return out;
}

std::string Element::str(const std::vector<std::string>& coframe,
                         const std::vector<std::string>& character_labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string coeff = c.str();
    const bool neg = !c.is_real() ? false : sgn(c.re()) < 0;
    if (!c.is_real() && sgn(c.re()) != 0) coeff = "(" + coeff + ")";
    std::string body;
    const std::string chi = character_str(key.chi, character_labels);
    const std::string mono = key.mono.str(coframe);
    if (!chi.empty()) body = chi;
    if (mono != "1" || body.empty()) body += (body.empty() ? "" : "*") + mono;
    std::string term;
    if (c.is_one()) {
      term = body;
    } else if (c == Scalar(-1)) {
      term = "-" + body;
    } else {
      term = coeff + "*" + body;
    }
    if (out.empty()) {
      out = term;
    } else if (neg || (term.size() && term[0] == '-')) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Element wedge(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("coframe dimension mismatch in wedge: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
  Element out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const SignedMonomial sm = wedge(ka.mono, kb.mono);
      if (sm.sign == 0) continue;
      Scalar c = ca * cb;
      if (sm.sign < 0) c = -c;
      out.add_term(ka.chi * kb.chi, sm.mono, c);
    }
  }
  return out;
}

Element wedge(std::initializer_list<Element> factors) {
  if (factors.size() == 0) throw std::invalid_argument("empty wedge");
  auto it = factors.begin();
  Element acc = *it++;
  for (; it != factors.end(); ++it) acc = wedge(acc, *it);
  return acc;
}

Element conjugate(const Element& a) {
  Element out(a.dim());
  for (const auto& [key, c] : a.terms()) {
    const SignedMonomial sm = conjugate(key.mono);
    Scalar v = c.conj();
    if (sm.sign < 0) v = -v;
    out.add_term(key.chi.inverse(), sm.mono, v);
  }
  return out;
}

Element project_bidegree(const Element& a, int p, int q) {
  Element out(a.dim());
  for (const auto& [key, c] : a.terms()) {
    if (key.mono.p() == p && key.mono.q() == q) out.add_term(key.chi, key.mono, c);
  }
  return out;
}

Element project_degree(const Element& a, int k) {
  Element out(a.dim());
  for (const auto& [key, c] : a.terms()) {
    if (key.mono.degree() == k) out.add_term(key.chi, key.mono, c);
  }
  return out;
}

}  // namespace solvcoh
