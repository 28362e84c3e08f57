#include "solvcoh/expression.hpp"

#include <cctype>
#include <string>

namespace solvcoh {

namespace {

class Parser {
 public:
  Parser(const ManifoldModel& m, std::string_view text) : m_(m), s_(text) {}

  Element parse() {
    Element e = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ExpressionError("expression error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  Element expr() {
    Element acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    int sign = 1;
    for (;;) {
      if (accept('-')) {
        sign = -sign;
      } else if (!accept('+')) {
        break;
      }
    }
    Element acc = factor();
    while (accept('^') || accept('*')) acc = wedge(acc, factor());
    if (sign < 0) acc = -acc;
    return acc;
  }

  std::string digits() {
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }

  Element factor() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) {
        skip_ws();
        const std::string den = digits();
        if (den.empty()) error("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) error("zero denominator");
        num += "/" + den;
      }
      return Element::constant(m_.n(), Scalar(parse_rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        id += s_[pos_++];
      }
      return symbol(id);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  int exponent() {
    if (!accept('{')) return 1;
    skip_ws();
    int sign = 1;
    if (accept('-')) sign = -1;
    skip_ws();
    const std::string d = digits();
    if (d.empty()) error("expected integer exponent");
    expect('}');
    return sign * std::stoi(d);
  }

  Element symbol(const std::string& id) {
    const auto& coframe = m_.coframe();
    for (std::size_t j = 0; j < coframe.size(); ++j) {
      if (coframe[j] == id) return m_.coframe_form(static_cast<int>(j) + 1);
      if (barred(coframe[j]) == id) return m_.coframe_form(static_cast<int>(j) + 1, true);
    }
    const auto labels = m_.character_labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == id) {
        return Element::constant(m_.n(), 1, Character::basis(k, exponent()));
      }
    }
    if (id == "conj") {
      expect('(');
      Element e = expr();
      expect(')');
      return conjugate(e);
    }
    if (id == "i") return Element::constant(m_.n(), Scalar::i());
    error("unknown symbol '" + id + "'");
  }

  static std::string barred(const std::string& label) {
    std::size_t cut = label.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(label[cut - 1]))) --cut;
    return label.substr(0, cut) + "bar" + label.substr(cut);
  }

  const ManifoldModel& m_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const ManifoldModel& m, std::string_view text) {
  return Parser(m, text).parse();
}

}  // namespace solvcoh
