#pragma once

#include <stdexcept>
#include <string_view>

#include "solvcoh/model.hpp"

namespace solvcoh {

class ExpressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a form expression over the model's coframe and characters.
///
///   expr   := term (('+' | '-') term)*
///   term   := ('+' | '-')* factor (('^' | '*') factor)*
///   factor := rational | 'i' | symbol | symbol '{' int '}'
///           | 'conj' '(' expr ')' | '(' expr ')'
///
/// Symbols are coframe labels (phi2), barred coframe labels (phibar2) and
/// character labels (f, beta1); `f{-1}` is the inverse character. Both `^`
/// and `*` denote the wedge product.
Element parse_expression(const ManifoldModel& m, std::string_view text);

}  // namespace solvcoh
