#pragma once

#include "ghyp/dual.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghyp {

// Complex-valued arithmetic expressions over a fixed list of named variables.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Builtin names: pi, i (imaginary unit). Functions: sqrt exp log abs sin cos
// re im conj pow(a,b) min(a,b) max(a,b); min/max compare real parts.
class Expression {
public:
  // Throws ParseError naming the offending column.
  static Expression parse(std::string_view text, std::vector<std::string> variables);

  // values[k] is the value of variables[k].
  Complex evaluate(std::span<const Complex> values) const;

  const std::string& text() const { return text_; }
  const std::vector<std::string>& variables() const { return variables_; }

  struct Node;

private:
  std::string text_;
  std::vector<std::string> variables_;
  std::shared_ptr<const Node> root_;
};

}  // namespace ghyp
