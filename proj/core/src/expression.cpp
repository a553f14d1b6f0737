#include "ghyp/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace ghyp {

struct Expression::Node {
  enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Constant;
  Complex value;
  std::size_t slot = 0;
  std::string function;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

bool is_real(Complex z) { return z.imag() == 0.0; }

Complex power(Complex a, Complex b) {
  if (is_real(a) && is_real(b)) {
    const double x = a.real(), y = b.real();
    if (x >= 0.0 || y == std::round(y)) return Complex(std::pow(x, y), 0.0);
  }
  if (a == Complex(0.0, 0.0)) return (b.real() > 0.0) ? Complex(0.0, 0.0) : Complex(INFINITY, 0.0);
  return std::pow(a, b);
}

struct FunctionInfo {
  std::string_view name;
  int arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"sqrt", 1}, {"exp", 1}, {"log", 1}, {"abs", 1}, {"sin", 1}, {"cos", 1},  {"re", 1},
    {"im", 1},   {"conj", 1}, {"pow", 2}, {"min", 2}, {"max", 2},
};

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  NodePtr parse() {
    auto n = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression column " + std::to_string(pos_ + 1) + ": " + what + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Node::Kind kind, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
  }

  NodePtr expr() {
    auto lhs = term();
    while (true) {
      if (accept('+')) lhs = make(Node::Kind::Add, {lhs, term()});
      else if (accept('-')) lhs = make(Node::Kind::Sub, {lhs, term()});
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    while (true) {
      if (accept('*')) lhs = make(Node::Kind::Mul, {lhs, unary()});
      else if (accept('/')) lhs = make(Node::Kind::Div, {lhs, unary()});
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::Negate, {unary()});
    if (accept('+')) return unary();
    return pow_expr();
  }

  NodePtr pow_expr() {
    auto base = primary();
    if (accept('^')) return make(Node::Kind::Pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::string rest(text_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    auto n = std::make_shared<Node>();
    n->value = Complex(v, 0.0);
    return n;
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string id(text_.substr(start, pos_ - start));

    if (accept('(')) {
      const auto* fn = std::find_if(std::begin(kFunctions), std::end(kFunctions),
                                    [&](const FunctionInfo& f) { return f.name == id; });
      if (fn == std::end(kFunctions)) {
        pos_ = start;
        fail("unknown function '" + id + "'");
      }
      std::vector<NodePtr> args{expr()};
      while (accept(',')) args.push_back(expr());
      if (!accept(')')) fail("expected ')' after arguments of " + id);
      if (static_cast<int>(args.size()) != fn->arity) {
        pos_ = start;
        fail(id + " takes " + std::to_string(fn->arity) + " argument(s)");
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call;
      n->function = id;
      n->args = std::move(args);
      return n;
    }

    if (auto it = std::find(vars_.begin(), vars_.end(), id); it != vars_.end()) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      n->slot = static_cast<std::size_t>(it - vars_.begin());
      return n;
    }
    auto n = std::make_shared<Node>();
    if (id == "pi") n->value = Complex(std::numbers::pi, 0.0);
    else if (id == "i") n->value = Complex(0.0, 1.0);
    else {
      pos_ = start;
      fail("unknown name '" + id + "'");
    }
    return n;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

Complex eval(const Node& n, std::span<const Complex> v) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Constant: return n.value;
    case K::Variable: return v[n.slot];
    case K::Negate: return -eval(*n.args[0], v);
    case K::Add: return eval(*n.args[0], v) + eval(*n.args[1], v);
    case K::Sub: return eval(*n.args[0], v) - eval(*n.args[1], v);
    case K::Mul: return eval(*n.args[0], v) * eval(*n.args[1], v);
    case K::Div: return eval(*n.args[0], v) / eval(*n.args[1], v);
    case K::Pow: return power(eval(*n.args[0], v), eval(*n.args[1], v));
    case K::Call: break;
  }
  const Complex a = eval(*n.args[0], v);
  const std::string& f = n.function;
  // Real arguments take the principal branch regardless of the sign of a zero imaginary part.
  if (f == "sqrt" && is_real(a)) return a.real() >= 0.0 ? Complex(std::sqrt(a.real()), 0.0) : Complex(0.0, std::sqrt(-a.real()));
  if (f == "sqrt") return std::sqrt(a);
  if (f == "exp") return std::exp(a);
  if (f == "log" && is_real(a) && a.real() != 0.0)
    return a.real() > 0.0 ? Complex(std::log(a.real()), 0.0) : Complex(std::log(-a.real()), std::numbers::pi);
  if (f == "log") return std::log(a);
  if (f == "abs") return Complex(std::abs(a), 0.0);
  if (f == "sin") return std::sin(a);
  if (f == "cos") return std::cos(a);
  if (f == "re") return Complex(a.real(), 0.0);
  if (f == "im") return Complex(a.imag(), 0.0);
  if (f == "conj") return std::conj(a);
  const Complex b = eval(*n.args[1], v);
  if (f == "pow") return power(a, b);
  if (f == "min") return a.real() <= b.real() ? a : b;
  return a.real() >= b.real() ? a : b;  // max
}

}  // namespace

Expression Expression::parse(std::string_view text, std::vector<std::string> variables) {
  Expression e;
  e.text_ = std::string(text);
  e.variables_ = std::move(variables);
  e.root_ = Parser(e.text_, e.variables_).parse();
  return e;
}

Complex Expression::evaluate(std::span<const Complex> values) const {
  if (values.size() != variables_.size()) throw Error("expression: wrong number of variable values");
  return eval(*root_, values);
}

}  // namespace ghyp
