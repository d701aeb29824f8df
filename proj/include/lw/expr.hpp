#ifndef LW_EXPR_HPP
#define LW_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>

#include "lw/core.hpp"

// Tiny arithmetic expression grammar over one variable `u`:
// {+, -, *, /, ^, sqrt, numeric literals, parentheses}. Used for the seed
// functions phi(u) of the gluing constructor.

namespace lw {

class Expr {
 public:
  static Expr parse(const std::string& text) {
    Parser p{text, 0};
    Expr e;
    e.root_ = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
      throw std::invalid_argument("expr: trailing input at '" + text.substr(p.pos) + "'");
    return e;
  }

  Real eval(Real u) const { return eval_node(*root_, u); }

 private:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Sqrt, Neg };
  struct Node {
    Op op;
    Real value = 0;
    std::unique_ptr<Node> a, b;
  };

  struct Parser {
    const std::string& s;
    std::size_t pos;

    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    std::unique_ptr<Node> parse_sum() {
      auto lhs = parse_term();
      for (;;) {
        if (eat('+'))
          lhs = binary(Op::Add, std::move(lhs), parse_term());
        else if (eat('-'))
          lhs = binary(Op::Sub, std::move(lhs), parse_term());
        else
          return lhs;
      }
    }

    std::unique_ptr<Node> parse_term() {
      auto lhs = parse_factor();
      for (;;) {
        if (eat('*'))
          lhs = binary(Op::Mul, std::move(lhs), parse_factor());
        else if (eat('/'))
          lhs = binary(Op::Div, std::move(lhs), parse_factor());
        else
          return lhs;
      }
    }

    std::unique_ptr<Node> parse_factor() {
      auto base = parse_unary();
      if (eat('^')) return binary(Op::Pow, std::move(base), parse_factor());
      return base;
    }

    std::unique_ptr<Node> parse_unary() {
      if (eat('-')) {
        auto n = std::make_unique<Node>();
        n->op = Op::Neg;
        n->a = parse_unary();
        return n;
      }
      return parse_primary();
    }

    std::unique_ptr<Node> parse_primary() {
      skip_ws();
      if (pos >= s.size()) throw std::invalid_argument("expr: unexpected end");
      char c = s[pos];
      if (c == '(') {
        ++pos;
        auto inner = parse_sum();
        if (!eat(')')) throw std::invalid_argument("expr: missing ')'");
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t end;
        Real v = std::stod(s.substr(pos), &end);
        pos += end;
        auto n = std::make_unique<Node>();
        n->op = Op::Const;
        n->value = v;
        return n;
      }
      if (s.compare(pos, 4, "sqrt") == 0) {
        pos += 4;
        if (!eat('(')) throw std::invalid_argument("expr: sqrt needs '('");
        auto inner = parse_sum();
        if (!eat(')')) throw std::invalid_argument("expr: missing ')'");
        auto n = std::make_unique<Node>();
        n->op = Op::Sqrt;
        n->a = std::move(inner);
        return n;
      }
      if (c == 'u') {
        ++pos;
        auto n = std::make_unique<Node>();
        n->op = Op::Var;
        return n;
      }
      throw std::invalid_argument(std::string("expr: unexpected character '") + c + "'");
    }

    static std::unique_ptr<Node> binary(Op op, std::unique_ptr<Node> a,
                                        std::unique_ptr<Node> b) {
      auto n = std::make_unique<Node>();
      n->op = op;
      n->a = std::move(a);
      n->b = std::move(b);
      return n;
    }
  };

  static Real eval_node(const Node& n, Real u) {
    switch (n.op) {
      case Op::Const: return n.value;
      case Op::Var: return u;
      case Op::Add: return eval_node(*n.a, u) + eval_node(*n.b, u);
      case Op::Sub: return eval_node(*n.a, u) - eval_node(*n.b, u);
      case Op::Mul: return eval_node(*n.a, u) * eval_node(*n.b, u);
      case Op::Div: return eval_node(*n.a, u) / eval_node(*n.b, u);
      case Op::Pow: return std::pow(eval_node(*n.a, u), eval_node(*n.b, u));
      case Op::Sqrt: return std::sqrt(eval_node(*n.a, u));
      default: return -eval_node(*n.a, u);
    }
  }

  std::shared_ptr<Node> root_;
};

}  // namespace lw

#endif  // LW_EXPR_HPP
