#include <cctype>

#include "tic/expr.hpp"

namespace tic {

namespace {

// Binding strength of the printed form; higher binds tighter.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

bool is_negative_form(const Expr& e) {
  return e.kind() == NodeKind::Neg || (e.is_constant() && e.value().sign() < 0);
}

int precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Add:
    case NodeKind::Sub: return kSum;
    case NodeKind::Mul:
    case NodeKind::Div: return kProduct;
    case NodeKind::Neg: return kUnary;
    case NodeKind::Pow: return kPower;
    case NodeKind::Constant:
      if (e.value().sign() < 0) return kUnary;
      return e.value().is_integer() ? kAtom : kPower;
    default: return kAtom;
  }
}

std::string fmt(const Expr& e);

std::string wrap(const Expr& e, int needed) {
  const std::string text = fmt(e);
  return precedence(e) < needed ? "(" + text + ")" : text;
}

// Right operands never start with a bare minus sign.
std::string wrap_right(const Expr& e, int needed) {
  if (is_negative_form(e)) return "(" + fmt(e) + ")";
  return wrap(e, needed);
}

std::string fmt(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant: return e.value().str();
    case NodeKind::Variable: return std::string(1, e.variable_name());
    case NodeKind::HyperLiteral: {
      const Rational& q = e.value();
      const std::string base = q.sign() < 0 ? "H" : "eps";
      const Rational mag = q.abs();
      return mag.is_one() ? base : base + "^(" + mag.str() + ")";
    }
    case NodeKind::Neg: {
      const Expr& a = e.lhs();
      // "-3" would read back as the constant -3.
      if (a.is_constant()) return "-(" + fmt(a) + ")";
      return "-" + wrap(a, kUnary);
    }
    case NodeKind::Add: return wrap(e.lhs(), kSum) + " + " + wrap_right(e.rhs(), kProduct);
    case NodeKind::Sub: return wrap(e.lhs(), kSum) + " - " + wrap_right(e.rhs(), kProduct);
    case NodeKind::Mul: return wrap(e.lhs(), kProduct) + "*" + wrap_right(e.rhs(), kUnary);
    case NodeKind::Div: {
      std::string rhs = wrap_right(e.rhs(), kUnary);
      // "1/2" would read back as a single rational literal.
      if (std::isdigit(static_cast<unsigned char>(rhs.front()))) rhs = "(" + rhs + ")";
      return wrap(e.lhs(), kProduct) + "/" + rhs;
    }
    case NodeKind::Pow: {
      const long n = e.exponent();
      const std::string exp = n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n);
      return wrap(e.lhs(), kAtom) + "^" + exp;
    }
    case NodeKind::Call: return std::string(to_string(e.func())) + "(" + fmt(e.lhs()) + ")";
  }
  return "?";
}

}  // namespace

std::string format(const Expr& e) { return fmt(e); }

}  // namespace tic
