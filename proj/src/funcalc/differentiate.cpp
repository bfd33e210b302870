#include "tic/error.hpp"
#include "tic/expr.hpp"

namespace tic {

namespace {

bool is_value(const Expr& e, long v) { return e.is_constant() && e.value() == Rational(v); }

Expr c(const Rational& q) { return Expr::constant(q); }

Expr neg(const Expr& a) {
  if (a.is_constant()) return c(-a.value());
  if (a.kind() == NodeKind::Neg) return a.lhs();
  return Expr::neg(a);
}

Expr add(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return c(a.value() + b.value());
  if (is_value(a, 0)) return b;
  if (is_value(b, 0)) return a;
  return Expr::add(a, b);
}

Expr sub(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return c(a.value() - b.value());
  if (is_value(b, 0)) return a;
  if (is_value(a, 0)) return neg(b);
  return Expr::sub(a, b);
}

Expr mul(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return c(a.value() * b.value());
  if (is_value(a, 0) || is_value(b, 0)) return c(0);
  if (is_value(a, 1)) return b;
  if (is_value(b, 1)) return a;
  if (is_value(a, -1)) return neg(b);
  if (is_value(b, -1)) return neg(a);
  // Keep constant factors in front: 2*x rather than x*2.
  if (b.is_constant()) return Expr::mul(b, a);
  return Expr::mul(a, b);
}

Expr div(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant() && !b.value().is_zero()) return c(a.value() / b.value());
  if (is_value(a, 0)) return c(0);
  if (is_value(b, 1)) return a;
  return Expr::div(a, b);
}

Expr power(const Expr& base, long n) {
  if (n == 0) return c(1);
  if (n == 1) return base;
  if (base.is_constant() && (n > 0 || !base.value().is_zero())) return c(base.value().pow(n));
  return Expr::power(base, n);
}

Expr d(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::HyperLiteral: return c(0);
    case NodeKind::Variable: return c(1);
    case NodeKind::Neg: return neg(d(e.lhs()));
    case NodeKind::Add: return add(d(e.lhs()), d(e.rhs()));
    case NodeKind::Sub: return sub(d(e.lhs()), d(e.rhs()));
    case NodeKind::Mul: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      return add(mul(d(u), v), mul(u, d(v)));
    }
    case NodeKind::Div: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      const Expr du = d(u);
      const Expr dv = d(v);
      if (is_value(dv, 0)) return div(du, v);
      return div(sub(mul(du, v), mul(u, dv)), power(v, 2));
    }
    case NodeKind::Pow: {
      const long n = e.exponent();
      return mul(mul(c(n), power(e.lhs(), n - 1)), d(e.lhs()));
    }
    case NodeKind::Call: {
      const Expr& u = e.lhs();
      const Expr du = d(u);
      switch (e.func()) {
        case Func::Sin: return mul(Expr::call(Func::Cos, u), du);
        case Func::Cos: return mul(neg(Expr::call(Func::Sin, u)), du);
        case Func::Exp: return mul(e, du);
        case Func::Ln: return div(du, u);
        case Func::Sqrt: return div(du, mul(c(2), e));
        case Func::Abs: throw Error(ErrorKind::NotDifferentiable, "abs is not differentiable at 0");
      }
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

}  // namespace

Expr differentiate(const Expr& e) { return d(e); }

}  // namespace tic
