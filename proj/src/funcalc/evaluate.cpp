#include "tic/error.hpp"
#include "tic/expr.hpp"

namespace tic {

namespace {

Rational real(const Expr& e, const Rational& v) {
  switch (e.kind()) {
    case NodeKind::Constant: return e.value();
    case NodeKind::Variable: return v;
    case NodeKind::HyperLiteral:
      throw Error(ErrorKind::NotRationalValued, "hyperreal literal in a real expression");
    case NodeKind::Neg: return -real(e.lhs(), v);
    case NodeKind::Add: return real(e.lhs(), v) + real(e.rhs(), v);
    case NodeKind::Sub: return real(e.lhs(), v) - real(e.rhs(), v);
    case NodeKind::Mul: return real(e.lhs(), v) * real(e.rhs(), v);
    case NodeKind::Div: {
      const Rational num = real(e.lhs(), v);
      const Rational den = real(e.rhs(), v);
      if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at x = " + v.str());
      return num / den;
    }
    case NodeKind::Pow: {
      const Rational base = real(e.lhs(), v);
      if (base.is_zero() && e.exponent() < 0) {
        throw Error(ErrorKind::DivisionByZero, "negative power of zero at x = " + v.str());
      }
      return base.pow(e.exponent());
    }
    case NodeKind::Call:
      if (e.func() == Func::Abs) return real(e.lhs(), v).abs();
      throw Error(ErrorKind::NotRationalValued,
                  std::string(to_string(e.func())) + " is not rational-valued in general");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

HyperReal hyper(const Expr& e, const HyperReal* v, int order) {
  switch (e.kind()) {
    case NodeKind::Constant: return HyperReal::rational(e.value(), order);
    case NodeKind::Variable:
      if (v == nullptr) throw Error(ErrorKind::InvalidArgument, "expression has a free variable");
      return *v;
    case NodeKind::HyperLiteral: return HyperReal::generator_power(e.value(), order);
    case NodeKind::Neg: return -hyper(e.lhs(), v, order);
    case NodeKind::Add: return hyper(e.lhs(), v, order) + hyper(e.rhs(), v, order);
    case NodeKind::Sub: return hyper(e.lhs(), v, order) - hyper(e.rhs(), v, order);
    case NodeKind::Mul: return hyper(e.lhs(), v, order) * hyper(e.rhs(), v, order);
    case NodeKind::Div: {
      const HyperReal num = hyper(e.lhs(), v, order);
      const HyperReal den = hyper(e.rhs(), v, order);
      if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
      return num / den;
    }
    case NodeKind::Pow: {
      const HyperReal base = hyper(e.lhs(), v, order);
      if (base.is_zero() && e.exponent() < 0) {
        throw Error(ErrorKind::DivisionByZero, "negative power of zero");
      }
      return base.pow(e.exponent());
    }
    case NodeKind::Call: return apply(e.func(), hyper(e.lhs(), v, order));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

}  // namespace

Rational eval_real(const Expr& e, const Rational& v) { return real(e, v); }

HyperReal extend_eval(const Expr& e, const HyperReal& v) { return hyper(e, &v, v.order()); }

HyperReal eval_hyper(const Expr& e, int order) { return hyper(e, nullptr, order); }

}  // namespace tic
