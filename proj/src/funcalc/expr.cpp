#include "tic/expr.hpp"

#include "tic/error.hpp"

namespace tic {

struct Expr::Node {
  NodeKind kind;
  Rational value;
  char variable = 0;
  long exponent = 0;
  Func func = Func::Sin;
  std::optional<Expr> lhs;
  std::optional<Expr> rhs;
};

namespace {

std::shared_ptr<Expr::Node> node(NodeKind kind) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  return n;
}

}  // namespace

Expr Expr::constant(const Rational& q) {
  auto n = node(NodeKind::Constant);
  n->value = q;
  return Expr(std::move(n));
}

Expr Expr::variable(char name) {
  if (name != 'x' && name != 'n') {
    throw Error(ErrorKind::UnknownIdentifier, std::string("unknown variable '") + name + "'");
  }
  auto n = node(NodeKind::Variable);
  n->variable = name;
  return Expr(std::move(n));
}

Expr Expr::hyper_literal(const Rational& exponent) {
  if (exponent.is_zero()) return constant(Rational(1));
  auto n = node(NodeKind::HyperLiteral);
  n->value = exponent;
  return Expr(std::move(n));
}

Expr Expr::neg(const Expr& a) {
  auto n = node(NodeKind::Neg);
  n->lhs = a;
  return Expr(std::move(n));
}

Expr Expr::add(const Expr& a, const Expr& b) {
  auto n = node(NodeKind::Add);
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr Expr::sub(const Expr& a, const Expr& b) {
  auto n = node(NodeKind::Sub);
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr Expr::mul(const Expr& a, const Expr& b) {
  auto n = node(NodeKind::Mul);
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr Expr::div(const Expr& a, const Expr& b) {
  auto n = node(NodeKind::Div);
  n->lhs = a;
  n->rhs = b;
  return Expr(std::move(n));
}

Expr Expr::power(const Expr& base, long exponent) {
  auto n = node(NodeKind::Pow);
  n->lhs = base;
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr Expr::call(Func f, const Expr& arg) {
  auto n = node(NodeKind::Call);
  n->func = f;
  n->lhs = arg;
  return Expr(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
char Expr::variable_name() const { return node_->variable; }
long Expr::exponent() const { return node_->exponent; }
Func Expr::func() const { return node_->func; }
const Expr& Expr::lhs() const { return *node_->lhs; }
const Expr& Expr::rhs() const { return *node_->rhs; }
std::string Expr::str() const { return format(*this); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case NodeKind::Constant:
    case NodeKind::HyperLiteral: return x.value == y.value;
    case NodeKind::Variable: return x.variable == y.variable;
    case NodeKind::Neg: return *x.lhs == *y.lhs;
    case NodeKind::Pow: return x.exponent == y.exponent && *x.lhs == *y.lhs;
    case NodeKind::Call: return x.func == y.func && *x.lhs == *y.lhs;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
  }
  return false;
}

namespace {

template <typename Visit>
void walk(const Expr& e, const Visit& visit) {
  visit(e);
  switch (e.kind()) {
    case NodeKind::Neg:
    case NodeKind::Pow:
    case NodeKind::Call: walk(e.lhs(), visit); break;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div:
      walk(e.lhs(), visit);
      walk(e.rhs(), visit);
      break;
    default: break;
  }
}

}  // namespace

std::optional<char> free_variable(const Expr& e) {
  std::optional<char> found;
  walk(e, [&](const Expr& n) {
    if (n.kind() == NodeKind::Variable) found = n.variable_name();
  });
  return found;
}

bool contains_call(const Expr& e) {
  bool found = false;
  walk(e, [&](const Expr& n) { found = found || n.kind() == NodeKind::Call; });
  return found;
}

bool contains_func(const Expr& e, Func f) {
  bool found = false;
  walk(e, [&](const Expr& n) { found = found || (n.kind() == NodeKind::Call && n.func() == f); });
  return found;
}

bool contains_hyper_literal(const Expr& e) {
  bool found = false;
  walk(e, [&](const Expr& n) { found = found || n.kind() == NodeKind::HyperLiteral; });
  return found;
}

}  // namespace tic
