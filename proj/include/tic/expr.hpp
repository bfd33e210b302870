#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "tic/func.hpp"
#include "tic/hyperreal.hpp"
#include "tic/rational.hpp"

namespace tic {

enum class NodeKind { Constant, Variable, HyperLiteral, Neg, Add, Sub, Mul, Div, Pow, Call };

/// Immutable AST of a real function of one variable. Copies share nodes.
class Expr {
 public:
  struct Node;

  static Expr constant(const Rational& q);
  /// 'x' for functions, 'n' for sequences.
  static Expr variable(char name);
  /// eps^exponent; eps when exponent is 1, H when it is -1.
  static Expr hyper_literal(const Rational& exponent);
  static Expr neg(const Expr& a);
  static Expr add(const Expr& a, const Expr& b);
  static Expr sub(const Expr& a, const Expr& b);
  static Expr mul(const Expr& a, const Expr& b);
  static Expr div(const Expr& a, const Expr& b);
  static Expr power(const Expr& base, long exponent);
  static Expr call(Func f, const Expr& arg);

  NodeKind kind() const;
  /// Constant value, or the exponent of a hyper literal.
  const Rational& value() const;
  char variable_name() const;
  long exponent() const;
  Func func() const;
  /// Operand of Neg, Pow and Call; left operand of binary nodes.
  const Expr& lhs() const;
  const Expr& rhs() const;

  bool is_constant() const { return kind() == NodeKind::Constant; }
  std::string str() const;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The single free variable, if any.
std::optional<char> free_variable(const Expr& e);
bool contains_call(const Expr& e);
bool contains_func(const Expr& e, Func f);
bool contains_hyper_literal(const Expr& e);

struct ParseOptions {
  bool allow_variables = true;
  /// Accept eps, H and eps^(p/q) / H^(p/q) literals.
  bool allow_hyper_literals = false;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := atom ['^' integer]
///   atom   := number | 'x' | 'n' | func '(' expr ')' | '(' expr ')'
/// number is an integer, a decimal, or p/q written without spaces.
Expr parse(std::string_view text, const ParseOptions& options = {});
std::string format(const Expr& e);

/// Symbolic derivative with constant folding and 0/1 elimination.
Expr differentiate(const Expr& e);

/// Exact value at a rational point; abs is allowed, the other functions are
/// not rational-valued in general and raise NotRationalValued.
Rational eval_real(const Expr& e, const Rational& v);

/// Natural extension *f evaluated at a hyperreal point.
HyperReal extend_eval(const Expr& e, const HyperReal& v);

/// Evaluates a variable-free expression (hyper literals allowed).
HyperReal eval_hyper(const Expr& e, int order = kDefaultOrder);

}  // namespace tic
