#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tic/expr.hpp"
#include "tic/rational.hpp"

namespace tic {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational lead() const;

  Rational eval(const Rational& v) const;
  /// Sign of the value at +infinity (side = 1) or -infinity (side = -1).
  int sign_at_infinity(int side) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned n) const;
  /// Every real root has absolute value below this bound.
  Rational root_bound() const;

  /// Number of distinct real roots in the closed interval; a missing
  /// endpoint is infinite.
  int count_roots(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  std::string str(char var = 'x') const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// num/den in lowest terms with a monic denominator.
struct RationalFunction {
  Poly num;
  Poly den;

  bool is_polynomial() const { return den.degree() == 0; }
  /// deg num - deg den; the growth order at infinity.
  int degree_at_infinity() const { return num.degree() - den.degree(); }
};

/// Reduced form of an expression built from field operations and integer
/// powers; nullopt for anything else.
std::optional<RationalFunction> to_rational_function(const Expr& e);

enum class ExprClass {
  /// No division, negative power or function call.
  Polynomial,
  /// Field operations and integer powers only.
  Rational,
  /// Contains a function call.
  Other,
};

ExprClass classify_expr(const Expr& e);
std::string_view to_string(ExprClass c);

}  // namespace tic
