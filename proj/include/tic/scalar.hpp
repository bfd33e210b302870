#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "tic/enclosure.hpp"
#include "tic/func.hpp"
#include "tic/rational.hpp"

namespace tic {

struct Symbolic;

/// Exact real coefficient: a rational, or a quotient of polynomials over Q in
/// named constants such as sin(1) or exp(1/2).
///
/// Arithmetic is exact. The normal form reduces sin(a)^2 to 1 - cos(a)^2 and
/// sqrt(q)^2 to q, so identities that follow from those relations are
/// recognised; anything else is equal only when it is syntactically equal.
/// Signs of symbolic values come from MPFR enclosures at 64 bits, doubling up
/// to kMaxSignPrecision; if zero still cannot be excluded, sign() throws
/// UndecidableSign.
class Scalar {
 public:
  static constexpr long kMaxSignPrecision = 4096;

  Scalar() = default;
  Scalar(Rational value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t value) : Scalar(Rational(value)) {}  // NOLINT

  /// f(arg) with evaluation when the value is rational (sin 0, exp 0, sqrt 9/4,
  /// ...) and with the domain checks of ln and sqrt.
  static Scalar apply(Func f, const Scalar& arg);

  /// Parses the text produced by str(): rationals, + - * /, integer powers,
  /// and sin/cos/exp/ln/sqrt/abs applied to such text.
  static Scalar parse(std::string_view text);

  bool is_rational() const { return sym_ == nullptr; }
  std::optional<Rational> rational() const;
  /// Syntactic zero; exact on rationals and on the reduced normal form.
  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  Enclosure enclose(mpfr_prec_t precision) const;

  Scalar reciprocal() const;
  Scalar pow(long exponent) const;

  std::string str() const;
  /// True when str() is a single product (no top-level + or -, or a
  /// leading sign only), so it can be printed next to a factor without
  /// parentheses.
  bool is_product() const;

  /// Total order on representations, used to sort named constants.
  std::strong_ordering structural_compare(const Scalar& other) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Value equality: the difference reduces to zero.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend struct ScalarAccess;
  explicit Scalar(std::shared_ptr<const Symbolic> sym);

  Rational value_;
  std::shared_ptr<const Symbolic> sym_;
};

}  // namespace tic
