#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tic {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  /// Accepts "p", "p/q", and finite decimals such as "-0.125" or "3.".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const;
  bool is_one() const { return value_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(long exponent) const;
  mpz_class floor() const;
  mpz_class ceil() const;

  /// Exact square root when both numerator and denominator are squares.
  bool exact_sqrt(Rational& out) const;

  /// "p" or "p/q".
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  std::size_t hash() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
  }

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace tic

template <>
struct std::hash<tic::Rational> {
  std::size_t operator()(const tic::Rational& q) const { return q.hash(); }
};
