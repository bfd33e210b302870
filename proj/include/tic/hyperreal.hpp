#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tic/func.hpp"
#include "tic/rational.hpp"
#include "tic/scalar.hpp"

namespace tic {

/// Default truncation window: terms more than this far past the leading
/// exponent are dropped after every operation.
inline constexpr int kDefaultOrder = 16;

enum class Magnitude { Zero, Infinitesimal, Appreciable, Infinite };
std::string_view to_string(Magnitude m);

enum class Ordering { Less, Equal, Greater };
std::string_view to_string(Ordering o);

struct Term {
  Rational exponent;
  Scalar coefficient;
};

/// A truncated Levi-Civita series sum c_i * eps^(e_i) in one positive
/// infinitesimal generator eps. H denotes eps^-1.
///
/// Terms are kept with strictly increasing exponents and nonzero
/// coefficients; the empty series is zero. Every exponent lies within
/// order() of the leading one. Values are immutable.
class HyperReal {
 public:
  HyperReal() = default;
  explicit HyperReal(int order);

  static HyperReal rational(const Rational& q, int order = kDefaultOrder);
  static HyperReal scalar(const Scalar& s, int order = kDefaultOrder);
  static HyperReal generator_power(const Rational& exponent, int order = kDefaultOrder);
  static HyperReal epsilon(int order = kDefaultOrder) { return generator_power(1, order); }
  static HyperReal infinite(int order = kDefaultOrder) { return generator_power(-1, order); }
  /// Sorts, merges, drops zero coefficients and truncates.
  static HyperReal from_terms(std::vector<Term> terms, int order = kDefaultOrder);

  const std::vector<Term>& terms() const { return terms_; }
  int order() const { return order_; }
  HyperReal with_order(int order) const;

  bool is_zero() const { return terms_.empty(); }
  Rational valuation() const;
  Magnitude magnitude() const;
  bool is_limited() const;
  Scalar standard_part() const;
  Scalar coefficient(const Rational& exponent) const;
  /// Sign of the leading coefficient.
  int sign() const;

  HyperReal abs() const;
  HyperReal reciprocal() const;
  HyperReal pow(long exponent) const;

  /// Canonical text: "H^2 + 2 + eps^2", "-1/2*eps^(1/3)", "0".
  std::string str() const;

  HyperReal operator-() const;
  friend HyperReal operator+(const HyperReal& a, const HyperReal& b);
  friend HyperReal operator-(const HyperReal& a, const HyperReal& b);
  friend HyperReal operator*(const HyperReal& a, const HyperReal& b);
  friend HyperReal operator/(const HyperReal& a, const HyperReal& b);

  /// Term-list equality.
  friend bool operator==(const HyperReal& a, const HyperReal& b);

  friend std::ostream& operator<<(std::ostream& os, const HyperReal& h) { return os << h.str(); }

 private:
  // Leading coefficient, confirmed nonzero even when it is symbolic.
  const Term& checked_leading() const;

  std::vector<Term> terms_;
  int order_ = kDefaultOrder;
};

HyperReal make_rational(const Rational& q, int order = kDefaultOrder);
HyperReal make_generator_power(const Rational& exponent, int order = kDefaultOrder);

HyperReal add(const HyperReal& a, const HyperReal& b);
HyperReal mul(const HyperReal& a, const HyperReal& b);
HyperReal inv(const HyperReal& a);
Ordering compare(const HyperReal& a, const HyperReal& b);
Magnitude classify(const HyperReal& a);
Scalar st(const HyperReal& a);
bool approx(const HyperReal& a, const HyperReal& b);
Rational valuation(const HyperReal& a);

/// a and b agree on every exponent up to K past the smaller leading exponent.
bool window_equal(const HyperReal& a, const HyperReal& b);

inline bool operator<(const HyperReal& a, const HyperReal& b) { return compare(a, b) == Ordering::Less; }
inline bool operator>(const HyperReal& a, const HyperReal& b) { return compare(a, b) == Ordering::Greater; }
inline bool operator<=(const HyperReal& a, const HyperReal& b) { return compare(a, b) != Ordering::Greater; }
inline bool operator>=(const HyperReal& a, const HyperReal& b) { return compare(a, b) != Ordering::Less; }

/// Natural extensions of the elementary functions. sin, cos and exp are
/// expanded in Taylor series around the standard part; sqrt factors out the
/// leading term, so it also accepts infinite and infinitesimal arguments.
HyperReal apply(Func f, const HyperReal& a);

}  // namespace tic
