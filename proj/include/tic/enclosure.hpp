#pragma once

#include <string>

#include <mpfr.h>

#include "tic/rational.hpp"

namespace tic {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward, so the true
/// value of whatever was evaluated is guaranteed to lie inside.
class Enclosure {
 public:
  explicit Enclosure(mpfr_prec_t precision);
  Enclosure(const Rational& value, mpfr_prec_t precision);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(Enclosure other) noexcept;
  ~Enclosure();

  static Enclosure whole_line(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return precision_; }

  /// +1 or -1 when the interval excludes zero, 0 when it does not.
  int certain_sign() const;
  bool contains_zero() const { return certain_sign() == 0; }
  bool is_bounded() const;
  double lo() const;
  double hi() const;
  std::string str() const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  Enclosure operator-() const;

  Enclosure pow(long exponent) const;
  Enclosure sin() const;
  Enclosure cos() const;
  Enclosure exp() const;
  Enclosure log() const;
  Enclosure sqrt() const;

 private:
  void swap(Enclosure& other) noexcept;

  mpfr_prec_t precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace tic
