#include "tic/rational.hpp"

#include <cctype>

#include "tic/error.hpp"

namespace tic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument,
              "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  Rational out;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    out = Rational(mpq_class(mpz_class(std::string(num), 10), d));
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(mpq_class(digits, scale));
  } else {
    if (!all_digits(s)) bad_number(text);
    out = Rational(mpz_class(std::string(s), 10));
  }
  return negative ? -out : out;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

bool Rational::exact_sqrt(Rational& out) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(value_.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value_.get_den_mpz_t())) {
    return false;
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
  out = Rational(mpq_class(num, den));
  return true;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tic
