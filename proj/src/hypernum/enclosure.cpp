#include "tic/enclosure.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace tic {

Enclosure::Enclosure(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Rational& value, mpfr_prec_t precision)
    : Enclosure(precision) {
  mpfr_set_q(lo_, value.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.raw().get_mpq_t(), MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(other.precision_) {
  swap(other);
}

Enclosure& Enclosure::operator=(Enclosure other) noexcept {
  swap(other);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Enclosure::swap(Enclosure& other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure Enclosure::whole_line(mpfr_prec_t precision) {
  Enclosure out(precision);
  mpfr_set_inf(out.lo_, -1);
  mpfr_set_inf(out.hi_, 1);
  return out;
}

int Enclosure::certain_sign() const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) return 0;
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Enclosure::is_bounded() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

double Enclosure::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Enclosure::str() const {
  return "[" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]";
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision_, b.precision_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision_, b.precision_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator-() const {
  Enclosure out(precision_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
  Enclosure out(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{{
      {a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}}};
  bool first = true;
  for (const auto& [x, y] : corners) {
    // 0 * inf is NaN in MPFR; the true product of the corner is 0.
    const bool zero_corner = mpfr_zero_p(x) || mpfr_zero_p(y);
    if (zero_corner) {
      mpfr_set_zero(tmp, 1);
    } else {
      mpfr_mul(tmp, x, y, MPFR_RNDD);
    }
    if (first || mpfr_less_p(tmp, out.lo_)) mpfr_set(out.lo_, tmp, MPFR_RNDD);
    if (!zero_corner) mpfr_mul(tmp, x, y, MPFR_RNDU);
    if (first || mpfr_greater_p(tmp, out.hi_)) mpfr_set(out.hi_, tmp, MPFR_RNDU);
    first = false;
  }
  mpfr_clear(tmp);
  return out;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
  if (b.contains_zero()) return Enclosure::whole_line(prec);
  Enclosure inv(prec);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Enclosure Enclosure::pow(long exponent) const {
  if (exponent < 0) {
    Enclosure one(Rational(1), precision_);
    return one / pow(-exponent);
  }
  Enclosure result(Rational(1), precision_);
  if (exponent == 0) return result;
  if (exponent % 2 == 0 && contains_zero()) {
    // Even power of an interval straddling zero is [0, max(lo^n, hi^n)].
    Enclosure out(precision_);
    mpfr_t a;
    mpfr_t b;
    mpfr_init2(a, precision_);
    mpfr_init2(b, precision_);
    mpfr_pow_ui(a, lo_, static_cast<unsigned long>(exponent), MPFR_RNDU);
    mpfr_pow_ui(b, hi_, static_cast<unsigned long>(exponent), MPFR_RNDU);
    mpfr_max(out.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
  }
  Enclosure base = *this;
  long n = exponent;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

// sin and cos are 1-Lipschitz: f([lo, hi]) lies within f(lo) +- (hi - lo).
template <typename Fn>
void lipschitz_one(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr lo,
                   mpfr_srcptr hi, mpfr_prec_t prec, Fn fn) {
  if (!mpfr_number_p(lo) || !mpfr_number_p(hi)) {
    mpfr_set_si(out_lo, -1, MPFR_RNDD);
    mpfr_set_si(out_hi, 1, MPFR_RNDU);
    return;
  }
  mpfr_t radius;
  mpfr_init2(radius, prec);
  mpfr_sub(radius, hi, lo, MPFR_RNDU);
  fn(out_lo, lo, MPFR_RNDD);
  fn(out_hi, lo, MPFR_RNDU);
  mpfr_sub(out_lo, out_lo, radius, MPFR_RNDD);
  mpfr_add(out_hi, out_hi, radius, MPFR_RNDU);
  mpfr_clear(radius);
  if (mpfr_cmp_si(out_lo, -1) < 0) mpfr_set_si(out_lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out_hi, 1) > 0) mpfr_set_si(out_hi, 1, MPFR_RNDU);
}

}  // namespace

Enclosure Enclosure::sin() const {
  Enclosure out(precision_);
  lipschitz_one(out.lo_, out.hi_, lo_, hi_, precision_,
                [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_sin(r, x, rnd); });
  return out;
}

Enclosure Enclosure::cos() const {
  Enclosure out(precision_);
  lipschitz_one(out.lo_, out.hi_, lo_, hi_, precision_,
                [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_cos(r, x, rnd); });
  return out;
}

Enclosure Enclosure::exp() const {
  Enclosure out(precision_);
  mpfr_exp(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::log() const {
  Enclosure out(precision_);
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_inf(out.lo_, -1);
  } else {
    mpfr_log(out.lo_, lo_, MPFR_RNDD);
  }
  if (mpfr_sgn(hi_) <= 0) {
    mpfr_set_inf(out.hi_, -1);
  } else {
    mpfr_log(out.hi_, hi_, MPFR_RNDU);
  }
  return out;
}

Enclosure Enclosure::sqrt() const {
  Enclosure out(precision_);
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  }
  if (mpfr_sgn(hi_) <= 0) {
    mpfr_set_zero(out.hi_, 1);
  } else {
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  }
  return out;
}

}  // namespace tic
