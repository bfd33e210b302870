#include "tic/hyperreal.hpp"

#include <algorithm>
#include <map>

#include "tic/error.hpp"

namespace tic {

std::string_view to_string(Magnitude m) {
  switch (m) {
    case Magnitude::Zero: return "zero";
    case Magnitude::Infinitesimal: return "infinitesimal";
    case Magnitude::Appreciable: return "appreciable";
    case Magnitude::Infinite: return "infinite";
  }
  return "?";
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

namespace {

void check_order(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
}

// Drops terms past the window; input sorted, merged, zero-free.
void truncate(std::vector<Term>& terms, int order) {
  if (terms.empty()) return;
  const Rational limit = terms.front().exponent + Rational(order);
  auto cut = std::find_if(terms.begin(), terms.end(),
                          [&](const Term& t) { return t.exponent > limit; });
  terms.erase(cut, terms.end());
}

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return a < b; }
};

std::vector<Term> collect(std::map<Rational, Scalar, RationalLess>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.push_back({e, std::move(c)});
  }
  return out;
}

// c * eps^shift * a
HyperReal scaled(const HyperReal& a, const Scalar& c, const Rational& shift) {
  std::vector<Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) terms.push_back({t.exponent + shift, t.coefficient * c});
  return HyperReal::from_terms(std::move(terms), a.order());
}

std::string exponent_str(const Rational& e) {
  return e.is_integer() ? e.str() : "(" + e.str() + ")";
}

std::string unit_str(const Rational& e) {
  if (e.is_zero()) return "";
  const Rational mag = e.abs();
  std::string base = e.sign() < 0 ? "H" : "eps";
  if (!mag.is_one()) base += "^" + exponent_str(mag);
  return base;
}

}  // namespace

HyperReal::HyperReal(int order) : order_(order) { check_order(order); }

HyperReal HyperReal::rational(const Rational& q, int order) {
  return scalar(Scalar(q), order);
}

HyperReal HyperReal::scalar(const Scalar& s, int order) {
  HyperReal out(order);
  if (!s.is_zero()) out.terms_.push_back({Rational(0), s});
  return out;
}

HyperReal HyperReal::generator_power(const Rational& exponent, int order) {
  HyperReal out(order);
  out.terms_.push_back({exponent, Scalar(1)});
  return out;
}

HyperReal HyperReal::from_terms(std::vector<Term> terms, int order) {
  check_order(order);
  std::map<Rational, Scalar, RationalLess> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.emplace(t.exponent, t.coefficient);
    if (!inserted) it->second = it->second + t.coefficient;
  }
  HyperReal out(order);
  out.terms_ = collect(std::move(acc));
  truncate(out.terms_, order);
  return out;
}

HyperReal HyperReal::with_order(int order) const {
  check_order(order);
  HyperReal out = *this;
  out.order_ = order;
  truncate(out.terms_, order);
  return out;
}

const Term& HyperReal::checked_leading() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroHasNoValuation, "zero has no valuation");
  const Term& lead = terms_.front();
  if (!lead.coefficient.is_rational()) (void)lead.coefficient.sign();
  return lead;
}

Rational HyperReal::valuation() const { return checked_leading().exponent; }

Magnitude HyperReal::magnitude() const {
  if (terms_.empty()) return Magnitude::Zero;
  const int s = checked_leading().exponent.sign();
  if (s > 0) return Magnitude::Infinitesimal;
  if (s < 0) return Magnitude::Infinite;
  return Magnitude::Appreciable;
}

bool HyperReal::is_limited() const { return magnitude() != Magnitude::Infinite; }

Scalar HyperReal::standard_part() const {
  if (magnitude() == Magnitude::Infinite) {
    throw Error(ErrorKind::NotLimited, "standard part of infinite value " + str());
  }
  return coefficient(Rational(0));
}

Scalar HyperReal::coefficient(const Rational& exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coefficient;
    if (t.exponent > exponent) break;
  }
  return Scalar(0);
}

int HyperReal::sign() const {
  if (terms_.empty()) return 0;
  return checked_leading().coefficient.sign();
}

HyperReal HyperReal::abs() const { return sign() < 0 ? -*this : *this; }

HyperReal HyperReal::reciprocal() const {
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  const Term& lead = checked_leading();
  const Scalar lead_inv = lead.coefficient.reciprocal();
  // this = lead * eps^v * (1 + t) with t infinitesimal.
  const HyperReal t = scaled(*this, lead_inv, -lead.exponent) - HyperReal::rational(1, order_);
  HyperReal series = HyperReal::rational(1, order_);
  if (!t.is_zero()) {
    const Rational step = t.valuation();
    const long n = (Rational(order_) / step).floor().get_si();
    const HyperReal minus_t = -t;
    HyperReal power = HyperReal::rational(1, order_);
    for (long k = 1; k <= n; ++k) {
      power = power * minus_t;
      series = series + power;
    }
  }
  return scaled(series, lead_inv, -lead.exponent);
}

HyperReal HyperReal::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  HyperReal result = HyperReal::rational(1, order_);
  HyperReal base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string HyperReal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [e, c] = terms_[i];
    const std::string unit = unit_str(e);
    std::string body;
    bool negative = false;
    if (const auto q = c.rational()) {
      negative = q->sign() < 0;
      const Rational mag = q->abs();
      if (unit.empty()) {
        body = mag.str();
      } else {
        body = mag.is_one() ? unit : mag.str() + "*" + unit;
      }
    } else {
      std::string text = c.str();
      if (c.is_product() && text.front() == '-') {
        negative = true;
        text.erase(0, 1);
      }
      if (unit.empty()) {
        body = text;
      } else {
        body = (c.is_product() ? text : "(" + text + ")") + "*" + unit;
      }
    }
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

HyperReal HyperReal::operator-() const {
  HyperReal out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

HyperReal operator+(const HyperReal& a, const HyperReal& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].exponent < b.terms_[j].exponent)) {
      merged.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].exponent < a.terms_[i].exponent) {
      merged.push_back(b.terms_[j++]);
    } else {
      Scalar sum = a.terms_[i].coefficient + b.terms_[j].coefficient;
      if (!sum.is_zero()) merged.push_back({a.terms_[i].exponent, std::move(sum)});
      ++i;
      ++j;
    }
  }
  HyperReal out(order);
  out.terms_ = std::move(merged);
  truncate(out.terms_, order);
  return out;
}

HyperReal operator-(const HyperReal& a, const HyperReal& b) { return a + (-b); }

HyperReal operator*(const HyperReal& a, const HyperReal& b) {
  const int order = std::min(a.order_, b.order_);
  if (a.is_zero() || b.is_zero()) return HyperReal(order);
  const Rational limit = a.terms_.front().exponent + b.terms_.front().exponent + Rational(order);
  std::map<Rational, Scalar, RationalLess> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Rational e = x.exponent + y.exponent;
      if (e > limit) break;
      Scalar c = x.coefficient * y.coefficient;
      auto [it, inserted] = acc.emplace(std::move(e), c);
      if (!inserted) it->second = it->second + c;
    }
  }
  HyperReal out(order);
  out.terms_ = collect(std::move(acc));
  truncate(out.terms_, order);
  return out;
}

HyperReal operator/(const HyperReal& a, const HyperReal& b) { return a * b.reciprocal(); }

bool operator==(const HyperReal& a, const HyperReal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent) return false;
    if (!(a.terms_[i].coefficient == b.terms_[i].coefficient)) return false;
  }
  return true;
}

HyperReal make_rational(const Rational& q, int order) { return HyperReal::rational(q, order); }

HyperReal make_generator_power(const Rational& exponent, int order) {
  return HyperReal::generator_power(exponent, order);
}

HyperReal add(const HyperReal& a, const HyperReal& b) { return a + b; }
HyperReal mul(const HyperReal& a, const HyperReal& b) { return a * b; }
HyperReal inv(const HyperReal& a) { return a.reciprocal(); }

Ordering compare(const HyperReal& a, const HyperReal& b) {
  const int s = (a - b).sign();
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

Magnitude classify(const HyperReal& a) { return a.magnitude(); }
Scalar st(const HyperReal& a) { return a.standard_part(); }
Rational valuation(const HyperReal& a) { return a.valuation(); }

bool approx(const HyperReal& a, const HyperReal& b) {
  const Magnitude m = classify(a - b);
  return m == Magnitude::Zero || m == Magnitude::Infinitesimal;
}

bool window_equal(const HyperReal& a, const HyperReal& b) {
  const HyperReal diff = a - b;
  if (diff.is_zero()) return true;
  Rational reference;
  if (a.is_zero()) {
    reference = b.valuation();
  } else if (b.is_zero()) {
    reference = a.valuation();
  } else {
    reference = min(a.valuation(), b.valuation());
  }
  return diff.valuation() > reference + Rational(std::min(a.order(), b.order()));
}

}  // namespace tic
