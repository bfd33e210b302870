#include <functional>

#include "tic/error.hpp"
#include "tic/hyperreal.hpp"

namespace tic {

namespace {

// sum_{k>=0} coeff(k) * t^k, with enough terms to fill the window of a
// result whose leading exponent is at most val(t).
HyperReal power_series(const HyperReal& t, int order,
                       const std::function<Scalar(long)>& coeff) {
  HyperReal sum = HyperReal::scalar(coeff(0), order);
  if (t.is_zero()) return sum;
  const Rational step = t.valuation();
  const long n = (Rational(order) / step).floor().get_si() + 1;
  HyperReal power = HyperReal::rational(1, order);
  for (long k = 1; k <= n; ++k) {
    power = power * t;
    const Scalar c = coeff(k);
    if (!c.is_zero()) sum = sum + power * HyperReal::scalar(c, order);
  }
  return sum;
}

void require_limited(Func f, const HyperReal& a) {
  if (!a.is_limited()) {
    throw Error(ErrorKind::TranscendentalAtInfinite,
                std::string(to_string(f)) + " at infinite argument " + a.str() +
                    " has no series representation");
  }
}

HyperReal exp_series(const HyperReal& a) {
  require_limited(Func::Exp, a);
  const Scalar c = a.coefficient(Rational(0));
  const HyperReal t = a - HyperReal::scalar(c, a.order());
  const Scalar base = Scalar::apply(Func::Exp, c);
  Rational factorial(1);
  return power_series(t, a.order(), [&](long k) {
    if (k > 0) factorial *= Rational(k);
    return base * Scalar(factorial.reciprocal());
  });
}

HyperReal trig_series(Func f, const HyperReal& a) {
  require_limited(f, a);
  const Scalar c = a.coefficient(Rational(0));
  const HyperReal t = a - HyperReal::scalar(c, a.order());
  const Scalar s = Scalar::apply(Func::Sin, c);
  const Scalar co = Scalar::apply(Func::Cos, c);
  // Derivatives cycle with period four; cos is sin shifted by one.
  const long shift = f == Func::Cos ? 1 : 0;
  Rational factorial(1);
  return power_series(t, a.order(), [&](long k) {
    if (k > 0) factorial *= Rational(k);
    Scalar d;
    switch ((k + shift) % 4) {
      case 0: d = s; break;
      case 1: d = co; break;
      case 2: d = -s; break;
      default: d = -co; break;
    }
    return d * Scalar(factorial.reciprocal());
  });
}

HyperReal ln_series(const HyperReal& a) {
  if (a.sign() <= 0) throw Error(ErrorKind::LogOfNonPositive, "ln of non-positive value " + a.str());
  require_limited(Func::Ln, a);
  if (a.magnitude() == Magnitude::Infinitesimal) {
    throw Error(ErrorKind::Unrepresentable,
                "ln of positive infinitesimal " + a.str() + " is not a power series in eps");
  }
  const Scalar c = a.coefficient(Rational(0));
  const HyperReal u = (a - HyperReal::scalar(c, a.order())) * HyperReal::scalar(c.reciprocal(), a.order());
  const Scalar base = Scalar::apply(Func::Ln, c);
  return power_series(u, a.order(), [&](long k) {
    if (k == 0) return base;
    const Rational mag = Rational(1, k);
    return Scalar(k % 2 == 1 ? mag : -mag);
  });
}

HyperReal sqrt_series(const HyperReal& a) {
  const int s = a.sign();
  if (s < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of negative value " + a.str());
  if (s == 0) return a;
  const Term& lead = a.terms().front();
  const Scalar lead_inv = lead.coefficient.reciprocal();
  // a = lead * eps^v * (1 + u)
  std::vector<Term> normalized;
  for (const auto& t : a.terms()) normalized.push_back({t.exponent - lead.exponent, t.coefficient * lead_inv});
  const HyperReal u = HyperReal::from_terms(std::move(normalized), a.order()) - HyperReal::rational(1, a.order());
  Rational binomial(1);
  const HyperReal series = power_series(u, a.order(), [&](long k) {
    if (k > 0) binomial *= (Rational(1, 2) - Rational(k - 1)) / Rational(k);
    return Scalar(binomial);
  });
  const Scalar root = Scalar::apply(Func::Sqrt, lead.coefficient);
  std::vector<Term> shifted;
  for (const auto& t : series.terms()) {
    shifted.push_back({t.exponent + lead.exponent / Rational(2), t.coefficient * root});
  }
  return HyperReal::from_terms(std::move(shifted), a.order());
}

}  // namespace

HyperReal apply(Func f, const HyperReal& a) {
  switch (f) {
    case Func::Sin:
    case Func::Cos: return trig_series(f, a);
    case Func::Exp: return exp_series(a);
    case Func::Ln: return ln_series(a);
    case Func::Sqrt: return sqrt_series(a);
    case Func::Abs: return a.abs();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown function");
}

}  // namespace tic
