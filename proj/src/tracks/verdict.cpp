#include "tic/tracks.hpp"

namespace tic {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::NoCounterexampleFound: return "no_counterexample";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Grade g) { return g == Grade::Decided ? "decided" : "probe_only"; }

std::string_view to_string(Track t) { return t == Track::A ? "A" : "B"; }

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::ContinuityAt: return "continuity-at";
    case ClaimKind::UniformContinuityOn: return "uniform-continuity-on";
    case ClaimKind::LimitOfSequence: return "limit-of-sequence";
    case ClaimKind::LimitAtPoint: return "limit-at-point";
  }
  return "?";
}

std::string Claim::str() const {
  const std::string f = format(expr);
  const std::string on = domain ? " on " + domain->str() : "";
  switch (kind) {
    case ClaimKind::ContinuityAt: return f + " is continuous at " + point->str() + on;
    case ClaimKind::UniformContinuityOn: return f + " is uniformly continuous" + on;
    case ClaimKind::LimitOfSequence:
      return "lim_{n->inf} " + f + (limit ? " = " + limit->str() : " exists");
    case ClaimKind::LimitAtPoint:
      return "lim_{x->" + point->str() + "} " + f + (limit ? " = " + limit->str() : " exists");
  }
  return f;
}

namespace {

std::string wrapped(const Rational& q) { return q.is_integer() ? q.str() : "(" + q.str() + ")"; }

}  // namespace

Rational Modulus::delta(const Rational& eps) const {
  if (scale && cap) return min(*cap, eps / *scale);
  if (scale) return eps / *scale;
  return cap.value_or(Rational(1));
}

Rational Modulus::n_of(const Rational& eps) const {
  if (!scale) return floor;
  const Rational n(*scale / eps);
  return max(floor, Rational(n.ceil()));
}

std::string Modulus::formula() const {
  if (kind == Kind::NOfEpsilon) {
    if (!scale) return floor.str();
    const std::string tail = "ceil(" + wrapped(*scale) + "/epsilon)";
    return floor <= Rational(1) ? tail : "max(" + floor.str() + ", " + tail + ")";
  }
  std::string e;
  if (scale) e = scale->is_one() ? "epsilon" : "epsilon/" + wrapped(*scale);
  if (!cap) return e;
  if (!scale) return cap->str();
  return "min(" + cap->str() + ", " + e + ")";
}

}  // namespace tic
