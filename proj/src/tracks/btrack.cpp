#include <algorithm>

#include "tic/error.hpp"
#include "tic/tracks.hpp"

namespace tic {

namespace {

bool negligible(const HyperReal& h) {
  const Magnitude m = classify(h);
  return m == Magnitude::Zero || m == Magnitude::Infinitesimal;
}

std::string describe(const HyperReal& h) {
  return h.str() + " (" + std::string(to_string(classify(h))) + ")";
}

Witness make_witness(const HyperReal& x, const HyperReal& delta, const HyperReal& inc) {
  Witness w{x, delta, inc, classify(inc), std::nullopt};
  if (inc.is_limited()) w.standard_part = st(inc);
  return w;
}

// The increment of *f at x along delta, if it is defined and not infinitesimal.
std::optional<Witness> try_probe(const Expr& f, const DomainSpec& d, const HyperReal& x,
                                 const HyperReal& fx, const HyperReal& delta) {
  const HyperReal moved = x + delta;
  if (!is_in_star_domain(d, moved)) return std::nullopt;
  try {
    const HyperReal inc = extend_eval(f, moved) - fx;
    if (negligible(inc)) return std::nullopt;
    return make_witness(x, delta, inc);
  } catch (const Error&) {
    return std::nullopt;
  }
}

HyperReal eps_pow(const Rational& p, int order) { return HyperReal::generator_power(p, order); }

std::vector<HyperReal> generic_probes(int order, int max_root) {
  std::vector<HyperReal> out;
  for (int m = 1; m <= max_root; ++m) {
    const HyperReal e = eps_pow(Rational(1, m), order);
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

std::optional<Witness> search(const Expr& f, const DomainSpec& d, const HyperReal& x, const HyperReal& fx,
                              const std::vector<HyperReal>& deltas) {
  for (const HyperReal& delta : deltas) {
    if (auto w = try_probe(f, d, x, fx, delta)) return w;
  }
  return std::nullopt;
}

// Increments steep enough to expose a failure: first the generic roots of
// eps, then exponents read off the derivative valuations, then the scale of
// x - st(x), then milder roots.
std::vector<HyperReal> witness_candidates(const HyperReal& x, const std::vector<HyperReal>& derivs) {
  const int order = x.order();
  std::vector<HyperReal> out = generic_probes(order, 4);
  auto push_pm = [&](const HyperReal& h) {
    out.push_back(h);
    out.push_back(-h);
  };
  for (std::size_t k = 0; k < derivs.size(); ++k) {
    if (derivs[k].is_zero() || derivs[k].is_limited()) continue;
    const Rational p = -derivs[k].valuation() / Rational(static_cast<std::int64_t>(k + 1));
    push_pm(eps_pow(p, order));
    push_pm(eps_pow(p / Rational(2), order));
  }
  if (x.is_limited()) {
    const HyperReal t = x - HyperReal::scalar(st(x), order);
    if (!t.is_zero()) {
      const Rational vt = t.valuation();
      push_pm(eps_pow(vt, order));
      push_pm(eps_pow(vt * Rational(2), order));
      out.push_back(t);
      out.push_back(-t / HyperReal::rational(2, order));
    }
  }
  for (int m = 5; m <= 12; ++m) push_pm(eps_pow(Rational(1, m), order));
  return out;
}

void add_witness_narrative(Verdict& v, const Witness& w) {
  v.narrative.push_back("probe x = " + w.point.str() + ", delta = " + w.delta.str());
  v.narrative.push_back("*f(x + delta) - *f(x) = " + describe(w.increment));
  if (w.standard_part) v.narrative.push_back("st of the increment = " + w.standard_part->str());
}

}  // namespace

Verdict microcontinuous_at(const Expr& f, const DomainSpec& d, const HyperReal& x) {
  if (!is_in_star_domain(d, x)) {
    throw Error(ErrorKind::PointOutsideDomain, x.str() + " is not in *" + d.str());
  }
  const HyperReal fx = extend_eval(f, x);
  Verdict v;
  v.narrative.push_back("*f(" + x.str() + ") = " + fx.str());
  const ExprClass cls = classify_expr(f);

  if (cls == ExprClass::Other) {
    v.grade = Grade::ProbeOnly;
    if (auto w = search(f, d, x, fx, generic_probes(x.order(), 4))) {
      v.outcome = Outcome::Fails;
      add_witness_narrative(v, *w);
      v.witness = std::move(w);
    } else {
      v.outcome = Outcome::NoCounterexampleFound;
      v.narrative.push_back("every probe delta = +-eps^(1/m), m = 1..4, gives an infinitesimal increment");
    }
    return v;
  }

  const auto rf = to_rational_function(f);
  if (!rf) throw Error(ErrorKind::InvalidArgument, "expected a rational function");
  const int n = x.is_limited() ? 1 : std::max(1, rf->degree_at_infinity());
  std::vector<HyperReal> derivs;
  bool limited = true;
  Expr g = f;
  for (int k = 1; k <= n; ++k) {
    g = differentiate(g);
    derivs.push_back(extend_eval(g, x));
    v.narrative.push_back("*f^(" + std::to_string(k) + ")(x) = " + describe(derivs.back()));
    limited = limited && derivs.back().is_limited();
  }
  if (limited) {
    v.outcome = Outcome::Holds;
    v.grade = Grade::Decided;
    v.narrative.push_back("derivatives up to order " + std::to_string(n) +
                          " are limited, so every infinitesimal delta gives an infinitesimal increment");
    return v;
  }
  if (auto w = search(f, d, x, fx, witness_candidates(x, derivs))) {
    v.outcome = Outcome::Fails;
    v.grade = Grade::Decided;
    add_witness_narrative(v, *w);
    v.witness = std::move(w);
  } else {
    v.outcome = Outcome::NoCounterexampleFound;
    v.grade = Grade::ProbeOnly;
    v.narrative.push_back("a derivative is infinite but no probe inside *D exposed it");
  }
  return v;
}

Verdict continuity_b(const Expr& f, const DomainSpec& d, const Rational& c, int order) {
  if (!d.contains(c)) throw Error(ErrorKind::PointOutsideDomain, c.str() + " is not in " + d.str());
  const HyperReal x = HyperReal::rational(c, order);
  try {
    (void)extend_eval(f, x);
  } catch (const Error& undefined) {
    // f(c) does not exist; look for two points infinitely close to c whose
    // values are not infinitely close, so no value at c could repair f.
    std::vector<HyperReal> pts;
    for (const Rational& p : {Rational(1), Rational(2)}) {
      for (int s : {1, -1}) {
        const HyperReal pt = x + HyperReal::rational(s) * eps_pow(p, x.order());
        if (!is_in_star_domain(d, pt)) continue;
        try {
          (void)extend_eval(f, pt);
          pts.push_back(pt);
        } catch (const Error&) {
        }
      }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const HyperReal fi = extend_eval(f, pts[i]);
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const HyperReal inc = extend_eval(f, pts[j]) - fi;
        if (negligible(inc)) continue;
        Verdict v;
        v.outcome = Outcome::Fails;
        v.grade = classify_expr(f) == ExprClass::Other ? Grade::ProbeOnly : Grade::Decided;
        v.narrative.push_back(std::string("f(") + c.str() + ") is undefined: " + undefined.what());
        Witness w = make_witness(pts[i], pts[j] - pts[i], inc);
        add_witness_narrative(v, w);
        v.witness = std::move(w);
        return v;
      }
    }
    throw;
  }
  return microcontinuous_at(f, d, x);
}

namespace {

std::vector<Rational> real_samples(const Interval& iv) {
  std::vector<Rational> out;
  if (iv.lo && iv.hi) {
    const Rational w = *iv.hi - *iv.lo;
    if (iv.lo_closed) out.push_back(*iv.lo);
    for (int k = 1; k <= 3; ++k) out.push_back(*iv.lo + w * Rational(k, 4));
    if (iv.hi_closed) out.push_back(*iv.hi);
  } else if (iv.lo) {
    if (iv.lo_closed) out.push_back(*iv.lo);
    for (int k : {1, 2, 10}) out.push_back(*iv.lo + Rational(k));
  } else if (iv.hi) {
    if (iv.hi_closed) out.push_back(*iv.hi);
    for (int k : {1, 2, 10}) out.push_back(*iv.hi - Rational(k));
  } else {
    for (int k : {-2, -1, 0, 1, 2}) out.push_back(Rational(k));
    out.push_back(Rational(1, 2));
  }
  return out;
}

bool uniformly_continuous_rational(const RationalFunction& rf, const DomainSpec& d) {
  for (const Interval& iv : d.intervals()) {
    if (rf.den.count_roots(iv.lo, iv.hi) > 0) return false;
    if (!iv.is_bounded() && rf.degree_at_infinity() > 1) return false;
  }
  return true;
}

}  // namespace

Verdict uniform_continuity_b(const Expr& f, const DomainSpec& d, int order) {
  const HyperReal eps = HyperReal::epsilon(order);
  const HyperReal big = HyperReal::infinite(order);
  std::vector<HyperReal> points;
  for (const Interval& iv : d.intervals()) {
    for (const Rational& q : real_samples(iv)) points.push_back(HyperReal::rational(q, order));
  }
  for (const HyperReal& h : {big, -big, big * big, -(big * big)}) {
    if (is_in_star_domain(d, h)) points.push_back(h);
  }
  for (const Rational& a : d.finite_endpoints()) {
    for (const HyperReal& pt : {HyperReal::rational(a, order) + eps, HyperReal::rational(a, order) - eps}) {
      if (is_in_star_domain(d, pt)) points.push_back(pt);
    }
  }

  const ExprClass cls = classify_expr(f);
  Verdict out;
  out.narrative.push_back("class: " + std::string(to_string(cls)) + ", " + std::to_string(points.size()) +
                          " probe points");
  bool all_decided = true;
  for (const HyperReal& x : points) {
    Verdict v;
    try {
      v = microcontinuous_at(f, d, x);
    } catch (const Error& e) {
      out.narrative.push_back("skipped x = " + x.str() + ": " + e.what());
      all_decided = false;
      continue;
    }
    if (v.grade != Grade::Decided) all_decided = false;
    if (v.outcome == Outcome::Fails) {
      out.outcome = Outcome::Fails;
      out.grade = cls == ExprClass::Other ? Grade::ProbeOnly : Grade::Decided;
      out.witness = v.witness;
      out.narrative.push_back("not microcontinuous at x = " + x.str());
      for (const std::string& s : v.narrative) out.narrative.push_back(s);
      return out;
    }
  }

  bool decided = false;
  if (cls != ExprClass::Other && all_decided) {
    const auto rf = to_rational_function(f);
    decided = rf && uniformly_continuous_rational(*rf, d);
    if (decided) {
      const std::string fn = rf->is_polynomial() ? rf->num.str() : "(" + rf->num.str() + ")/(" + rf->den.str() + ")";
      out.narrative.push_back("no pole of " + fn + " on the closure of the domain and growth order " +
                              std::to_string(rf->degree_at_infinity()) + " at infinity");
    }
  }
  out.outcome = decided ? Outcome::Holds : Outcome::NoCounterexampleFound;
  out.grade = decided ? Grade::Decided : Grade::ProbeOnly;
  out.narrative.push_back(decided ? "microcontinuous at every point of *D"
                                  : "microcontinuous at every probe point");
  return out;
}

namespace {

void finish(LimitResult& r) {
  if (!r.diagnostics.empty()) {
    r.tag = LimitResult::Tag::Undetermined;
    return;
  }
  const bool any_infinite = std::any_of(r.probes.begin(), r.probes.end(), [](const LimitProbe& p) {
    return p.magnitude == Magnitude::Infinite;
  });
  if (any_infinite) {
    r.tag = LimitResult::Tag::Diverges;
    return;
  }
  for (const LimitProbe& p : r.probes) {
    if (!(*p.standard_part == *r.probes.front().standard_part)) {
      r.tag = LimitResult::Tag::Undetermined;
      r.diagnostics.push_back("probes disagree on the standard part");
      return;
    }
  }
  r.tag = LimitResult::Tag::Value;
  r.value = r.probes.front().standard_part;
}

bool probe_into(LimitResult& r, const Expr& f, const HyperReal& at, HyperReal& value) {
  try {
    value = extend_eval(f, at);
    LimitProbe p{at, std::nullopt, classify(value)};
    if (value.is_limited()) p.standard_part = st(value);
    r.probes.push_back(std::move(p));
    return true;
  } catch (const Error& e) {
    r.diagnostics.push_back("evaluation at " + at.str() + " failed: " + e.what());
    return false;
  }
}

}  // namespace

LimitResult limit_seq_b(const Expr& u, int order) {
  LimitResult r;
  const HyperReal h = HyperReal::infinite(order);
  const HyperReal one = HyperReal::rational(1, order);
  for (const HyperReal& j : {h, h * h, h + h, h + one}) {
    HyperReal value;
    probe_into(r, u, j, value);
  }
  finish(r);
  return r;
}

LimitResult limit_at_b(const Expr& f, const Rational& c, const std::optional<DomainSpec>& d, int order) {
  LimitResult r;
  const HyperReal base = HyperReal::rational(c, order);
  const HyperReal e = HyperReal::epsilon(order);
  std::vector<HyperReal> values;
  for (const HyperReal& delta : {e, -e, e * e, -(e * e)}) {
    const HyperReal at = base + delta;
    if (d && !is_in_star_domain(*d, at)) continue;
    HyperReal value;
    if (probe_into(r, f, at, value)) values.push_back(value);
  }
  if (r.probes.empty() && r.diagnostics.empty()) {
    r.diagnostics.push_back("no probe point lies in the domain");
  }
  if (!r.diagnostics.empty()) {
    r.tag = LimitResult::Tag::Undetermined;
    return r;
  }
  bool pos = false;
  bool neg = false;
  for (const HyperReal& v : values) {
    if (v.is_limited()) continue;
    (v.sign() > 0 ? pos : neg) = true;
  }
  if (pos && neg) {
    r.tag = LimitResult::Tag::Undetermined;
    r.diagnostics.push_back("one-sided infinite values of opposite sign");
    return r;
  }
  if ((pos || neg) && std::any_of(values.begin(), values.end(), [](const HyperReal& v) { return v.is_limited(); })) {
    r.tag = LimitResult::Tag::Undetermined;
    r.diagnostics.push_back("some probes are infinite and some are limited");
    return r;
  }
  finish(r);
  return r;
}

namespace {

std::vector<std::string> limit_narrative(const LimitResult& r, char var) {
  std::vector<std::string> out;
  for (const LimitProbe& p : r.probes) {
    std::string s = std::string("at ") + var + " = " + p.index.str() + ": " + std::string(to_string(p.magnitude));
    if (p.standard_part) s += ", st = " + p.standard_part->str();
    out.push_back(std::move(s));
  }
  for (const std::string& d : r.diagnostics) out.push_back(d);
  return out;
}

void limit_outcome(Certificate& cert, const LimitResult& r, const std::optional<Rational>& limit) {
  switch (r.tag) {
    case LimitResult::Tag::Value: {
      const bool matches = !limit || (r.value->rational() && *r.value->rational() == *limit);
      cert.outcome = matches ? Outcome::Holds : Outcome::Fails;
      cert.narrative.push_back("limit = " + r.value->str());
      break;
    }
    case LimitResult::Tag::Diverges:
      cert.outcome = Outcome::Fails;
      cert.narrative.push_back("diverges");
      break;
    case LimitResult::Tag::Undetermined: cert.outcome = Outcome::Inconclusive; break;
  }
  const bool exact = classify_expr(cert.claim.expr) != ExprClass::Other;
  cert.grade = exact && r.tag != LimitResult::Tag::Undetermined ? Grade::Decided : Grade::ProbeOnly;
}

}  // namespace

Certificate continuity_b_certificate(const Expr& f, const DomainSpec& d, const Rational& c, int order) {
  Certificate cert;
  cert.claim = Claim{ClaimKind::ContinuityAt, f, d, c, std::nullopt};
  cert.track = Track::B;
  Verdict v = continuity_b(f, d, c, order);
  cert.outcome = v.outcome;
  cert.grade = v.grade;
  cert.narrative = v.narrative;
  cert.verdict = std::move(v);
  return cert;
}

Certificate uniform_continuity_b_certificate(const Expr& f, const DomainSpec& d, int order) {
  Certificate cert;
  cert.claim = Claim{ClaimKind::UniformContinuityOn, f, d, std::nullopt, std::nullopt};
  cert.track = Track::B;
  Verdict v = uniform_continuity_b(f, d, order);
  cert.outcome = v.outcome;
  cert.grade = v.grade;
  cert.narrative = v.narrative;
  cert.verdict = std::move(v);
  return cert;
}

Certificate limit_seq_b_certificate(const Expr& u, const std::optional<Rational>& limit, int order) {
  Certificate cert;
  cert.claim = Claim{ClaimKind::LimitOfSequence, u, std::nullopt, std::nullopt, limit};
  cert.track = Track::B;
  LimitResult r = limit_seq_b(u, order);
  cert.narrative = limit_narrative(r, free_variable(u).value_or('n'));
  limit_outcome(cert, r, limit);
  cert.limit = std::move(r);
  return cert;
}

Certificate limit_at_b_certificate(const Expr& f, const DomainSpec& d, const Rational& c,
                                   const std::optional<Rational>& limit, int order) {
  Certificate cert;
  cert.claim = Claim{ClaimKind::LimitAtPoint, f, d, c, limit};
  cert.track = Track::B;
  LimitResult r = limit_at_b(f, c, d, order);
  cert.narrative = limit_narrative(r, free_variable(f).value_or('x'));
  limit_outcome(cert, r, limit);
  cert.limit = std::move(r);
  return cert;
}

}  // namespace tic
