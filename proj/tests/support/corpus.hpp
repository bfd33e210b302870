#pragma once

#include <string>
#include <vector>

#include "tic/cli.hpp"
#include "tic/error.hpp"
#include "tic/tracks.hpp"

namespace tic::testing {

struct Triple {
  ClaimKind kind;
  const char* expr;
  const char* domain;
  const char* point;
  const char* limit;
  Outcome expected;
};

inline const std::vector<Triple>& agreement_corpus() {
  using enum ClaimKind;
  constexpr auto H = Outcome::Holds;
  constexpr auto F = Outcome::Fails;
  static const std::vector<Triple> corpus = {
      {ContinuityAt, "x+5", "R", "2", nullptr, H},
      {ContinuityAt, "x^2", "R", "3", nullptr, H},
      {ContinuityAt, "x^2", "R", "-7/2", nullptr, H},
      {ContinuityAt, "x^3-2*x", "R", "1/3", nullptr, H},
      {ContinuityAt, "1/x", "(0,inf)", "1/1000", nullptr, H},
      {ContinuityAt, "1/x", "(-inf,0) u (0,inf)", "-2", nullptr, H},
      {ContinuityAt, "(x^2-4)/(x-2)", "(-inf,2) u (2,inf)", "3", nullptr, H},
      {ContinuityAt, "1/(x^2+1)", "R", "0", nullptr, H},
      {ContinuityAt, "(x+1)/(x-1)", "(1,inf)", "2", nullptr, H},
      {ContinuityAt, "x^5", "R", "-1", nullptr, H},
      {ContinuityAt, "3", "R", "0", nullptr, H},
      {ContinuityAt, "x/(x^2+1)", "R", "5", nullptr, H},
      {ContinuityAt, "1/x^2", "(0,inf)", "1/10", nullptr, H},
      {ContinuityAt, "(2*x+1)^3", "R", "1/2", nullptr, H},
      {ContinuityAt, "x^4-x^2", "R", "0", nullptr, H},
      {ContinuityAt, "1/(x-1/3)", "(1/3,inf)", "1/2", nullptr, H},
      {ContinuityAt, "(x+abs(x))/(2*x)", "R", "0", nullptr, F},
      {ContinuityAt, "abs(x)/x", "R", "0", nullptr, F},
      {ContinuityAt, "abs(x-1)/(x-1)", "R", "1", nullptr, F},
      {ContinuityAt, "1/x", "R", "0", nullptr, F},
      {ContinuityAt, "1/x^2", "R", "0", nullptr, F},
      {ContinuityAt, "(x-2)/abs(x-2)", "R", "2", nullptr, F},
      {UniformContinuityOn, "x^2", "R", nullptr, nullptr, F},
      {UniformContinuityOn, "x+5", "R", nullptr, nullptr, H},
      {UniformContinuityOn, "x^2", "[0,1]", nullptr, nullptr, H},
      {UniformContinuityOn, "1/x", "(0,1)", nullptr, nullptr, F},
      {UniformContinuityOn, "1/x", "[1,2]", nullptr, nullptr, H},
      {UniformContinuityOn, "1/x", "[1,inf)", nullptr, nullptr, H},
      {UniformContinuityOn, "x^3", "(-inf,0)", nullptr, nullptr, F},
      {UniformContinuityOn, "x^2", "(0,inf)", nullptr, nullptr, F},
      {UniformContinuityOn, "3*x-1", "[0,inf)", nullptr, nullptr, H},
      {UniformContinuityOn, "1/x^2", "(0,1]", nullptr, nullptr, F},
      {UniformContinuityOn, "x^3", "[-2,2]", nullptr, nullptr, H},
      {UniformContinuityOn, "(x+1)/(x+2)", "[0,inf)", nullptr, nullptr, H},
      {UniformContinuityOn, "x/(x+1)", "[0,inf)", nullptr, nullptr, H},
      {UniformContinuityOn, "1/(x-1)", "(1,2)", nullptr, nullptr, F},
      {UniformContinuityOn, "1/(x-1)", "[2,3]", nullptr, nullptr, H},
      {UniformContinuityOn, "x^2-x", "[-1/2,3/2]", nullptr, nullptr, H},
      {LimitOfSequence, "(n+1)/n", nullptr, nullptr, "1", H},
      {LimitOfSequence, "(2*n^2+n)/(n^2+3)", nullptr, nullptr, "2", H},
      {LimitOfSequence, "(n+1)/n", nullptr, nullptr, "2", F},
      {LimitOfSequence, "n", nullptr, nullptr, "0", F},
      {LimitOfSequence, "1/n", nullptr, nullptr, "0", H},
      {LimitOfSequence, "(3*n-1)/(n+4)", nullptr, nullptr, "3", H},
      {LimitOfSequence, "n^2/(n+1)", nullptr, nullptr, "0", F},
      {LimitOfSequence, "(n^2+1)/(2*n^2)", nullptr, nullptr, "1/2", H},
      {LimitOfSequence, "(5-n)/(n+2)", nullptr, nullptr, "-1", H},
      {LimitOfSequence, "1/(n^2+1)", nullptr, nullptr, "1", F},
      {LimitOfSequence, "(n^3+n)/(n^3-10)", nullptr, nullptr, "1", H},
      {LimitOfSequence, "(2*n+1)/(n-3)", nullptr, nullptr, "2", H},
  };
  return corpus;
}

inline Claim to_claim(const Triple& t) {
  Claim c;
  c.kind = t.kind;
  c.expr = parse(t.expr);
  if (t.domain) c.domain = DomainSpec::parse(t.domain);
  if (t.point) c.point = Rational::parse(t.point);
  if (t.limit) c.limit = Rational::parse(t.limit);
  return c;
}

struct Agreement {
  Outcome b;
  Outcome a;
  bool a_has_modulus;
  bool a_has_falsification;
  bool agrees;
};

/// Both tracks on one triple. A-track holds must carry a modulus and A-track
/// fails a falsification.
inline Agreement check_agreement(const Triple& t) {
  const auto certs = cli::check_claim(to_claim(t), true, true, kDefaultOrder);
  const Certificate& b = certs.at(0);
  const Certificate& a = certs.at(1);
  Agreement r{b.outcome, a.outcome, a.modulus.has_value(), a.falsification.has_value(), false};
  const bool definite_b = b.outcome == Outcome::Holds || b.outcome == Outcome::Fails;
  r.agrees = definite_b && b.outcome == a.outcome && b.outcome == t.expected &&
             (a.outcome == Outcome::Holds ? r.a_has_modulus : r.a_has_falsification);
  return r;
}

/// Direct probe oracle: some delta = +-eps^(1/m), m <= 4, moves *f by a
/// non-infinitesimal amount.
inline bool probe_finds_failure(const Expr& f, const HyperReal& x) {
  const HyperReal fx = extend_eval(f, x);
  for (int m = 1; m <= 4; ++m) {
    for (int s : {1, -1}) {
      const HyperReal delta =
          HyperReal::from_terms({{Rational(1, m), Scalar(s)}}, x.order());
      const HyperReal inc = extend_eval(f, x + delta) - fx;
      const Magnitude mag = classify(inc);
      if (mag != Magnitude::Zero && mag != Magnitude::Infinitesimal) return true;
    }
  }
  return false;
}

/// Point kinds for the decided-grade check: rational c, c + eps, H, H + q.
inline HyperReal point_of_kind(int kind, const Rational& c) {
  const HyperReal base = HyperReal::rational(c);
  switch (kind) {
    case 0: return base;
    case 1: return base + HyperReal::epsilon();
    case 2: return HyperReal::infinite();
    default: return HyperReal::infinite() + base;
  }
}

}  // namespace tic::testing
