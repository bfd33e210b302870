#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tic/classes.hpp"
#include "tic/domain.hpp"
#include "tic/expr.hpp"
#include "tic/hyperreal.hpp"

namespace tic {

enum class Outcome { Holds, Fails, NoCounterexampleFound, Inconclusive };
enum class Grade { Decided, ProbeOnly };
enum class Track { A, B };

std::string_view to_string(Outcome o);
std::string_view to_string(Grade g);
std::string_view to_string(Track t);

/// One point x, one increment delta, and the resulting change of *f.
/// When f is undefined at the claimed point, x is a nearby point and delta
/// moves to the other side of it.
struct Witness {
  HyperReal point;
  HyperReal delta;
  HyperReal increment;
  Magnitude magnitude = Magnitude::Zero;
  std::optional<Scalar> standard_part;
};

struct Verdict {
  Outcome outcome = Outcome::NoCounterexampleFound;
  Grade grade = Grade::ProbeOnly;
  std::optional<Witness> witness;
  std::vector<std::string> narrative;
};

struct LimitProbe {
  HyperReal index;
  /// st of the term, when it is limited.
  std::optional<Scalar> standard_part;
  Magnitude magnitude = Magnitude::Zero;
};

struct LimitResult {
  enum class Tag { Value, Diverges, Undetermined };
  Tag tag = Tag::Undetermined;
  std::optional<Scalar> value;
  std::vector<LimitProbe> probes;
  std::vector<std::string> diagnostics;
};

// B track.

/// Decided for polynomials and rational functions by limitedness of the
/// derivatives at x; other expressions are probed with delta = +-eps^(1/m).
Verdict microcontinuous_at(const Expr& f, const DomainSpec& d, const HyperReal& x);
/// When f is undefined at c, two points infinitely close to c with values
/// not infinitely close to each other make a witness.
Verdict continuity_b(const Expr& f, const DomainSpec& d, const Rational& c, int order = kDefaultOrder);
Verdict uniform_continuity_b(const Expr& f, const DomainSpec& d, int order = kDefaultOrder);
LimitResult limit_seq_b(const Expr& u, int order = kDefaultOrder);
/// Probes c +- eps and c +- eps^2, keeping those inside *D when d is given.
LimitResult limit_at_b(const Expr& f, const Rational& c, const std::optional<DomainSpec>& d = std::nullopt,
                       int order = kDefaultOrder);

// A track.

enum class ClaimKind { ContinuityAt, UniformContinuityOn, LimitOfSequence, LimitAtPoint };
std::string_view to_string(ClaimKind k);

struct Claim {
  ClaimKind kind = ClaimKind::ContinuityAt;
  Expr expr = Expr::constant(0);
  std::optional<DomainSpec> domain;
  std::optional<Rational> point;
  std::optional<Rational> limit;

  std::string str() const;
};

/// delta(eps) = min(cap, eps/scale) or N(eps) = max(floor, ceil(scale/eps)),
/// with absent parts dropped.
struct Modulus {
  enum class Kind { DeltaOfEpsilon, NOfEpsilon };
  Kind kind = Kind::DeltaOfEpsilon;
  std::optional<Rational> scale;
  std::optional<Rational> cap;
  /// Sequences: the bound C/n holds for n >= floor.
  Rational floor{1};
  /// Lipschitz bound or tail constant and where it was established.
  std::vector<std::string> proof;

  Rational delta(const Rational& eps) const;
  Rational n_of(const Rational& eps) const;
  std::string formula() const;
};

/// One violation of the defining implication. For continuity and limits at
/// a point, x is within `radius` of c (x_prime is set when f(c) is undefined);
/// for uniform continuity, |x - x_prime| < radius; for sequences, x is the
/// index n and radius is unused.
struct Violation {
  Rational radius;
  Rational x;
  std::optional<Rational> x_prime;
  Rational gap;
};

struct Falsification {
  Rational epsilon;
  std::vector<Violation> violations;
};

struct Certificate {
  Claim claim;
  Track track = Track::B;
  Outcome outcome = Outcome::Inconclusive;
  Grade grade = Grade::ProbeOnly;
  std::optional<Verdict> verdict;
  std::optional<LimitResult> limit;
  std::optional<Modulus> modulus;
  std::optional<Falsification> falsification;
  std::vector<std::string> narrative;
};

Certificate continuity_a(const Expr& f, const DomainSpec& d, const Rational& c);
Certificate uniform_continuity_a(const Expr& f, const DomainSpec& d);
Certificate limit_seq_a(const Expr& u, const Rational& limit);
/// lim_{x -> c} f = L over the punctured neighbourhood of c in d.
Certificate limit_at_a(const Expr& f, const DomainSpec& d, const Rational& c, const Rational& limit);

// B-track verdicts wrapped as certificates.
Certificate continuity_b_certificate(const Expr& f, const DomainSpec& d, const Rational& c,
                                     int order = kDefaultOrder);
Certificate uniform_continuity_b_certificate(const Expr& f, const DomainSpec& d, int order = kDefaultOrder);
Certificate limit_seq_b_certificate(const Expr& u, const std::optional<Rational>& limit, int order = kDefaultOrder);
Certificate limit_at_b_certificate(const Expr& f, const DomainSpec& d, const Rational& c,
                                   const std::optional<Rational>& limit, int order = kDefaultOrder);

/// Independent check of an A-track verification certificate: for
/// eps = 1, 1/2, ..., 2^-19 the modulus is tested on 100 exact rational grid
/// points (or indices) per eps. Uses only exact real evaluation.
struct CheckReport {
  bool passed = true;
  int checks = 0;
  std::string failure;
};
CheckReport check_certificate(const Certificate& cert);

/// The decidable form of: for all rationals q, q^2 < 2 implies q < x.
bool paraphrase_gt_sqrt2(const Rational& x);

}  // namespace tic
