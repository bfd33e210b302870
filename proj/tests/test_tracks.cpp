#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "gen.hpp"
#include "tic/error.hpp"
#include "tic/tracks.hpp"

using namespace tic;
using testing::Rng;

namespace {

const HyperReal kEps = HyperReal::epsilon();
const HyperReal kH = HyperReal::infinite();
const DomainSpec kR;
HyperReal q(long p, long d = 1) { return HyperReal::rational(Rational(p, d)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

bool not_infinitesimal(Magnitude m) { return m == Magnitude::Appreciable || m == Magnitude::Infinite; }

}  // namespace

TEST_CASE("microcontinuity of x^2") {
  const Verdict at_h = microcontinuous_at(parse("x^2"), kR, kH);
  CHECK(at_h.outcome == Outcome::Fails);
  CHECK(at_h.grade == Grade::Decided);
  REQUIRE(at_h.witness.has_value());
  CHECK(at_h.witness->point == kH);
  CHECK(at_h.witness->delta == kEps);
  CHECK(at_h.witness->increment == q(2) + kEps * kEps);
  CHECK(at_h.witness->standard_part == Scalar(2));

  const Verdict at_3 = microcontinuous_at(parse("x^2"), kR, q(3));
  CHECK(at_3.outcome == Outcome::Holds);
  CHECK(at_3.grade == Grade::Decided);
  // Oracle: 6*delta + delta^2 is infinitesimal for each probe.
  for (int m = 1; m <= 4; ++m) {
    const HyperReal d = HyperReal::generator_power(Rational(1, m));
    CHECK(classify(q(6) * d + d * d) == Magnitude::Infinitesimal);
  }
}

TEST_CASE("microcontinuity of 1/x near 0") {
  const DomainSpec d = DomainSpec::parse("(0,1)");
  const Verdict v = microcontinuous_at(parse("1/x"), d, kEps);
  CHECK(v.outcome == Outcome::Fails);
  CHECK(v.grade == Grade::Decided);
  REQUIRE(v.witness.has_value());
  CHECK(not_infinitesimal(v.witness->magnitude));
  // Exact increment for delta = eps^2: 1/(eps + eps^2) - 1/eps = -1 + eps - ...
  const HyperReal inc = extend_eval(parse("1/x"), kEps + kEps * kEps) - extend_eval(parse("1/x"), kEps);
  CHECK(classify(inc) == Magnitude::Appreciable);
  CHECK(st(inc) == Scalar(-1));
  CHECK(kind_of([&] { (void)microcontinuous_at(parse("1/x"), d, -kEps); }) == ErrorKind::PointOutsideDomain);
}

TEST_CASE("transcendental expressions are probe only") {
  const Verdict v = microcontinuous_at(parse("sin(x)"), kR, q(1));
  CHECK(v.outcome == Outcome::NoCounterexampleFound);
  CHECK(v.grade == Grade::ProbeOnly);
}

TEST_CASE("continuity_b") {
  CHECK(continuity_b(parse("x+5"), kR, Rational(2)).outcome == Outcome::Holds);
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const Verdict v = continuity_b(parse("x^2"), kR, testing::rational(rng, 50));
    CHECK(v.outcome == Outcome::Holds);
    CHECK(v.grade == Grade::Decided);
  }
  CHECK(kind_of([] {
          (void)continuity_b(parse("1/x"), DomainSpec::parse("(-inf,0) u (0,inf)"), Rational(0));
        }) == ErrorKind::PointOutsideDomain);
  const Verdict step = continuity_b(parse("(x+abs(x))/(2*x)"), kR, Rational(0));
  CHECK(step.outcome == Outcome::Fails);
  REQUIRE(step.witness.has_value());
  CHECK(not_infinitesimal(step.witness->magnitude));
}

TEST_CASE("uniform_continuity_b") {
  const Verdict sq = uniform_continuity_b(parse("x^2"), kR);
  CHECK(sq.outcome == Outcome::Fails);
  CHECK(sq.grade == Grade::Decided);
  REQUIRE(sq.witness.has_value());
  CHECK(sq.witness->point == kH);

  const Verdict rec = uniform_continuity_b(parse("1/x"), DomainSpec::parse("(0,1)"));
  CHECK(rec.outcome == Outcome::Fails);
  REQUIRE(rec.witness.has_value());
  CHECK(rec.witness->point == kEps);

  const Verdict lin = uniform_continuity_b(parse("x+5"), kR);
  CHECK(lin.outcome == Outcome::Holds);
  CHECK(lin.grade == Grade::Decided);
}

TEST_CASE("limit_seq_b") {
  const LimitResult r = limit_seq_b(parse("(n+1)/n"));
  REQUIRE(r.tag == LimitResult::Tag::Value);
  CHECK(r.value == Scalar(1));
  REQUIRE(r.probes.size() == 4);
  const std::vector<HyperReal> expected = {kH, kH * kH, q(2) * kH, kH + q(1)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.probes[i].index == expected[i]);
    CHECK(r.probes[i].standard_part == Scalar(1));
  }
  CHECK(limit_seq_b(parse("n")).tag == LimitResult::Tag::Diverges);
  const LimitResult ratio = limit_seq_b(parse("(2*n^2+n)/(n^2+3)"));
  CHECK(ratio.value == Scalar(2));
  CHECK(limit_seq_b(parse("sin(n)")).tag == LimitResult::Tag::Undetermined);
}

TEST_CASE("limit_seq_b agrees with leading coefficients") {
  Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    const Expr p = testing::polynomial(rng, 3, 9, 'n');
    const Expr qq = testing::polynomial(rng, 3, 9, 'n');
    const auto pr = to_rational_function(p);
    const auto qr = to_rational_function(qq);
    if (!pr || !qr || qr->num.is_zero() || pr->num.is_zero()) continue;
    const LimitResult r = limit_seq_b(Expr::div(p, qq));
    const int dp = pr->num.degree();
    const int dq = qr->num.degree();
    if (dp > dq) {
      CHECK(r.tag == LimitResult::Tag::Diverges);
    } else if (dp < dq) {
      CHECK(r.value == Scalar(0));
    } else {
      CHECK(r.value == Scalar(pr->num.lead() / qr->num.lead()));
    }
  }
}

TEST_CASE("limit_at_b") {
  CHECK(limit_at_b(parse("x+5"), Rational(2)).value == Scalar(7));
  CHECK(limit_at_b(parse("(x^2-4)/(x-2)"), Rational(2)).value == Scalar(4));
  const LimitResult r = limit_at_b(parse("1/x"), Rational(0));
  CHECK(r.tag == LimitResult::Tag::Undetermined);
  REQUIRE_FALSE(r.diagnostics.empty());
  CHECK(r.diagnostics.front().find("one-sided infinite values of opposite sign") != std::string::npos);
  const LimitResult one_sided = limit_at_b(parse("abs(x)/x"), Rational(0), DomainSpec::parse("(0,inf)"));
  CHECK(one_sided.value == Scalar(1));
}

TEST_CASE("continuity_a") {
  const Certificate lin = continuity_a(parse("x+5"), kR, Rational(2));
  CHECK(lin.outcome == Outcome::Holds);
  REQUIRE(lin.modulus.has_value());
  CHECK(lin.modulus->formula() == "epsilon");
  CHECK(check_certificate(lin).passed);

  const Certificate sq = continuity_a(parse("x^2"), kR, Rational(3));
  CHECK(sq.outcome == Outcome::Holds);
  REQUIRE(sq.modulus.has_value());
  // Any M >= sup |2x| on the chosen interval is acceptable; 7 or 8 on [2,4].
  REQUIRE(sq.modulus->scale.has_value());
  CHECK(*sq.modulus->scale >= Rational(6));
  CHECK(check_certificate(sq).passed);

  const Certificate step = continuity_a(parse("(x+abs(x))/(2*x)"), kR, Rational(0));
  CHECK(step.outcome == Outcome::Fails);
  REQUIRE(step.falsification.has_value());
  CHECK(step.falsification->epsilon == Rational(1, 2));
  CHECK_FALSE(step.falsification->violations.empty());
}

TEST_CASE("uniform_continuity_a") {
  const Certificate sq = uniform_continuity_a(parse("x^2"), kR);
  CHECK(sq.outcome == Outcome::Fails);
  REQUIRE(sq.falsification.has_value());
  CHECK(sq.falsification->epsilon == Rational(1));
  for (const Violation& v : sq.falsification->violations) {
    REQUIRE(v.x_prime.has_value());
    const Rational gap = (eval_real(parse("x^2"), *v.x_prime) - eval_real(parse("x^2"), v.x)).abs();
    CHECK(gap >= Rational(1));
    CHECK((*v.x_prime - v.x).abs() < v.radius);
  }
  const Certificate lin = uniform_continuity_a(parse("x+5"), kR);
  CHECK(lin.outcome == Outcome::Holds);
  CHECK(lin.modulus->formula() == "epsilon");
  const Certificate unit = uniform_continuity_a(parse("x^2"), DomainSpec::parse("[0,1]"));
  CHECK(unit.outcome == Outcome::Holds);
  CHECK(unit.modulus->formula() == "epsilon/2");
  CHECK(check_certificate(unit).passed);
}

TEST_CASE("limit_seq_a") {
  const Certificate a = limit_seq_a(parse("(n+1)/n"), Rational(1));
  CHECK(a.outcome == Outcome::Holds);
  CHECK(a.modulus->formula() == "ceil(1/epsilon)");
  CHECK(check_certificate(a).passed);

  const Certificate b = limit_seq_a(parse("(2*n^2+n)/(n^2+3)"), Rational(2));
  CHECK(b.outcome == Outcome::Holds);
  REQUIRE(b.modulus->scale.has_value());
  // Brute force |u_n - 2| <= C/n for n <= 10^4.
  const Rational c = *b.modulus->scale;
  for (long n = b.modulus->floor.floor().get_si(); n <= 10000; ++n) {
    const Rational u = eval_real(parse("(2*n^2+n)/(n^2+3)"), Rational(n));
    CHECK_MESSAGE((u - Rational(2)).abs() <= c / Rational(n), n);
  }
  CHECK(check_certificate(b).passed);

  const Certificate wrong = limit_seq_a(parse("(n+1)/n"), Rational(2));
  CHECK(wrong.outcome == Outcome::Fails);
  CHECK(wrong.falsification->epsilon == Rational(1, 2));
  for (const Violation& v : wrong.falsification->violations) {
    const Rational u = eval_real(parse("(n+1)/n"), v.x);
    CHECK((u - Rational(2)).abs() >= Rational(1, 2));
    CHECK(v.x >= Rational(2));
  }
}

TEST_CASE("checker rejects a bad modulus") {
  Certificate sq = continuity_a(parse("x^2"), kR, Rational(3));
  sq.modulus->scale = Rational(1, 100);
  sq.modulus->cap = std::nullopt;
  CHECK_FALSE(check_certificate(sq).passed);
  Certificate seq = limit_seq_a(parse("(n+1)/n"), Rational(1));
  seq.modulus->scale = Rational(1, 1000);
  CHECK_FALSE(check_certificate(seq).passed);
}

TEST_CASE("paraphrase of x > sqrt 2") {
  CHECK(paraphrase_gt_sqrt2(Rational(3, 2)));
  CHECK_FALSE(paraphrase_gt_sqrt2(Rational(7, 5)));
  CHECK_FALSE(paraphrase_gt_sqrt2(Rational(-1)));
  // 7/5 itself is a violating q: (7/5)^2 < 2 and not 7/5 < 7/5.
  const Rational x(7, 5);
  CHECK(x * x < Rational(2));
}

TEST_CASE("B and A tracks agree on the corpus") {
  const auto& corpus = testing::agreement_corpus();
  CHECK(corpus.size() == 50);
  for (const auto& t : corpus) {
    INFO(t.expr, " ", (t.domain ? t.domain : ""), " ", (t.point ? t.point : ""), " ", (t.limit ? t.limit : ""));
    const auto r = testing::check_agreement(t);
    CHECK(r.agrees);
  }
}

TEST_CASE("witnesses reproduce their increments") {
  for (const auto& t : testing::agreement_corpus()) {
    if (t.kind != ClaimKind::ContinuityAt && t.kind != ClaimKind::UniformContinuityOn) continue;
    const Claim c = testing::to_claim(t);
    const Verdict v = t.kind == ClaimKind::ContinuityAt ? continuity_b(c.expr, *c.domain, *c.point)
                                                        : uniform_continuity_b(c.expr, *c.domain);
    if (v.outcome != Outcome::Fails) continue;
    INFO(t.expr);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    const HyperReal inc = extend_eval(c.expr, w.point + w.delta) - extend_eval(c.expr, w.point);
    CHECK(inc == w.increment);
    CHECK(not_infinitesimal(classify(inc)));
    CHECK(approx(w.delta, HyperReal()));
  }
}

TEST_CASE("every verification modulus passes the checker") {
  for (const auto& t : testing::agreement_corpus()) {
    const auto certs = cli::check_claim(testing::to_claim(t), true, false, kDefaultOrder);
    if (!certs[0].modulus) continue;
    INFO(t.expr);
    const CheckReport rep = check_certificate(certs[0]);
    CHECK(rep.passed);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("quantifier complexity of the two failure certificates") {
  const Verdict b = uniform_continuity_b(parse("x^2"), kR);
  REQUIRE(b.witness.has_value());
  // One point and one increment: a single probe.
  const Certificate bc = uniform_continuity_b_certificate(parse("x^2"), kR);
  CHECK(bc.verdict.has_value());
  CHECK(bc.verdict->witness.has_value());
  const Certificate a = uniform_continuity_a(parse("x^2"), kR);
  REQUIRE(a.falsification.has_value());
  // One pair per step of the delta grid.
  std::set<Rational> radii;
  for (const Violation& v : a.falsification->violations) radii.insert(v.radius);
  CHECK(radii.size() >= 10);
  CHECK(a.falsification->violations.size() > 1);
}

TEST_CASE("paraphrase agrees with the quantified statement") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const long d = testing::uniform(rng, 1, 60);
    const Rational x(testing::uniform(rng, -3 * d + 1, 3 * d - 1), d);
    bool forall = true;
    for (long den = 1; den <= 200 && forall; ++den) {
      for (long num = -200; num <= 200; ++num) {
        const Rational qv(num, den);
        if (qv * qv < Rational(2) && !(qv < x)) {
          forall = false;
          break;
        }
      }
    }
    CHECK_MESSAGE(paraphrase_gt_sqrt2(x) == forall, x.str());
  }
}

TEST_CASE("decided grade agrees with direct probes") {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const Expr f = testing::polynomial(rng, 5);
    const Rational c = testing::rational(rng, 9);
    for (int kind = 0; kind < 4; ++kind) {
      const HyperReal x = testing::point_of_kind(kind, c);
      const Verdict v = microcontinuous_at(f, kR, x);
      CHECK(v.grade == Grade::Decided);
      CHECK((v.outcome == Outcome::Fails) == testing::probe_finds_failure(f, x));
    }
  }
}
