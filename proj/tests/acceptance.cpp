// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "gen.hpp"

using namespace tic;
using testing::Rng;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Check = std::function<void(Result&)>;

const HyperReal kEps = HyperReal::epsilon();
const HyperReal kH = HyperReal::infinite();
HyperReal q(long p, long d = 1) { return HyperReal::rational(Rational(p, d)); }

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(TIC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void shadow_sequence(Result& r) {
  const HyperReal v = eval_hyper(parse("(H+1)/H", {.allow_variables = false, .allow_hyper_literals = true}));
  r.expect(st(v) == Scalar(1), "st((H+1)/H) != 1");
  const LimitResult lim = limit_seq_b(parse("(n+1)/n"));
  r.expect(lim.tag == LimitResult::Tag::Value && lim.value == Scalar(1), "limit_seq_b((n+1)/n) != 1");
  const std::vector<HyperReal> expected = {kH, kH * kH, q(2) * kH, kH + q(1)};
  r.expect(lim.probes.size() == expected.size(), "probe count");
  for (std::size_t i = 0; i < lim.probes.size() && i < expected.size(); ++i) {
    r.expect(lim.probes[i].index == expected[i], "probe index " + std::to_string(i));
    r.expect(lim.probes[i].standard_part == Scalar(1), "probe st " + std::to_string(i));
  }
}

void squaring(Result& r) {
  const HyperReal d = (kH + kEps) * (kH + kEps) - kH * kH;
  r.expect(d == q(2) + kEps * kEps, "(H+eps)^2 - H^2 = " + d.str());
  r.expect(classify(d) == Magnitude::Appreciable, "classify");
  r.expect(st(d) == Scalar(2), "st");
  const Verdict v = uniform_continuity_b(parse("x^2"), DomainSpec());
  r.expect(v.outcome == Outcome::Fails, "uniform_continuity_b(x^2, R) did not fail");
  r.expect(v.witness && v.witness->point == kH, "witness point is not H");
}

void control_problem(Result& r) {
  const LimitResult lim = limit_at_b(parse("x+5"), Rational(2));
  r.expect(lim.value == Scalar(7), "limit_at_b(x+5, 2) != 7");
  const Certificate c = continuity_a(parse("x+5"), DomainSpec(), Rational(2));
  r.expect(c.outcome == Outcome::Holds && c.modulus.has_value(), "no verification certificate");
  if (!c.modulus) return;
  r.expect(c.modulus->formula() == "epsilon", "modulus " + c.modulus->formula());
  const CheckReport rep = check_certificate(c);
  r.expect(rep.passed && rep.checks == 2000, "checker: " + rep.failure + " checks=" + std::to_string(rep.checks));
}

void field_axioms(Result& r) {
  Rng rng(4);
  for (int i = 0; i < 500 && r.ok; ++i) {
    const HyperReal a = testing::hyperreal(rng);
    const HyperReal b = testing::hyperreal(rng);
    const HyperReal c = testing::hyperreal(rng);
    const std::string at = " at triple " + std::to_string(i);
    r.expect(a + b == b + a, "additive commutativity" + at);
    r.expect(a * b == b * a, "multiplicative commutativity" + at);
    r.expect((a + b) + c == a + (b + c), "additive associativity" + at);
    r.expect((a * b) * c == a * (b * c), "multiplicative associativity" + at);
    r.expect(a * (b + c) == a * b + a * c, "distributivity" + at);
    r.expect(a + HyperReal() == a && a * q(1) == a, "identities" + at);
    r.expect((a + (-a)).is_zero(), "additive inverse" + at);
    if (!a.is_zero()) r.expect(window_equal(a * inv(a), q(1)), "inverse round trip" + at);
  }
}

void transfer_samples(Result& r) {
  Rng rng(5);
  int pairs = 0;
  while (pairs < 100) {
    HyperReal a = testing::nonzero_hyperreal(rng).abs();
    HyperReal b = testing::nonzero_hyperreal(rng).abs();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    ++pairs;
    r.expect(inv(b) < inv(a), "0 < a < b but not 1/b < 1/a for a = " + a.str());
  }
  for (int i = 0; i < 20; ++i) {
    const HyperReal x = HyperReal::rational(testing::rational(rng, 9)) +
                        testing::limited_hyperreal(rng, 2, 9) * kEps;
    const HyperReal s = apply(Func::Sin, x);
    const HyperReal c = apply(Func::Cos, x);
    r.expect(window_equal(s * s + c * c, q(1)), "sin^2 + cos^2 != 1 at " + x.str());
  }
}

void trichotomy(Result& r) {
  r.expect(classify(kEps * kH) == Magnitude::Appreciable, "eps*H");
  r.expect(classify(kEps * kEps * kH) == Magnitude::Infinitesimal, "eps^2*H");
  r.expect(classify(kEps * kH * kH) == Magnitude::Infinite, "eps*H^2");
}

void decided_grade(Result& r) {
  Rng rng(7);
  for (int i = 0; i < 200 && r.ok; ++i) {
    const Expr f = testing::polynomial(rng, 5);
    const Rational c = testing::rational(rng, 9);
    for (int kind = 0; kind < 4; ++kind) {
      const HyperReal x = testing::point_of_kind(kind, c);
      const Verdict v = microcontinuous_at(f, DomainSpec(), x);
      const bool decision = v.outcome == Outcome::Fails;
      r.expect(v.grade == Grade::Decided, "not decided for " + format(f));
      r.expect(decision == testing::probe_finds_failure(f, x), "disagreement for " + format(f) + " at " + x.str());
    }
  }
}

void agreement(Result& r) {
  const auto& corpus = testing::agreement_corpus();
  r.expect(corpus.size() == 50, "corpus size " + std::to_string(corpus.size()));
  int disagreements = 0;
  std::string first;
  for (const auto& t : corpus) {
    const auto a = testing::check_agreement(t);
    if (!a.agrees) {
      if (disagreements++ == 0) first = std::string(t.expr) + (t.domain ? std::string(" on ") + t.domain : "");
    }
  }
  r.expect(disagreements == 0, std::to_string(disagreements) + " disagreements, first " + first);
}

void paraphrase(Result& r) {
  Rng rng(9);
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
    r.expect(paraphrase_gt_sqrt2(x) == forall, "mismatch at x = " + x.str());
  }
}

void round_trip(Result& r) {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const Expr e = testing::ast(rng, 4);
    const std::string text = format(e);
    r.expect(parse(text) == e, "round trip of " + text);
  }
  for (const char* name : {"repl_worked", "repl_session"}) {
    std::istringstream in(slurp(std::string(name) + ".in"));
    std::ostringstream out;
    cli::repl(in, out, kDefaultOrder, false);
    r.expect(out.str() == slurp(std::string(name) + ".out"), std::string("transcript ") + name);
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  Check check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "st((H+1)/H) = 1 and limit of (n+1)/n over four probes", 1000, shadow_sequence},
      {2, "(H+eps)^2 - H^2 = 2 + eps^2 and x^2 fails uniform continuity at H", 1000, squaring},
      {3, "lim x+5 at 2 is 7 and the modulus epsilon passes the checker", 1000, control_problem},
      {4, "field axioms on 500 random triples", 10000, field_axioms},
      {5, "ordered inverse law and sin^2 + cos^2 = 1", 10000, transfer_samples},
      {6, "magnitude trichotomy of eps*H, eps^2*H, eps*H^2", 1000, trichotomy},
      {7, "decided grade agrees with direct probes on 200 polynomials", 30000, decided_grade},
      {8, "B/A agreement on 50 triples", 60000, agreement},
      {9, "x > sqrt 2 paraphrase against exhaustive search", 60000, paraphrase},
      {10, "parser round trip and REPL transcripts", 10000, round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.check(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && ms > c.limit_ms) {
      r.ok = false;
      r.detail = "over time limit";
    }
    if (!r.ok) ++failed;
    std::printf("criterion %2d: %s  %-68s %9.1f ms%s%s\n", c.id, r.ok ? "PASS" : "FAIL", c.title, ms,
                r.ok ? "" : "  ", r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
