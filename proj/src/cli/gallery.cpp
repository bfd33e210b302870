#include <iomanip>
#include <ostream>

#include "tic/cli.hpp"
#include "tic/error.hpp"

namespace tic::cli {

const std::vector<GalleryEntry>& gallery_entries() {
  using O = Outcome;
  using K = ClaimKind;
  static const std::vector<GalleryEntry> entries = {
      {"control-problem", K::LimitAtPoint, "x+5", "R", "2", "7", O::Holds, O::Holds,
       "limit of x+5 at 2 solved both ways"},
      {"control-continuity", K::ContinuityAt, "x+5", "R", "2", std::nullopt, O::Holds, O::Holds,
       "continuity of x+5 at 2"},
      {"squaring-cont", K::ContinuityAt, "x^2", "R", "3", std::nullopt, O::Holds, O::Holds,
       "squaring function at a real point"},
      {"squaring-ucont", K::UniformContinuityOn, "x^2", "R", std::nullopt, std::nullopt, O::Fails, O::Fails,
       "squaring function fails at an infinite point"},
      {"squaring-bounded", K::UniformContinuityOn, "x^2", "[0,1]", std::nullopt, std::nullopt, O::Holds,
       O::Holds, "squaring function on a closed bounded interval"},
      {"linear-ucont", K::UniformContinuityOn, "x+5", "R", std::nullopt, std::nullopt, O::Holds, O::Holds,
       "increment equals the change in x"},
      {"reciprocal-ucont", K::UniformContinuityOn, "1/x", "(0,1)", std::nullopt, std::nullopt, O::Fails,
       O::Fails, "reciprocal near the open endpoint 0"},
      {"sequence-shadow", K::LimitOfSequence, "(n+1)/n", "R", std::nullopt, "1", O::Holds, O::Holds,
       "shadow of 1 + 1/H"},
      {"sequence-ratio", K::LimitOfSequence, "(2*n^2+n)/(n^2+3)", "R", std::nullopt, "2", O::Holds, O::Holds,
       "ratio of leading coefficients"},
      {"sequence-wrong-limit", K::LimitOfSequence, "(n+1)/n", "R", std::nullopt, "2", O::Fails, O::Fails,
       "claimed limit differs from the shadow"},
      {"removable-limit", K::LimitAtPoint, "(x^2-4)/(x-2)", "R", "2", "4", O::Holds, O::Holds,
       "limit at a removable gap"},
      {"step-function", K::ContinuityAt, "(x+abs(x))/(2*x)", "R", "0", std::nullopt, O::Fails, O::Fails,
       "jump between the two sides of 0"},
      {"sqrt2-paraphrase", K::ContinuityAt, "", "", std::nullopt, std::nullopt, O::Holds, O::Holds,
       "x exceeds every rational q with q^2 < 2", true},
  };
  return entries;
}

namespace {

// Whether some q = p/d with d <= 60, |p| <= 200 has q^2 < 2 and q >= x.
bool brute_counterexample(const Rational& x) {
  for (int d = 1; d <= 60; ++d) {
    for (int p = -200; p <= 200; ++p) {
      const Rational q(p, d);
      if (q * q < Rational(2) && q >= x) return true;
    }
  }
  return false;
}

bool paraphrase_spot_checks() {
  for (const char* s : {"3/2", "7/5", "-1", "0", "1", "2", "141/100", "142/100", "99/70", "17/12"}) {
    const Rational x = Rational::parse(s);
    if (paraphrase_gt_sqrt2(x) == brute_counterexample(x)) return false;
  }
  return true;
}

std::pair<Outcome, Outcome> run_entry(const GalleryEntry& e) {
  if (e.paraphrase) {
    const Outcome o = paraphrase_spot_checks() ? Outcome::Holds : Outcome::Fails;
    return {o, o};
  }
  Claim claim;
  claim.kind = e.kind;
  claim.expr = parse(e.expr);
  claim.domain = DomainSpec::parse(e.domain);
  if (e.point) claim.point = Rational::parse(*e.point);
  if (e.limit) claim.limit = Rational::parse(*e.limit);
  const auto certs = check_claim(claim, true, true, kDefaultOrder);
  return {certs[0].outcome, certs[1].outcome};
}

}  // namespace

int gallery(const std::string& filter, std::ostream& out) {
  int selected = 0;
  int failed = 0;
  out << std::left << std::setw(22) << "entry" << std::setw(22) << "B expected/actual" << std::setw(22)
      << "A expected/actual"
      << "result\n";
  for (const GalleryEntry& e : gallery_entries()) {
    if (e.name.find(filter) == std::string::npos) continue;
    ++selected;
    std::pair<Outcome, Outcome> got{Outcome::Inconclusive, Outcome::Inconclusive};
    std::string note;
    try {
      got = run_entry(e);
    } catch (const std::exception& ex) {
      note = std::string("  error: ") + ex.what();
    }
    const bool pass = got.first == e.expect_b && got.second == e.expect_a;
    if (!pass) ++failed;
    out << std::setw(22) << e.name
        << std::setw(22) << (std::string(to_string(e.expect_b)) + "/" + std::string(to_string(got.first)))
        << std::setw(22) << (std::string(to_string(e.expect_a)) + "/" + std::string(to_string(got.second)))
        << (pass ? "PASS" : "FAIL") << note << "\n";
  }
  out << selected - failed << "/" << selected << " entries passed\n";
  return failed == 0 && selected > 0 ? kExitHolds : kExitFails;
}

}  // namespace tic::cli
