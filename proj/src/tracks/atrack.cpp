#include <algorithm>

#include "tic/error.hpp"
#include "tic/interval.hpp"
#include "tic/tracks.hpp"

namespace tic {

namespace {

constexpr int kEpsilonSteps = 20;    // eps = 1, 1/2, ..., 2^-20
constexpr int kPointScales = 60;     // delta = 1, 1/2, ..., 2^-60
constexpr int kPointsPerSide = 32;   // 64 grid points per scale
constexpr int kPairScales = 40;
constexpr int kPairSpan = 40;
constexpr int kSequenceProbes = 64;  // n = 2, 4, ..., 2^64
constexpr int kRadiusHalvings = 60;
constexpr int kBisectionDepth = 12;
constexpr long kBruteForceLimit = 1000000;

Rational two_pow(int k) { return k >= 0 ? Rational(2).pow(k) : Rational(1, 2).pow(-k); }

std::optional<Rational> value_at(const Expr& f, const Rational& x) {
  try {
    return eval_real(f, x);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// eval_real handles field operations, integer powers and abs.
bool exactly_evaluable(const Expr& e) {
  if (contains_hyper_literal(e)) return false;
  for (Func f : {Func::Sin, Func::Cos, Func::Exp, Func::Ln, Func::Sqrt}) {
    if (contains_func(e, f)) return false;
  }
  return true;
}

std::string derivative_text(const Poly& num, const Poly& den, char var) {
  if (den.degree() == 0) return (num * Poly::constant(den.lead().reciprocal())).str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

// Largest eps = 2^-i, i <= kEpsilonSteps, not above m.
std::optional<Rational> epsilon_below(const Rational& m) {
  for (int i = 0; i <= kEpsilonSteps; ++i) {
    const Rational e = two_pow(-i);
    if (e <= m) return e;
  }
  return std::nullopt;
}

Certificate base(ClaimKind kind, const Expr& f, std::optional<DomainSpec> d, std::optional<Rational> point,
                 std::optional<Rational> limit) {
  Certificate cert;
  cert.claim = Claim{kind, f, std::move(d), std::move(point), std::move(limit)};
  cert.track = Track::A;
  cert.outcome = Outcome::Inconclusive;
  cert.grade = Grade::ProbeOnly;
  return cert;
}

void verified(Certificate& cert, Modulus m) {
  cert.outcome = Outcome::Holds;
  cert.grade = Grade::Decided;
  cert.narrative.push_back((m.kind == Modulus::Kind::DeltaOfEpsilon ? "delta(epsilon) = " : "N(epsilon) = ") +
                           m.formula());
  for (const std::string& s : m.proof) cert.narrative.push_back(s);
  cert.modulus = std::move(m);
}

void falsified(Certificate& cert, Falsification fal, const std::string& how) {
  cert.outcome = Outcome::Fails;
  cert.grade = Grade::ProbeOnly;
  cert.narrative.push_back("epsilon = " + fal.epsilon.str() + " is violated " + how + " (" +
                           std::to_string(fal.violations.size()) + " witnesses)");
  cert.falsification = std::move(fal);
}

// Lipschitz modulus for g around c, where g is defined at c and agrees with
// f wherever f is defined.
std::optional<Modulus> local_modulus(const RationalFunction& g, const Rational& c) {
  const char var = 'x';
  Modulus m;
  m.kind = Modulus::Kind::DeltaOfEpsilon;
  if (g.is_polynomial() && g.num.degree() <= 1) {
    const Rational slope = g.num.coeff(1).abs();
    if (slope.is_zero()) {
      m.cap = Rational(1);
      m.proof.push_back("f is constant");
    } else {
      m.scale = slope;
      m.proof.push_back("|f(x) - f(c)| = " + slope.str() + "*|x - c|");
    }
    return m;
  }
  const auto [dn, dd] = derivative_parts(g);
  Rational r(1);
  for (int i = 0; i <= kRadiusHalvings; ++i, r = r / Rational(2)) {
    const RInterval j{c - r, c + r};
    const auto bound = rational_derivative_bound(g, j, 0);
    if (!bound) continue;
    m.cap = r;
    if (!bound->is_zero()) m.scale = *bound;
    m.proof.push_back("f' = " + derivative_text(dn, dd, var));
    m.proof.push_back("|f'| <= " + bound->str() + " on " + j.str());
    return m;
  }
  return std::nullopt;
}

struct ScaleBest {
  Rational gap;
  Violation violation;
};

// Grid points c +- 2^-(j+1+k) inside d, excluding c itself.
std::vector<Rational> grid(const DomainSpec& d, const Rational& c, int j) {
  std::vector<Rational> out;
  for (int k = 0; k < kPointsPerSide; ++k) {
    const Rational h = two_pow(-(j + 1 + k));
    for (const Rational& x : {c + h, c - h}) {
      if (d.contains(x)) out.push_back(x);
    }
  }
  return out;
}

// Searches every scale for a point far from the target. With no target the
// spread of values at one scale stands in: if f had any value at c, one of
// the two extreme points would be at least half the spread away from it.
std::optional<Falsification> falsify_local(const Expr& f, const DomainSpec& d, const Rational& c,
                                           const std::optional<Rational>& target) {
  std::vector<ScaleBest> best;
  for (int j = 0; j <= kPointScales; ++j) {
    const Rational radius = two_pow(-j);
    std::optional<ScaleBest> b;
    std::optional<std::pair<Rational, Rational>> lo;
    std::optional<std::pair<Rational, Rational>> hi;
    for (const Rational& x : grid(d, c, j)) {
      const auto fx = value_at(f, x);
      if (!fx) continue;
      if (target) {
        const Rational gap = (*fx - *target).abs();
        if (!b || gap > b->gap) b = ScaleBest{gap, Violation{radius, x, std::nullopt, gap}};
      } else {
        if (!lo || *fx < lo->second) lo = {x, *fx};
        if (!hi || *fx > hi->second) hi = {x, *fx};
      }
    }
    if (!target && lo) {
      const Rational spread = hi->second - lo->second;
      b = ScaleBest{spread / Rational(2), Violation{radius, lo->first, hi->first, spread}};
    }
    if (!b) return std::nullopt;
    best.push_back(std::move(*b));
  }
  Rational m = best.front().gap;
  for (const ScaleBest& b : best) m = min(m, b.gap);
  const auto eps = epsilon_below(m);
  if (!eps || m.is_zero()) return std::nullopt;
  Falsification fal{*eps, {}};
  for (ScaleBest& b : best) fal.violations.push_back(std::move(b.violation));
  return fal;
}

Certificate local_a(Certificate cert, const Expr& f, const DomainSpec& d, const Rational& c,
                    const std::optional<Rational>& target) {
  if (classify_expr(f) != ExprClass::Other) {
    const auto rf = to_rational_function(f);
    if (rf && !rf->den.eval(c).is_zero()) {
      const Rational gc = rf->num.eval(c) / rf->den.eval(c);
      if (target && gc == *target) {
        if (auto m = local_modulus(*rf, c)) {
          verified(cert, std::move(*m));
          return cert;
        }
      }
    }
  }
  if (!exactly_evaluable(f)) {
    cert.narrative.push_back("exact real evaluation is unavailable for " + format(f));
    return cert;
  }
  if (auto fal = falsify_local(f, d, c, target)) {
    falsified(cert, std::move(*fal),
              target ? "at every scale delta = 2^-j, j = 0.." + std::to_string(kPointScales)
                     : "by a pair of points at every scale delta = 2^-j, j = 0.." + std::to_string(kPointScales));
    return cert;
  }
  cert.narrative.push_back("no modulus found and the grid search found no violation");
  return cert;
}

}  // namespace

Certificate continuity_a(const Expr& f, const DomainSpec& d, const Rational& c) {
  if (!d.contains(c)) throw Error(ErrorKind::PointOutsideDomain, c.str() + " is not in " + d.str());
  Certificate cert = base(ClaimKind::ContinuityAt, f, d, c, std::nullopt);
  std::optional<Rational> fc;
  try {
    fc = eval_real(f, c);
    cert.narrative.push_back("f(" + c.str() + ") = " + fc->str());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRationalValued) {
      cert.narrative.push_back(e.what());
      return cert;
    }
    cert.narrative.push_back("f(" + c.str() + ") is undefined: " + e.what());
  }
  return local_a(std::move(cert), f, d, c, fc);
}

Certificate limit_at_a(const Expr& f, const DomainSpec& d, const Rational& c, const Rational& limit) {
  Certificate cert = base(ClaimKind::LimitAtPoint, f, d, c, limit);
  return local_a(std::move(cert), f, d, c, limit);
}

namespace {

std::optional<Modulus> uniform_modulus(const Expr& f, const DomainSpec& d) {
  if (classify_expr(f) == ExprClass::Other) return std::nullopt;
  const auto rf = to_rational_function(f);
  if (!rf) return std::nullopt;
  Modulus m;
  m.kind = Modulus::Kind::DeltaOfEpsilon;
  Rational bound(0);
  for (const Interval& iv : d.intervals()) {
    const RInterval j{iv.lo, iv.hi};
    const auto b = rational_derivative_bound(*rf, j, kBisectionDepth);
    if (!b) return std::nullopt;
    m.proof.push_back("|f'| <= " + b->str() + " on " + j.str());
    bound = max(bound, *b);
  }
  // Points of different components closer than delta would escape the bound.
  std::optional<Rational> gap;
  const auto& ivs = d.intervals();
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    const Rational g2 = *ivs[i + 1].lo - *ivs[i].hi;
    if (g2.sign() > 0) gap = gap ? min(*gap, g2) : g2;
  }
  if (gap) m.proof.push_back("components are at least " + gap->str() + " apart");
  if (!bound.is_zero()) m.scale = bound;
  m.cap = gap;
  if (bound.is_zero() && !gap) m.cap = Rational(1);
  return m;
}

std::vector<std::pair<Rational, Rational>> pairs_at(const DomainSpec& d, int j) {
  std::vector<std::pair<Rational, Rational>> out;
  const Rational h = two_pow(-(j + 1));
  auto keep = [&](const Rational& x, const Rational& xp) {
    if (d.contains(x) && d.contains(xp)) out.emplace_back(x, xp);
  };
  const bool up = !d.intervals().back().hi;
  const bool down = !d.intervals().front().lo;
  for (int k = j + 1; k <= j + kPairSpan; ++k) {
    const Rational t = two_pow(k);
    if (up) keep(t, t + h);
    if (down) keep(-t, -t - h);
    for (const Rational& a : d.finite_endpoints()) {
      for (int s : {1, -1}) {
        keep(a + Rational(s) * two_pow(-k), a + Rational(s) * two_pow(-(k + 1)));
      }
    }
  }
  return out;
}

std::optional<Falsification> falsify_uniform(const Expr& f, const DomainSpec& d) {
  std::vector<ScaleBest> best;
  for (int j = 0; j <= kPairScales; ++j) {
    std::optional<ScaleBest> b;
    for (const auto& [x, xp] : pairs_at(d, j)) {
      const auto fx = value_at(f, x);
      const auto fxp = value_at(f, xp);
      if (!fx || !fxp) continue;
      const Rational gap = (*fxp - *fx).abs();
      if (!b || gap > b->gap) b = ScaleBest{gap, Violation{two_pow(-j), x, xp, gap}};
    }
    if (!b) return std::nullopt;
    best.push_back(std::move(*b));
  }
  Rational m = best.front().gap;
  for (const ScaleBest& b : best) m = min(m, b.gap);
  const auto eps = epsilon_below(m);
  if (!eps || m.is_zero()) return std::nullopt;
  Falsification fal{*eps, {}};
  for (ScaleBest& b : best) fal.violations.push_back(std::move(b.violation));
  return fal;
}

}  // namespace

Certificate uniform_continuity_a(const Expr& f, const DomainSpec& d) {
  Certificate cert = base(ClaimKind::UniformContinuityOn, f, d, std::nullopt, std::nullopt);
  if (auto m = uniform_modulus(f, d)) {
    verified(cert, std::move(*m));
    return cert;
  }
  if (!exactly_evaluable(f)) {
    cert.narrative.push_back("exact real evaluation is unavailable for " + format(f));
    return cert;
  }
  if (auto fal = falsify_uniform(f, d)) {
    falsified(cert, std::move(*fal),
              "by a pair of points closer than delta = 2^-j, j = 0.." + std::to_string(kPairScales));
    return cert;
  }
  cert.narrative.push_back("no global derivative bound and the paired search found no violation");
  return cert;
}

namespace {

// |u_n - L| <= C/n for n >= n0, with u - L = p/q in lowest terms and
// deg p < deg q.
std::optional<Modulus> sequence_modulus(const Poly& p, const Poly& q) {
  Modulus m;
  m.kind = Modulus::Kind::NOfEpsilon;
  // Indices where u is undefined push the start past them.
  const Rational rq = q.degree() > 0 ? q.root_bound() : Rational(1);
  if (rq > Rational(kBruteForceLimit)) return std::nullopt;
  long n0 = 1;
  for (long n = 1; Rational(n) <= rq; ++n) {
    if (q.eval(Rational(n)).is_zero()) n0 = n + 1;
  }
  m.floor = Rational(n0);
  if (p.is_zero()) {
    m.proof.push_back("u_n = L for n >= " + std::to_string(n0));
    return m;
  }
  const Poly np = Poly::x() * p;
  const Rational ell = p.degree() == q.degree() - 1 ? p.lead() / q.lead() : Rational(0);
  auto ratio = [&](long n) { return (np.eval(Rational(n)) / q.eval(Rational(n))).abs(); };

  Rational c = ell.abs();
  const long head = std::max(n0, static_cast<long>(mpz_class(rq.ceil()).get_si())) + 64;
  for (long n = n0; n <= head; ++n) c = max(c, ratio(n));
  for (int attempt = 0; attempt < 64; ++attempt, c = c * Rational(2)) {
    const Poly cq = Poly::constant(c) * q;
    const Poly gp = cq - np;
    const Poly gm = cq + np;
    // Past every root bound q > 0 and the sign of g+- is that of its lead.
    Rational tail = rq;
    bool ok = true;
    for (const Poly& g : {gp, gm}) {
      if (g.is_zero()) continue;
      if (g.lead().sign() < 0) ok = false;
      if (g.degree() > 0) tail = max(tail, g.root_bound());
    }
    if (!ok) continue;
    if (tail > Rational(kBruteForceLimit)) return std::nullopt;
    for (long n = n0; Rational(n) <= tail && ok; ++n) ok = ratio(n) <= c;
    if (!ok) continue;
    m.scale = c;
    m.proof.push_back("u_n - L = (" + p.str('n') + ")/(" + q.str('n') + ")");
    m.proof.push_back("|u_n - L| <= " + (c.is_integer() ? c.str() : "(" + c.str() + ")") + "/n for n >= " + std::to_string(n0) +
                      ", exact for n <= " + mpz_class(tail.floor()).get_str() + " and by the sign of " +
                      c.str() + "*q(n) -+ n*p(n) beyond");
    return m;
  }
  return std::nullopt;
}

}  // namespace

Certificate limit_seq_a(const Expr& u, const Rational& limit) {
  Certificate cert = base(ClaimKind::LimitOfSequence, u, std::nullopt, std::nullopt, limit);
  if (classify_expr(u) != ExprClass::Other) {
    const auto e = to_rational_function(Expr::sub(u, Expr::constant(limit)));
    if (e && (e->num.is_zero() || e->num.degree() < e->den.degree())) {
      if (auto m = sequence_modulus(e->num, e->den)) {
        verified(cert, std::move(*m));
        return cert;
      }
    }
  } else if (!exactly_evaluable(u)) {
    cert.narrative.push_back("exact real evaluation is unavailable for " + format(u));
    return cert;
  }
  std::vector<std::pair<Rational, Rational>> gaps;
  for (int k = 1; k <= kSequenceProbes; ++k) {
    const Rational n = two_pow(k);
    if (auto v = value_at(u, n)) gaps.emplace_back(n, (*v - limit).abs());
  }
  if (gaps.size() < static_cast<std::size_t>(kSequenceProbes / 2)) {
    cert.narrative.push_back("the sequence is undefined at too many probe indices");
    return cert;
  }
  // Only the tail matters: the violation must recur for arbitrarily large n.
  Rational m = gaps.back().second;
  for (std::size_t i = gaps.size() / 2; i < gaps.size(); ++i) m = min(m, gaps[i].second);
  const auto eps = epsilon_below(m);
  if (!eps || m.is_zero()) {
    cert.narrative.push_back("no tail bound found and no recurring violation at n = 2^k");
    return cert;
  }
  Falsification fal{*eps, {}};
  for (const auto& [n, gap] : gaps) {
    if (gap >= *eps) fal.violations.push_back(Violation{Rational(0), n, std::nullopt, gap});
  }
  falsified(cert, std::move(fal), "at n = 2^k up to 2^" + std::to_string(kSequenceProbes));
  return cert;
}

}  // namespace tic
