#include "tic/error.hpp"
#include "tic/tracks.hpp"

namespace tic {

namespace {

constexpr int kEpsilons = 20;
constexpr int kPerEpsilon = 100;

std::optional<Rational> value(const Expr& f, const Rational& x) {
  try {
    return eval_real(f, x);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool in_domain(const Certificate& cert, const Rational& x) {
  return !cert.claim.domain || cert.claim.domain->contains(x);
}

// Ten base points spread over the domain.
std::vector<Rational> base_points(const DomainSpec& d) {
  std::vector<Rational> pool;
  for (const Interval& iv : d.intervals()) {
    if (iv.lo && iv.hi) {
      const Rational w = *iv.hi - *iv.lo;
      for (int i = 0; i <= 10; ++i) pool.push_back(*iv.lo + w * Rational(i, 10));
    } else if (iv.lo) {
      for (int i = 0; i <= 10; ++i) pool.push_back(*iv.lo + Rational(1 << i) - Rational(1));
    } else if (iv.hi) {
      for (int i = 0; i <= 10; ++i) pool.push_back(*iv.hi - Rational(1 << i) + Rational(1));
    } else {
      for (int i = -5; i <= 5; ++i) pool.push_back(Rational(i * i * i));
    }
  }
  std::vector<Rational> out;
  const std::size_t step = std::max<std::size_t>(1, pool.size() / 10);
  for (std::size_t i = 0; i < pool.size() && out.size() < 10; i += step) out.push_back(pool[i]);
  return out;
}

}  // namespace

CheckReport check_certificate(const Certificate& cert) {
  CheckReport rep;
  if (cert.track != Track::A || cert.outcome != Outcome::Holds || !cert.modulus) {
    rep.passed = false;
    rep.failure = "not an A-track verification certificate";
    return rep;
  }
  const Claim& claim = cert.claim;
  const Modulus& m = *cert.modulus;
  auto fail = [&](const std::string& why) {
    rep.passed = false;
    rep.failure = why;
    return rep;
  };

  std::optional<Rational> target = claim.limit;
  if (claim.kind == ClaimKind::ContinuityAt) {
    target = value(claim.expr, *claim.point);
    if (!target) return fail("f is undefined at the claimed point");
  }

  for (int i = 0; i < kEpsilons; ++i) {
    const Rational eps = Rational(1, 2).pow(i);
    if (claim.kind == ClaimKind::LimitOfSequence) {
      const Rational big = m.n_of(eps);
      for (int k = 1; k <= kPerEpsilon; ++k) {
        const Rational n = big + Rational(k);
        const auto un = value(claim.expr, n);
        ++rep.checks;
        if (!un || (*un - *target).abs() >= eps) {
          return fail("eps = " + eps.str() + ", n = " + n.str());
        }
      }
      continue;
    }
    const Rational delta = m.delta(eps);
    if (delta.sign() <= 0) return fail("delta(" + eps.str() + ") is not positive");
    if (claim.kind == ClaimKind::UniformContinuityOn) {
      for (const Rational& b : base_points(*claim.domain)) {
        for (int k = 1; k <= kPerEpsilon / 10; ++k) {
          const Rational xp = b + delta * Rational(k, kPerEpsilon / 10 + 1);
          if (!in_domain(cert, b) || !in_domain(cert, xp)) continue;
          const auto fb = value(claim.expr, b);
          const auto fxp = value(claim.expr, xp);
          ++rep.checks;
          if (fb && fxp && (*fxp - *fb).abs() >= eps) {
            return fail("eps = " + eps.str() + ", x = " + b.str() + ", x' = " + xp.str());
          }
        }
      }
      continue;
    }
    const Rational c = *claim.point;
    for (int k = 0; k < kPerEpsilon; ++k) {
      const Rational x = c - delta + Rational(2) * delta * Rational(k + 1, kPerEpsilon + 1);
      if (!in_domain(cert, x)) continue;
      if (claim.kind == ClaimKind::LimitAtPoint && x == c) continue;
      const auto fx = value(claim.expr, x);
      ++rep.checks;
      if (fx && (*fx - *target).abs() >= eps) {
        return fail("eps = " + eps.str() + ", x = " + x.str());
      }
    }
  }
  return rep;
}

}  // namespace tic
