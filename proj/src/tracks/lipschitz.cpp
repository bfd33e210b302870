#include "tic/interval.hpp"

#include <algorithm>
#include <vector>

#include "tic/error.hpp"

namespace tic {

namespace {

// Extended rational: inf = -1 or +1 marks an infinite value.
struct Ext {
  int inf = 0;
  Rational v;

  int sign() const { return inf != 0 ? inf : v.sign(); }
};

Ext lo_of(const RInterval& a) { return a.lo ? Ext{0, *a.lo} : Ext{-1, Rational(0)}; }
Ext hi_of(const RInterval& a) { return a.hi ? Ext{0, *a.hi} : Ext{1, Rational(0)}; }

bool less(const Ext& a, const Ext& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  return a.inf == 0 && a.v < b.v;
}

// Endpoint product; 0 * inf is 0, which is the right limit for closed ends.
Ext times(const Ext& a, const Ext& b) {
  if (a.sign() == 0 || b.sign() == 0) return {0, Rational(0)};
  if (a.inf != 0 || b.inf != 0) return {a.sign() * b.sign(), Rational(0)};
  return {0, a.v * b.v};
}

RInterval make(const Ext& lo, const Ext& hi) {
  RInterval r;
  if (lo.inf == 0) r.lo = lo.v;
  if (hi.inf == 0) r.hi = hi.v;
  return r;
}

RInterval add(const RInterval& a, const RInterval& b) {
  RInterval r;
  if (a.lo && b.lo) r.lo = *a.lo + *b.lo;
  if (a.hi && b.hi) r.hi = *a.hi + *b.hi;
  return r;
}

RInterval negate(const RInterval& a) {
  RInterval r;
  if (a.hi) r.lo = -*a.hi;
  if (a.lo) r.hi = -*a.lo;
  return r;
}

RInterval mul(const RInterval& a, const RInterval& b) {
  const Ext c[4] = {times(lo_of(a), lo_of(b)), times(lo_of(a), hi_of(b)),
                    times(hi_of(a), lo_of(b)), times(hi_of(a), hi_of(b))};
  Ext lo = c[0];
  Ext hi = c[0];
  for (const Ext& e : c) {
    if (less(e, lo)) lo = e;
    if (less(hi, e)) hi = e;
  }
  return make(lo, hi);
}

std::optional<RInterval> reciprocal(const RInterval& a) {
  if (a.contains_zero()) return std::nullopt;
  // Same sign throughout, so 1/x is decreasing on it.
  RInterval r;
  r.lo = a.hi ? a.hi->reciprocal() : Rational(0);
  r.hi = a.lo ? a.lo->reciprocal() : Rational(0);
  return r;
}

RInterval abs_of(const RInterval& a) {
  const Ext lo = lo_of(a);
  const Ext hi = hi_of(a);
  if (lo.sign() >= 0) return a;
  if (hi.sign() <= 0) return negate(a);
  RInterval r;
  r.lo = Rational(0);
  if (a.lo && a.hi) r.hi = max(-*a.lo, *a.hi);
  return r;
}

std::optional<RInterval> power(const RInterval& a, long n) {
  if (n < 0) {
    auto p = power(a, -n);
    if (!p) return std::nullopt;
    return reciprocal(*p);
  }
  if (n == 0) return RInterval::point(Rational(1));
  RInterval acc = (n % 2 == 0) ? abs_of(a) : a;
  // Monotone on the (possibly folded) base.
  RInterval r;
  if (acc.lo) r.lo = acc.lo->pow(n);
  if (acc.hi) r.hi = acc.hi->pow(n);
  return r;
}

std::optional<RInterval> eval(const Expr& e, const RInterval& x) {
  switch (e.kind()) {
    case NodeKind::Constant: return RInterval::point(e.value());
    case NodeKind::Variable: return x;
    case NodeKind::HyperLiteral: return std::nullopt;
    case NodeKind::Neg: {
      auto a = eval(e.lhs(), x);
      if (!a) return std::nullopt;
      return negate(*a);
    }
    case NodeKind::Pow: {
      auto a = eval(e.lhs(), x);
      if (!a) return std::nullopt;
      return power(*a, e.exponent());
    }
    case NodeKind::Call: {
      if (e.func() != Func::Abs) return std::nullopt;
      auto a = eval(e.lhs(), x);
      if (!a) return std::nullopt;
      return abs_of(*a);
    }
    default: break;
  }
  auto a = eval(e.lhs(), x);
  auto b = eval(e.rhs(), x);
  if (!a || !b) return std::nullopt;
  switch (e.kind()) {
    case NodeKind::Add: return add(*a, *b);
    case NodeKind::Sub: return add(*a, negate(*b));
    case NodeKind::Mul: return mul(*a, *b);
    case NodeKind::Div: {
      auto rb = reciprocal(*b);
      if (!rb) return std::nullopt;
      return mul(*a, *rb);
    }
    default: return std::nullopt;
  }
}

// Splits J in two; unbounded sides are cut one unit (or |end|) away.
std::pair<RInterval, RInterval> split(const RInterval& j) {
  Rational mid;
  if (j.lo && j.hi) {
    mid = (*j.lo + *j.hi) / Rational(2);
  } else if (j.lo) {
    mid = *j.lo + max(Rational(1), j.lo->abs());
  } else if (j.hi) {
    mid = *j.hi - max(Rational(1), j.hi->abs());
  } else {
    mid = Rational(0);
  }
  return {RInterval{j.lo, mid}, RInterval{mid, j.hi}};
}

std::optional<Rational> bound(const Expr& df, const RInterval& j, int depth) {
  if (auto r = eval(df, j)) {
    if (auto m = r->magnitude()) return m;
  }
  if (depth == 0) return std::nullopt;
  const auto [a, b] = split(j);
  auto ma = bound(df, a, depth - 1);
  if (!ma) return std::nullopt;
  auto mb = bound(df, b, depth - 1);
  if (!mb) return std::nullopt;
  return max(*ma, *mb);
}

RInterval poly_eval(const Poly& p, const RInterval& x) {
  RInterval acc = RInterval::point(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = add(mul(acc, x), RInterval::point(p.coeff(i)));
  return acc;
}

std::optional<Rational> ratio_bound(const Poly& num, const Poly& den, const Rational& a, const Rational& b,
                                    int depth) {
  const RInterval x{a, b};
  if (auto rd = reciprocal(poly_eval(den, x))) {
    if (auto m = mul(poly_eval(num, x), *rd).magnitude()) return m;
  }
  if (depth == 0 || a == b) return std::nullopt;
  const Rational mid = (a + b) / Rational(2);
  auto ma = ratio_bound(num, den, a, mid, depth - 1);
  if (!ma) return std::nullopt;
  auto mb = ratio_bound(num, den, mid, b, depth - 1);
  if (!mb) return std::nullopt;
  return max(*ma, *mb);
}

Poly reversed(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

Poly reflected(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

// sup |num/den| over [r, inf), r > 0, read at t = 1/x on [0, 1/r].
std::optional<Rational> tail_bound(const Poly& num, const Poly& den, const Rational& r, int depth) {
  const int e = den.degree() - num.degree();
  if (e < 0) return std::nullopt;
  const Poly tn = Poly::x().pow(static_cast<unsigned>(e)) * reversed(num);
  return ratio_bound(tn, reversed(den), Rational(0), r.reciprocal(), depth);
}

// Bound over [a, inf).
std::optional<Rational> right_bound(const Poly& num, const Poly& den, const Rational& a, int depth) {
  if (a >= Rational(1)) return tail_bound(num, den, a, depth);
  auto head = ratio_bound(num, den, a, Rational(1), depth);
  if (!head) return std::nullopt;
  auto tail = tail_bound(num, den, Rational(1), depth);
  if (!tail) return std::nullopt;
  return max(*head, *tail);
}

}  // namespace

std::pair<Poly, Poly> derivative_parts(const RationalFunction& g) {
  return {g.num.derivative() * g.den - g.num * g.den.derivative(), g.den * g.den};
}

std::optional<Rational> rational_derivative_bound(const RationalFunction& g, const RInterval& j, int max_depth) {
  const auto [num, den] = derivative_parts(g);
  if (num.is_zero()) return Rational(0);
  if (j.lo && j.hi) return ratio_bound(num, den, *j.lo, *j.hi, max_depth);
  if (j.lo) return right_bound(num, den, *j.lo, max_depth);
  if (j.hi) return right_bound(reflected(num), reflected(den), -*j.hi, max_depth);
  auto right = right_bound(num, den, Rational(0), max_depth);
  if (!right) return std::nullopt;
  auto left = right_bound(reflected(num), reflected(den), Rational(0), max_depth);
  if (!left) return std::nullopt;
  return max(*right, *left);
}

bool RInterval::contains_zero() const {
  const bool below = !lo || lo->sign() <= 0;
  const bool above = !hi || hi->sign() >= 0;
  return below && above;
}

std::optional<Rational> RInterval::magnitude() const {
  if (!lo || !hi) return std::nullopt;
  return max(lo->abs(), hi->abs());
}

std::string RInterval::str() const {
  return std::string(lo ? "[" + lo->str() : "(-inf") + ", " + (hi ? hi->str() + "]" : "inf)");
}

std::optional<RInterval> interval_eval(const Expr& e, const RInterval& x) { return eval(e, x); }

std::optional<Rational> lipschitz_bound(const Expr& f, const RInterval& j, int max_depth) {
  if (contains_call(f) || contains_hyper_literal(f)) return std::nullopt;
  Expr df = Expr::constant(0);
  try {
    df = differentiate(f);
  } catch (const Error&) {
    return std::nullopt;
  }
  return bound(df, j, max_depth);
}

}  // namespace tic
