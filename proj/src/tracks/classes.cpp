#include "tic/classes.hpp"

#include <algorithm>

#include "tic/error.hpp"

namespace tic {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational Poly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& v) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

int Poly::sign_at_infinity(int side) const {
  if (c_.empty()) return 0;
  const int s = lead().sign();
  return (side < 0 && degree() % 2 == 1) ? -s : s;
}

Poly Poly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<std::int64_t>(i)));
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  const Rational l = lead();
  std::vector<Rational> out;
  for (const Rational& q : c_) out.push_back(q / l);
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned n) const {
  Poly acc = constant(1);
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

Rational Poly::root_bound() const {
  // Cauchy: 1 + max |a_i / a_n|.
  Rational m(0);
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = max(m, (c_[i] / lead()).abs());
  return m + Rational(1);
}

Poly Poly::operator-() const {
  std::vector<Rational> out;
  for (const Rational& q : c_) out.push_back(-q);
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / b.lead();
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

int sign_changes(const std::vector<Poly>& seq, const std::optional<Rational>& at, int side) {
  int changes = 0;
  int prev = 0;
  for (const Poly& p : seq) {
    const int s = at ? p.eval(*at).sign() : p.sign_at_infinity(side);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int Poly::count_roots(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has every root");
  if (degree() == 0) return 0;
  // Sturm sequence of the square-free part.
  const Poly sf = divmod(*this, gcd(*this, derivative())).first;
  std::vector<Poly> seq{sf, sf.derivative()};
  while (seq.back().degree() > 0) {
    Poly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  // Sturm counts roots in (lo, hi]; add a root sitting exactly at lo.
  int n = sign_changes(seq, lo, -1) - sign_changes(seq, hi, 1);
  if (lo && sf.eval(*lo).is_zero()) ++n;
  return n;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational q = coeff(i);
    if (q.is_zero()) continue;
    const Rational mag = q.abs();
    if (out.empty()) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    if (i > 0) mono = std::string(1, var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

RationalFunction reduce(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (num.is_zero()) return {Poly(), Poly::constant(1)};
  const Poly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational l = den.lead();
  num = num * Poly::constant(l.reciprocal());
  den = den.monic();
  return {std::move(num), std::move(den)};
}

std::optional<RationalFunction> convert(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant: return RationalFunction{Poly::constant(e.value()), Poly::constant(1)};
    case NodeKind::Variable: return RationalFunction{Poly::x(), Poly::constant(1)};
    case NodeKind::HyperLiteral:
    case NodeKind::Call: return std::nullopt;
    default: break;
  }
  auto a = convert(e.lhs());
  if (!a) return std::nullopt;
  switch (e.kind()) {
    case NodeKind::Neg: return RationalFunction{-a->num, a->den};
    case NodeKind::Pow: {
      const long n = e.exponent();
      const auto m = static_cast<unsigned>(n < 0 ? -n : n);
      if (n < 0 && a->num.is_zero()) return std::nullopt;
      return n >= 0 ? reduce(a->num.pow(m), a->den.pow(m)) : reduce(a->den.pow(m), a->num.pow(m));
    }
    default: break;
  }
  auto b = convert(e.rhs());
  if (!b) return std::nullopt;
  switch (e.kind()) {
    case NodeKind::Add: return reduce(a->num * b->den + b->num * a->den, a->den * b->den);
    case NodeKind::Sub: return reduce(a->num * b->den - b->num * a->den, a->den * b->den);
    case NodeKind::Mul: return reduce(a->num * b->num, a->den * b->den);
    case NodeKind::Div:
      if (b->num.is_zero()) return std::nullopt;
      return reduce(a->num * b->den, a->den * b->num);
    default: return std::nullopt;
  }
}

bool has_division(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Div: return true;
    case NodeKind::Pow: return e.exponent() < 0 || has_division(e.lhs());
    case NodeKind::Neg:
    case NodeKind::Call: return has_division(e.lhs());
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul: return has_division(e.lhs()) || has_division(e.rhs());
    default: return false;
  }
}

}  // namespace

std::optional<RationalFunction> to_rational_function(const Expr& e) { return convert(e); }

ExprClass classify_expr(const Expr& e) {
  if (contains_call(e) || contains_hyper_literal(e)) return ExprClass::Other;
  return has_division(e) ? ExprClass::Rational : ExprClass::Polynomial;
}

std::string_view to_string(ExprClass c) {
  switch (c) {
    case ExprClass::Polynomial: return "polynomial";
    case ExprClass::Rational: return "rational";
    case ExprClass::Other: return "other";
  }
  return "?";
}

}  // namespace tic
