#include "tic/scalar.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "tic/error.hpp"

namespace tic {

namespace {

struct Atom {
  Func func;
  std::shared_ptr<const Scalar> arg;
};

struct Factor {
  Atom atom;
  long power;
};

using Monomial = std::vector<Factor>;

struct PolyTerm {
  Monomial mono;
  Rational coeff;
};

// Sorted by monomial, no zero coefficients; empty is the zero polynomial.
using Poly = std::vector<PolyTerm>;

int cmp_atom(const Atom& a, const Atom& b) {
  if (a.func != b.func) return static_cast<int>(a.func) < static_cast<int>(b.func) ? -1 : 1;
  const auto c = a.arg->structural_compare(*b.arg);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int cmp_mono(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = cmp_atom(a[i].atom, b[i].atom); c != 0) return c;
    if (a[i].power != b[i].power) return a[i].power < b[i].power ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

int cmp_poly(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = cmp_mono(a[i].mono, b[i].mono); c != 0) return c;
    if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp_mono(a, b) < 0; }
};

using Accum = std::map<Monomial, Rational, MonoLess>;

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      const int c = cmp_atom(a[i].atom, b[j].atom);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        out.push_back({a[i].atom, a[i].power + b[j].power});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

// Inserts coeff*mono after applying sqrt(q)^2 = q and sin(a)^2 = 1 - cos(a)^2.
void add_reduced(Accum& acc, Monomial mono, Rational coeff) {
  if (coeff.is_zero()) return;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    Factor& f = mono[i];
    if (f.atom.func == Func::Sqrt && f.power >= 2) {
      if (const auto q = f.atom.arg->rational()) {
        coeff *= q->pow(f.power / 2);
        f.power %= 2;
        if (f.power == 0) mono.erase(mono.begin() + static_cast<std::ptrdiff_t>(i));
        add_reduced(acc, std::move(mono), std::move(coeff));
        return;
      }
    }
    if (f.atom.func == Func::Sin && f.power >= 2) {
      Monomial lowered = mono;
      const Atom cos_atom{Func::Cos, f.atom.arg};
      lowered[i].power -= 2;
      if (lowered[i].power == 0) lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(i));
      Monomial with_cos = mono_mul(lowered, Monomial{{cos_atom, 2}});
      add_reduced(acc, std::move(lowered), coeff);
      add_reduced(acc, std::move(with_cos), -coeff);
      return;
    }
  }
  auto [it, inserted] = acc.emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Poly to_poly(Accum&& acc) {
  Poly out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc) out.push_back({mono, coeff});
  return out;
}

Poly poly_const(const Rational& q) {
  if (q.is_zero()) return {};
  return {PolyTerm{{}, q}};
}

bool poly_is_const(const Poly& p) { return p.empty() || (p.size() == 1 && p[0].mono.empty()); }

Rational poly_const_value(const Poly& p) { return p.empty() ? Rational(0) : p[0].coeff; }

Poly poly_add(const Poly& a, const Poly& b) {
  Accum acc;
  for (const auto& t : a) add_reduced(acc, t.mono, t.coeff);
  for (const auto& t : b) add_reduced(acc, t.mono, t.coeff);
  return to_poly(std::move(acc));
}

Poly poly_scale(const Poly& p, const Rational& q) {
  if (q.is_zero()) return {};
  Poly out = p;
  for (auto& t : out) t.coeff *= q;
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Accum acc;
  for (const auto& x : a) {
    for (const auto& y : b) add_reduced(acc, mono_mul(x.mono, y.mono), x.coeff * y.coeff);
  }
  return to_poly(std::move(acc));
}

long power_of(const Monomial& m, const Atom& atom) {
  for (const auto& f : m) {
    if (cmp_atom(f.atom, atom) == 0) return f.power;
  }
  return 0;
}

void divide_atom(Monomial& m, const Atom& atom, long power) {
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (cmp_atom(it->atom, atom) == 0) {
      it->power -= power;
      if (it->power == 0) m.erase(it);
      return;
    }
  }
}

std::string poly_str(const Poly& p);

std::string atom_str(const Atom& a) {
  return std::string(to_string(a.func)) + "(" + a.arg->str() + ")";
}

std::string mono_str(const Monomial& m) {
  std::string out;
  for (const auto& f : m) {
    if (!out.empty()) out += "*";
    out += atom_str(f.atom);
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& t = p[i];
    const bool negative = t.coeff.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = t.coeff.abs();
    if (t.mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono_str(t.mono);
    } else {
      out += mag.str() + "*" + mono_str(t.mono);
    }
  }
  return out;
}

Enclosure atom_enclose(const Atom& a, mpfr_prec_t prec) {
  const Enclosure x = a.arg->enclose(prec);
  switch (a.func) {
    case Func::Sin: return x.sin();
    case Func::Cos: return x.cos();
    case Func::Exp: return x.exp();
    case Func::Ln: return x.log();
    case Func::Sqrt: return x.sqrt();
    case Func::Abs: break;
  }
  throw Error(ErrorKind::InvalidArgument, "abs is never stored as a named constant");
}

Enclosure poly_enclose(const Poly& p, mpfr_prec_t prec) {
  Enclosure sum(prec);
  for (const auto& t : p) {
    Enclosure term(t.coeff, prec);
    for (const auto& f : t.mono) term = term * atom_enclose(f.atom, prec).pow(f.power);
    sum = sum + term;
  }
  return sum;
}

}  // namespace

struct Symbolic {
  Poly num;
  Poly den;  // never zero; the constant 1 when there is no denominator
};

struct ScalarAccess {
  static Poly num(const Scalar& s) { return s.sym_ ? s.sym_->num : poly_const(s.value_); }
  static Poly den(const Scalar& s) { return s.sym_ ? s.sym_->den : poly_const(Rational(1)); }
  static const Symbolic* sym(const Scalar& s) { return s.sym_.get(); }

  static Scalar make(Poly num, Poly den) {
    if (num.empty()) return Scalar();
    if (poly_is_const(den)) {
      const Rational c = poly_const_value(den);
      num = poly_scale(num, c.reciprocal());
      den = poly_const(Rational(1));
    } else if (den.size() == 1) {
      // Cancel named constants shared by every term of the numerator.
      Monomial common = den[0].mono;
      for (const auto& f : common) {
        long shared = f.power;
        for (const auto& t : num) shared = std::min(shared, power_of(t.mono, f.atom));
        if (shared > 0) {
          divide_atom(den[0].mono, f.atom, shared);
          for (auto& t : num) divide_atom(t.mono, f.atom, shared);
        }
      }
      const Rational c = den[0].coeff;
      num = poly_scale(num, c.reciprocal());
      den[0].coeff = Rational(1);
      // Dividing out atoms keeps each list sorted but may merge monomials.
      Accum acc;
      for (auto& t : num) add_reduced(acc, std::move(t.mono), std::move(t.coeff));
      num = to_poly(std::move(acc));
    } else {
      const Rational c = den[0].coeff;
      num = poly_scale(num, c.reciprocal());
      den = poly_scale(den, c.reciprocal());
      // num = k * den for a rational k collapses to k.
      if (num.size() == den.size()) {
        const Rational k = num[0].coeff;
        bool proportional = true;
        for (std::size_t i = 0; i < num.size() && proportional; ++i) {
          proportional = cmp_mono(num[i].mono, den[i].mono) == 0 && num[i].coeff == k * den[i].coeff;
        }
        if (proportional) return Scalar(k);
      }
    }
    if (poly_is_const(den) && poly_is_const(num)) return Scalar(poly_const_value(num));
    return Scalar(std::make_shared<const Symbolic>(Symbolic{std::move(num), std::move(den)}));
  }

  static Scalar atom(Func f, const Scalar& arg) {
    Poly num{PolyTerm{Monomial{Factor{Atom{f, std::make_shared<const Scalar>(arg)}, 1}}, Rational(1)}};
    return make(std::move(num), poly_const(Rational(1)));
  }

  // The argument of s when s is exactly the named constant f(arg).
  static std::optional<Scalar> single_atom(const Scalar& s, Func f) {
    if (!s.sym_) return std::nullopt;
    const auto& n = s.sym_->num;
    if (!poly_is_const(s.sym_->den) || n.size() != 1 || !n[0].coeff.is_one()) return std::nullopt;
    if (n[0].mono.size() != 1 || n[0].mono[0].power != 1 || n[0].mono[0].atom.func != f) {
      return std::nullopt;
    }
    return *n[0].mono[0].atom.arg;
  }
};

Scalar::Scalar(Rational value) : value_(std::move(value)) {}

Scalar::Scalar(std::shared_ptr<const Symbolic> sym) : sym_(std::move(sym)) {}

std::optional<Rational> Scalar::rational() const {
  if (sym_) return std::nullopt;
  return value_;
}

bool Scalar::is_zero() const { return !sym_ && value_.is_zero(); }

int Scalar::sign() const {
  if (!sym_) return value_.sign();
  for (mpfr_prec_t prec = 64; prec <= kMaxSignPrecision; prec *= 2) {
    if (const int s = enclose(prec).certain_sign(); s != 0) return s;
  }
  throw Error(ErrorKind::UndecidableSign,
              "cannot separate " + str() + " from zero at " +
                  std::to_string(kMaxSignPrecision) + " bits");
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Enclosure Scalar::enclose(mpfr_prec_t precision) const {
  if (!sym_) return Enclosure(value_, precision);
  return poly_enclose(sym_->num, precision) / poly_enclose(sym_->den, precision);
}

Scalar Scalar::apply(Func f, const Scalar& arg) {
  const auto q = arg.rational();
  switch (f) {
    case Func::Abs:
      return arg.abs();
    case Func::Sin:
      if (q && q->is_zero()) return Scalar(0);
      if (q && q->sign() < 0) return -apply(Func::Sin, Scalar(-*q));
      break;
    case Func::Cos:
      if (q && q->is_zero()) return Scalar(1);
      if (q && q->sign() < 0) return apply(Func::Cos, Scalar(-*q));
      break;
    case Func::Exp:
      if (q && q->is_zero()) return Scalar(1);
      if (auto inner = ScalarAccess::single_atom(arg, Func::Ln)) return *inner;
      break;
    case Func::Ln:
      if (arg.sign() <= 0) {
        throw Error(ErrorKind::LogOfNonPositive, "ln of non-positive value " + arg.str());
      }
      if (q && q->is_one()) return Scalar(0);
      if (auto inner = ScalarAccess::single_atom(arg, Func::Exp)) return *inner;
      break;
    case Func::Sqrt: {
      const int s = arg.sign();
      if (s < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of negative value " + arg.str());
      if (s == 0) return Scalar(0);
      Rational root;
      if (q && q->exact_sqrt(root)) return Scalar(root);
      break;
    }
  }
  return ScalarAccess::atom(f, arg);
}

Scalar Scalar::reciprocal() const {
  if (!sym_) return Scalar(value_.reciprocal());
  return ScalarAccess::make(sym_->den, sym_->num);
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  if (!sym_) return Scalar(value_.pow(exponent));
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Scalar::str() const {
  if (!sym_) return value_.str();
  if (poly_is_const(sym_->den)) return poly_str(sym_->num);
  return "(" + poly_str(sym_->num) + ")/(" + poly_str(sym_->den) + ")";
}

bool Scalar::is_product() const {
  if (!sym_) return true;
  return poly_is_const(sym_->den) && sym_->num.size() == 1;
}

std::strong_ordering Scalar::structural_compare(const Scalar& other) const {
  if (!sym_ && !other.sym_) return value_ <=> other.value_;
  if (!sym_) return std::strong_ordering::less;
  if (!other.sym_) return std::strong_ordering::greater;
  int c = cmp_poly(sym_->num, other.sym_->num);
  if (c == 0) c = cmp_poly(sym_->den, other.sym_->den);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar Scalar::operator-() const {
  if (!sym_) return Scalar(-value_);
  return Scalar(std::make_shared<const Symbolic>(
      Symbolic{poly_scale(sym_->num, Rational(-1)), sym_->den}));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.sym_ && !b.sym_) return Scalar(a.value_ + b.value_);
  const Poly da = ScalarAccess::den(a);
  const Poly db = ScalarAccess::den(b);
  if (cmp_poly(da, db) == 0) {
    return ScalarAccess::make(poly_add(ScalarAccess::num(a), ScalarAccess::num(b)), da);
  }
  return ScalarAccess::make(
      poly_add(poly_mul(ScalarAccess::num(a), db), poly_mul(ScalarAccess::num(b), da)),
      poly_mul(da, db));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.sym_ && !b.sym_) return Scalar(a.value_ * b.value_);
  if (!a.sym_ && a.value_.is_zero()) return Scalar();
  if (!b.sym_ && b.value_.is_zero()) return Scalar();
  return ScalarAccess::make(poly_mul(ScalarAccess::num(a), ScalarAccess::num(b)),
                            poly_mul(ScalarAccess::den(a), ScalarAccess::den(b)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return a * b.reciprocal();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.sym_ && !b.sym_) return a.value_ == b.value_;
  return (a - b).is_zero();
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar run() {
    Scalar out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar out = term();
    while (true) {
      if (eat('+')) {
        out = out + term();
      } else if (eat('-')) {
        out = out - term();
      } else {
        return out;
      }
    }
  }

  Scalar term() {
    Scalar out = unary();
    while (true) {
      if (eat('*')) {
        out = out * unary();
      } else if (eat('/')) {
        out = out / unary();
      } else {
        return out;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    Scalar base = primary();
    if (eat('^')) {
      const bool negative = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long n = std::stol(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(negative ? -n : n);
    }
    return base;
  }

  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return Scalar(Rational::parse(text_.substr(start, pos_ - start)));
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a number or function");
    const auto f = func_from_name(name);
    if (!f) throw Error(ErrorKind::UnknownIdentifier, "unknown function '" + std::string(name) + "'");
    if (!eat('(')) fail("expected '('");
    Scalar arg = expr();
    if (!eat(')')) fail("expected ')'");
    return Scalar::apply(*f, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

}  // namespace tic
