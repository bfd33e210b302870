#include <cctype>

#include "tic/error.hpp"
#include "tic/expr.hpp"

namespace tic {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    seen_variable_ = 0;
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (eat('+')) {
        e = Expr::add(e, term());
      } else if (eat('-')) {
        e = Expr::sub(e, term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (eat('*')) {
        e = Expr::mul(e, unary());
      } else if (eat('/')) {
        e = Expr::div(e, unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (!eat('-')) return factor();
    // A minus directly in front of a number literal folds into the constant,
    // unless the literal is the base of a power: -2^2 is -(2^2).
    const char c = peek();
    if (is_digit(c) || c == '.') {
      const Rational q = number();
      if (peek() == '^') return Expr::neg(power_tail(Expr::constant(q)));
      return Expr::constant(-q);
    }
    return Expr::neg(unary());
  }

  Expr factor() { return power_tail(atom()); }

  Expr power_tail(Expr base) {
    if (!eat('^')) return base;
    const bool hyper = base.kind() == NodeKind::HyperLiteral;
    if (eat('(')) {
      const bool negative = eat('-');
      skip();
      const std::size_t start = pos_;
      Rational q = integer_literal();
      if (eat('/')) {
        if (!hyper) {
          pos_ = start;
          fail("exponent must be an integer");
        }
        q = q / integer_literal();
      }
      expect(')');
      if (negative) q = -q;
      if (hyper) return Expr::hyper_literal(base.value() * q);
      return Expr::power(base, q.numerator().get_si());
    }
    const bool negative = eat('-');
    skip();
    const Rational q = integer_literal();
    return Expr::power(base, negative ? -q.numerator().get_si() : q.numerator().get_si());
  }

  Rational integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  // integer | decimal | p/q written without spaces
  Rational number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    bool integral = true;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ - start == 1 && text_[start] == '.') {
      pos_ = start;
      fail("malformed number");
    }
    if (integral && pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    const auto literal = text_.substr(start, pos_ - start);
    try {
      return Rational::parse(literal);
    } catch (const Error& e) {
      pos_ = start;
      if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::DivisionByZero, e.what());
      fail("malformed number");
    }
  }

  Expr atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (is_digit(c) || c == '.') return Expr::constant(number());
    if (eat('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (!is_alpha(c)) fail(std::string("unexpected '") + c + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_')) {
      ++pos_;
    }
    const auto name = text_.substr(start, pos_ - start);
    if (name == "x" || name == "n") {
      if (!options_.allow_variables) {
        throw Error(ErrorKind::UnknownIdentifier,
                    "variable '" + std::string(name) + "' is not allowed here (offset " +
                        std::to_string(start) + ")");
      }
      if (seen_variable_ != 0 && seen_variable_ != name[0]) {
        throw Error(ErrorKind::MultipleVariables,
                    "expression mixes variables x and n (offset " + std::to_string(start) + ")");
      }
      seen_variable_ = name[0];
      return Expr::variable(name[0]);
    }
    if (options_.allow_hyper_literals && (name == "eps" || name == "H")) {
      return Expr::hyper_literal(name == "eps" ? Rational(1) : Rational(-1));
    }
    if (const auto f = func_from_name(name)) {
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::call(*f, arg);
    }
    throw Error(ErrorKind::UnknownIdentifier,
                "unknown identifier '" + std::string(name) + "' at offset " + std::to_string(start));
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  char seen_variable_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const ParseOptions& options) { return Parser(text, options).run(); }

}  // namespace tic
