#include <doctest.h>

#include "gen.hpp"
#include "tic/error.hpp"
#include "tic/hyperreal_json.hpp"

using namespace tic;
using testing::Rng;

namespace {

const HyperReal kEps = HyperReal::epsilon();
const HyperReal kH = HyperReal::infinite();
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

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  Rational r;
  CHECK(Rational(9, 4).exact_sqrt(r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt(r));
  CHECK(kind_of([] { (void)Rational(0).reciprocal(); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("make") {
  CHECK(make_rational(0).is_zero());
  CHECK(classify(make_generator_power(1)) == Magnitude::Infinitesimal);
  CHECK(classify(make_generator_power(-1)) == Magnitude::Infinite);
  CHECK(make_generator_power(Rational(1, 3)).str() == "eps^(1/3)");
}

TEST_CASE("add") {
  const HyperReal s = add(kH, kEps);
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].exponent == Rational(-1));
  CHECK(s.terms()[1].exponent == Rational(1));
  CHECK(add(s, -s).is_zero());
  CHECK(add(q(1), inv(kH)) == q(1) + kEps);
}

TEST_CASE("mul and the orders of magnitude of eps times H") {
  CHECK(mul(kEps, kEps) == make_generator_power(2));
  CHECK(classify(mul(kEps, kEps)) == Magnitude::Infinitesimal);
  CHECK(classify(mul(kEps, kH)) == Magnitude::Appreciable);
  CHECK(classify(mul(kEps * kEps, kH)) == Magnitude::Infinitesimal);
  CHECK(classify(mul(kEps, kH * kH)) == Magnitude::Infinite);
  CHECK(mul(kH + kEps, kH + kEps) == kH * kH + q(2) + kEps * kEps);
  CHECK((mul(kH + kEps, kH + kEps)).str() == "H^2 + 2 + eps^2");
}

TEST_CASE("inv") {
  CHECK(inv(kH) == kEps);
  const HyperReal i = inv(q(1) + kEps);
  // Independent oracle: multiplying back gives 1 up to the window.
  CHECK(window_equal(i * (q(1) + kEps), q(1)));
  REQUIRE(i.terms().size() == kDefaultOrder + 1);
  for (std::size_t k = 0; k < i.terms().size(); ++k) {
    CHECK(i.terms()[k].exponent == Rational(static_cast<long>(k)));
    CHECK(i.terms()[k].coefficient == Scalar(k % 2 == 0 ? 1 : -1));
  }
  CHECK(kind_of([] { (void)inv(HyperReal()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("compare") {
  for (long d : {1, 10, 1000, 1000000}) {
    CHECK(compare(kEps, q(1, d)) == Ordering::Less);
    CHECK(compare(kH, q(d)) == Ordering::Greater);
    CHECK(compare(kH, q(-d)) == Ordering::Greater);
  }
  CHECK(compare(kH + kEps, kH + kEps) == Ordering::Equal);
}

TEST_CASE("classify, st, approx, valuation") {
  CHECK(classify(kEps) == Magnitude::Infinitesimal);
  CHECK(classify(q(2) + kEps * kEps) == Magnitude::Appreciable);
  CHECK(classify(HyperReal()) == Magnitude::Zero);
  CHECK(st(q(1) + kEps) == Scalar(1));
  CHECK(st(q(2) + kEps * kEps) == Scalar(2));
  CHECK(kind_of([] { (void)st(kH); }) == ErrorKind::NotLimited);
  CHECK(approx(kH, kH + kEps));
  CHECK_FALSE(approx(kH * kH, (kH + kEps) * (kH + kEps)));
  CHECK(approx(q(3), q(3)));
  CHECK(valuation(kEps * kEps * kH) == Rational(1));
  CHECK(valuation(q(2) + kEps * kEps) == Rational(0));
  CHECK(kind_of([] { (void)valuation(HyperReal()); }) == ErrorKind::ZeroHasNoValuation);
}

TEST_CASE("truncation window") {
  const HyperReal a = HyperReal::from_terms({{Rational(0), Scalar(1)}, {Rational(5), Scalar(1)}}, 4);
  CHECK(a == HyperReal::rational(1, 4));
  const HyperReal b = HyperReal::from_terms({{Rational(-1), Scalar(1)}, {Rational(3), Scalar(2)}}, 4);
  CHECK(b.terms().size() == 2);
}

TEST_CASE("field axioms on random series") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const HyperReal a = testing::hyperreal(rng);
    const HyperReal b = testing::hyperreal(rng);
    const HyperReal c = testing::hyperreal(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + HyperReal() == a);
    CHECK(a * q(1) == a);
    if (!a.is_zero()) CHECK(window_equal(a * inv(a), q(1)));
  }
}

TEST_CASE("ordered inverse law") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    HyperReal a = testing::nonzero_hyperreal(rng).abs();
    HyperReal b = testing::nonzero_hyperreal(rng).abs();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    REQUIRE(compare(HyperReal(), a) == Ordering::Less);
    CHECK(compare(inv(b), inv(a)) == Ordering::Less);
  }
}

TEST_CASE("st is a ring morphism on limited numbers") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const HyperReal a = testing::limited_hyperreal(rng);
    const HyperReal b = testing::limited_hyperreal(rng);
    CHECK(st(a + b) == st(a) + st(b));
    CHECK(st(a * b) == st(a) * st(b));
    CHECK(approx(a, b) == (st(a - b) == Scalar(0)));
  }
}

TEST_CASE("valuation laws") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const HyperReal a = testing::nonzero_hyperreal(rng);
    const HyperReal b = testing::nonzero_hyperreal(rng);
    CHECK(valuation(a * b) == valuation(a) + valuation(b));
    if (!(a + b).is_zero()) CHECK(valuation(a + b) >= min(valuation(a), valuation(b)));
  }
}

TEST_CASE("elementary functions at limited points") {
  const HyperReal e = apply(Func::Exp, kEps);
  Rational fact(1);
  for (int k = 0; k <= kDefaultOrder; ++k) {
    if (k > 0) fact = fact * Rational(k);
    CHECK(e.coefficient(Rational(k)) == Scalar(fact.reciprocal()));
  }
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const HyperReal x = HyperReal::rational(testing::rational(rng, 9)) + testing::limited_hyperreal(rng, 2, 9) * kEps;
    const HyperReal s = apply(Func::Sin, x);
    const HyperReal c = apply(Func::Cos, x);
    CHECK(window_equal(s * s + c * c, q(1)));
  }
  CHECK(kind_of([] { (void)apply(Func::Sin, kH); }) == ErrorKind::TranscendentalAtInfinite);
  CHECK(kind_of([] { (void)apply(Func::Ln, -kEps); }) == ErrorKind::LogOfNonPositive);
  CHECK(kind_of([] { (void)apply(Func::Sqrt, q(-1)); }) == ErrorKind::SqrtOfNegative);
  CHECK(apply(Func::Sqrt, q(4) + kEps).terms().front().coefficient == Scalar(2));
}

TEST_CASE("symbolic coefficients") {
  const Scalar s1 = Scalar::apply(Func::Sin, Scalar(1));
  const Scalar c1 = Scalar::apply(Func::Cos, Scalar(1));
  CHECK(s1 * s1 + c1 * c1 == Scalar(1));
  CHECK(s1.sign() > 0);
  CHECK((s1 - c1).sign() > 0);
  CHECK(Scalar::apply(Func::Sin, Scalar(0)) == Scalar(0));
  CHECK(Scalar::apply(Func::Exp, Scalar::apply(Func::Ln, Scalar(3))) == Scalar(3));
  const Scalar r2 = Scalar::apply(Func::Sqrt, Scalar(2));
  CHECK(r2 * r2 == Scalar(2));
  CHECK(Scalar::apply(Func::Sqrt, Scalar(Rational(9, 4))) == Scalar(Rational(3, 2)));
  CHECK(Scalar::parse(s1.str()) == s1);
}

TEST_CASE("json round trip") {
  const HyperReal h = kH * kH + q(2) + make_generator_power(Rational(1, 2)) * q(-3, 7);
  const Json j = to_json(h);
  CHECK(j.dump() == R"({"terms":[["-2","1"],["0","2"],["1/2","-3/7"]],"order":16})");
  CHECK(hyperreal_from_json(j) == h);
  const Json dec = Json::parse(R"({"terms":[["0.5","1.25"]],"order":8})");
  CHECK(hyperreal_from_json(dec) == HyperReal::from_terms({{Rational(1, 2), Scalar(Rational(5, 4))}}, 8));
}
