#pragma once

#include <optional>
#include <string>

#include "tic/classes.hpp"
#include "tic/expr.hpp"
#include "tic/rational.hpp"

namespace tic {

/// Closed rational interval; a missing endpoint is infinite.
struct RInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RInterval point(const Rational& q) { return {q, q}; }
  bool is_bounded() const { return lo.has_value() && hi.has_value(); }
  bool contains_zero() const;
  /// sup |x| over the interval; nullopt when unbounded.
  std::optional<Rational> magnitude() const;
  std::string str() const;
};

/// Exact interval extension of e over x. Returns nullopt when the enclosure
/// is not a finite-or-half-line interval (a divisor may vanish) or e uses a
/// function other than abs.
std::optional<RInterval> interval_eval(const Expr& e, const RInterval& x);

/// A rational M with |f'(t)| <= M for all t in J, found by bisecting J until
/// every piece has a finite enclosure of f'. nullopt if f has no exact
/// derivative or no finite bound appears within the depth limit.
std::optional<Rational> lipschitz_bound(const Expr& f, const RInterval& j, int max_depth = 16);

/// sup |g'| over J for a rational function g, with g' = (p'q - pq')/q^2
/// formed exactly. Unbounded ends are handled through t = 1/x. nullopt if g
/// has a pole on J, g' is unbounded at an infinite end, or bisection to
/// max_depth does not separate the poles.
std::optional<Rational> rational_derivative_bound(const RationalFunction& g, const RInterval& j,
                                                  int max_depth = 16);

/// The numerator p'q - pq' and denominator q^2 of g'.
std::pair<Poly, Poly> derivative_parts(const RationalFunction& g);

}  // namespace tic
