#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tic/hyperreal.hpp"
#include "tic/rational.hpp"

namespace tic {

/// An interval with rational or infinite endpoints. A missing endpoint is
/// infinite and always open.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Rational& q) const;
  bool contains(const HyperReal& v) const;
  bool is_bounded() const { return lo.has_value() && hi.has_value(); }
  std::string str() const;
};

/// Finite union of pairwise disjoint intervals in increasing order.
class DomainSpec {
 public:
  /// The whole real line.
  DomainSpec();
  /// Sorts the intervals and rejects empty or overlapping ones.
  explicit DomainSpec(std::vector<Interval> intervals);

  /// "R", "(a,b)", "[a,b]", "(a,inf)", "(-inf,b]", joined with "∪", "u" or "U".
  static DomainSpec parse(std::string_view text);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(const Rational& q) const;
  bool is_bounded() const;
  /// Index of the interval containing q.
  std::optional<std::size_t> component_of(const Rational& q) const;
  /// Finite endpoints of all intervals, in increasing order.
  std::vector<Rational> finite_endpoints() const;
  std::string str() const;

 private:
  std::vector<Interval> intervals_;
};

/// Membership of v in the natural extension *D, by the interval inequalities
/// read in hyperreal order.
bool is_in_star_domain(const DomainSpec& d, const HyperReal& v);

}  // namespace tic
