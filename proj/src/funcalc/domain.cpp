#include "tic/domain.hpp"

#include <algorithm>
#include <cctype>

#include "tic/error.hpp"

namespace tic {

bool Interval::contains(const Rational& q) const {
  if (lo && (lo_closed ? q < *lo : q <= *lo)) return false;
  if (hi && (hi_closed ? q > *hi : q >= *hi)) return false;
  return true;
}

bool Interval::contains(const HyperReal& v) const {
  if (lo) {
    const HyperReal a = HyperReal::rational(*lo, v.order());
    if (lo_closed ? v < a : v <= a) return false;
  }
  if (hi) {
    const HyperReal b = HyperReal::rational(*hi, v.order());
    if (hi_closed ? v > b : v >= b) return false;
  }
  return true;
}

std::string Interval::str() const {
  if (!lo && !hi) return "R";
  std::string s = lo_closed ? "[" : "(";
  s += lo ? lo->str() : "-inf";
  s += ",";
  s += hi ? hi->str() : "inf";
  s += hi_closed ? "]" : ")";
  return s;
}

DomainSpec::DomainSpec() : intervals_{Interval{}} {}

DomainSpec::DomainSpec(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw Error(ErrorKind::InvalidArgument, "empty domain");
  for (const Interval& iv : intervals_) {
    if ((!iv.lo && iv.lo_closed) || (!iv.hi && iv.hi_closed)) {
      throw Error(ErrorKind::InvalidArgument, "infinite endpoint cannot be closed");
    }
    if (iv.lo && iv.hi) {
      const bool point = iv.lo_closed && iv.hi_closed;
      if (*iv.lo > *iv.hi || (*iv.lo == *iv.hi && !point)) {
        throw Error(ErrorKind::InvalidArgument, "empty interval " + iv.str());
      }
    }
  }
  std::sort(intervals_.begin(), intervals_.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo) return b.lo.has_value();
    if (!b.lo) return false;
    return *a.lo < *b.lo;
  });
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
    const Interval& a = intervals_[i];
    const Interval& b = intervals_[i + 1];
    const bool disjoint =
        a.hi && b.lo && (*a.hi < *b.lo || (*a.hi == *b.lo && !(a.hi_closed && b.lo_closed)));
    if (!disjoint) {
      throw Error(ErrorKind::InvalidArgument, "overlapping intervals " + a.str() + " and " + b.str());
    }
  }
}

namespace {

class DomainParser {
 public:
  explicit DomainParser(std::string_view text) : text_(text) {}

  DomainSpec parse() {
    std::vector<Interval> out;
    out.push_back(interval());
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_.substr(pos_, 3) == "∪") {
        pos_ += 3;
      } else if (text_[pos_] == 'u' || text_[pos_] == 'U') {
        ++pos_;
      } else {
        throw SyntaxError(pos_, "expected union");
      }
      out.push_back(interval());
    }
    return DomainSpec(std::move(out));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Interval interval() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == 'R' || text_.substr(pos_, 3) == "ℝ")) {
      pos_ += text_[pos_] == 'R' ? 1 : 3;
      return Interval{};
    }
    Interval iv;
    if (pos_ >= text_.size() || (text_[pos_] != '(' && text_[pos_] != '[')) {
      throw SyntaxError(pos_, "expected '(' or '['");
    }
    iv.lo_closed = text_[pos_++] == '[';
    iv.lo = endpoint(-1);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ',') throw SyntaxError(pos_, "expected ','");
    ++pos_;
    iv.hi = endpoint(+1);
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != ')' && text_[pos_] != ']')) {
      throw SyntaxError(pos_, "expected ')' or ']'");
    }
    iv.hi_closed = text_[pos_++] == ']';
    return iv;
  }

  // Returns nullopt for an infinite endpoint on the expected side.
  std::optional<Rational> endpoint(int side) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == ',' || ch == ')' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) break;
      ++pos_;
    }
    std::string token(text_.substr(start, pos_ - start));
    int sign = 1;
    std::string body = token;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
      sign = body[0] == '-' ? -1 : 1;
      body = body.substr(1);
    }
    if (body == "inf" || body == "∞" || body == "infinity") {
      if (sign != side) throw SyntaxError(start, "infinite endpoint on the wrong side");
      return std::nullopt;
    }
    try {
      return Rational::parse(token);
    } catch (const Error&) {
      throw SyntaxError(start, "bad endpoint '" + token + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DomainSpec DomainSpec::parse(std::string_view text) { return DomainParser(text).parse(); }

bool DomainSpec::contains(const Rational& q) const { return component_of(q).has_value(); }

bool DomainSpec::is_bounded() const {
  return intervals_.front().lo.has_value() && intervals_.back().hi.has_value();
}

std::optional<std::size_t> DomainSpec::component_of(const Rational& q) const {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].contains(q)) return i;
  }
  return std::nullopt;
}

std::vector<Rational> DomainSpec::finite_endpoints() const {
  std::vector<Rational> out;
  for (const Interval& iv : intervals_) {
    if (iv.lo && (out.empty() || out.back() != *iv.lo)) out.push_back(*iv.lo);
    if (iv.hi && (out.empty() || out.back() != *iv.hi)) out.push_back(*iv.hi);
  }
  return out;
}

std::string DomainSpec::str() const {
  std::string s;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) s += " u ";
    s += intervals_[i].str();
  }
  return s;
}

bool is_in_star_domain(const DomainSpec& d, const HyperReal& v) {
  return std::any_of(d.intervals().begin(), d.intervals().end(),
                     [&](const Interval& iv) { return iv.contains(v); });
}

}  // namespace tic
