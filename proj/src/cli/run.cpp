#include <chrono>
#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include <CLI11.hpp>

#include "tic/certificate_json.hpp"
#include "tic/cli.hpp"
#include "tic/error.hpp"

namespace tic::cli {

namespace {

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownIdentifier:
    case ErrorKind::MultipleVariables:
    case ErrorKind::PointOutsideDomain:
    case ErrorKind::InvalidArgument: return true;
    default: return false;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Certificate failed_track(const Claim& claim, Track track, const Error& e) {
  Certificate c;
  c.claim = claim;
  c.track = track;
  c.outcome = Outcome::Inconclusive;
  c.grade = Grade::ProbeOnly;
  c.narrative.push_back(std::string("error: ") + e.what());
  return c;
}

Certificate run_b(const Claim& claim, int order) {
  const DomainSpec d = claim.domain.value_or(DomainSpec());
  switch (claim.kind) {
    case ClaimKind::ContinuityAt: return continuity_b_certificate(claim.expr, d, *claim.point, order);
    case ClaimKind::UniformContinuityOn: return uniform_continuity_b_certificate(claim.expr, d, order);
    case ClaimKind::LimitOfSequence: return limit_seq_b_certificate(claim.expr, claim.limit, order);
    case ClaimKind::LimitAtPoint: return limit_at_b_certificate(claim.expr, d, *claim.point, claim.limit, order);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown claim");
}

// Without a claimed limit the A track checks the value found on the B track.
std::optional<Rational> candidate_limit(const Claim& claim, int order) {
  if (claim.limit) return claim.limit;
  const LimitResult r = claim.kind == ClaimKind::LimitOfSequence
                            ? limit_seq_b(claim.expr, order)
                            : limit_at_b(claim.expr, *claim.point, claim.domain, order);
  if (r.tag == LimitResult::Tag::Value) return r.value->rational();
  return std::nullopt;
}

Certificate run_a(const Claim& claim, int order) {
  const DomainSpec d = claim.domain.value_or(DomainSpec());
  switch (claim.kind) {
    case ClaimKind::ContinuityAt: return continuity_a(claim.expr, d, *claim.point);
    case ClaimKind::UniformContinuityOn: return uniform_continuity_a(claim.expr, d);
    case ClaimKind::LimitOfSequence:
    case ClaimKind::LimitAtPoint: {
      const auto limit = candidate_limit(claim, order);
      if (!limit) {
        Certificate c;
        c.claim = claim;
        c.track = Track::A;
        c.narrative.push_back("no limit was given and none was found to check");
        return c;
      }
      if (claim.kind == ClaimKind::LimitOfSequence) return limit_seq_a(claim.expr, *limit);
      return limit_at_a(claim.expr, d, *claim.point, *limit);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown claim");
}

std::string witness_line(const Witness& w) {
  std::string s = "x = " + w.point.str() + ", delta = " + w.delta.str() + ", increment = " + w.increment.str() +
                  " (" + std::string(to_string(w.magnitude)) + ")";
  if (w.standard_part) s += ", st = " + w.standard_part->str();
  return s;
}

void print_text(const Certificate& c, std::ostream& out) {
  out << "track " << to_string(c.track) << ": " << to_string(c.outcome) << " [" << to_string(c.grade) << "]\n";
  if (c.verdict && c.verdict->witness) out << "  witness: " << witness_line(*c.verdict->witness) << "\n";
  if (c.limit && c.limit->tag == LimitResult::Tag::Value) out << "  value: " << c.limit->value->str() << "\n";
  if (c.limit && c.limit->tag == LimitResult::Tag::Diverges) out << "  value: diverges\n";
  if (c.modulus) {
    out << "  modulus: " << (c.modulus->kind == Modulus::Kind::DeltaOfEpsilon ? "delta(epsilon) = " : "N(epsilon) = ")
        << c.modulus->formula() << "\n";
  }
  if (c.falsification) {
    const Falsification& f = *c.falsification;
    out << "  counterexample: epsilon = " << f.epsilon << ", " << f.violations.size() << " violations\n";
    const std::size_t shown = std::min<std::size_t>(3, f.violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
      const Violation& v = f.violations[i];
      out << "    ";
      if (c.claim.kind == ClaimKind::LimitOfSequence) {
        out << "n = " << v.x;
      } else {
        out << "delta = " << v.radius << ": x = " << v.x;
        if (v.x_prime) out << ", x' = " << *v.x_prime;
      }
      out << ", gap = " << v.gap << "\n";
    }
  }
  for (const std::string& line : c.narrative) out << "  - " << line << "\n";
}

int parse_order(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TIC_ORDER")) {
    try {
      const Rational k = Rational::parse(env);
      if (k.is_integer() && k >= Rational(1) && k <= Rational(256)) {
        return static_cast<int>(k.numerator().get_si());
      }
    } catch (const Error&) {
    }
    throw UsageError(std::string("TIC_ORDER must be an integer in 1..256, got '") + env + "'");
  }
  return kDefaultOrder;
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(name + ": not a rational number: '" + text + "'");
  }
}

}  // namespace

std::vector<Certificate> check_claim(const Claim& claim, bool track_a, bool track_b, int order) {
  std::vector<Certificate> out;
  auto guarded = [&](Track t) {
    try {
      out.push_back(t == Track::B ? run_b(claim, order) : run_a(claim, order));
    } catch (const Error& e) {
      if (is_input_error(e.kind())) throw;
      out.push_back(failed_track(claim, t, e));
    }
  };
  if (track_b) guarded(Track::B);
  if (track_a) guarded(Track::A);
  return out;
}

int exit_code(const std::vector<Certificate>& certs) {
  bool holds = false;
  for (const Certificate& c : certs) {
    if (c.outcome == Outcome::Fails) return kExitFails;
    holds = holds || c.outcome == Outcome::Holds;
  }
  return holds ? kExitHolds : kExitInconclusive;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact infinitesimal calculus: B-track and A-track checks with certificates", "tic"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string fmt = "text";
  std::optional<int> order_flag;
  std::string track = "both";
  app.add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", order_flag, "Truncation order K (overrides TIC_ORDER)")->check(CLI::Range(1, 256));
  app.add_option("--track", track, "Tracks to run")->check(CLI::IsMember({"A", "B", "both"}));

  std::string expr;
  std::string domain = "R";
  std::string point;
  std::string limit;
  std::string hyper;
  std::string filter;

  auto* cont = app.add_subcommand("check-cont", "Continuity of f at a point");
  cont->add_option("--expr", expr, "f(x)")->required();
  cont->add_option("--domain", domain, "Domain, e.g. R, (0,1), [0,inf)");
  cont->add_option("--point", point, "The point c")->required();

  auto* ucont = app.add_subcommand("check-ucont", "Uniform continuity of f on a domain");
  ucont->add_option("--expr", expr, "f(x)")->required();
  ucont->add_option("--domain", domain, "Domain");

  auto* lseq = app.add_subcommand("limit-seq", "Limit of a sequence u(n)");
  lseq->add_option("--expr", expr, "u(n)")->required();
  lseq->add_option("--limit", limit, "Claimed limit L");

  auto* lat = app.add_subcommand("limit-at", "Limit of f at a point");
  lat->add_option("--expr", expr, "f(x)")->required();
  lat->add_option("--point", point, "The point c")->required();
  lat->add_option("--limit", limit, "Claimed limit L");
  lat->add_option("--domain", domain, "Domain");

  auto* stc = app.add_subcommand("st", "Standard part of a hyperreal expression");
  stc->add_option("--expr-hyper", hyper, "Expression in eps and H")->required();

  auto* gal = app.add_subcommand("gallery", "Run the built-in corpus");
  gal->add_option("filter", filter, "Substring of entry names");

  auto* rep = app.add_subcommand("repl", "Interactive hyperreal calculator");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    const int order = parse_order(order_flag);
    const std::string verb = app.get_subcommands().front()->get_name();

    if (rep->parsed()) {
      const bool interactive = &in == &std::cin && isatty(STDIN_FILENO);
      repl(in, out, order, interactive);
      return kExitHolds;
    }
    if (gal->parsed()) return gallery(filter, out);
    if (stc->parsed()) {
      const HyperReal h = eval_hyper(parse(hyper, ParseOptions{false, true}), order);
      const Scalar s = st(h);
      if (fmt == "json") {
        Json j;
        j["command"] = verb;
        j["input"] = hyper;
        j["value"] = to_json(h);
        j["magnitude"] = to_string(classify(h));
        j["st"] = s.str();
        j["elapsed_ms"] = elapsed();
        out << j.dump(2) << "\n";
      } else {
        out << s.str() << "\n";
      }
      return kExitHolds;
    }

    Claim claim;
    const bool sequence = lseq->parsed();
    claim.expr = parse(expr);
    if (const auto v = free_variable(claim.expr); v && *v != (sequence ? 'n' : 'x')) {
      throw UsageError(std::string("--expr: expected the variable ") + (sequence ? "n" : "x"));
    }
    if (!sequence) claim.domain = DomainSpec::parse(domain);
    if (cont->parsed()) claim.kind = ClaimKind::ContinuityAt;
    if (ucont->parsed()) claim.kind = ClaimKind::UniformContinuityOn;
    if (lseq->parsed()) claim.kind = ClaimKind::LimitOfSequence;
    if (lat->parsed()) claim.kind = ClaimKind::LimitAtPoint;
    if (!point.empty()) claim.point = parse_rational_flag("--point", point);
    if (!limit.empty()) claim.limit = parse_rational_flag("--limit", limit);

    const auto certs = check_claim(claim, track != "B", track != "A", order);
    if (fmt == "json") {
      Json j;
      if (certs.size() == 1) {
        j = to_json(certs.front());
        j["command"] = verb;
      } else {
        j["command"] = verb;
        Json list = Json::array();
        for (const Certificate& c : certs) list.push_back(to_json(c));
        j["certificates"] = std::move(list);
      }
      j["elapsed_ms"] = elapsed();
      out << j.dump(2) << "\n";
    } else {
      out << "claim: " << claim.str() << "\n";
      for (const Certificate& c : certs) print_text(c, out);
    }
    return exit_code(certs);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kExitUsage : kExitInconclusive;
  }
}

}  // namespace tic::cli
