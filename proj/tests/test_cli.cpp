#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tic/certificate_json.hpp"
#include "tic/cli.hpp"

using namespace tic;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(TIC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), name);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome outcome_of(const std::string& s) {
  if (s == "holds") return Outcome::Holds;
  if (s == "fails") return Outcome::Fails;
  if (s == "no_counterexample") return Outcome::NoCounterexampleFound;
  return Outcome::Inconclusive;
}

std::vector<Outcome> outcomes(const Json& report) {
  std::vector<Outcome> r;
  if (report.contains("certificates")) {
    for (const auto& c : report["certificates"]) r.push_back(outcome_of(c["outcome"].get<std::string>()));
  } else {
    r.push_back(outcome_of(report["outcome"].get<std::string>()));
  }
  return r;
}

int code_from_outcomes(const std::vector<Outcome>& os) {
  std::vector<Certificate> certs;
  for (Outcome o : os) {
    Certificate c;
    c.outcome = o;
    certs.push_back(c);
  }
  return cli::exit_code(certs);
}

}  // namespace

TEST_CASE("documented commands") {
  const RunResult ucont = run({"check-ucont", "--expr", "x^2", "--domain", "R", "--track", "both"});
  CHECK(ucont.code == cli::kExitFails);
  CHECK(ucont.out.find("x = H") != std::string::npos);
  CHECK(ucont.out.find("track A: fails") != std::string::npos);

  const RunResult seq = run({"limit-seq", "--expr", "(n+1)/n", "--track", "B"});
  CHECK(seq.code == cli::kExitHolds);
  CHECK(seq.out.find("value: 1") != std::string::npos);

  const RunResult st = run({"st", "--expr-hyper", "(H+1)/H"});
  CHECK(st.code == 0);
  CHECK(st.out == "1\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"check-cont", "--expr", "x+5"}).code == cli::kExitUsage);
  const RunResult bad_flag = run({"check-cont", "--expr", "x+5", "--point", "2", "--track", "C"});
  CHECK(bad_flag.code == cli::kExitUsage);
  CHECK(bad_flag.err.find("--track") != std::string::npos);
  CHECK(run({"check-cont", "--expr", "x +", "--point", "2"}).code == cli::kExitUsage);
  CHECK(run({"check-cont", "--expr", "1/x", "--domain", "(0,inf)", "--point", "0"}).code == cli::kExitUsage);
  CHECK(run({"limit-seq", "--expr", "x+1"}).code == cli::kExitUsage);
  CHECK(run({"st", "--expr-hyper", "H", "--order", "0"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("inconclusive outcomes exit 2") {
  CHECK(run({"check-cont", "--expr", "sin(x)", "--point", "1"}).code == cli::kExitInconclusive);
  CHECK(run({"limit-at", "--expr", "1/x", "--point", "0", "--track", "B"}).code == cli::kExitInconclusive);
  CHECK(run({"st", "--expr-hyper", "H"}).code == cli::kExitInconclusive);
}

TEST_CASE("order from flag and environment") {
  CHECK(run({"st", "--expr-hyper", "1/(1+eps)", "--order", "2"}).out == "1\n");
  setenv("TIC_ORDER", "3", 1);
  const RunResult r = run({"repl"}, "1/(1+eps)\n");
  unsetenv("TIC_ORDER");
  CHECK(r.out == "1 - eps + eps^2 - eps^3\n");
}

TEST_CASE("golden json reports") {
  struct Case {
    const char* file;
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {"ucont_square.json", {"check-ucont", "--expr", "x^2", "--domain", "R", "--track", "both"}, 1},
      {"seq_shadow.json", {"limit-seq", "--expr", "(n+1)/n", "--track", "B"}, 0},
      {"cont_control.json", {"check-cont", "--expr", "x+5", "--point", "2"}, 0},
      {"ucont_reciprocal.json", {"check-ucont", "--expr", "1/x", "--domain", "(0,1)"}, 1},
      {"seq_wrong.json", {"limit-seq", "--expr", "(n+1)/n", "--limit", "2"}, 1},
      {"limit_removable.json", {"limit-at", "--expr", "(x^2-4)/(x-2)", "--point", "2", "--limit", "4"}, 0},
      {"cont_step.json", {"check-cont", "--expr", "(x+abs(x))/(2*x)", "--point", "0"}, 1},
      {"cont_sin.json", {"check-cont", "--expr", "sin(x)", "--point", "1"}, 2},
  };
  for (const Case& c : cases) {
    INFO(c.file);
    auto args = c.args;
    args.push_back("--format");
    args.push_back("json");
    const RunResult r = run(args);
    Json got = Json::parse(r.out);
    REQUIRE(got.contains("elapsed_ms"));
    got.erase("elapsed_ms");
    const Json want = Json::parse(slurp(c.file));
    CHECK(got.dump(2) == want.dump(2));
    CHECK(r.code == c.code);
    CHECK(r.code == code_from_outcomes(outcomes(got)));
  }
}

TEST_CASE("exit code is a function of outcomes") {
  using enum Outcome;
  CHECK(code_from_outcomes({Holds, Holds}) == 0);
  CHECK(code_from_outcomes({Holds, Fails}) == 1);
  CHECK(code_from_outcomes({Fails, Inconclusive}) == 1);
  CHECK(code_from_outcomes({Holds, Inconclusive}) == 0);
  CHECK(code_from_outcomes({NoCounterexampleFound, Inconclusive}) == 2);
  CHECK(code_from_outcomes({Inconclusive}) == 2);
}

TEST_CASE("repl golden transcripts") {
  for (const char* name : {"repl_worked", "repl_session"}) {
    INFO(name);
    const RunResult r = run({"repl"}, slurp(std::string(name) + ".in"));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(name) + ".out"));
  }
}

TEST_CASE("repl survives bad input") {
  std::ostringstream out;
  std::istringstream in(")\n:classify\n:order x\n1/0\n:nope\neps\n");
  cli::repl(in, out, kDefaultOrder, false);
  const std::string s = out.str();
  CHECK(s.substr(s.rfind('\n', s.size() - 2) + 1) == "eps\n");
}

TEST_CASE("gallery") {
  std::ostringstream out;
  CHECK(cli::gallery("", out) == 0);
  CHECK(out.str().find("13/13 entries passed") != std::string::npos);
  for (const char* name : {"squaring-ucont", "control-problem", "sqrt2-paraphrase"}) {
    std::ostringstream one;
    CHECK(cli::gallery(name, one) == 0);
  }
  std::ostringstream none;
  CHECK(cli::gallery("no-such-entry", none) != 0);
  for (const auto& e : cli::gallery_entries()) {
    if (e.paraphrase) continue;
    INFO(e.name);
    CHECK(e.expect_a == e.expect_b);
  }
}
