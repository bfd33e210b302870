#include <cctype>
#include <istream>
#include <ostream>

#include "tic/cli.hpp"
#include "tic/error.hpp"

namespace tic::cli {

namespace {

HyperReal eval_line(std::string_view text, int order) {
  return eval_hyper(parse(text, ParseOptions{false, true}), order);
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits "a b" at the first blank or comma where both halves parse.
std::pair<HyperReal, HyperReal> two_operands(const std::string& text, int order) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) continue;
    const std::string left = trim(std::string_view(text).substr(0, i));
    const std::string right = trim(std::string_view(text).substr(i + 1));
    if (left.empty() || right.empty()) continue;
    try {
      return {eval_line(left, order), eval_line(right, order)};
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::InvalidArgument, ":approx needs two expressions");
}

const char* kHelp =
    "expressions use eps, H, + - * / ^ and sin cos exp ln sqrt abs\n"
    ":st a        standard part\n"
    ":classify a  zero, infinitesimal, appreciable or infinite\n"
    ":approx a b  whether a - b is infinitesimal or zero\n"
    ":order K     truncation order\n"
    ":quit        leave\n";

}  // namespace

void repl(std::istream& in, std::ostream& out, int order, bool interactive) {
  std::string line;
  while (true) {
    if (interactive) out << "tic> " << std::flush;
    if (!std::getline(in, line)) break;
    const std::string text = trim(line);
    if (text.empty()) continue;
    try {
      if (text[0] != ':') {
        out << eval_line(text, order).str() << "\n";
        continue;
      }
      const std::size_t sp = text.find_first_of(" \t");
      const std::string cmd = text.substr(0, sp);
      const std::string arg = sp == std::string::npos ? "" : trim(text.substr(sp));
      if (cmd == ":quit" || cmd == ":q") break;
      if (cmd == ":help") {
        out << kHelp;
      } else if (cmd == ":st") {
        out << st(eval_line(arg, order)).str() << "\n";
      } else if (cmd == ":classify") {
        out << to_string(classify(eval_line(arg, order))) << "\n";
      } else if (cmd == ":approx") {
        const auto [a, b] = two_operands(arg, order);
        out << (approx(a, b) ? "true" : "false") << "\n";
      } else if (cmd == ":order") {
        const Rational k = Rational::parse(arg);
        if (!k.is_integer() || k < Rational(1) || k > Rational(256)) {
          throw Error(ErrorKind::InvalidArgument, "order must be an integer in 1..256");
        }
        order = static_cast<int>(k.numerator().get_si());
        out << "order = " << order << "\n";
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown command " + cmd);
      }
    } catch (const std::exception& e) {
      out << "error: " << e.what() << "\n";
    }
  }
}

}  // namespace tic::cli
