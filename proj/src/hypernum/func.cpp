#include "tic/func.hpp"

namespace tic {

std::string_view to_string(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sqrt: return "sqrt";
    case Func::Abs: return "abs";
  }
  return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
  if (name == "sin") return Func::Sin;
  if (name == "cos") return Func::Cos;
  if (name == "exp") return Func::Exp;
  if (name == "ln") return Func::Ln;
  if (name == "sqrt") return Func::Sqrt;
  if (name == "abs") return Func::Abs;
  return std::nullopt;
}

}  // namespace tic
