#pragma once

#include <optional>
#include <string_view>

namespace tic {

/// Elementary functions available both in the expression language and as
/// named constants inside exact coefficients.
enum class Func { Sin, Cos, Exp, Ln, Sqrt, Abs };

std::string_view to_string(Func f);
std::optional<Func> func_from_name(std::string_view name);

}  // namespace tic
