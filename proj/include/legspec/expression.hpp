#pragma once

#include <stdexcept>
#include <string>

#include "legspec/types.hpp"

namespace legspec
{

struct ParseError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

///
/// Compile a complex expression in one real variable `t`.
///
/// Grammar: + - * / ^, unary minus, parentheses, numbers (1, 2.5, 1e-3), the
/// constants i, pi, e, and sin cos tan exp log sqrt sinh cosh abs.
/// Throws ParseError with the offending position.
///
[[nodiscard]] ScalarFunction parse_expression(const std::string& text);

} // namespace legspec
