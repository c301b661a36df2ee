#pragma once

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

namespace dsharp {

// Compiles a closed-form loss expression in the single variable x.
// Grammar: + - * / ^ (right-assoc), unary minus, parentheses, numeric
// constants, and the functions abs(e), min(e,e), max(e,e).
// Throws std::invalid_argument on malformed input.
std::function<double(double)> parse_loss_expr(std::string_view expr);

// Piecewise-linear loss through (x, loss) knots sorted by x, with flat
// extrapolation beyond the table range. Requires at least one knot.
std::function<double(double)> make_loss_table(
    std::vector<std::pair<double, double>> knots);

}  // namespace dsharp
