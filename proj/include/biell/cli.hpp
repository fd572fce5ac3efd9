#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biell/elliptic.hpp"

namespace biell {
namespace cli {

// Exit codes: 0 success, 2 parameter violation / usage, 3 computational
// budget or precision failure, 4 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// `[d*]y2=<integer polynomial in x>` (whitespace-insensitive; `y^2`, `x^k`
// and `xk` are all accepted). Returns the twist d and the right-hand side.
std::pair<Int, Poly> parse_curve(const std::string& text);

}  // namespace cli
}  // namespace biell
