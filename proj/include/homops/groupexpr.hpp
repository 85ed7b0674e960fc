#ifndef HOMOPS_GROUPEXPR_HPP
#define HOMOPS_GROUPEXPR_HPP

#include <string>

#include "homops/abgroup.hpp"

namespace homops::expr {

// Grammar: `0` | `Z` | `Z/n` (n >= 2) | `Z^r` | sums joined with `+`.
// Whitespace is insignificant. `Z/1` and `Z/0` are rejected with ValueError;
// anything else malformed raises ParseError with the offending position.
FgAbGroup parse_group(const std::string& text);

// Canonical rendering in the same grammar, invariant factors ascending,
// e.g. "Z^2 + Z/2 + Z/12". The trivial group renders as "0".
std::string render_group(const FgAbGroup& g);

}  // namespace homops::expr

#endif
