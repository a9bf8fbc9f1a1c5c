#pragma once

// Text forms used by the CLI, reports and tests.
//
//   strap   "x,y" (two coins, either order), "r" (one coin), "-" (empty)
//   sum     "<strap>|<strap>", e.g. "0,1|1,2" or "-|0,3"
//   move    "<left|right> slide <left|right|lone> <to>"
//           "<left|right> push <depth>"
//           "<left|right> remove"
//
// Whitespace inside strap and sum text is ignored. Coordinates are decimal
// and must fit in a Square.

#include <string>
#include <string_view>

#include "coinslide/strap.hpp"
#include "coinslide/sumgame.hpp"

namespace coinslide {

// Throws ParseError ("malformed", "duplicate-coin", "negative-coordinate").
StrapState parse_strap(std::string_view text);
std::string format_strap(const StrapState& s);

SumState parse_sum(std::string_view text);
std::string format_sum(const SumState& s);

std::string_view side_name(Side side);

// "slide right 2", "push 1", "remove".
std::string format_move(const StrapMove& m);
// "right push 1".
std::string format_move(const SumMove& m);
// Throws ParseError("malformed-move").
SumMove parse_move(std::string_view text);

}  // namespace coinslide
