#pragma once

#include "spdom/space.hpp"
#include "text_cursor.hpp"

namespace spdom::detail {

// Parses `item (";" item)*` where item is "[lo,hi]" or "cyl(bits)", leaving
// the cursor on whatever follows. Shared between the clopen literal and the
// step-function literal, whose pieces embed clopens terminated by "->".
Clopen parse_clopen_items(Cursor& cur, const Space& space);

}  // namespace spdom::detail
