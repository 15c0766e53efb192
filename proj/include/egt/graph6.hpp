#pragma once

#include <string>
#include <string_view>

#include "egt/graph.hpp"

// Standard graph6 encoding restricted to single-byte headers (1 <= n <= 62).
// Header byte is n + 63; the upper-triangle adjacency bits follow in column
// order (0,1),(0,2),(1,2),(0,3),... packed six per byte most-significant bit
// first, each data byte offset by 63; unused padding bits are zero.

namespace egt {

// Throws std::invalid_argument if g.order() > 62.
std::string to_graph6(const Graph& g);

// Throws std::invalid_argument on malformed header, out-of-range bytes,
// truncated input, trailing garbage, or nonzero padding bits.
Graph from_graph6(std::string_view text);

} // namespace egt
