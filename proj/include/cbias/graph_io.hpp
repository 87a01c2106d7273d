#pragma once

#include "cbias/colouring.hpp"

#include <iosfwd>
#include <vector>

namespace cbias {

// Coloured-graph text format:
//
//     n m r
//     u v c      (m lines, 0 <= u < v < n, 0 <= c < r)
//
// Colours are 0-based. Duplicate edges, out-of-range values and trailing
// garbage are InputErrors. Cycles are whitespace-separated vertex lists.

ColouredGraph read_coloured_graph(std::istream & in);
void write_coloured_graph(std::ostream & out, const ColouredGraph & cg);

std::vector<Vertex> read_cycle(std::istream & in);
void write_cycle(std::ostream & out, std::span<const Vertex> cycle);

} // namespace cbias
