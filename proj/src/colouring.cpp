#include "cbias/colouring.hpp"

#include <string>

namespace cbias {

EdgeColouring::EdgeColouring(const Graph & g, int colours, std::span<const ColouredEdge> assignment) :
    n_(g.order()),
    r_(colours)
{
    if (colours < 2 || colours > 127)
        throw InputError("number of colours must lie in [2, 127], got " + std::to_string(colours));

    table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), no_colour);
    std::size_t assigned = 0;
    for (const auto & [e, c] : assignment) {
        if (! g.has_edge(e))
            throw InputError("colour given for non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (c < 0 || c >= colours)
            throw InputError("colour " + std::to_string(c) + " out of range for r = " + std::to_string(colours));

        auto & slot = table_[static_cast<std::size_t>(e.u) * n_ + e.v];
        if (slot != no_colour)
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") coloured twice");
        slot = static_cast<std::int8_t>(c);
        table_[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<std::int8_t>(c);
        ++assigned;
    }

    if (assigned != g.edge_count())
        throw InputError("colouring is not total: " + std::to_string(g.edge_count() - assigned) + " edges uncoloured");
}

Colour EdgeColouring::colour(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw InputError("colour query out of range");
    auto c = table_[static_cast<std::size_t>(a) * n_ + b];
    if (c == no_colour)
        throw InputError("colour query on non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return c;
}

} // namespace cbias
