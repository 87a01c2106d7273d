#pragma once

#include "cbias/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cbias {

using Colour = int;

struct ColouredEdge
{
    Edge edge;
    Colour colour = 0;
};

/**
 * Total assignment of colours 0..r-1 to the edges of a graph. Colours are
 * stored in a dense n x n table; querying a non-edge is an InputError.
 */
class EdgeColouring
{
public:
    EdgeColouring() = default;

    /// Every edge of `g` must appear in `assignment` exactly once, and
    /// nothing else may.
    EdgeColouring(const Graph & g, int colours, std::span<const ColouredEdge> assignment);

    /// Colours every edge of `g` with `rule(edge)`.
    template <typename Rule>
    static EdgeColouring by_rule(const Graph & g, int colours, Rule && rule)
    {
        std::vector<ColouredEdge> assignment;
        assignment.reserve(g.edge_count());
        for (const auto & e : g.edges())
            assignment.push_back({e, rule(e)});
        return EdgeColouring(g, colours, assignment);
    }

    int colours() const { return r_; }
    Vertex order() const { return n_; }

    /// True iff {a, b} is an edge of the underlying graph.
    bool covers(Vertex a, Vertex b) const
    {
        return a >= 0 && b >= 0 && a < n_ && b < n_ && table_[static_cast<std::size_t>(a) * n_ + b] != no_colour;
    }

    Colour colour(Vertex a, Vertex b) const;
    Colour colour(const Edge & e) const { return colour(e.u, e.v); }

    /// 1 if `e` has colour `c`, else 0.
    int indicator(Colour c, const Edge & e) const { return colour(e) == c ? 1 : 0; }

private:
    static constexpr std::int8_t no_colour = -1;

    Vertex n_ = 0;
    int r_ = 0;
    std::vector<std::int8_t> table_;
};

/// A graph together with a colouring of its edges; the unit the text file
/// format and the generators deal in.
struct ColouredGraph
{
    Graph graph;
    EdgeColouring colouring;
};

} // namespace cbias
