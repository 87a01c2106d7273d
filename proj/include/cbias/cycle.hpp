#pragma once

#include "cbias/colouring.hpp"
#include "cbias/graph.hpp"

#include <span>
#include <vector>

namespace cbias {

/**
 * A cycle through distinct vertices of a graph, stored as a cyclic sequence
 * whose direction is the orientation used for successor/predecessor queries.
 *
 * It is a Hamilton cycle of the graph it was validated against when it
 * visits all n vertices, and in every case a Hamilton cycle of the subgraph
 * induced on its own vertices. Immutable.
 */
class HamiltonCycle
{
public:
    /// Throws InputError unless `order` has at least three distinct vertices
    /// of `g` and each cyclically consecutive pair is an edge of `g`.
    HamiltonCycle(const Graph & g, std::vector<Vertex> order);

    std::span<const Vertex> order() const { return order_; }
    int length() const { return static_cast<int>(order_.size()); }

    bool spans(const Graph & g) const { return length() == g.order(); }
    bool contains(Vertex v) const { return v >= 0 && v < static_cast<Vertex>(position_.size()) && position_[v] >= 0; }

    /// Position of `v` in the order; -1 if absent.
    int position(Vertex v) const { return contains(v) ? position_[v] : -1; }

    Vertex at(int i) const { return order_[static_cast<std::size_t>(wrap(i))]; }
    Vertex successor(Vertex v) const { return at(position(v) + 1); }
    Vertex predecessor(Vertex v) const { return at(position(v) - 1); }

    /// The edge from position i to position i + 1.
    Edge edge_at(int i) const { return Edge(at(i), at(i + 1)); }
    std::vector<Edge> edges() const;
    bool contains_edge(const Edge & e) const;

private:
    int wrap(int i) const
    {
        int k = length();
        return ((i % k) + k) % k;
    }

    std::vector<Vertex> order_;
    std::vector<int> position_;
};

/// Edges forming vertex-disjoint paths in a graph.
class LinearForest
{
public:
    LinearForest() = default;

    /// Throws InputError if an edge is missing from `g`, repeated, or the
    /// edges contain a vertex of degree three or a cycle.
    LinearForest(const Graph & g, std::vector<Edge> edges);

    std::span<const Edge> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    /// Each component as a vertex sequence starting at its lower-numbered
    /// end; components ordered by that end.
    std::vector<std::vector<Vertex>> paths() const;

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
};

struct ColourHistogram
{
    std::vector<int> counts;

    int total() const;
    int max_count() const;
    /// Lowest colour attaining the maximum.
    Colour witness() const;
};

ColourHistogram colour_histogram(const HamiltonCycle & h, const EdgeColouring & col);

/// True iff some colour appears on at least length/r + t cycle edges,
/// compared exactly as r * count >= length + r * t.
bool is_t_unbalanced(const ColourHistogram & hist, int t);
bool is_t_unbalanced(const HamiltonCycle & h, const EdgeColouring & col, int t);

} // namespace cbias
