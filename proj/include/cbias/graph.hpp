#pragma once

#include "cbias/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cbias {

/// Unordered vertex pair, always stored with u < v.
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex w) const { return u == w || v == w; }
    bool shares_vertex_with(const Edge & other) const { return touches(other.u) || touches(other.v); }

    auto operator<=>(const Edge &) const = default;
};

/**
 * Undirected simple graph on vertices 0..n-1.
 *
 * Adjacency is kept twice: as sorted neighbour lists for iteration, and as a
 * dense bit matrix for constant-time adjacency tests. Graphs are immutable
 * once built.
 */
class Graph
{
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicates, or out-of-range endpoints.
    Graph(Vertex n, std::span<const Edge> edges);

    static Graph complete(Vertex n);

    Vertex order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    bool adjacent(Vertex a, Vertex b) const
    {
        if (! contains(a) || ! contains(b))
            return false;
        auto bit = static_cast<std::size_t>(b);
        return (bits_[static_cast<std::size_t>(a) * words_ + bit / 64] >> (bit % 64)) & 1U;
    }

    bool has_edge(const Edge & e) const { return adjacent(e.u, e.v); }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

private:
    Vertex n_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> bits_;
};

/// Minimum degree. Throws InputError on the empty graph.
int min_degree(const Graph & g);

/// A vertex of minimum degree (lowest id on ties).
Vertex min_degree_vertex(const Graph & g);

/// Induced subgraph on the vertices not in `removed`, relabelled densely in
/// ascending order of original id.
struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> original;    // new id -> old id
    std::vector<Vertex> relabel;     // old id -> new id, -1 if removed
};

InducedSubgraph remove_vertices(const Graph & g, std::span<const Vertex> removed);

} // namespace cbias
