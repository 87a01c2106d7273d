#include "cbias/graph.hpp"

#include <algorithm>
#include <string>

namespace cbias {

Graph::Graph(Vertex n, std::span<const Edge> edges) :
    n_(n)
{
    if (n < 0)
        throw InputError("negative vertex count");

    auto size = static_cast<std::size_t>(n);
    words_ = (size + 63) / 64;
    adjacency_.resize(size);
    bits_.assign(size * words_, 0);

    for (const auto & e : edges) {
        if (! contains(e.u) || ! contains(e.v))
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (adjacent(e.u, e.v))
            throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");

        auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        adjacency_[u].push_back(e.v);
        adjacency_[v].push_back(e.u);
        ++edge_count_;
    }

    for (auto & row : adjacency_)
        std::sort(row.begin(), row.end());
}

Graph Graph::complete(Vertex n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbours(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

Vertex min_degree_vertex(const Graph & g)
{
    if (g.order() == 0)
        throw InputError("the empty graph has no minimum degree");

    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best))
            best = v;
    return best;
}

int min_degree(const Graph & g)
{
    return g.degree(min_degree_vertex(g));
}

InducedSubgraph remove_vertices(const Graph & g, std::span<const Vertex> removed)
{
    InducedSubgraph result;
    result.relabel.assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) {
        if (! g.contains(v))
            throw InputError("cannot remove vertex " + std::to_string(v) + ": not in graph");
        result.relabel[static_cast<std::size_t>(v)] = -1;
    }

    for (Vertex v = 0; v < g.order(); ++v)
        if (result.relabel[static_cast<std::size_t>(v)] != -1) {
            result.relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.original.size());
            result.original.push_back(v);
        }

    std::vector<Edge> edges;
    for (const auto & e : g.edges()) {
        auto a = result.relabel[static_cast<std::size_t>(e.u)], b = result.relabel[static_cast<std::size_t>(e.v)];
        if (a != -1 && b != -1)
            edges.emplace_back(a, b);
    }
    result.graph = Graph(static_cast<Vertex>(result.original.size()), edges);
    return result;
}

} // namespace cbias
