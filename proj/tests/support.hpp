#pragma once

// Shared helpers for the unit suites. Nothing here calls into the code
// under test beyond the basic types.

#include "cbias/colouring.hpp"
#include "cbias/cycle.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <set>
#include <vector>

namespace cbias::testing {

inline ColouredGraph coloured(int n, int r, std::initializer_list<std::array<int, 3>> rows)
{
    std::vector<Edge> edges;
    std::vector<ColouredEdge> assignment;
    for (auto [u, v, c] : rows) {
        edges.emplace_back(u, v);
        assignment.push_back({Edge(u, v), c});
    }
    Graph g(n, edges);
    EdgeColouring col(g, r, assignment);
    return {std::move(g), std::move(col)};
}

inline Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

/// Every Hamilton cycle of g by trying all orderings of 1..n-1 after 0,
/// keeping one orientation (second < last). Independent of the oracle DFS.
inline std::set<std::vector<Vertex>> brute_force_cycles(const Graph & g)
{
    std::set<std::vector<Vertex>> result;
    int n = g.order();
    if (n < 3)
        return result;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order[1] > order.back())
            continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = g.adjacent(order[i], order[(i + 1) % n]);
        if (ok)
            result.insert(order);
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return result;
}

/// Colour counts of a raw cyclic vertex sequence.
inline std::vector<int> counts_of(const EdgeColouring & col, const std::vector<Vertex> & cycle)
{
    std::vector<int> counts(static_cast<std::size_t>(col.colours()), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        ++counts[col.colour(cycle[i], cycle[(i + 1) % cycle.size()])];
    return counts;
}

} // namespace cbias::testing
