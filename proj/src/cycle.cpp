#include "cbias/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cbias {

HamiltonCycle::HamiltonCycle(const Graph & g, std::vector<Vertex> order) :
    order_(std::move(order)),
    position_(static_cast<std::size_t>(g.order()), -1)
{
    if (order_.size() < 3)
        throw InputError("a cycle needs at least three vertices");

    for (std::size_t i = 0; i < order_.size(); ++i) {
        Vertex v = order_[i];
        if (! g.contains(v))
            throw InputError("cycle vertex " + std::to_string(v) + " out of range");
        if (position_[v] != -1)
            throw InputError("cycle repeats vertex " + std::to_string(v));
        position_[v] = static_cast<int>(i);
    }

    for (int i = 0; i < length(); ++i)
        if (! g.has_edge(edge_at(i)))
            throw InputError("cycle uses non-edge (" + std::to_string(at(i)) + "," + std::to_string(at(i + 1)) + ")");
}

std::vector<Edge> HamiltonCycle::edges() const
{
    std::vector<Edge> result;
    result.reserve(order_.size());
    for (int i = 0; i < length(); ++i)
        result.push_back(edge_at(i));
    return result;
}

bool HamiltonCycle::contains_edge(const Edge & e) const
{
    if (! contains(e.u) || ! contains(e.v))
        return false;
    return successor(e.u) == e.v || successor(e.v) == e.u;
}

LinearForest::LinearForest(const Graph & g, std::vector<Edge> edges) :
    n_(g.order()),
    edges_(std::move(edges))
{
    std::vector<int> degree(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("linear forest repeats an edge");

    for (const auto & e : edges_) {
        if (! g.has_edge(e))
            throw InputError("forced edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
        if (++degree[e.u] > 2 || ++degree[e.v] > 2)
            throw InputError("forced edges give a vertex degree three");
        auto a = find(e.u), b = find(e.v);
        if (a == b)
            throw InputError("forced edges contain a cycle");
        parent[a] = b;
    }
}

std::vector<std::vector<Vertex>> LinearForest::paths() const
{
    std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(n_));
    for (const auto & e : edges_) {
        incident[e.u].push_back(e.v);
        incident[e.v].push_back(e.u);
    }

    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<std::vector<Vertex>> result;
    for (Vertex start = 0; start < n_; ++start) {
        if (seen[start] || incident[start].size() != 1)
            continue;
        std::vector<Vertex> path{start};
        seen[start] = true;
        Vertex prev = -1, cur = start;
        while (true) {
            Vertex next = -1;
            for (Vertex w : incident[cur])
                if (w != prev)
                    next = w;
            if (next == -1)
                break;
            path.push_back(next);
            seen[next] = true;
            prev = cur;
            cur = next;
        }
        result.push_back(std::move(path));
    }
    return result;
}

int ColourHistogram::total() const
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int ColourHistogram::max_count() const
{
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Colour ColourHistogram::witness() const
{
    return static_cast<Colour>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

ColourHistogram colour_histogram(const HamiltonCycle & h, const EdgeColouring & col)
{
    ColourHistogram hist{std::vector<int>(static_cast<std::size_t>(col.colours()), 0)};
    for (int i = 0; i < h.length(); ++i)
        ++hist.counts[col.colour(h.edge_at(i))];
    return hist;
}

bool is_t_unbalanced(const ColourHistogram & hist, int t)
{
    if (t < 0)
        throw InputError("unbalancedness threshold must be non-negative");
    long long r = static_cast<long long>(hist.counts.size());
    return r * hist.max_count() >= hist.total() + r * t;
}

bool is_t_unbalanced(const HamiltonCycle & h, const EdgeColouring & col, int t)
{
    return is_t_unbalanced(colour_histogram(h, col), t);
}

} // namespace cbias
