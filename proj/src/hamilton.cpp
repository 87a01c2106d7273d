#include "cbias/hamilton.hpp"

#include <algorithm>
#include <string>

namespace cbias {

namespace {

void require_dirac(const Graph & g, int slack)
{
    if (g.order() < 3)
        throw HypothesisError("a Hamilton cycle needs at least three vertices");
    Vertex worst = min_degree_vertex(g);
    if (2 * g.degree(worst) < g.order() + 2 * slack)
        throw HypothesisError("vertex " + std::to_string(worst) + " has degree " + std::to_string(g.degree(worst))
                + ", need 2 * degree >= " + std::to_string(g.order() + 2 * slack),
            worst);
}

// Appends lowest-numbered unused neighbours of path.back() until none is left.
void extend_tail(const Graph & g, std::vector<Vertex> & path, std::vector<bool> & used, StepCounter & counter)
{
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex w : g.neighbours(path.back())) {
            ++counter.steps;
            if (! used[w]) {
                used[w] = true;
                path.push_back(w);
                grew = true;
                break;
            }
        }
    }
}

// Turns a path whose two ends have all their neighbours on it into a cycle
// on the same vertex set.
std::vector<Vertex> close_path(const Graph & g, const std::vector<Vertex> & path, StepCounter & counter)
{
    auto k = path.size() - 1;
    ++counter.steps;
    if (g.adjacent(path.front(), path.back()))
        return path;

    for (std::size_t i = 0; i + 1 <= k; ++i) {
        counter.steps += 2;
        if (g.adjacent(path.front(), path[i + 1]) && g.adjacent(path.back(), path[i])) {
            std::vector<Vertex> cycle(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            cycle.insert(cycle.end(), path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(i) - 1);
            return cycle;
        }
    }
    throw InternalError("no crossing pair closes the path of length " + std::to_string(path.size()));
}

} // namespace

HamiltonCycle dirac_hamilton(const Graph & g, StepCounter & counter)
{
    require_dirac(g, 0);

    auto n = static_cast<std::size_t>(g.order());
    std::vector<bool> used(n, false);
    std::vector<Vertex> path{0};
    used[0] = true;

    while (true) {
        extend_tail(g, path, used, counter);
        std::reverse(path.begin(), path.end());
        extend_tail(g, path, used, counter);

        auto cycle = close_path(g, path, counter);
        if (cycle.size() == n)
            return HamiltonCycle(g, std::move(cycle));

        // Open the cycle next to an outside vertex: u, c[j], c[j+1], ..., c[j-1].
        bool reopened = false;
        for (Vertex u = 0; u < g.order() && ! reopened; ++u) {
            if (used[u])
                continue;
            for (std::size_t j = 0; j < cycle.size(); ++j) {
                ++counter.steps;
                if (g.adjacent(u, cycle[j])) {
                    path.assign({u});
                    for (std::size_t s = 0; s < cycle.size(); ++s)
                        path.push_back(cycle[(j + s) % cycle.size()]);
                    used[u] = true;
                    reopened = true;
                    break;
                }
            }
        }
        if (! reopened)
            throw InternalError("graph satisfying the degree condition is disconnected");
    }
}

HamiltonCycle dirac_hamilton(const Graph & g)
{
    StepCounter counter;
    return dirac_hamilton(g, counter);
}

HamiltonCycle posa_forced_hamilton(const Graph & g, const LinearForest & forced, int t, StepCounter & counter)
{
    auto n = g.order();
    if (t < 1 || 2 * t > n)
        throw InputError("slack t = " + std::to_string(t) + " must satisfy 1 <= t <= n/2 for n = " + std::to_string(n));
    if (forced.size() > static_cast<std::size_t>(2 * t))
        throw InputError(std::to_string(forced.size()) + " forced edges exceed 2t = " + std::to_string(2 * t));
    for (const auto & e : forced.edges())
        if (! g.has_edge(e))
            throw InputError("forced edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    require_dirac(g, t);

    std::vector<std::vector<Vertex>> mates(static_cast<std::size_t>(n));
    for (const auto & e : forced.edges()) {
        mates[e.u].push_back(e.v);
        mates[e.v].push_back(e.u);
    }
    auto is_forced = [&](Vertex a, Vertex b) { return std::find(mates[a].begin(), mates[a].end(), b) != mates[a].end(); };

    // Segments: forced paths, then every uncovered vertex on its own.
    auto segments = forced.paths();
    for (Vertex v = 0; v < n; ++v)
        if (mates[v].empty())
            segments.push_back({v});

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> placed(segments.size(), false);
    for (std::size_t chained = 0; chained < segments.size(); ++chained) {
        std::size_t pick = segments.size();
        bool flip = false;
        for (std::size_t s = 0; s < segments.size() && ! order.empty(); ++s) {
            if (placed[s])
                continue;
            counter.steps += 2;
            if (g.adjacent(order.back(), segments[s].front())) {
                pick = s;
                break;
            }
            if (g.adjacent(order.back(), segments[s].back())) {
                pick = s;
                flip = true;
                break;
            }
        }
        if (pick == segments.size())
            pick = static_cast<std::size_t>(std::find(placed.begin(), placed.end(), false) - placed.begin());
        placed[pick] = true;
        if (flip)
            order.insert(order.end(), segments[pick].rbegin(), segments[pick].rend());
        else
            order.insert(order.end(), segments[pick].begin(), segments[pick].end());
    }

    auto size = static_cast<std::size_t>(n);
    std::vector<Vertex> path(size);
    std::size_t scan_from = 0;
    while (true) {
        // Next cyclic pair that is not an edge of g.
        std::size_t gap = size;
        for (std::size_t s = 0; s < size; ++s) {
            auto j = (scan_from + s) % size;
            ++counter.steps;
            if (! g.adjacent(order[j], order[(j + 1) % size])) {
                gap = j;
                break;
            }
        }
        if (gap == size)
            break;

        // Read as the path q[0] = order[gap+1], ..., q[n-1] = order[gap].
        for (std::size_t s = 0; s < size; ++s)
            path[s] = order[(gap + 1 + s) % size];

        auto first = path.front(), last = path.back();
        std::size_t pivot = size;
        for (std::size_t i = 1; i + 2 < size; ++i) {
            counter.steps += 2;
            if (g.adjacent(first, path[i + 1]) && g.adjacent(last, path[i]) && ! is_forced(path[i], path[i + 1])) {
                pivot = i;
                break;
            }
        }
        if (pivot == size)
            throw InternalError("no unforced crossing pair for missing edge (" + std::to_string(first) + ","
                + std::to_string(last) + ")");

        // q0, q[i+1], ..., q[n-1], q[i], q[i-1], ..., q1
        order.clear();
        order.push_back(path[0]);
        order.insert(order.end(), path.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, path.end());
        for (auto i = pivot; i >= 1; --i)
            order.push_back(path[i]);
        scan_from = 0;
    }

    HamiltonCycle cycle(g, std::move(order));
    for (const auto & e : forced.edges())
        if (! cycle.contains_edge(e))
            throw InternalError("forced edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") lost during repair");
    return cycle;
}

HamiltonCycle posa_forced_hamilton(const Graph & g, const LinearForest & forced, int t)
{
    StepCounter counter;
    return posa_forced_hamilton(g, forced, t, counter);
}

HamiltonCycle insert_vertex(const Graph & g, const HamiltonCycle & h, Vertex v, const Edge & base)
{
    if (! h.contains_edge(base))
        throw InputError("base (" + std::to_string(base.u) + "," + std::to_string(base.v) + ") is not a cycle edge");
    if (! g.contains(v) || h.contains(v))
        throw InputError("vertex " + std::to_string(v) + " is already on the cycle or out of range");
    if (! g.adjacent(v, base.u) || ! g.adjacent(v, base.v))
        throw InputError("vertex " + std::to_string(v) + " does not form a triangle with its base");

    auto order = h.order();
    auto tail = h.successor(base.u) == base.v ? base.u : base.v;
    auto split = static_cast<std::size_t>(h.position(tail)) + 1;

    std::vector<Vertex> result(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split));
    result.push_back(v);
    result.insert(result.end(), order.begin() + static_cast<std::ptrdiff_t>(split), order.end());
    return HamiltonCycle(g, std::move(result));
}

} // namespace cbias
