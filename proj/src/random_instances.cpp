#include "cbias/random_instances.hpp"

#include <numeric>
#include <string>

namespace cbias {

namespace {

template <typename T>
void shuffle(std::vector<T> & items, Rng & rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[below(rng, i)]);
}

ColouredGraph colour_randomly(Graph g, int r, Rng & rng)
{
    auto col = EdgeColouring::by_rule(g, r, [&](const Edge &) { return static_cast<Colour>(below(rng, static_cast<std::uint64_t>(r))); });
    return {std::move(g), std::move(col)};
}

} // namespace

ColouredGraph random_complete(int n, int r, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("n must be positive");
    Rng rng(seed);
    return colour_randomly(Graph::complete(n), r, rng);
}

ColouredGraph random_dirac(int n, int r, int min_degree, std::uint64_t seed)
{
    if (n < 1 || min_degree < 0 || min_degree > n - 1)
        throw InputError("random_dirac needs 0 <= min_degree <= n - 1, got " + std::to_string(min_degree));

    Rng rng(seed);
    auto edges = Graph::complete(n).edges();
    shuffle(edges, rng);

    std::vector<int> degree(static_cast<std::size_t>(n), n - 1);
    std::vector<Edge> kept;
    for (const auto & e : edges) {
        if (degree[e.u] > min_degree && degree[e.v] > min_degree) {
            --degree[e.u];
            --degree[e.v];
        }
        else
            kept.push_back(e);
    }
    return colour_randomly(Graph(n, kept), r, rng);
}

LinearForest random_linear_forest(const Graph & g, int max_edges, Rng & rng)
{
    auto edges = g.edges();
    shuffle(edges, rng);

    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    std::vector<Edge> chosen;
    for (const auto & e : edges) {
        if (static_cast<int>(chosen.size()) >= max_edges)
            break;
        if (degree[e.u] == 2 || degree[e.v] == 2 || find(e.u) == find(e.v))
            continue;
        ++degree[e.u];
        ++degree[e.v];
        parent[find(e.u)] = find(e.v);
        chosen.push_back(e);
    }
    return LinearForest(g, std::move(chosen));
}

} // namespace cbias
