#include "support.hpp"

#include "cbias/bias_finder.hpp"
#include "cbias/hamilton.hpp"
#include "cbias/oracle.hpp"
#include "cbias/random_instances.hpp"

#include <doctest.h>

using namespace cbias;
using cbias::testing::cycle_graph;

namespace {

bool valid(const Graph & g, const HamiltonCycle & h)
{
    auto col = EdgeColouring::by_rule(g, 2, [](const Edge &) { return 0; });
    std::vector<Vertex> order(h.order().begin(), h.order().end());
    return verify_solution(g, col, order, 0).ok();
}

} // namespace

TEST_CASE("dirac_hamilton on small graphs")
{
    auto k4 = Graph::complete(4);
    CHECK(valid(k4, dirac_hamilton(k4)));

    auto c4 = cycle_graph(4);
    auto h = dirac_hamilton(c4);
    CHECK(h.contains_edge(Edge(0, 1)));
    CHECK(h.contains_edge(Edge(1, 2)));
    CHECK(h.contains_edge(Edge(2, 3)));
    CHECK(h.contains_edge(Edge(0, 3)));
}

TEST_CASE("dirac_hamilton is deterministic")
{
    auto [g, col] = random_dirac(30, 2, 15, 5);
    auto a = dirac_hamilton(g), b = dirac_hamilton(g);
    CHECK(std::vector<Vertex>(a.order().begin(), a.order().end()) == std::vector<Vertex>(b.order().begin(), b.order().end()));
}

TEST_CASE("dirac_hamilton reports the failing vertex")
{
    auto c5 = cycle_graph(5); // 2 * 2 < 5
    try {
        dirac_hamilton(c5);
        FAIL("expected HypothesisError");
    }
    catch (const HypothesisError & e) {
        REQUIRE(e.vertex().has_value());
        CHECK(c5.degree(*e.vertex()) == 2);
    }
    CHECK_THROWS_AS(dirac_hamilton(Graph::complete(2)), HypothesisError);
}

TEST_CASE("dirac_hamilton on 50 seeded graphs with n = 50, min degree 25")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto [g, col] = random_dirac(50, 2, 25, seed);
        REQUIRE(min_degree(g) >= 25);
        CHECK(valid(g, dirac_hamilton(g)));
    }
}

TEST_CASE("dirac_hamilton at the exact threshold across sizes")
{
    for (int n = 3; n <= 61; ++n)
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            auto [g, col] = random_dirac(n, 2, (n + 1) / 2, seed * 1000 + static_cast<std::uint64_t>(n));
            CHECK(valid(g, dirac_hamilton(g)));
        }

    // K_{m,m} is the tight case for even n.
    for (int m = 2; m <= 20; ++m) {
        std::vector<Edge> edges;
        for (int a = 0; a < m; ++a)
            for (int b = m; b < 2 * m; ++b)
                edges.emplace_back(a, b);
        Graph g(2 * m, edges);
        CHECK(valid(g, dirac_hamilton(g)));
    }
}

TEST_CASE("posa_forced_hamilton: K6 with two forced edges")
{
    auto k6 = Graph::complete(6);

    // Exhaustive reference: all 60 Hamilton cycles, some of which use both edges.
    auto all = enumerate_hamilton_cycles(k6);
    REQUIRE(all.size() == 60);
    int through_both = 0;
    for (const auto & c : all) {
        HamiltonCycle h(k6, c);
        through_both += h.contains_edge(Edge(0, 1)) && h.contains_edge(Edge(2, 3));
    }
    CHECK(through_both > 0);

    LinearForest forced(k6, {{0, 1}, {2, 3}});
    auto h = posa_forced_hamilton(k6, forced, 1);
    CHECK(valid(k6, h));
    CHECK(h.contains_edge(Edge(0, 1)));
    CHECK(h.contains_edge(Edge(2, 3)));
}

TEST_CASE("posa_forced_hamilton with nothing forced")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto [g, col] = random_dirac(41, 2, 22, seed);
        CHECK(valid(g, posa_forced_hamilton(g, LinearForest(g, {}), 1)));
    }
}

TEST_CASE("posa_forced_hamilton rejects bad inputs")
{
    auto k6 = Graph::complete(6);
    LinearForest one(k6, {{0, 1}});
    LinearForest three(k6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(posa_forced_hamilton(k6, one, 0), InputError);
    CHECK_THROWS_AS(posa_forced_hamilton(k6, one, 4), InputError);
    CHECK_THROWS_AS(posa_forced_hamilton(k6, three, 1), InputError);

    auto c6 = cycle_graph(6);
    CHECK_THROWS_AS(posa_forced_hamilton(c6, LinearForest(c6, {{0, 1}}), 1), HypothesisError);
    // forest built for another graph
    CHECK_THROWS_AS(posa_forced_hamilton(c6, LinearForest(k6, {{0, 3}}), 3), InputError);
}

TEST_CASE("posa_forced_hamilton fuzz at the exact degree threshold")
{
    Rng rng(2024);
    int runs = 0;
    for (int n = 6; n <= 48; ++n)
        for (int t = 1; 2 * t <= n && t <= 6; ++t)
            for (int rep = 0; rep < 6; ++rep) {
                int need = (n + 2 * t + 1) / 2;
                if (need > n - 1)
                    continue;
                auto [g, col] = random_dirac(n, 2, need, rng());
                auto forced = random_linear_forest(g, 2 * t, rng);
                StepCounter counter;
                auto h = posa_forced_hamilton(g, forced, t, counter);
                REQUIRE(valid(g, h));
                for (const auto & e : forced.edges())
                    REQUIRE(h.contains_edge(e));
                ++runs;
            }
    CHECK(runs > 1000);
}

TEST_CASE("posa_forced_hamilton agrees with exhaustive search on small graphs")
{
    Rng rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(below(rng, 5));
        int t = 1 + static_cast<int>(below(rng, 2));
        auto [g, col] = random_dirac(n, 2, std::min(n - 1, (n + 2 * t + 1) / 2), rng());
        auto forced = random_linear_forest(g, 2 * t, rng);

        int witnesses = 0;
        for (const auto & c : enumerate_hamilton_cycles(g)) {
            HamiltonCycle h(g, c);
            witnesses += std::all_of(forced.edges().begin(), forced.edges().end(), [&](const Edge & e) { return h.contains_edge(e); });
        }
        REQUIRE(witnesses > 0);

        auto h = posa_forced_hamilton(g, forced, t);
        for (const auto & e : forced.edges())
            CHECK(h.contains_edge(e));
    }
}

TEST_CASE("insert_vertex")
{
    auto k5 = Graph::complete(5);
    HamiltonCycle h(k5, {0, 1, 2, 3});
    auto bigger = insert_vertex(k5, h, 4, Edge(0, 1));
    CHECK(std::vector<Vertex>(bigger.order().begin(), bigger.order().end()) == std::vector<Vertex>{0, 4, 1, 2, 3});

    // base given against the cycle direction
    auto other = insert_vertex(k5, h, 4, Edge(3, 0));
    CHECK(std::vector<Vertex>(other.order().begin(), other.order().end()) == std::vector<Vertex>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(insert_vertex(k5, h, 4, Edge(0, 2)), InputError);
    CHECK_THROWS_AS(insert_vertex(k5, h, 2, Edge(0, 1)), InputError);

    auto sparse = cycle_graph(5);
    HamiltonCycle almost(Graph::complete(5), {0, 1, 2, 3});
    CHECK_THROWS_AS(insert_vertex(sparse, almost, 4, Edge(1, 2)), InputError);
}

TEST_CASE("insert then contract restores the edge set")
{
    auto k7 = Graph::complete(7);
    HamiltonCycle h(k7, {0, 1, 2, 3, 4, 5});
    for (int i = 0; i < h.length(); ++i) {
        auto bigger = insert_vertex(k7, h, 6, h.edge_at(i));
        CHECK(bigger.length() == 7);

        std::vector<Vertex> contracted;
        for (Vertex v : bigger.order())
            if (v != 6)
                contracted.push_back(v);
        auto edges = HamiltonCycle(k7, contracted).edges();
        auto original = h.edges();
        std::sort(edges.begin(), edges.end());
        std::sort(original.begin(), original.end());
        CHECK(edges == original);
    }
}

TEST_CASE("insert_vertex changes colour counts by net, for every colouring of the triangle")
{
    // Host: cycle 0..5 plus a vertex 6 adjacent to 0 and 1.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}};
    Graph g(7, edges);
    HamiltonCycle h(g, {0, 1, 2, 3, 4, 5});

    for (int r = 2; r <= 4; ++r)
        for (int code = 0; code < r * r * r; ++code) {
            int c01 = code % r, c60 = (code / r) % r, c61 = code / (r * r);
            auto col = EdgeColouring::by_rule(g, r, [&](const Edge & e) {
                if (e == Edge(0, 1))
                    return c01;
                if (e == Edge(6, 0))
                    return c60;
                if (e == Edge(6, 1))
                    return c61;
                return e.u % r;
            });

            auto before = colour_histogram(h, col);
            auto after = colour_histogram(insert_vertex(g, h, 6, Edge(0, 1)), col);
            for (Colour c = 0; c < r; ++c)
                CHECK(after.counts[c] - before.counts[c] == net(col, c, 6, Edge(0, 1)));
        }
}
