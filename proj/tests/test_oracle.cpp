#include "support.hpp"

#include "cbias/extremal.hpp"
#include "cbias/oracle.hpp"
#include "cbias/random_instances.hpp"

#include <doctest.h>

using namespace cbias;
using cbias::testing::brute_force_cycles;
using cbias::testing::counts_of;
using cbias::testing::cycle_graph;

TEST_CASE("enumeration counts")
{
    CHECK(enumerate_hamilton_cycles(Graph::complete(4)).size() == 3);
    CHECK(enumerate_hamilton_cycles(cycle_graph(5)).size() == 1);
    CHECK(enumerate_hamilton_cycles(Graph::complete(5)).size() == 12);
    CHECK(enumerate_hamilton_cycles(Graph(5, {})).empty());

    std::uint64_t expected = 1; // (n - 1)! / 2
    for (int n = 3; n <= 9; ++n) {
        if (n > 3)
            expected *= static_cast<std::uint64_t>(n - 1);
        std::uint64_t count = 0;
        for_each_hamilton_cycle(Graph::complete(n), 14, [&](std::span<const Vertex>) { ++count; });
        CHECK(count == expected);
    }
}

TEST_CASE("enumeration output is canonical and matches brute force")
{
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(below(rng, 5));
        auto [g, col] = random_dirac(n, 2, static_cast<int>(below(rng, static_cast<std::uint64_t>(n))), rng());
        auto cycles = enumerate_hamilton_cycles(g);
        for (const auto & c : cycles) {
            CHECK(c.front() == 0);
            CHECK(c[1] < c.back());
            CHECK(verify_solution(g, col, c, 0).ok());
        }
        CHECK(std::is_sorted(cycles.begin(), cycles.end()));
        CHECK(std::set<std::vector<Vertex>>(cycles.begin(), cycles.end()) == brute_force_cycles(g));
    }
}

TEST_CASE("size guard")
{
    CHECK_THROWS_AS(enumerate_hamilton_cycles(Graph::complete(15)), SizeError);
    CHECK_THROWS_AS(enumerate_hamilton_cycles(Graph::complete(10), 9), SizeError);
    auto [g, col] = build_layered(3, 12);
    CHECK_THROWS_AS(bias_landscape(g, col, 11), SizeError);
}

TEST_CASE("bias_landscape")
{
    SUBCASE("layered r = 2, n = 8")
    {
        auto [g, col] = build_layered(2, 8);
        auto landscape = bias_landscape(g, col);
        CHECK(landscape.max_count == 4);
        CHECK(landscape.vectors == std::set<std::vector<int>>{{4, 4}});
    }
    SUBCASE("turan3 n = 6")
    {
        auto [g, col] = build_turan3(6);
        CHECK(bias_landscape(g, col).vectors == std::set<std::vector<int>>{{2, 2, 2}});
    }
    SUBCASE("monochromatic K5")
    {
        auto k5 = Graph::complete(5);
        auto col = EdgeColouring::by_rule(k5, 2, [](const Edge &) { return 0; });
        auto landscape = bias_landscape(k5, col);
        CHECK(landscape.max_count == 5);
        CHECK(landscape.cycle_count == 12);
        CHECK(landscape.vectors == std::set<std::vector<int>>{{5, 0}});
    }
    SUBCASE("not Hamiltonian")
    {
        Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
        auto col = EdgeColouring::by_rule(g, 2, [](const Edge &) { return 1; });
        auto landscape = bias_landscape(g, col);
        CHECK_FALSE(landscape.hamiltonian());
        CHECK(landscape.vectors.empty());
        CHECK(format_landscape(landscape) == "4 2 0 0\nnot Hamiltonian\n");
    }
    SUBCASE("independent of how the work is split")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto [g, col] = random_complete(9, 3, seed);
            BiasLandscape sequential;
            for_each_hamilton_cycle(g, 14, [&](std::span<const Vertex> c) {
                auto counts = counts_of(col, std::vector<Vertex>(c.begin(), c.end()));
                ++sequential.cycle_count;
                sequential.max_count = std::max(sequential.max_count, *std::max_element(counts.begin(), counts.end()));
                sequential.vectors.insert(counts);
            });
            auto parallel = bias_landscape(g, col);
            CHECK(parallel.cycle_count == sequential.cycle_count);
            CHECK(parallel.max_count == sequential.max_count);
            CHECK(parallel.vectors == sequential.vectors);
        }
    }
}

TEST_CASE("format_landscape")
{
    auto [g, col] = build_turan3(6);
    auto count = brute_force_cycles(g).size();
    CHECK(format_landscape(bias_landscape(g, col)) == "6 3 " + std::to_string(count) + " 2\n2 2 2\n");
}

TEST_CASE("verify_solution")
{
    auto [g, col] = build_layered(2, 8);
    std::vector<Vertex> good{0, 2, 3, 4, 1, 5, 6, 7};
    CHECK(verify_solution(g, col, good, 0).ok());

    auto bias = verify_solution(g, col, good, 1);
    CHECK(bias.reason == VerifyReason::insufficient_bias);
    CHECK(std::string(reason_name(bias.reason)) == "insufficient bias");

    CHECK(verify_solution(g, col, std::vector<Vertex>{0, 2, 3, 4, 1, 5, 6}, 0).reason == VerifyReason::wrong_length);
    CHECK(verify_solution(g, col, std::vector<Vertex>{0, 2, 3, 4, 1, 5, 6, 6}, 0).reason == VerifyReason::not_a_permutation);
    CHECK(verify_solution(g, col, std::vector<Vertex>{0, 2, 3, 4, 1, 5, 6, 8}, 0).reason == VerifyReason::not_a_permutation);
    // 0 and 1 are both in V1, hence not adjacent
    CHECK(verify_solution(g, col, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}, 0).reason == VerifyReason::non_edge);

    auto k5 = Graph::complete(5);
    auto mono = EdgeColouring::by_rule(k5, 2, [](const Edge &) { return 0; });
    CHECK(verify_solution(k5, mono, std::vector<Vertex>{4, 3, 2, 1, 0}, 2).ok());
}
