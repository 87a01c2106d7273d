#pragma once

#include "cbias/colouring.hpp"
#include "cbias/cycle.hpp"

#include <cstdint>
#include <random>

namespace cbias {

// Seeded instance generators. Only raw mt19937_64 output is consumed (no
// std distributions), so instances are identical across standard libraries.

using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, bound); modulo bias is negligible for the
/// bounds used here.
inline std::uint64_t below(Rng & rng, std::uint64_t bound)
{
    return rng() % bound;
}

/// K_n with each edge coloured uniformly at random, edges visited in
/// lexicographic order.
ColouredGraph random_complete(int n, int r, std::uint64_t seed);

/// Starts from K_n and deletes edges in a random order whenever both ends
/// stay above `min_degree`; colours the survivors uniformly at random.
/// The result has minimum degree >= min_degree.
ColouredGraph random_dirac(int n, int r, int min_degree, std::uint64_t seed);

/// Greedy random linear forest in `g` with at most `max_edges` edges.
LinearForest random_linear_forest(const Graph & g, int max_edges, Rng & rng);

} // namespace cbias
