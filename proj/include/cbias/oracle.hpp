#pragma once

#include "cbias/colouring.hpp"
#include "cbias/graph.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cbias {

inline constexpr int default_enumeration_limit = 14;

/**
 * Calls `visit` once per Hamilton cycle of `g`, up to rotation and
 * reflection. Each cycle is handed over in canonical form: it starts at
 * vertex 0 and its second vertex is smaller than its last. Cycles arrive
 * in lexicographic order.
 *
 * Throws SizeError if n exceeds `limit` (or 63, the bitmask width).
 */
void for_each_hamilton_cycle(const Graph & g, int limit, const std::function<void(std::span<const Vertex>)> & visit);

std::vector<std::vector<Vertex>> enumerate_hamilton_cycles(const Graph & g, int limit = default_enumeration_limit);

struct BiasLandscape
{
    int n = 0;
    int colours = 0;
    std::uint64_t cycle_count = 0;
    /// Largest single colour count over all Hamilton cycles; 0 if none.
    int max_count = 0;
    /// Every colour-count vector realised by some Hamilton cycle.
    std::set<std::vector<int>> vectors;

    bool hamiltonian() const { return cycle_count > 0; }
};

/// Exhaustive colour-count census. Work is split by the second cycle vertex
/// and run concurrently; the merged result does not depend on the split.
BiasLandscape bias_landscape(const Graph & g, const EdgeColouring & col, int limit = default_enumeration_limit);

/// "n r cycles max" on the first line, then one sorted vector per line, or
/// the line "not Hamiltonian".
std::string format_landscape(const BiasLandscape & landscape);

enum class VerifyReason { ok, wrong_length, not_a_permutation, non_edge, insufficient_bias };

const char * reason_name(VerifyReason reason);

struct Verdict
{
    VerifyReason reason = VerifyReason::ok;
    std::string detail;

    bool ok() const { return reason == VerifyReason::ok; }
    explicit operator bool() const { return ok(); }
};

/// Checks that `cycle` is a Hamilton cycle of `g` and is t-unbalanced under
/// `col`, independently of the HamiltonCycle type. O(n).
Verdict verify_solution(const Graph & g, const EdgeColouring & col, std::span<const Vertex> cycle, int t);

} // namespace cbias
