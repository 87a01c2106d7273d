#pragma once

#include "cbias/cycle.hpp"
#include "cbias/graph.hpp"

#include <cstdint>

namespace cbias {

/// Work counter for the engines: one step per adjacency probe or scanned
/// cycle slot. Used for the polynomial-time smoke checks.
struct StepCounter
{
    std::uint64_t steps = 0;
};

/**
 * Hamilton cycle of a graph with 2 * min_degree >= n, n >= 3.
 *
 * Rotation-extension: grow a path greedily from both ends using the
 * lowest-numbered unused neighbour; once both ends are stuck, close it into
 * a cycle through a crossing pair p0 ~ p[i+1], pk ~ p[i] (the smallest such
 * i); if vertices remain, open the cycle next to the lowest-numbered outside
 * vertex that has a neighbour on it and continue.
 *
 * Throws HypothesisError (carrying a minimum-degree vertex) when the degree
 * condition fails, InternalError if the construction ever gets stuck.
 */
HamiltonCycle dirac_hamilton(const Graph & g, StepCounter & counter);
HamiltonCycle dirac_hamilton(const Graph & g);

/**
 * Hamilton cycle of `g` containing every edge of `forced`, given
 * 1 <= t <= n/2, |forced| <= 2t and 2 * min_degree >= n + 2t.
 *
 * The forced paths and the remaining vertices are first chained into a
 * cyclic order greedily; consecutive pairs that are not edges of `g` are
 * then removed one at a time. For a missing pair, the order is read as a
 * path q1..qn with q1, qn the non-adjacent ends, and rotated through the
 * smallest i with q1 ~ q[i+1], qn ~ q[i] and q[i]q[i+1] unforced. The
 * degree sum d(q1) + d(qn) >= n + 2t leaves at least 2t + 1 crossing
 * indices, so one always avoids the forced edges; each repair removes one
 * missing pair and never touches a forced edge.
 */
HamiltonCycle posa_forced_hamilton(const Graph & g, const LinearForest & forced, int t, StepCounter & counter);
HamiltonCycle posa_forced_hamilton(const Graph & g, const LinearForest & forced, int t);

/// Replaces the cycle edge `base` = xy by xv, vy. `v` must be off the cycle
/// and adjacent to both ends of `base`.
HamiltonCycle insert_vertex(const Graph & g, const HamiltonCycle & h, Vertex v, const Edge & base);

} // namespace cbias
