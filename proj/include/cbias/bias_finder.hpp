#pragma once

#include "cbias/colouring.hpp"
#include "cbias/cycle.hpp"
#include "cbias/graph.hpp"
#include "cbias/hamilton.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cbias {

/**
 * Net_c(apex, base): change in the number of colour-c edges when `apex` is
 * spliced into a cycle across `base` = xy, i.e. L_c(apex x) + L_c(apex y)
 * - L_c(xy). Throws InputError unless apex, x, y span a triangle.
 */
int net(const EdgeColouring & col, Colour c, Vertex apex, const Edge & base);

/// Cycle edges xy of `h` with v ~ x and v ~ y, found by intersecting the
/// neighbourhood of v with the successors of its neighbourhood. Scans the
/// cycle in its own direction starting from vertex 0's position.
std::vector<Edge> chord_triangles(const Graph & g, const HamiltonCycle & h, Vertex v);

/// Vertices already claimed by switch candidates.
class ExclusionSet
{
public:
    explicit ExclusionSet(Vertex n) : member_(static_cast<std::size_t>(n), false) {}

    bool contains(Vertex v) const { return member_[static_cast<std::size_t>(v)]; }
    bool touches(const Edge & e) const { return contains(e.u) || contains(e.v); }
    std::size_t size() const { return size_; }

    void insert(Vertex v)
    {
        if (! member_[static_cast<std::size_t>(v)]) {
            member_[static_cast<std::size_t>(v)] = true;
            ++size_;
        }
    }

    void insert(const Edge & e)
    {
        insert(e.u);
        insert(e.v);
    }

private:
    std::vector<bool> member_;
    std::size_t size_ = 0;
};

struct PartnerEdge
{
    Edge edge;             // zw, a cycle edge
    Colour base_colour;    // colour of xy
    Colour partner_colour; // colour of zw, different from base_colour
};

/**
 * First cycle edge zw of `h` (in chord_triangles order) that forms a
 * triangle with v, is vertex-disjoint from xy and from `excluded`, and is
 * coloured differently from xy. `xy` need not be on the cycle.
 *
 * Throws InfeasibleError when no such edge exists; InputError when the
 * preconditions (|excluded| <= 5dr^2, v xy a triangle, xy clear of
 * `excluded`) are violated.
 */
PartnerEdge fact1_partner(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, Vertex v,
    const Edge & xy, const ExclusionSet & excluded, int d);

/// A pivot with two triangle bases, oriented so that
/// net(colour, pivot, first_base) > net(colour, pivot, second_base).
struct SwitchCandidate
{
    Vertex pivot = 0;
    Edge first_base;
    Edge second_base;
    Colour colour = 0;
    /// Produced by the fallback where all colours agree at the original
    /// vertex and a base endpoint took over as pivot.
    bool via_fallback = false;
};

/// Throws InternalError naming the first violated candidate invariant.
void check_candidate(const Graph & g, const EdgeColouring & col, const SwitchCandidate & candidate);

/**
 * Builds a switch candidate around `v`, recording its five vertices in
 * `excluded`.
 *
 * Takes the first chord triangle xy of v clear of `excluded` and its
 * fact1_partner zw. If some colour separates net(v, xy) from net(v, zw),
 * the lowest such colour is used with v as pivot. Otherwise the colouring
 * around v is forced (vx, xy share c1; vw, wz share c2; vy, vz share c3,
 * with c1 != c3 after relabelling), and x becomes the pivot with bases
 * (w'z', vy), where w'z' is the fact1_partner of x across vy.
 */
SwitchCandidate derive_switch_candidate(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, Vertex v,
    ExclusionSet & excluded, int d);

struct SwitchSystem
{
    std::vector<SwitchCandidate> candidates;
    ExclusionSet used{0};
    std::size_t peak_used = 0;
    Colour star_colour = 0;
    /// The first d*r candidates of star_colour, in collection order.
    std::vector<SwitchCandidate> chosen;
};

/// Sets star_colour to the lowest colour carrying at least d*r of the
/// candidates and `chosen` to the first d*r of those, in order.
void choose_star_colour(SwitchSystem & sys, int d, int r);

/// True iff 2r * min_degree >= (r + 1) * n + 12 d r^3.
bool meets_bias_hypothesis(const Graph & g, int r, int d);

/**
 * Collects d*r^2 vertex-disjoint switch candidates, trying pivots in
 * ascending order and skipping claimed vertices, then picks the lowest
 * colour carrying at least d*r of them.
 *
 * `h` must not be d-unbalanced. When the degree hypothesis holds, the chord
 * count of every tried pivot is checked against n/r + 12dr^2 - 2.
 * Throws InfeasibleError if too few candidates can be found.
 */
SwitchSystem collect_switch_system(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, int d,
    StepCounter & counter);
SwitchSystem collect_switch_system(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, int d);

struct Assembly
{
    HamiltonCycle reduced; // Hamilton cycle of g minus the chosen pivots
    HamiltonCycle first;   // every chosen pivot spliced into its first base
    HamiltonCycle second;  // ... into its second base
    int first_star_count = 0;
    int second_star_count = 0;
};

/// Removes the chosen pivots, finds a Hamilton cycle of the rest through
/// all their bases, and splices the pivots back in both ways. Throws
/// InternalError if the star-colour gap is below d*r.
Assembly assemble_switch_cycles(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d,
    StepCounter & counter);

/// The d-unbalanced one of the two assembled cycles (first preferred).
/// Throws TheoremViolation if neither is.
HamiltonCycle assemble_and_choose(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d);

/// For k = 0..dr: the first k chosen pivots in their first base, the rest in
/// their second. Star-colour counts strictly increase with k.
std::vector<HamiltonCycle> spectrum_cycles(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d);

enum class SolveMode { strict, permissive };

struct SolveResult
{
    HamiltonCycle cycle;
    ColourHistogram counts;
    /// Set when the initial Hamilton cycle was not enough and switching ran.
    struct Switching
    {
        Colour star_colour;
        int first_star_count;
        int second_star_count;
        std::size_t candidates;
        std::size_t peak_used;
    };
    std::optional<Switching> switching;
    std::uint64_t dirac_steps = 0;
    std::uint64_t scan_steps = 0;
    std::uint64_t posa_steps = 0;

    std::uint64_t total_steps() const { return dirac_steps + scan_steps + posa_steps; }
};

/**
 * A d-unbalanced Hamilton cycle of g.
 *
 * Strict mode checks the degree hypothesis up front (HypothesisError) and
 * then always succeeds. Permissive mode needs only 2 * min_degree >= n and
 * throws BestEffortFailure, carrying the most unbalanced cycle it saw, when
 * the switching argument cannot be carried out.
 */
SolveResult find_unbalanced_hamilton(const Graph & g, const EdgeColouring & col, int d, SolveMode mode);

} // namespace cbias
