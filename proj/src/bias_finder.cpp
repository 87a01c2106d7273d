#include "cbias/bias_finder.hpp"

#include <algorithm>
#include <string>

namespace cbias {

namespace {

std::string show(const Edge & e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

int net(const EdgeColouring & col, Colour c, Vertex apex, const Edge & base)
{
    if (base.touches(apex) || ! col.covers(apex, base.u) || ! col.covers(apex, base.v) || ! col.covers(base.u, base.v))
        throw InputError("vertex " + std::to_string(apex) + " and base " + show(base) + " do not span a triangle");

    return col.indicator(c, Edge(apex, base.u)) + col.indicator(c, Edge(apex, base.v)) - col.indicator(c, base);
}

std::vector<Edge> chord_triangles(const Graph & g, const HamiltonCycle & h, Vertex v)
{
    std::vector<Edge> result;
    int start = h.position(0);
    if (start < 0)
        start = 0;

    // y is in X and X+ exactly when both y and its predecessor are neighbours of v.
    for (int s = 0; s < h.length(); ++s) {
        Vertex x = h.at(start + s), y = h.at(start + s + 1);
        if (g.adjacent(v, x) && g.adjacent(v, y))
            result.emplace_back(x, y);
    }
    return result;
}

PartnerEdge fact1_partner(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, Vertex v,
    const Edge & xy, const ExclusionSet & excluded, int d)
{
    long long r = col.colours();
    if (static_cast<long long>(excluded.size()) > 5LL * d * r * r)
        throw InputError("exclusion set of size " + std::to_string(excluded.size()) + " exceeds 5dr^2");
    if (excluded.touches(xy))
        throw InputError("base " + show(xy) + " meets the exclusion set");

    Colour base_colour = col.colour(xy);
    net(col, base_colour, v, xy); // triangle check

    for (const auto & zw : chord_triangles(g, h, v)) {
        if (zw.shares_vertex_with(xy) || excluded.touches(zw))
            continue;
        if (Colour c = col.colour(zw); c != base_colour)
            return {zw, base_colour, c};
    }
    throw InfeasibleError("no chord triangle of vertex " + std::to_string(v) + " avoids " + show(xy)
        + " and the exclusion set with a colour other than " + std::to_string(base_colour));
}

void check_candidate(const Graph & g, const EdgeColouring & col, const SwitchCandidate & candidate)
{
    auto [p, first, second, c, fallback] = candidate;
    auto triangle = [&](const Edge & e) {
        return ! e.touches(p) && g.has_edge(e) && g.adjacent(p, e.u) && g.adjacent(p, e.v);
    };
    if (! triangle(first) || ! triangle(second))
        throw InternalError("pivot " + std::to_string(p) + " does not span triangles with both bases");
    if (first.shares_vertex_with(second))
        throw InternalError("bases " + show(first) + " and " + show(second) + " share a vertex");
    if (net(col, c, p, first) <= net(col, c, p, second))
        throw InternalError("candidate at pivot " + std::to_string(p) + " is not oriented for colour " + std::to_string(c));
}

SwitchCandidate derive_switch_candidate(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, Vertex v,
    ExclusionSet & excluded, int d)
{
    if (excluded.contains(v))
        throw InputError("pivot " + std::to_string(v) + " is already claimed");

    auto chords = chord_triangles(g, h, v);
    auto clear = std::find_if(chords.begin(), chords.end(), [&](const Edge & e) { return ! excluded.touches(e); });
    if (clear == chords.end())
        throw InfeasibleError("vertex " + std::to_string(v) + " has no chord triangle clear of the exclusion set");

    Edge xy = *clear;
    auto [zw, c1, c2] = fact1_partner(g, h, col, v, xy, excluded, d);

    for (Colour c = 0; c < col.colours(); ++c) {
        int via_xy = net(col, c, v, xy), via_zw = net(col, c, v, zw);
        if (via_xy != via_zw) {
            SwitchCandidate candidate{v, via_xy > via_zw ? xy : zw, via_xy > via_zw ? zw : xy, c, false};
            excluded.insert(v);
            excluded.insert(xy);
            excluded.insert(zw);
            return candidate;
        }
    }

    // Every colour agrees, which pins vx, xy to c1, vw, wz to c2 and vy, vz to c3.
    Vertex x = col.colour(v, xy.u) == c1 ? xy.u : xy.v;
    Vertex y = x == xy.u ? xy.v : xy.u;
    Vertex w = col.colour(v, zw.u) == c2 ? zw.u : zw.v;
    Vertex z = w == zw.u ? zw.v : zw.u;
    Colour c3 = col.colour(v, y);
    if (col.colour(v, x) != c1 || col.colour(v, w) != c2 || col.colour(v, z) != c3)
        throw InternalError("colours around vertex " + std::to_string(v) + " do not match the forced pattern");

    if (c1 == c3) {
        std::swap(x, w);
        std::swap(y, z);
    }

    Edge vy(v, y);
    auto partner = fact1_partner(g, h, col, x, vy, excluded, d);
    SwitchCandidate candidate{x, partner.edge, vy, c3, true};
    excluded.insert(x);
    excluded.insert(vy);
    excluded.insert(partner.edge);
    return candidate;
}

bool meets_bias_hypothesis(const Graph & g, int r, int d)
{
    if (g.order() == 0)
        return false;
    long long n = g.order(), rr = r, dd = d;
    return 2 * rr * min_degree(g) >= (rr + 1) * n + 12 * dd * rr * rr * rr;
}

void choose_star_colour(SwitchSystem & sys, int d, int r)
{
    std::vector<std::size_t> per_colour(static_cast<std::size_t>(r), 0);
    for (const auto & candidate : sys.candidates)
        ++per_colour[candidate.colour];

    auto quota = static_cast<std::size_t>(d) * static_cast<std::size_t>(r);
    sys.chosen.clear();
    auto star = std::find_if(per_colour.begin(), per_colour.end(), [&](std::size_t k) { return k >= quota; });
    if (star == per_colour.end())
        throw InternalError("no colour is associated with d*r candidates");
    sys.star_colour = static_cast<Colour>(star - per_colour.begin());

    for (const auto & candidate : sys.candidates)
        if (candidate.colour == sys.star_colour && sys.chosen.size() < quota)
            sys.chosen.push_back(candidate);
}

SwitchSystem collect_switch_system(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, int d,
    StepCounter & counter)
{
    if (d < 1)
        throw InputError("d must be at least 1");
    if (is_t_unbalanced(h, col, d))
        throw InputError("cycle is already " + std::to_string(d) + "-unbalanced");

    long long r = col.colours(), n = g.order();
    auto wanted = static_cast<std::size_t>(d * r * r);
    auto budget = static_cast<std::size_t>(5 * d * r * r);
    bool hypothesis = meets_bias_hypothesis(g, col.colours(), d);

    SwitchSystem sys;
    sys.used = ExclusionSet(g.order());
    for (Vertex v = 0; v < g.order() && sys.candidates.size() < wanted; ++v) {
        if (sys.used.contains(v))
            continue;

        counter.steps += static_cast<std::uint64_t>(h.length());
        if (hypothesis) {
            auto chords = static_cast<long long>(chord_triangles(g, h, v).size());
            if (r * chords < n + 12 * d * r * r * r - 2 * r)
                throw InternalError("vertex " + std::to_string(v) + " has only " + std::to_string(chords)
                    + " chord triangles under the degree hypothesis");
        }

        try {
            counter.steps += 3 * static_cast<std::uint64_t>(h.length());
            auto candidate = derive_switch_candidate(g, h, col, v, sys.used, d);
            check_candidate(g, col, candidate);
            sys.candidates.push_back(candidate);
        }
        catch (const InfeasibleError &) {
            if (hypothesis)
                throw;
        }

        sys.peak_used = std::max(sys.peak_used, sys.used.size());
        if (sys.used.size() > budget)
            throw InternalError("exclusion set grew to " + std::to_string(sys.used.size()) + " > 5dr^2");
    }

    if (sys.candidates.size() < wanted)
        throw InfeasibleError("only " + std::to_string(sys.candidates.size()) + " of " + std::to_string(wanted)
            + " switch candidates could be collected");

    choose_star_colour(sys, d, static_cast<int>(r));
    return sys;
}

SwitchSystem collect_switch_system(const Graph & g, const HamiltonCycle & h, const EdgeColouring & col, int d)
{
    StepCounter counter;
    return collect_switch_system(g, h, col, d, counter);
}

namespace {

// Hamilton cycle of g minus the chosen pivots containing all their bases,
// in the original labels.
HamiltonCycle reduced_cycle(const Graph & g, const SwitchSystem & sys, int d, int r, StepCounter & counter)
{
    auto quota = static_cast<std::size_t>(d) * static_cast<std::size_t>(r);
    if (sys.chosen.size() < quota)
        throw InputError("switch system has " + std::to_string(sys.chosen.size()) + " chosen candidates, need "
            + std::to_string(quota));

    std::vector<Vertex> pivots;
    for (const auto & candidate : sys.chosen)
        pivots.push_back(candidate.pivot);
    auto sub = remove_vertices(g, pivots);

    std::vector<Edge> forced;
    auto relabel = [&](const Edge & e) {
        auto a = sub.relabel[e.u], b = sub.relabel[e.v];
        if (a < 0 || b < 0)
            throw InputError("base " + show(e) + " uses a removed pivot");
        return Edge(a, b);
    };
    for (const auto & candidate : sys.chosen) {
        forced.push_back(relabel(candidate.first_base));
        forced.push_back(relabel(candidate.second_base));
    }

    LinearForest forest(sub.graph, std::move(forced));
    int slack = std::max(1, static_cast<int>((forest.size() + 1) / 2));
    if (2 * slack > sub.graph.order())
        throw HypothesisError("too few vertices remain to route " + std::to_string(forest.size()) + " forced edges");
    auto inner = posa_forced_hamilton(sub.graph, forest, slack, counter);

    std::vector<Vertex> order;
    order.reserve(inner.order().size());
    for (Vertex v : inner.order())
        order.push_back(sub.original[v]);
    return HamiltonCycle(g, std::move(order));
}

HamiltonCycle splice(const Graph & g, HamiltonCycle cycle, const std::vector<SwitchCandidate> & chosen, std::size_t first_count)
{
    for (std::size_t i = 0; i < chosen.size(); ++i)
        cycle = insert_vertex(g, cycle, chosen[i].pivot, i < first_count ? chosen[i].first_base : chosen[i].second_base);
    return cycle;
}

} // namespace

Assembly assemble_switch_cycles(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d,
    StepCounter & counter)
{
    auto reduced = reduced_cycle(g, sys, d, col.colours(), counter);
    auto first = splice(g, reduced, sys.chosen, sys.chosen.size());
    auto second = splice(g, reduced, sys.chosen, 0);

    int e1 = colour_histogram(first, col).counts[sys.star_colour];
    int e2 = colour_histogram(second, col).counts[sys.star_colour];
    if (e1 - e2 < d * col.colours())
        throw InternalError("star colour gap " + std::to_string(e1 - e2) + " is below d*r = "
            + std::to_string(d * col.colours()));

    return Assembly{std::move(reduced), std::move(first), std::move(second), e1, e2};
}

HamiltonCycle assemble_and_choose(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d)
{
    StepCounter counter;
    auto assembly = assemble_switch_cycles(g, col, sys, d, counter);
    if (is_t_unbalanced(assembly.first, col, d))
        return assembly.first;
    if (is_t_unbalanced(assembly.second, col, d))
        return assembly.second;
    throw TheoremViolation("neither assembled cycle is " + std::to_string(d) + "-unbalanced");
}

std::vector<HamiltonCycle> spectrum_cycles(const Graph & g, const EdgeColouring & col, const SwitchSystem & sys, int d)
{
    StepCounter counter;
    auto reduced = reduced_cycle(g, sys, d, col.colours(), counter);

    std::vector<HamiltonCycle> result;
    int previous = -1;
    for (std::size_t k = 0; k <= sys.chosen.size(); ++k) {
        auto cycle = splice(g, reduced, sys.chosen, k);
        int count = colour_histogram(cycle, col).counts[sys.star_colour];
        if (count <= previous)
            throw InternalError("star colour count did not increase at switch " + std::to_string(k));
        previous = count;
        result.push_back(std::move(cycle));
    }
    return result;
}

SolveResult find_unbalanced_hamilton(const Graph & g, const EdgeColouring & col, int d, SolveMode mode)
{
    if (d < 1)
        throw InputError("d must be at least 1");
    if (col.order() != g.order())
        throw InputError("colouring and graph disagree on the vertex count");

    int r = col.colours();
    if (mode == SolveMode::strict && ! meets_bias_hypothesis(g, r, d)) {
        Vertex worst = g.order() > 0 ? min_degree_vertex(g) : 0;
        long long need = static_cast<long long>(r + 1) * g.order() + 12LL * d * r * r * r;
        throw HypothesisError("min degree " + std::to_string(g.order() > 0 ? g.degree(worst) : 0)
                + " violates 2r * delta >= (r+1) n + 12 d r^3 = " + std::to_string(need) + " (need delta >= "
                + std::to_string((need + 2 * r - 1) / (2 * r)) + ")",
            worst);
    }

    StepCounter dirac, scan, posa;
    auto initial = dirac_hamilton(g, dirac);
    auto initial_counts = colour_histogram(initial, col);
    if (is_t_unbalanced(initial_counts, d))
        return SolveResult{std::move(initial), std::move(initial_counts), std::nullopt, dirac.steps, 0, 0};

    std::vector<Vertex> best(initial.order().begin(), initial.order().end());
    int best_count = initial_counts.max_count();
    auto consider = [&](const HamiltonCycle & h) {
        int count = colour_histogram(h, col).max_count();
        if (count > best_count) {
            best_count = count;
            best.assign(h.order().begin(), h.order().end());
        }
    };

    try {
        auto sys = collect_switch_system(g, initial, col, d, scan);
        auto assembly = assemble_switch_cycles(g, col, sys, d, posa);
        SolveResult::Switching summary{sys.star_colour, assembly.first_star_count, assembly.second_star_count,
            sys.candidates.size(), sys.peak_used};

        for (auto * cycle : {&assembly.first, &assembly.second}) {
            auto counts = colour_histogram(*cycle, col);
            if (is_t_unbalanced(counts, d))
                return SolveResult{std::move(*cycle), std::move(counts), summary, dirac.steps, scan.steps, posa.steps};
        }
        consider(assembly.first);
        consider(assembly.second);
        if (mode == SolveMode::strict)
            throw TheoremViolation("neither assembled cycle is " + std::to_string(d) + "-unbalanced");
    }
    catch (const InfeasibleError & e) {
        if (mode == SolveMode::strict)
            throw;
        throw BestEffortFailure(std::string("switching failed: ") + e.what(), std::move(best), best_count);
    }
    catch (const HypothesisError & e) {
        if (mode == SolveMode::strict)
            throw InternalError(std::string("sub-instance broke the degree hypothesis: ") + e.what());
        throw BestEffortFailure(std::string("switching failed: ") + e.what(), std::move(best), best_count);
    }

    throw BestEffortFailure("no " + std::to_string(d) + "-unbalanced cycle among the assembled ones", std::move(best),
        best_count);
}

} // namespace cbias
