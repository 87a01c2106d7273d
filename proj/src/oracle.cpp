#include "cbias/oracle.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace cbias {

namespace {

using Mask = std::uint64_t;

class CycleSearch
{
public:
    CycleSearch(const Graph & g, const std::function<void(std::span<const Vertex>)> & visit) :
        g_(g),
        visit_(visit),
        n_(g.order()),
        masks_(static_cast<std::size_t>(n_), 0)
    {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbours(v))
                masks_[v] |= Mask{1} << w;
        path_.reserve(static_cast<std::size_t>(n_));
    }

    void run_from(Vertex second)
    {
        path_.assign({0, second});
        extend(Mask{1} | (Mask{1} << second));
    }

private:
    void extend(Mask visited)
    {
        Vertex second = path_[1];
        if (static_cast<Vertex>(path_.size()) == n_) {
            if (path_.back() > second && ((masks_[0] >> path_.back()) & 1U))
                visit_(path_);
            return;
        }

        // The cycle must still be able to close through an unvisited
        // neighbour of 0 numbered above the second vertex.
        Mask above = ~((Mask{2} << second) - 1);
        if ((masks_[0] & ~visited & above) == 0)
            return;

        Mask options = masks_[path_.back()] & ~visited;
        while (options) {
            auto w = static_cast<Vertex>(__builtin_ctzll(options));
            options &= options - 1;
            path_.push_back(w);
            extend(visited | (Mask{1} << w));
            path_.pop_back();
        }
    }

    const Graph & g_;
    const std::function<void(std::span<const Vertex>)> & visit_;
    Vertex n_;
    std::vector<Mask> masks_;
    std::vector<Vertex> path_;
};

void check_size(const Graph & g, int limit)
{
    if (g.order() > limit)
        throw SizeError("enumeration refused: n = " + std::to_string(g.order()) + " exceeds limit " + std::to_string(limit));
    if (g.order() > 63)
        throw SizeError("enumeration supports at most 63 vertices");
}

} // namespace

void for_each_hamilton_cycle(const Graph & g, int limit, const std::function<void(std::span<const Vertex>)> & visit)
{
    check_size(g, limit);
    if (g.order() < 3)
        return;

    CycleSearch search(g, visit);
    for (Vertex second : g.neighbours(0))
        search.run_from(second);
}

std::vector<std::vector<Vertex>> enumerate_hamilton_cycles(const Graph & g, int limit)
{
    std::vector<std::vector<Vertex>> result;
    for_each_hamilton_cycle(g, limit, [&](std::span<const Vertex> cycle) { result.emplace_back(cycle.begin(), cycle.end()); });
    return result;
}

BiasLandscape bias_landscape(const Graph & g, const EdgeColouring & col, int limit)
{
    check_size(g, limit);

    BiasLandscape total;
    total.n = g.order();
    total.colours = col.colours();
    if (g.order() < 3)
        return total;

    auto branch = [&](Vertex second) {
        BiasLandscape part;
        std::vector<int> counts(static_cast<std::size_t>(col.colours()));
        std::function<void(std::span<const Vertex>)> visit = [&](std::span<const Vertex> cycle) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t i = 0; i < cycle.size(); ++i)
                ++counts[col.colour(cycle[i], cycle[(i + 1) % cycle.size()])];
            ++part.cycle_count;
            part.max_count = std::max(part.max_count, *std::max_element(counts.begin(), counts.end()));
            part.vectors.insert(counts);
        };
        CycleSearch search(g, visit);
        search.run_from(second);
        return part;
    };

    std::vector<std::future<BiasLandscape>> parts;
    for (Vertex second : g.neighbours(0))
        parts.push_back(std::async(std::launch::async, branch, second));

    for (auto & f : parts) {
        auto part = f.get();
        total.cycle_count += part.cycle_count;
        total.max_count = std::max(total.max_count, part.max_count);
        total.vectors.merge(part.vectors);
    }
    return total;
}

std::string format_landscape(const BiasLandscape & landscape)
{
    std::ostringstream out;
    out << landscape.n << ' ' << landscape.colours << ' ' << landscape.cycle_count << ' ' << landscape.max_count << '\n';
    if (! landscape.hamiltonian())
        out << "not Hamiltonian\n";
    for (const auto & vector : landscape.vectors) {
        for (std::size_t i = 0; i < vector.size(); ++i)
            out << (i ? " " : "") << vector[i];
        out << '\n';
    }
    return out.str();
}

const char * reason_name(VerifyReason reason)
{
    switch (reason) {
        case VerifyReason::ok: return "ok";
        case VerifyReason::wrong_length: return "wrong length";
        case VerifyReason::not_a_permutation: return "not a permutation";
        case VerifyReason::non_edge: return "non-edge";
        case VerifyReason::insufficient_bias: return "insufficient bias";
    }
    return "unknown";
}

Verdict verify_solution(const Graph & g, const EdgeColouring & col, std::span<const Vertex> cycle, int t)
{
    auto n = static_cast<std::size_t>(g.order());
    if (n < 3 || cycle.size() != n)
        return {VerifyReason::wrong_length, "expected " + std::to_string(n) + " vertices, got " + std::to_string(cycle.size())};

    std::vector<bool> seen(n, false);
    for (Vertex v : cycle) {
        if (! g.contains(v) || seen[v])
            return {VerifyReason::not_a_permutation, "vertex " + std::to_string(v) + " is out of range or repeated"};
        seen[v] = true;
    }

    std::vector<long long> counts(static_cast<std::size_t>(col.colours()), 0);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % n];
        if (! g.adjacent(a, b) || ! col.covers(a, b))
            return {VerifyReason::non_edge, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge"};
        ++counts[col.colour(a, b)];
    }

    long long r = col.colours();
    long long best = *std::max_element(counts.begin(), counts.end());
    if (r * best < static_cast<long long>(n) + r * t)
        return {VerifyReason::insufficient_bias, "largest colour class " + std::to_string(best) + " < n/r + "
            + std::to_string(t)};
    return {};
}

} // namespace cbias
