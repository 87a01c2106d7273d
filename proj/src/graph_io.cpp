#include "cbias/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace cbias {

namespace {

long long read_number(std::istream & in, const char * what)
{
    std::string token;
    if (! (in >> token))
        throw InputError(std::string("unexpected end of input reading ") + what);
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    }
    catch (const std::exception &) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw InputError(std::string("expected an integer for ") + what + ", got '" + token + "'");
    return value;
}

} // namespace

ColouredGraph read_coloured_graph(std::istream & in)
{
    std::string line;
    if (! std::getline(in, line))
        throw InputError("empty input");
    std::istringstream header(line);
    auto n = read_number(header, "n"), m = read_number(header, "m"), r = read_number(header, "r");
    std::string rest;
    if (header >> rest)
        throw InputError("header has more than three fields");
    if (n < 0 || n > 100000 || m < 0 || r < 2 || r > 127)
        throw InputError("header values out of range");

    std::vector<Edge> edges;
    std::vector<ColouredEdge> coloured;
    edges.reserve(static_cast<std::size_t>(m));
    coloured.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (! std::getline(in, line))
            throw InputError("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::istringstream row(line);
        auto u = read_number(row, "u"), v = read_number(row, "v"), c = read_number(row, "c");
        if (row >> rest)
            throw InputError("edge line " + std::to_string(i + 2) + " has more than three fields");
        if (! (0 <= u && u < v && v < n))
            throw InputError("edge line " + std::to_string(i + 2) + " needs 0 <= u < v < n");
        if (c < 0 || c >= r)
            throw InputError("edge line " + std::to_string(i + 2) + " has colour out of range");
        Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        edges.push_back(e);
        coloured.push_back({e, static_cast<Colour>(c)});
    }

    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw InputError("trailing content after " + std::to_string(m) + " edges");

    Graph g(static_cast<Vertex>(n), edges);
    EdgeColouring col(g, static_cast<int>(r), coloured);
    return {std::move(g), std::move(col)};
}

void write_coloured_graph(std::ostream & out, const ColouredGraph & cg)
{
    out << cg.graph.order() << ' ' << cg.graph.edge_count() << ' ' << cg.colouring.colours() << '\n';
    for (const auto & e : cg.graph.edges())
        out << e.u << ' ' << e.v << ' ' << cg.colouring.colour(e) << '\n';
}

std::vector<Vertex> read_cycle(std::istream & in)
{
    std::vector<Vertex> cycle;
    while (true) {
        in >> std::ws;
        if (in.eof())
            break;
        auto v = read_number(in, "cycle vertex");
        if (v < 0 || v > 100000)
            throw InputError("cycle vertex " + std::to_string(v) + " out of range");
        cycle.push_back(static_cast<Vertex>(v));
    }
    return cycle;
}

void write_cycle(std::ostream & out, std::span<const Vertex> cycle)
{
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out << (i ? " " : "") << cycle[i];
    out << '\n';
}

} // namespace cbias
