#include "cbias/extremal.hpp"

#include <string>
#include <vector>

namespace cbias {

int layered_part(int r, int n, Vertex v)
{
    int block = n / (2 * r);
    return v < block * (r - 1) ? v / block : r - 1;
}

ColouredGraph build_layered(int r, int n)
{
    if (r < 2)
        throw InputError("layered construction needs r >= 2");
    if (n < 2 * r || n % (2 * r) != 0)
        throw InputError("layered construction needs 2r | n with n >= 2r; got r = " + std::to_string(r) + ", n = "
            + std::to_string(n));

    std::vector<ColouredEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int pu = layered_part(r, n, u), pv = layered_part(r, n, v);
            // v > u, so v lies in the hub whenever either endpoint does.
            if (pv == r - 1)
                edges.push_back({Edge(u, v), pu});
        }

    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto & e : edges)
        plain.push_back(e.edge);
    Graph g(n, plain);
    EdgeColouring col(g, r, edges);
    return {std::move(g), std::move(col)};
}

ColouredGraph build_turan3(int n)
{
    if (n < 6 || n % 3 != 0)
        throw InputError("3-partite construction needs 3 | n with n >= 6; got n = " + std::to_string(n));

    int part = n / 3;
    std::vector<ColouredEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int pu = u / part, pv = v / part;
            if (pu == pv)
                continue;
            // (0,1) -> 0, (1,2) -> 1, (0,2) -> 2
            Colour c = pu == 0 && pv == 1 ? 0 : pu == 1 && pv == 2 ? 1 : 2;
            edges.push_back({Edge(u, v), c});
        }

    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto & e : edges)
        plain.push_back(e.edge);
    Graph g(n, plain);
    EdgeColouring col(g, 3, edges);
    return {std::move(g), std::move(col)};
}

} // namespace cbias
