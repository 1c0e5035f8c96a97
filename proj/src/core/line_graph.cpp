#include "hyperchroma/core/line_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hyperchroma {

LineGraph::LineGraph(std::vector<std::vector<Neighbor>> adjacency) : adjacency_(std::move(adjacency))
{
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.edge < b.edge; });
    }
}

std::size_t LineGraph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, list.size());
    }
    return best;
}

std::size_t LineGraph::adjacency_count() const
{
    std::size_t sum = 0;
    for (const auto& list : adjacency_) {
        sum += list.size();
    }
    return sum / 2;
}

bool LineGraph::adjacent(EdgeId a, EdgeId b) const
{
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Neighbor& nb, EdgeId id) { return nb.edge < id; });
    return it != list.end() && it->edge == b;
}

LineGraph build_line_graph(const Hypergraph& h)
{
    std::vector<std::vector<LineGraph::Neighbor>> adjacency(h.edges.size());
    const auto inc = h.incidence();
    for (Vertex v = 0; v < inc.size(); ++v) {
        const auto& through = inc[v];
        for (std::size_t a = 0; a < through.size(); ++a) {
            for (std::size_t b = a + 1; b < through.size(); ++b) {
                adjacency[through[a]].push_back({through[b], v});
                adjacency[through[b]].push_back({through[a], v});
            }
        }
    }
    return LineGraph(std::move(adjacency));
}

TriangleStats count_triangles(const Hypergraph& h, const LineGraph& lg)
{
    const std::size_t m = lg.vertex_count();
    TriangleStats stats;
    stats.total.assign(m, 0);
    stats.type1.assign(m, 0);
    stats.type2.assign(m, 0);
    stats.max_degree = lg.max_degree();
    if (m != h.edge_count()) {
        throw std::invalid_argument("line graph was not built from this hypergraph");
    }

    // Forward listing: orient each adjacency from lower to higher (degree, id)
    // so every triangle is found exactly once, at its lowest-ranked corner.
    auto before = [&](EdgeId a, EdgeId b) {
        return lg.degree(a) != lg.degree(b) ? lg.degree(a) < lg.degree(b) : a < b;
    };
    std::vector<std::vector<LineGraph::Neighbor>> forward(m);
    for (EdgeId u = 0; u < m; ++u) {
        for (const auto& nb : lg.neighbors(u)) {
            if (before(u, nb.edge)) {
                forward[u].push_back(nb);
            }
        }
    }

    constexpr Vertex unmarked = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> mark(m, unmarked); // shared vertex with u, for u's forward neighbors
    for (EdgeId u = 0; u < m; ++u) {
        for (const auto& nb : forward[u]) {
            mark[nb.edge] = nb.shared;
        }
        for (const auto& uv : forward[u]) {
            for (const auto& vw : forward[uv.edge]) {
                const Vertex uw = mark[vw.edge];
                if (uw == unmarked) {
                    continue;
                }
                // Under linearity, two equal intersections force the third.
                const bool single_point = uv.shared == uw && uw == vw.shared;
                for (EdgeId corner : {u, uv.edge, vw.edge}) {
                    ++stats.total[corner];
                    ++(single_point ? stats.type1 : stats.type2)[corner];
                }
                ++stats.triangle_count;
            }
        }
        for (const auto& nb : forward[u]) {
            mark[nb.edge] = unmarked;
        }
    }
    for (std::size_t t : stats.total) {
        stats.max_triangles = std::max(stats.max_triangles, t);
    }
    return stats;
}

} // namespace hyperchroma
