#include "hyperchroma/core/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace hyperchroma {

std::vector<std::vector<EdgeId>> Hypergraph::incidence() const
{
    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e = 0; e < edges.size(); ++e) {
        for (Vertex v : edges[e]) {
            if (v < n) {
                inc[v].push_back(e);
            }
        }
    }
    return inc;
}

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::RankTooSmall:
        return "rank_too_small";
    case ViolationKind::VertexOutOfRange:
        return "vertex_out_of_range";
    case ViolationKind::NotStrictlySorted:
        return "not_strictly_sorted";
    case ViolationKind::DuplicateVertex:
        return "duplicate_vertex";
    case ViolationKind::DuplicateEdge:
        return "duplicate_edge";
    case ViolationKind::SharedPair:
        return "shared_pair";
    }
    return "unknown";
}

ValidationReport validate_linear(const Hypergraph& h)
{
    ValidationReport report;
    auto& out = report.violations;

    // Per-edge checks. Intersections below are computed on the in-range,
    // deduplicated vertex set of each edge so a malformed edge is reported
    // once for its own defect, not again as a linearity failure with itself.
    std::vector<Edge> clean(h.edges.size());
    for (EdgeId e = 0; e < h.edges.size(); ++e) {
        const Edge& edge = h.edges[e];
        if (edge.size() < 2) {
            out.push_back({ViolationKind::RankTooSmall, e, {}, {}, 0});
        }
        bool sorted = true;
        for (std::size_t j = 0; j < edge.size(); ++j) {
            if (edge[j] >= h.n) {
                out.push_back({ViolationKind::VertexOutOfRange, e, {}, edge[j], 0});
            }
            if (j > 0 && edge[j - 1] >= edge[j]) {
                sorted = false;
            }
        }
        Edge c;
        std::copy_if(edge.begin(), edge.end(), std::back_inserter(c), [&](Vertex v) { return v < h.n; });
        std::sort(c.begin(), c.end());
        auto dup = std::adjacent_find(c.begin(), c.end());
        if (dup != c.end()) {
            out.push_back({ViolationKind::DuplicateVertex, e, {}, *dup, 0});
        } else if (!sorted) {
            out.push_back({ViolationKind::NotStrictlySorted, e, {}, {}, 0});
        }
        c.erase(std::unique(c.begin(), c.end()), c.end());
        clean[e] = std::move(c);
    }

    // Pairwise intersections via vertex incidences: for each edge e, count
    // how often each later edge f shows up among the incidences of e's vertices.
    std::vector<std::vector<EdgeId>> inc(h.n);
    for (EdgeId e = 0; e < clean.size(); ++e) {
        for (Vertex v : clean[e]) {
            inc[v].push_back(e);
        }
    }
    std::vector<std::size_t> hits(clean.size(), 0);
    std::vector<EdgeId> touched;
    for (EdgeId e = 0; e < clean.size(); ++e) {
        touched.clear();
        for (Vertex v : clean[e]) {
            for (EdgeId f : inc[v]) {
                if (f <= e) {
                    continue;
                }
                if (hits[f]++ == 0) {
                    touched.push_back(f);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (EdgeId f : touched) {
            if (hits[f] >= 2) {
                if (clean[e] == clean[f]) {
                    out.push_back({ViolationKind::DuplicateEdge, e, f, {}, hits[f]});
                } else {
                    out.push_back({ViolationKind::SharedPair, e, f, {}, hits[f]});
                }
            }
            hits[f] = 0;
        }
    }
    return report;
}

std::size_t min_rank(const Hypergraph& h)
{
    if (h.edges.empty()) {
        throw EmptyHypergraphError();
    }
    std::size_t best = h.edges.front().size();
    for (const Edge& e : h.edges) {
        best = std::min(best, e.size());
    }
    return best;
}

std::size_t max_rank(const Hypergraph& h)
{
    if (h.edges.empty()) {
        throw EmptyHypergraphError();
    }
    std::size_t best = 0;
    for (const Edge& e : h.edges) {
        best = std::max(best, e.size());
    }
    return best;
}

std::size_t max_vertex_degree(const Hypergraph& h)
{
    const std::size_t rho = min_rank(h);
    std::vector<std::size_t> degree(h.n, 0);
    for (const Edge& e : h.edges) {
        for (Vertex v : e) {
            if (v < h.n) {
                ++degree[v];
            }
        }
    }
    const std::size_t best = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    // Edges through a vertex are otherwise disjoint, so deg * (rho - 1) <= n - 1.
    if (rho >= 2 && h.n >= 1 && best * (rho - 1) > h.n - 1) {
        throw std::logic_error("vertex degree exceeds (n-1)/(rho-1): hypergraph is not linear");
    }
    return best;
}

double degree_bound(const Hypergraph& h)
{
    const std::size_t rho = min_rank(h);
    if (rho < 2) {
        throw std::domain_error("degree bound undefined for rank < 2");
    }
    return static_cast<double>(h.n - 1) / static_cast<double>(rho - 1);
}

double truncated_log(double x)
{
    return x >= std::numbers::e ? std::log(x) : 1.0;
}

int dyadic_index(std::size_t rank)
{
    return static_cast<int>(std::bit_width(rank)) - 1;
}

const std::vector<EdgeId>& DyadicPartition::at(int index) const
{
    static const std::vector<EdgeId> empty;
    auto it = classes.find(index);
    return it == classes.end() ? empty : it->second;
}

std::size_t DyadicPartition::total() const
{
    std::size_t sum = 0;
    for (const auto& [index, ids] : classes) {
        sum += ids.size();
    }
    return sum;
}

DyadicPartition partition_dyadic(const Hypergraph& h)
{
    DyadicPartition partition;
    for (EdgeId e = 0; e < h.edges.size(); ++e) {
        if (h.edges[e].size() >= 2) {
            partition.classes[dyadic_index(h.edges[e].size())].push_back(e);
        }
    }
    return partition;
}

Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<EdgeId>& edge_ids)
{
    Hypergraph sub;
    sub.n = h.n;
    sub.edges.reserve(edge_ids.size());
    for (EdgeId e : edge_ids) {
        sub.edges.push_back(h.edges.at(e));
    }
    return sub;
}

} // namespace hyperchroma
