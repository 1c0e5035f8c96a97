#pragma once

#include <cstddef>
#include <vector>

#include "hyperchroma/core/hypergraph.hpp"

namespace hyperchroma {

/// L(H): one vertex per hyperedge, two adjacent iff the hyperedges meet.
/// Each adjacency carries the unique shared hypergraph vertex.
class LineGraph {
public:
    struct Neighbor {
        EdgeId edge;
        Vertex shared;
        bool operator==(const Neighbor&) const = default;
    };

    LineGraph() = default;
    explicit LineGraph(std::vector<std::vector<Neighbor>> adjacency);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t degree(EdgeId e) const { return adjacency_[e].size(); }
    std::size_t max_degree() const;
    std::size_t adjacency_count() const; // number of undirected adjacencies

    /// Neighbors of e sorted by edge id.
    const std::vector<Neighbor>& neighbors(EdgeId e) const { return adjacency_[e]; }
    bool adjacent(EdgeId a, EdgeId b) const;

private:
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// Requires h to be linear: each pair of edges is discovered at most once.
LineGraph build_line_graph(const Hypergraph& h);

struct TriangleStats {
    // Type 1: the three edges pass through one common vertex.
    // Type 2: the three pairwise intersections are three distinct vertices.
    std::vector<std::size_t> total;
    std::vector<std::size_t> type1;
    std::vector<std::size_t> type2;
    std::size_t max_degree = 0;    // d
    std::size_t max_triangles = 0; // f
    std::size_t triangle_count = 0;
};

/// Exact per-vertex triangle counts of lg, split by type. lg must be built
/// from h.
TriangleStats count_triangles(const Hypergraph& h, const LineGraph& lg);

} // namespace hyperchroma
