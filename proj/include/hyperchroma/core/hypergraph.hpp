#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchroma {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Edge = std::vector<Vertex>;

/// A hypergraph H = (V, E) with V = {0, ..., n-1}. Edge ids are positions in
/// `edges`. The struct itself is a candidate structure: nothing is enforced on
/// construction, and validate_linear() decides whether it is a valid linear
/// hypergraph (sorted edges, rank >= 2, pairwise intersections <= 1).
struct Hypergraph {
    std::size_t n = 0;
    std::vector<Edge> edges;

    std::size_t edge_count() const { return edges.size(); }
    std::size_t rank(EdgeId e) const { return edges[e].size(); }

    /// For every vertex, the ids of edges containing it, ascending.
    std::vector<std::vector<EdgeId>> incidence() const;

    bool operator==(const Hypergraph&) const = default;
};

/// Thrown by structural queries that need at least one edge.
class EmptyHypergraphError : public std::domain_error {
public:
    EmptyHypergraphError() : std::domain_error("no edges") {}
};

enum class ViolationKind {
    RankTooSmall,     // |e| < 2
    VertexOutOfRange, // v >= n
    NotStrictlySorted,
    DuplicateVertex,
    DuplicateEdge,
    SharedPair,       // |e ∩ f| >= 2
};

const char* to_string(ViolationKind kind);

struct StructureViolation {
    ViolationKind kind;
    EdgeId edge = 0;
    std::optional<EdgeId> other;         // second edge for DuplicateEdge / SharedPair
    std::optional<Vertex> vertex;        // offending vertex id, when there is one
    std::size_t shared = 0;              // |e ∩ f| for SharedPair

    bool operator==(const StructureViolation&) const = default;
};

struct ValidationReport {
    std::vector<StructureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact check of every Hypergraph invariant. Violations are listed with edge
/// ids; each offending edge pair is listed once.
ValidationReport validate_linear(const Hypergraph& h);

std::size_t min_rank(const Hypergraph& h);
std::size_t max_rank(const Hypergraph& h);

/// Max over vertices of the number of edges through that vertex. Throws
/// std::logic_error if the result exceeds (n-1)/(rho-1), which no linear
/// hypergraph can do.
std::size_t max_vertex_degree(const Hypergraph& h);

/// The real-valued degree ceiling (n-1)/(rho-1) for a linear hypergraph.
double degree_bound(const Hypergraph& h);

/// ln(x) for x >= e, otherwise 1.
double truncated_log(double x);

/// Index i of the dyadic class of an edge of the given rank: 2^i <= rank < 2^(i+1).
int dyadic_index(std::size_t rank);

/// Map i -> A_i, where A_i holds the ids of edges with 2^i <= |e| < 2^(i+1).
/// Only nonempty classes are present; edges of rank < 2 are not placed.
struct DyadicPartition {
    std::map<int, std::vector<EdgeId>> classes;

    const std::vector<EdgeId>& at(int index) const;
    std::size_t total() const;
};

DyadicPartition partition_dyadic(const Hypergraph& h);

/// H(E'): same vertex set, only the given edges (renumbered in the given order).
Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<EdgeId>& edge_ids);

} // namespace hyperchroma
