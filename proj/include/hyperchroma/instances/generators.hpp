#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperchroma/core/hypergraph.hpp"

namespace hyperchroma {

/// A generator spec that cannot be realized at the requested size.
class InfeasibleSpec : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t q);

/// Least prime >= u, by trial division. Returns 2 for u <= 2.
std::uint64_t smallest_prime_at_least(double u);

/// The projective plane over GF(q), q prime: points are the 1-dimensional
/// subspaces of GF(q)^3, lines the 2-dimensional ones. Yields q^2+q+1
/// vertices and as many edges, each of rank q+1, every two meeting in exactly
/// one vertex; these are checked after construction (std::logic_error).
/// Throws std::invalid_argument unless q is prime.
Hypergraph projective_plane(std::uint64_t q);

/// Same edges, vertex count raised to n_target with isolated vertices.
/// Throws std::invalid_argument if n_target < h.n.
Hypergraph pad_isolated(const Hypergraph& h, std::size_t n_target);

struct LowerBoundSpec {
    double x = 0.5;     // in (0, 1)
    double delta = 0.1; // > 0
    std::size_t n = 0;
};

struct LowerBoundCertificate {
    double x = 0;
    double delta = 0;
    std::size_t n = 0;
    double u = 0;                  // sqrt(n x)
    std::uint64_t q = 0;           // smallest prime >= u
    std::uint64_t r = 0;           // q + 1, the common rank
    std::uint64_t plane_size = 0;  // q^2 + q + 1 = chromatic index of the plane
    double xn = 0;
    bool exceeds_xn = false;       // plane_size > x n
    bool rank_at_least_sqrt = false; // r >= sqrt(n x)
    bool rank_within_window = false; // r <= (1 + delta) sqrt(n x)
    std::size_t min_rank = 0;
    std::size_t max_rank = 0;
};

struct LowerBoundInstance {
    Hypergraph hypergraph;
    LowerBoundCertificate certificate;
};

/// Padded projective plane on n vertices whose list chromatic index exceeds
/// x n: its line graph is complete, so q_list >= q = q^2+q+1 > x n.
/// Throws InfeasibleSpec (naming the smallest feasible n) when q^2+q+1 > n,
/// std::invalid_argument for x outside (0,1), delta <= 0, or n == 0.
LowerBoundInstance lower_bound_instance(const LowerBoundSpec& spec);

/// Smallest n' >= from at which (x, delta) is feasible, if one
/// exists below `limit`.
std::optional<std::size_t> smallest_feasible_n(double x, std::size_t from, std::size_t limit = 10'000'000);

struct RandomLinearSpec {
    std::size_t n = 0;
    std::size_t rank_min = 3;
    std::size_t rank_max = 3;
    /// Stop after this many edges; unlimited when absent.
    std::optional<std::size_t> target_edges;
    /// Stop after this many consecutive rejected draws.
    std::size_t failure_budget = 1000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless 2 <= rank_min <= rank_max <= n.
    void validate() const;
};

struct RandomInstance {
    Hypergraph hypergraph;
    std::size_t draws = 0;
    std::optional<std::string> shortfall; // set when target_edges was not reached
};

/// Greedy randomized partial-Steiner packing: draw a uniform rank in
/// [rank_min, rank_max] and a uniform subset of that size; keep it iff it
/// shares at most one vertex with every kept edge. Deterministic in the seed.
RandomInstance random_linear_hypergraph(const RandomLinearSpec& spec);

} // namespace hyperchroma
