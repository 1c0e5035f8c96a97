#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperchroma/coloring/coloring.hpp"

namespace hyperchroma {

/// An exact oracle declined to run because the instance exceeds its caps.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChromaticIndexResult {
    std::size_t colors = 0;
    std::size_t clique_bound = 0; // size of a maximum clique of L(H)
    EdgeColoring witness;          // optimal coloring with colors 0..colors-1
};

/// Exact chromatic index q(H) = chi(L(H)) by backtracking over colorings of
/// the line graph, starting from the maximum-clique lower bound. Refuses
/// instances with more than `cap_edges` edges (at most 64).
ChromaticIndexResult brute_force_chromatic_index(const Hypergraph& h, std::size_t cap_edges = 16);

struct ListOracleOptions {
    std::size_t cap_edges = 8;
    /// Colors available to palettes; defaults to Q + |E| for each tested Q.
    std::optional<std::size_t> universe;
    /// Hard stop on enumerated palette assignments per tested Q.
    std::uint64_t max_assignments = 50'000'000;
};

struct ListChromaticIndexResult {
    std::size_t value = 0;
    std::size_t chromatic_index = 0;  // lower bound
    std::size_t degree_bound = 0;     // max line-graph degree + 1, upper bound
    std::uint64_t assignments_checked = 0;
    /// For value - 1 >= chromatic_index: palettes (indexed by edge id) with
    /// no proper list coloring.
    std::optional<std::vector<std::vector<Color>>> uncolorable_witness;
};

/// Smallest Q such that every assignment of size-Q palettes over the color
/// universe admits a proper list edge coloring. Palettes are enumerated up to
/// color relabeling (each new palette draws from colors already in use plus
/// fresh ones), and only on the Q-core of L(H): vertices of degree < Q can
/// always be colored last. Exact within the caps; throws OracleRefused
/// otherwise.
ListChromaticIndexResult brute_force_list_chromatic_index(const Hypergraph& h, const ListOracleOptions& options = {});

} // namespace hyperchroma
