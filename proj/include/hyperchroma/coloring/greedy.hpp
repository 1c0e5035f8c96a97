#pragma once

#include <vector>

#include "hyperchroma/coloring/coloring.hpp"

namespace hyperchroma {

/// First-fit list coloring of the scope: edges are visited in the order given
/// by `options`, and each takes the smallest palette color not already used by
/// an intersecting scope edge. Edges outside the scope are ignored entirely.
///
/// On exhaustion the outcome carries the partial coloring and a failure naming
/// the stuck edge, its palette, and the colors that blocked it. Successful
/// outcomes are verified before return. Throws std::invalid_argument if the
/// scope names an edge h does not have.
ColoringOutcome greedy_list_color(const Hypergraph& h, const std::vector<EdgeId>& scope,
                                  const PaletteAssignment& palettes, const GreedyOptions& options = {});

/// The visiting order greedy_list_color uses for this scope.
std::vector<EdgeId> greedy_order(const Hypergraph& h, const std::vector<EdgeId>& scope,
                                 const GreedyOptions& options);

} // namespace hyperchroma
