#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperchroma/coloring/coloring.hpp"

namespace hyperchroma {

/// Residual-palette bookkeeping for one E1 edge.
struct ResidualRecord {
    EdgeId edge = 0;
    std::size_t palette_size = 0;
    std::size_t contacts = 0;      // E2 edges meeting this edge
    std::size_t removed = 0;       // distinct palette colors taken by those contacts
    std::size_t residual_size = 0; // palette_size - removed
};

/// Result of coloring E2 first and E1 from residual palettes.
///
/// contact_bound is (n-1) * P1 / (rho2 - 1) with P1 the max rank in E1 and
/// rho2 the min rank in E2; it is absent when E1 or E2 is empty. Every run
/// checks contacts <= contact_bound and residual_size >= palette_size -
/// contacts for each E1 edge and throws std::logic_error otherwise.
struct ResidualRun {
    ColoringOutcome outcome;
    std::vector<ResidualRecord> records;
    std::optional<double> contact_bound;
    std::size_t max_contacts = 0;
    std::optional<std::size_t> min_residual;

    bool ok() const { return outcome.ok(); }
};

/// Colors E2 with greedy_list_color, then E1 from the residual palettes.
/// Failures carry phase "residual:E2" or "residual:E1". E1 and E2 must be
/// disjoint (std::invalid_argument otherwise).
ResidualRun color_with_residuals(const Hypergraph& h, const std::vector<EdgeId>& e1, const std::vector<EdgeId>& e2,
                                 const PaletteAssignment& palettes, const GreedyOptions& options = {});

/// The E1 half of color_with_residuals: `fixed` already colors E2 (its
/// scope), and E1 is colored from what the fixed colors leave.
ResidualRun extend_with_residuals(const Hypergraph& h, const EdgeColoring& fixed, const std::vector<EdgeId>& e1,
                                  const PaletteAssignment& palettes, const GreedyOptions& options = {});

/// Order in which one residue family {base, base+stride, ...} of dyadic
/// classes is colored: base + ceiling*stride down to base.
struct LayerSchedule {
    int base = 1;
    int stride = 1;
    int ceiling = 0;

    /// Largest index first; strictly decreasing with common difference stride.
    std::vector<int> classes() const;
};

/// ceiling = ceil(log2 n), raised if the partition holds a family class above
/// it. Throws std::invalid_argument unless base >= 1 and stride >= 1.
LayerSchedule make_layer_schedule(int base, int stride, std::size_t n, const DyadicPartition& partition);

struct LayerRecord {
    int class_index = 0;
    std::size_t edges = 0;
    std::size_t colored_above = 0; // edges of the family already colored when this layer started
    std::optional<double> contact_bound;
    std::size_t max_contacts = 0;
    std::optional<std::size_t> min_residual;
};

struct LayeredRun {
    ColoringOutcome outcome;
    LayerSchedule schedule;
    std::vector<LayerRecord> layers; // nonempty layers, in coloring order

    bool ok() const { return outcome.ok(); }
};

/// Colors the family's classes largest index first; each class is E1 against
/// E2 = every family class already colored. A failure is tagged with the
/// class index.
LayeredRun layered_color(const Hypergraph& h, const DyadicPartition& partition, const LayerSchedule& schedule,
                         const PaletteAssignment& palettes, const GreedyOptions& options = {});

} // namespace hyperchroma
