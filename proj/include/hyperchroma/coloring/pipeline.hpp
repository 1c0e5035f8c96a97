#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperchroma/coloring/coloring.hpp"
#include "hyperchroma/coloring/residual.hpp"

namespace hyperchroma {

/// Parameters of the three-phase list-coloring pipeline for a linear
/// hypergraph with minimum rank >= i:
///
///  1. split the colors into class I / class II;
///  2. color the small dyadic classes A_1 .. A_{k-1} greedily from class II;
///  3. split class I into ceil(log2 k) subclasses and color each residue
///     family of the big classes A_k, A_{k+1}, ... with layered_color.
struct PipelineParams {
    int i = 3;
    double eps = 1.0;
    int k = 4;
    /// Q; defaults to ceil((1 + 3 eps) n / (i - 1)).
    std::optional<std::size_t> palette_size;
    std::uint64_t seed = 0;
    std::size_t retries = 100;
    /// Per-subclass minimum for the class-I subsplit. Defaults to half the
    /// expected share of the smallest class-I palette among big edges.
    std::optional<double> subclass_threshold;
    GreedyOptions greedy;

    /// Throws std::invalid_argument for i < 2, eps <= 0, k < 1, retries == 0.
    void validate() const;
};

std::size_t default_palette_size(std::size_t n, int i, double eps);

/// Class-I probability and the two per-edge thresholds of the first split.
struct TwoClassPlan {
    double p = 0;
    double class_one_threshold = 0;
    double class_two_threshold = 0;
};

/// p = 1.5 n eps / ((i-1) Q), class I >= n eps / (i-1), class II >= n (1+eps) / (i-1).
TwoClassPlan two_class_plan(std::size_t n, int i, double eps, std::size_t palette_size);

/// Number of subclasses class I is split into: max(1, ceil(log2 k)).
int subclass_count(int k);

struct FamilyReport {
    int base = 0;
    std::size_t subclass = 0;
    std::size_t edges = 0;
    std::vector<LayerRecord> layers;
};

struct PipelineReport {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t min_rank = 0;
    std::size_t max_rank = 0;
    int i = 0;
    double eps = 0;
    int k = 0;
    std::size_t palette_size = 0;
    std::uint64_t seed = 0;
    std::size_t retries = 0;
    std::string order;

    TwoClassPlan plan;
    std::size_t split_attempts = 0;
    std::size_t min_class_one = 0;
    std::size_t min_class_two = 0;

    int subclasses = 0;
    double subclass_threshold = 0;
    std::size_t subsplit_attempts = 0;
    std::vector<std::size_t> min_subclass_sizes;

    std::size_t small_edges = 0;
    std::size_t big_edges = 0;
    std::vector<FamilyReport> families;

    double rank_ceiling = 0;          // sqrt(n e^-k)
    bool rank_ceiling_holds = false;  // P <= sqrt(n e^-k)
    bool min_rank_holds = false;      // rho >= i
    bool palettes_hold = false;       // every palette has >= Q colors
    double target = 0;                // (1 + eps) n / (i - 1)

    std::size_t colors_used = 0;
    bool verified = false;
    std::vector<std::string> warnings;
};

struct PipelineResult {
    ColoringOutcome outcome;
    PipelineReport report;
    bool ok() const { return outcome.ok(); }
};

/// Runs the pipeline; the returned coloring is verified against `palettes`
/// before return. Unmet preconditions (rho < i, short palettes, P above
/// sqrt(n e^-k)) become report warnings. Throws std::invalid_argument if h is
/// not a valid linear hypergraph with at least one edge.
PipelineResult full_pipeline(const Hypergraph& h, const PaletteAssignment& palettes, const PipelineParams& params);

/// Same, with every edge given the palette {0, ..., Q-1}.
PipelineResult full_pipeline(const Hypergraph& h, const PipelineParams& params);

} // namespace hyperchroma
