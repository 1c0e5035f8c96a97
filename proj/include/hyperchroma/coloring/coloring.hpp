#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperchroma/core/hypergraph.hpp"

namespace hyperchroma {

using Color = std::uint32_t;

/// Per-edge lists of admissible colors. An edge either has no palette or a
/// sorted, duplicate-free list (possibly empty). Colors need not be contiguous.
class PaletteAssignment {
public:
    PaletteAssignment() = default;
    explicit PaletteAssignment(std::size_t edge_count) : lists_(edge_count) {}

    /// Every edge gets {0, ..., colors-1}.
    static PaletteAssignment uniform(std::size_t edge_count, std::size_t colors);

    /// Throws std::invalid_argument if `colors` contains a duplicate.
    void set(EdgeId e, std::vector<Color> colors);
    void clear(EdgeId e) { lists_.at(e).reset(); }

    bool has(EdgeId e) const { return e < lists_.size() && lists_[e].has_value(); }
    const std::vector<Color>& at(EdgeId e) const;
    std::size_t edge_count() const { return lists_.size(); }

    /// Ids of edges that carry a palette, ascending.
    std::vector<EdgeId> edges() const;
    /// Sorted distinct colors over all palettes.
    std::vector<Color> universe() const;

    bool operator==(const PaletteAssignment&) const = default;

private:
    std::vector<std::optional<std::vector<Color>>> lists_;
};

/// A partial or total edge -> color map plus the scope of edges that are
/// meant to be colored.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::size_t edge_count) : colors_(edge_count) {}

    std::size_t edge_count() const { return colors_.size(); }

    void assign(EdgeId e, Color c) { colors_.at(e) = c; }
    void unassign(EdgeId e) { colors_.at(e).reset(); }
    std::optional<Color> color(EdgeId e) const { return e < colors_.size() ? colors_[e] : std::nullopt; }
    bool colored(EdgeId e) const { return color(e).has_value(); }

    const std::vector<EdgeId>& scope() const { return scope_; }
    /// Sorted and deduplicated on the way in.
    void set_scope(std::vector<EdgeId> scope);
    void add_to_scope(const std::vector<EdgeId>& ids);

    std::size_t colored_count() const;
    std::size_t colors_used() const;

    /// Copies every colored entry and the scope of `other` into this coloring.
    void merge(const EdgeColoring& other);

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<std::optional<Color>> colors_;
    std::vector<EdgeId> scope_;
};

enum class ColoringViolationKind {
    Conflict,       // two intersecting colored edges share a color
    Uncolored,      // scope edge without a color
    OffPalette,     // color outside the edge's palette
    MissingPalette, // colored edge has no palette while palettes are in force
    UnknownEdge,    // scope or coloring refers to an edge id h does not have
};

const char* to_string(ColoringViolationKind kind);

struct ColoringViolation {
    ColoringViolationKind kind;
    EdgeId edge = 0;
    std::optional<EdgeId> other;
    std::optional<Vertex> vertex;
    std::optional<Color> color;
};

struct VerificationReport {
    std::vector<ColoringViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Properness over all colored edges, completeness over the scope, and list
/// membership when palettes are given. h must be linear so every conflicting
/// pair is reported once, at its shared vertex.
VerificationReport verify_coloring(const Hypergraph& h, const EdgeColoring& coloring);
VerificationReport verify_coloring(const Hypergraph& h, const EdgeColoring& coloring,
                                   const PaletteAssignment& palettes);

/// Structured colorer failure. Colorers never throw on palette exhaustion.
struct ColoringFailure {
    std::string phase;
    std::optional<int> class_index;
    EdgeId edge = 0;
    std::vector<Color> palette;  // the stuck edge's palette (as offered to this phase)
    std::vector<Color> blocked;  // palette colors already taken by intersecting edges
    std::string message;
};

struct ColoringOutcome {
    EdgeColoring coloring; // partial on failure
    std::optional<ColoringFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

enum class OrderPolicy {
    DegreeDescending, // line-graph degree within the scope, ties by ascending id
    InputOrder,
    Random,
};

const char* to_string(OrderPolicy policy);
std::optional<OrderPolicy> parse_order_policy(const std::string& name);

struct GreedyOptions {
    OrderPolicy order = OrderPolicy::DegreeDescending;
    std::uint64_t seed = 0; // used by OrderPolicy::Random only
};

/// Throws std::logic_error if `outcome` claims success but fails verification.
void assert_verified(const Hypergraph& h, const ColoringOutcome& outcome, const PaletteAssignment& palettes,
                     const char* where);

} // namespace hyperchroma
