#include "hyperchroma/coloring/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hyperchroma {

PaletteAssignment PaletteAssignment::uniform(std::size_t edge_count, std::size_t colors)
{
    PaletteAssignment palettes(edge_count);
    std::vector<Color> all(colors);
    std::iota(all.begin(), all.end(), Color{0});
    for (EdgeId e = 0; e < edge_count; ++e) {
        palettes.lists_[e] = all;
    }
    return palettes;
}

void PaletteAssignment::set(EdgeId e, std::vector<Color> colors)
{
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
        throw std::invalid_argument("palette of edge " + std::to_string(e) + " lists a color twice");
    }
    lists_.at(e) = std::move(colors);
}

const std::vector<Color>& PaletteAssignment::at(EdgeId e) const
{
    if (!has(e)) {
        throw std::out_of_range("edge " + std::to_string(e) + " has no palette");
    }
    return *lists_[e];
}

std::vector<EdgeId> PaletteAssignment::edges() const
{
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < lists_.size(); ++e) {
        if (lists_[e]) {
            ids.push_back(e);
        }
    }
    return ids;
}

std::vector<Color> PaletteAssignment::universe() const
{
    std::vector<Color> all;
    for (const auto& list : lists_) {
        if (list) {
            all.insert(all.end(), list->begin(), list->end());
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

void EdgeColoring::set_scope(std::vector<EdgeId> scope)
{
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    scope_ = std::move(scope);
}

void EdgeColoring::add_to_scope(const std::vector<EdgeId>& ids)
{
    std::vector<EdgeId> joined = scope_;
    joined.insert(joined.end(), ids.begin(), ids.end());
    set_scope(std::move(joined));
}

std::size_t EdgeColoring::colored_count() const
{
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

std::size_t EdgeColoring::colors_used() const
{
    std::vector<Color> used;
    for (const auto& c : colors_) {
        if (c) {
            used.push_back(*c);
        }
    }
    std::sort(used.begin(), used.end());
    return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

void EdgeColoring::merge(const EdgeColoring& other)
{
    if (other.colors_.size() > colors_.size()) {
        colors_.resize(other.colors_.size());
    }
    for (EdgeId e = 0; e < other.colors_.size(); ++e) {
        if (other.colors_[e]) {
            colors_[e] = other.colors_[e];
        }
    }
    add_to_scope(other.scope_);
}

const char* to_string(ColoringViolationKind kind)
{
    switch (kind) {
    case ColoringViolationKind::Conflict:
        return "conflict";
    case ColoringViolationKind::Uncolored:
        return "uncolored";
    case ColoringViolationKind::OffPalette:
        return "off_palette";
    case ColoringViolationKind::MissingPalette:
        return "missing_palette";
    case ColoringViolationKind::UnknownEdge:
        return "unknown_edge";
    }
    return "unknown";
}

namespace {

VerificationReport verify_impl(const Hypergraph& h, const EdgeColoring& coloring, const PaletteAssignment* palettes)
{
    VerificationReport report;
    auto& out = report.violations;
    const std::size_t m = h.edge_count();

    for (EdgeId e : coloring.scope()) {
        if (e >= m) {
            out.push_back({ColoringViolationKind::UnknownEdge, e, {}, {}, {}});
        } else if (!coloring.colored(e)) {
            out.push_back({ColoringViolationKind::Uncolored, e, {}, {}, {}});
        }
    }
    for (EdgeId e = static_cast<EdgeId>(m); e < coloring.edge_count(); ++e) {
        if (coloring.colored(e)) {
            out.push_back({ColoringViolationKind::UnknownEdge, e, {}, {}, coloring.color(e)});
        }
    }

    if (palettes) {
        for (EdgeId e = 0; e < m; ++e) {
            const auto c = coloring.color(e);
            if (!c) {
                continue;
            }
            if (!palettes->has(e)) {
                out.push_back({ColoringViolationKind::MissingPalette, e, {}, {}, c});
                continue;
            }
            const auto& list = palettes->at(e);
            if (!std::binary_search(list.begin(), list.end(), *c)) {
                out.push_back({ColoringViolationKind::OffPalette, e, {}, {}, c});
            }
        }
    }

    // Two colored edges conflict iff some vertex sees their common color twice.
    const auto inc = h.incidence();
    std::unordered_map<Color, EdgeId> first_with;
    for (Vertex v = 0; v < inc.size(); ++v) {
        first_with.clear();
        for (EdgeId e : inc[v]) {
            const auto c = coloring.color(e);
            if (!c) {
                continue;
            }
            auto [it, inserted] = first_with.emplace(*c, e);
            if (!inserted) {
                out.push_back({ColoringViolationKind::Conflict, it->second, e, v, c});
            }
        }
    }
    return report;
}

} // namespace

VerificationReport verify_coloring(const Hypergraph& h, const EdgeColoring& coloring)
{
    return verify_impl(h, coloring, nullptr);
}

VerificationReport verify_coloring(const Hypergraph& h, const EdgeColoring& coloring,
                                   const PaletteAssignment& palettes)
{
    return verify_impl(h, coloring, &palettes);
}

const char* to_string(OrderPolicy policy)
{
    switch (policy) {
    case OrderPolicy::DegreeDescending:
        return "degree";
    case OrderPolicy::InputOrder:
        return "input";
    case OrderPolicy::Random:
        return "random";
    }
    return "unknown";
}

std::optional<OrderPolicy> parse_order_policy(const std::string& name)
{
    if (name == "degree") {
        return OrderPolicy::DegreeDescending;
    }
    if (name == "input") {
        return OrderPolicy::InputOrder;
    }
    if (name == "random") {
        return OrderPolicy::Random;
    }
    return std::nullopt;
}

void assert_verified(const Hypergraph& h, const ColoringOutcome& outcome, const PaletteAssignment& palettes,
                     const char* where)
{
    if (!outcome.ok()) {
        return;
    }
    const auto report = verify_coloring(h, outcome.coloring, palettes);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw std::logic_error(std::string(where) + " produced an invalid coloring (" + to_string(v.kind) +
                               " at edge " + std::to_string(v.edge) + ")");
    }
}

} // namespace hyperchroma
