#include "hyperchroma/coloring/residual.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hyperchroma/coloring/greedy.hpp"

namespace hyperchroma {

namespace {

std::vector<EdgeId> sorted_unique(std::vector<EdgeId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

void tag(ColoringFailure& failure, const char* phase)
{
    failure.phase = phase;
}

} // namespace

ResidualRun extend_with_residuals(const Hypergraph& h, const EdgeColoring& fixed, const std::vector<EdgeId>& e1_in,
                                  const PaletteAssignment& palettes, const GreedyOptions& options)
{
    const std::vector<EdgeId> e1 = sorted_unique(e1_in);
    const std::vector<EdgeId>& e2 = fixed.scope();
    {
        std::vector<EdgeId> common;
        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
        if (!common.empty()) {
            throw std::invalid_argument("E1 and E2 share edge " + std::to_string(common.front()));
        }
    }

    ResidualRun run;
    std::size_t p1 = 0;
    std::size_t rho2 = 0;
    if (!e1.empty() && !e2.empty()) {
        for (EdgeId e : e1) {
            p1 = std::max(p1, h.rank(e));
        }
        rho2 = h.rank(e2.front());
        for (EdgeId f : e2) {
            rho2 = std::min(rho2, h.rank(f));
        }
        if (rho2 >= 2) {
            run.contact_bound = static_cast<double>(h.n - 1) * static_cast<double>(p1) / static_cast<double>(rho2 - 1);
        }
    }

    // E2 edges through each vertex; linearity makes each contact appear at
    // exactly one vertex of e.
    std::vector<std::vector<EdgeId>> e2_at(h.n);
    for (EdgeId f : e2) {
        for (Vertex v : h.edges.at(f)) {
            e2_at[v].push_back(f);
        }
    }

    PaletteAssignment residual(h.edge_count());
    std::vector<Color> used;
    for (EdgeId e : e1) {
        if (!palettes.has(e)) {
            run.outcome.coloring = fixed;
            run.outcome.failure = ColoringFailure{"residual:E1", {}, e, {}, {}, "edge has no palette"};
            return run;
        }
        const auto& palette = palettes.at(e);
        used.clear();
        std::size_t contacts = 0;
        for (Vertex v : h.edges[e]) {
            for (EdgeId f : e2_at[v]) {
                ++contacts;
                if (const auto c = fixed.color(f)) {
                    used.push_back(*c);
                }
            }
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        std::vector<Color> left;
        std::set_difference(palette.begin(), palette.end(), used.begin(), used.end(), std::back_inserter(left));

        ResidualRecord record{e, palette.size(), contacts, palette.size() - left.size(), left.size()};
        if (run.contact_bound && contacts * (rho2 - 1) > (h.n - 1) * p1) {
            throw std::logic_error("E1 edge " + std::to_string(e) + " meets " + std::to_string(contacts) +
                                   " E2 edges, above (n-1)P1/(rho2-1)");
        }
        if (record.residual_size + contacts < record.palette_size) {
            throw std::logic_error("residual palette shrank by more than the contact count");
        }
        run.max_contacts = std::max(run.max_contacts, contacts);
        run.min_residual = run.min_residual ? std::min(*run.min_residual, left.size()) : left.size();
        run.records.push_back(record);
        residual.set(e, std::move(left));
    }

    ColoringOutcome inner = greedy_list_color(h, e1, residual, options);
    run.outcome.coloring = fixed;
    run.outcome.coloring.merge(inner.coloring);
    if (inner.failure) {
        run.outcome.failure = std::move(inner.failure);
        tag(*run.outcome.failure, "residual:E1");
        // Report the original palette; `blocked` then lists everything E1 and E2 took from it.
        const auto& palette = palettes.at(run.outcome.failure->edge);
        std::vector<Color> left = run.outcome.failure->palette;
        run.outcome.failure->palette = palette;
        std::vector<Color> blocked;
        std::set_difference(palette.begin(), palette.end(), left.begin(), left.end(), std::back_inserter(blocked));
        std::vector<Color> merged;
        std::set_union(blocked.begin(), blocked.end(), run.outcome.failure->blocked.begin(),
                       run.outcome.failure->blocked.end(), std::back_inserter(merged));
        run.outcome.failure->blocked = std::move(merged);
        return run;
    }
    assert_verified(h, run.outcome, palettes, "extend_with_residuals");
    return run;
}

ResidualRun color_with_residuals(const Hypergraph& h, const std::vector<EdgeId>& e1, const std::vector<EdgeId>& e2,
                                 const PaletteAssignment& palettes, const GreedyOptions& options)
{
    {
        const auto a = sorted_unique(e1);
        const auto b = sorted_unique(e2);
        std::vector<EdgeId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) {
            throw std::invalid_argument("E1 and E2 share edge " + std::to_string(common.front()));
        }
    }
    ColoringOutcome first = greedy_list_color(h, e2, palettes, options);
    if (first.failure) {
        ResidualRun run;
        run.outcome = std::move(first);
        tag(*run.outcome.failure, "residual:E2");
        return run;
    }
    return extend_with_residuals(h, first.coloring, e1, palettes, options);
}

std::vector<int> LayerSchedule::classes() const
{
    std::vector<int> out;
    for (int j = ceiling; j >= 0; --j) {
        out.push_back(base + j * stride);
    }
    return out;
}

LayerSchedule make_layer_schedule(int base, int stride, std::size_t n, const DyadicPartition& partition)
{
    if (base < 1 || stride < 1) {
        throw std::invalid_argument("layer schedule needs base >= 1 and stride >= 1");
    }
    LayerSchedule schedule{base, stride, n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1))};
    for (const auto& [index, ids] : partition.classes) {
        if (index >= base && (index - base) % stride == 0) {
            schedule.ceiling = std::max(schedule.ceiling, (index - base) / stride);
        }
    }
    return schedule;
}

LayeredRun layered_color(const Hypergraph& h, const DyadicPartition& partition, const LayerSchedule& schedule,
                         const PaletteAssignment& palettes, const GreedyOptions& options)
{
    LayeredRun run;
    run.schedule = schedule;
    EdgeColoring colored(h.edge_count()); // union of the classes done so far; its scope is E2

    for (int index : schedule.classes()) {
        const auto& layer = partition.at(index);
        if (layer.empty()) {
            continue;
        }
        // Downward order: everything above this class in the family is done.
        for (EdgeId f : colored.scope()) {
            if (!colored.colored(f)) {
                throw std::logic_error("layer above class " + std::to_string(index) + " left uncolored");
            }
        }
        LayerRecord record;
        record.class_index = index;
        record.edges = layer.size();
        record.colored_above = colored.scope().size();

        ResidualRun step = extend_with_residuals(h, colored, layer, palettes, options);
        record.contact_bound = step.contact_bound;
        record.max_contacts = step.max_contacts;
        record.min_residual = step.min_residual;
        run.layers.push_back(record);

        if (step.outcome.failure) {
            run.outcome.coloring = std::move(step.outcome.coloring);
            run.outcome.failure = std::move(step.outcome.failure);
            run.outcome.failure->phase = "layered";
            run.outcome.failure->class_index = index;
            return run;
        }
        colored = std::move(step.outcome.coloring);
    }
    run.outcome.coloring = std::move(colored);
    assert_verified(h, run.outcome, palettes, "layered_color");
    return run;
}

} // namespace hyperchroma
