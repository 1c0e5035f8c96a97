#include "hyperchroma/coloring/greedy.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperchroma/util/rng.hpp"

namespace hyperchroma {

namespace {

std::vector<EdgeId> normalized_scope(const Hypergraph& h, std::vector<EdgeId> scope)
{
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    if (!scope.empty() && scope.back() >= h.edge_count()) {
        throw std::invalid_argument("scope names edge " + std::to_string(scope.back()) + " but h has " +
                                    std::to_string(h.edge_count()) + " edges");
    }
    return scope;
}

} // namespace

std::vector<EdgeId> greedy_order(const Hypergraph& h, const std::vector<EdgeId>& scope_in,
                                 const GreedyOptions& options)
{
    std::vector<EdgeId> order = normalized_scope(h, scope_in);
    switch (options.order) {
    case OrderPolicy::InputOrder:
        break;
    case OrderPolicy::Random: {
        Rng rng(options.seed);
        for (std::size_t j = order.size(); j > 1; --j) {
            std::swap(order[j - 1], order[uniform_below(rng, j)]);
        }
        break;
    }
    case OrderPolicy::DegreeDescending: {
        // deg_L(e) restricted to the scope: sum over v in e of (scope edges at v) - 1.
        std::vector<std::size_t> at_vertex(h.n, 0);
        for (EdgeId e : order) {
            for (Vertex v : h.edges[e]) {
                ++at_vertex[v];
            }
        }
        std::vector<std::size_t> degree(h.edge_count(), 0);
        for (EdgeId e : order) {
            for (Vertex v : h.edges[e]) {
                degree[e] += at_vertex[v] - 1;
            }
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](EdgeId a, EdgeId b) { return degree[a] > degree[b]; });
        break;
    }
    }
    return order;
}

ColoringOutcome greedy_list_color(const Hypergraph& h, const std::vector<EdgeId>& scope,
                                  const PaletteAssignment& palettes, const GreedyOptions& options)
{
    ColoringOutcome outcome;
    outcome.coloring = EdgeColoring(h.edge_count());
    outcome.coloring.set_scope(normalized_scope(h, scope));

    std::vector<std::vector<Color>> taken(h.n); // colors already used by scope edges at each vertex
    std::vector<Color> forbidden;
    for (EdgeId e : greedy_order(h, scope, options)) {
        if (!palettes.has(e)) {
            outcome.failure = ColoringFailure{"greedy", {}, e, {}, {}, "edge has no palette"};
            return outcome;
        }
        const auto& palette = palettes.at(e);
        forbidden.clear();
        for (Vertex v : h.edges[e]) {
            forbidden.insert(forbidden.end(), taken[v].begin(), taken[v].end());
        }
        std::sort(forbidden.begin(), forbidden.end());
        forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

        // First palette color not in `forbidden`; both lists are sorted.
        auto blocker = forbidden.begin();
        std::optional<Color> pick;
        for (Color c : palette) {
            blocker = std::lower_bound(blocker, forbidden.end(), c);
            if (blocker == forbidden.end() || *blocker != c) {
                pick = c;
                break;
            }
        }
        if (!pick) {
            ColoringFailure failure{"greedy", {}, e, palette, {}, "palette exhausted"};
            std::set_intersection(palette.begin(), palette.end(), forbidden.begin(), forbidden.end(),
                                  std::back_inserter(failure.blocked));
            outcome.failure = std::move(failure);
            return outcome;
        }
        outcome.coloring.assign(e, *pick);
        for (Vertex v : h.edges[e]) {
            taken[v].push_back(*pick);
        }
    }
    assert_verified(h, outcome, palettes, "greedy_list_color");
    return outcome;
}

} // namespace hyperchroma
