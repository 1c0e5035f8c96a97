#include "hyperchroma/coloring/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace hyperchroma {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t j)
{
    return Mask{1} << j;
}

std::vector<Mask> line_graph_masks(const Hypergraph& h)
{
    std::vector<Mask> adj(h.edge_count(), 0);
    for (const auto& through : h.incidence()) {
        for (EdgeId a : through) {
            for (EdgeId b : through) {
                if (a != b) {
                    adj[a] |= bit(b);
                }
            }
        }
    }
    return adj;
}

void grow_clique(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t& best)
{
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    while (candidates != 0) {
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) {
            return;
        }
        const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= ~bit(v);
        grow_clique(adj, candidates & adj[v], size + 1, best);
    }
}

std::size_t max_clique(const std::vector<Mask>& adj)
{
    std::size_t best = adj.empty() ? 0 : 1;
    const Mask all = adj.size() == 64 ? ~Mask{0} : bit(adj.size()) - 1;
    grow_clique(adj, all, 0, best);
    return best;
}

// Backtracking k-coloring in a fixed order; a vertex may open at most one new color.
bool color_with(const std::vector<Mask>& adj, const std::vector<std::size_t>& order, std::size_t depth,
                std::size_t k, std::size_t opened, std::vector<int>& colors)
{
    if (depth == order.size()) {
        return true;
    }
    const std::size_t v = order[depth];
    const std::size_t limit = std::min(k, opened + 1);
    for (std::size_t c = 0; c < limit; ++c) {
        bool clash = false;
        for (Mask rest = adj[v]; rest != 0; rest &= rest - 1) {
            if (colors[static_cast<std::size_t>(std::countr_zero(rest))] == static_cast<int>(c)) {
                clash = true;
                break;
            }
        }
        if (clash) {
            continue;
        }
        colors[v] = static_cast<int>(c);
        if (color_with(adj, order, depth + 1, k, std::max(opened, c + 1), colors)) {
            return true;
        }
        colors[v] = -1;
    }
    return false;
}

// List colorability of the graph induced on `vertices` (local indices), lists as color masks.
bool list_colorable(const std::vector<Mask>& adj, const std::vector<Mask>& lists, std::vector<Mask>& avail,
                    Mask uncolored)
{
    if (uncolored == 0) {
        return true;
    }
    // Most constrained vertex first.
    std::size_t pick = 0;
    int fewest = 65;
    for (Mask rest = uncolored; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        const int options = std::popcount(avail[v]);
        if (options < fewest) {
            fewest = options;
            pick = v;
        }
    }
    if (fewest == 0) {
        return false;
    }
    for (Mask choices = avail[pick]; choices != 0; choices &= choices - 1) {
        const Mask c = choices & (~choices + 1);
        std::vector<std::pair<std::size_t, Mask>> undo;
        for (Mask nb = adj[pick] & uncolored; nb != 0; nb &= nb - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(nb));
            if (avail[u] & c) {
                undo.emplace_back(u, avail[u]);
                avail[u] &= ~c;
            }
        }
        if (list_colorable(adj, lists, avail, uncolored & ~bit(pick))) {
            return true;
        }
        for (const auto& [u, saved] : undo) {
            avail[u] = saved;
        }
    }
    return false;
}

bool list_colorable(const std::vector<Mask>& adj, const std::vector<Mask>& lists)
{
    std::vector<Mask> avail = lists;
    const Mask all = lists.size() == 64 ? ~Mask{0} : bit(lists.size()) - 1;
    return list_colorable(adj, lists, avail, all);
}

// Enumerates palette assignments on the core up to color relabeling.
class ListSearch {
public:
    ListSearch(std::vector<Mask> adj, std::size_t q, std::size_t universe, std::uint64_t budget)
        : adj_(std::move(adj)), q_(q), universe_(universe), budget_(budget), lists_(adj_.size(), 0),
          settled_at_(adj_.size())
    {
        // Vertex v is settled once it and all its neighbors have lists.
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            std::size_t last = v;
            for (Mask nb = adj_[v]; nb != 0; nb &= nb - 1) {
                last = std::max(last, static_cast<std::size_t>(std::countr_zero(nb)));
            }
            settled_at_[last].push_back(v);
        }
    }

    // True iff every assignment is list-colorable.
    bool all_colorable() { return assign(0, 0); }

    std::uint64_t checked() const { return checked_; }
    const std::vector<Mask>& lists() const { return lists_; }

private:
    bool assign(std::size_t j, std::size_t used)
    {
        if (j == lists_.size()) {
            if (++checked_ > budget_) {
                throw OracleRefused("list oracle exceeded its budget of " + std::to_string(budget_) +
                                    " palette assignments");
            }
            return list_colorable(adj_, lists_);
        }
        for (std::size_t reuse = 0; reuse <= std::min(q_, used); ++reuse) {
            const std::size_t fresh = q_ - reuse;
            if (used + fresh > universe_) {
                continue;
            }
            const Mask fresh_mask = fresh == 0 ? 0 : ((fresh + used == 64 ? ~Mask{0} : bit(used + fresh) - 1) & ~(bit(used) - 1));
            // Every reuse-subset of the `used` colors, in Gosper order.
            Mask subset = reuse == 0 ? 0 : bit(reuse) - 1;
            const Mask end = bit(used);
            while (true) {
                lists_[j] = subset | fresh_mask;
                if (reduced(j) && !assign(j + 1, used + fresh)) {
                    return false;
                }
                if (reuse == 0) {
                    break;
                }
                const Mask low = subset & (~subset + 1);
                const Mask ripple = subset + low;
                subset = (((ripple ^ subset) >> 2) / low) | ripple;
                if (subset >= end) {
                    break;
                }
            }
        }
        return true;
    }

    // If some assignment is not colorable, one is where each list either
    // avoids private colors (absent from every neighbor's list) or contains
    // every neighbor color: a vertex with a private color is colored last,
    // so its list can be rewritten that way without helping. Branches that
    // break this for a settled vertex are skipped.
    bool reduced(std::size_t j) const
    {
        for (std::size_t v : settled_at_[j]) {
            Mask around = 0;
            for (Mask nb = adj_[v]; nb != 0; nb &= nb - 1) {
                around |= lists_[static_cast<std::size_t>(std::countr_zero(nb))];
            }
            if ((lists_[v] & ~around) != 0 && (lists_[v] & around) != around) {
                return false;
            }
        }
        return true;
    }

    std::vector<Mask> adj_;
    std::size_t q_;
    std::size_t universe_;
    std::uint64_t budget_;
    std::vector<Mask> lists_;
    std::vector<std::vector<std::size_t>> settled_at_;
    std::uint64_t checked_ = 0;
};

std::vector<Color> colors_of(Mask mask)
{
    std::vector<Color> out;
    for (; mask != 0; mask &= mask - 1) {
        out.push_back(static_cast<Color>(std::countr_zero(mask)));
    }
    return out;
}

} // namespace

ChromaticIndexResult brute_force_chromatic_index(const Hypergraph& h, std::size_t cap_edges)
{
    const std::size_t m = h.edge_count();
    if (m > cap_edges || m > 64) {
        throw OracleRefused("chromatic-index oracle is capped at " + std::to_string(std::min<std::size_t>(cap_edges, 64)) +
                            " edges; instance has " + std::to_string(m));
    }
    ChromaticIndexResult result;
    result.witness = EdgeColoring(m);
    if (m == 0) {
        return result;
    }
    const auto adj = line_graph_masks(h);
    result.clique_bound = max_clique(adj);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
    std::vector<int> colors(m, -1);
    for (std::size_t k = result.clique_bound;; ++k) {
        std::fill(colors.begin(), colors.end(), -1);
        if (color_with(adj, order, 0, k, 0, colors)) {
            result.colors = k;
            break;
        }
    }
    std::vector<EdgeId> scope(m);
    for (EdgeId e = 0; e < m; ++e) {
        result.witness.assign(e, static_cast<Color>(colors[e]));
        scope[e] = e;
    }
    result.witness.set_scope(std::move(scope));
    return result;
}

ListChromaticIndexResult brute_force_list_chromatic_index(const Hypergraph& h, const ListOracleOptions& options)
{
    const std::size_t m = h.edge_count();
    if (m > options.cap_edges || m > 64) {
        throw OracleRefused("list-chromatic-index oracle is capped at " + std::to_string(options.cap_edges) +
                            " edges; instance has " + std::to_string(m));
    }
    ListChromaticIndexResult result;
    if (m == 0) {
        return result;
    }
    const auto adj = line_graph_masks(h);
    std::size_t max_degree = 0;
    for (Mask a : adj) {
        max_degree = std::max(max_degree, static_cast<std::size_t>(std::popcount(a)));
    }
    result.chromatic_index = brute_force_chromatic_index(h, m).colors;
    result.degree_bound = max_degree + 1;

    for (std::size_t q = result.chromatic_index; q <= result.degree_bound; ++q) {
        // Q-core: strip vertices of degree < q until none remain.
        Mask alive = m == 64 ? ~Mask{0} : bit(m) - 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (Mask rest = alive; rest != 0; rest &= rest - 1) {
                const auto v = static_cast<std::size_t>(std::countr_zero(rest));
                if (static_cast<std::size_t>(std::popcount(adj[v] & alive)) < q) {
                    alive &= ~bit(v);
                    changed = true;
                }
            }
        }
        if (alive == 0) {
            result.value = q;
            return result;
        }

        // Core vertices in BFS order, relabeled 0..c-1.
        std::vector<std::size_t> core;
        Mask seen = 0;
        for (Mask start = alive; start != 0; start &= start - 1) {
            const auto s = static_cast<std::size_t>(std::countr_zero(start));
            if (seen & bit(s)) {
                continue;
            }
            std::vector<std::size_t> queue{s};
            seen |= bit(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                core.push_back(queue[head]);
                for (Mask nb = adj[queue[head]] & alive & ~seen; nb != 0; nb &= nb - 1) {
                    const auto u = static_cast<std::size_t>(std::countr_zero(nb));
                    seen |= bit(u);
                    queue.push_back(u);
                }
            }
        }
        std::vector<Mask> core_adj(core.size(), 0);
        for (std::size_t a = 0; a < core.size(); ++a) {
            for (std::size_t b = 0; b < core.size(); ++b) {
                if (adj[core[a]] & bit(core[b])) {
                    core_adj[a] |= bit(b);
                }
            }
        }

        const std::size_t universe = options.universe.value_or(q + m);
        if (universe > 64) {
            throw OracleRefused("color universe of " + std::to_string(universe) + " exceeds 64");
        }
        ListSearch search(core_adj, q, universe, options.max_assignments);
        const bool all_ok = search.all_colorable();
        result.assignments_checked += search.checked();
        if (all_ok) {
            result.value = q;
            return result;
        }
        std::vector<std::vector<Color>> witness(m);
        for (EdgeId e = 0; e < m; ++e) {
            witness[e].resize(q);
            std::iota(witness[e].begin(), witness[e].end(), Color{0});
        }
        for (std::size_t a = 0; a < core.size(); ++a) {
            witness[core[a]] = colors_of(search.lists()[a]);
        }
        result.uncolorable_witness = std::move(witness);
    }
    // Q = max degree + 1 always leaves an empty core, so the loop returns.
    result.value = result.degree_bound;
    return result;
}

} // namespace hyperchroma
