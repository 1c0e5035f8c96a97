#include <doctest.h>

#include <bit>

#include "hyperchroma/coloring/oracle.hpp"
#include "hyperchroma/core/line_graph.hpp"
#include "hyperchroma/instances/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperchroma;

namespace {

Hypergraph cycle(std::size_t length)
{
    Hypergraph h;
    h.n = length;
    for (Vertex v = 0; v < length; ++v) {
        Edge e{v, static_cast<Vertex>((v + 1) % length)};
        std::sort(e.begin(), e.end());
        h.edges.push_back(e);
    }
    return h;
}

// Smallest k such that some assignment of colors 0..k-1 is proper, by plain enumeration.
std::size_t chromatic_index_by_enumeration(const Hypergraph& h)
{
    const std::size_t m = h.edge_count();
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> color(m, 0);
        while (true) {
            bool proper = true;
            for (std::size_t a = 0; a < m && proper; ++a) {
                for (std::size_t b = a + 1; b < m; ++b) {
                    if (color[a] == color[b] && oracle::meets(h.edges[a], h.edges[b])) {
                        proper = false;
                        break;
                    }
                }
            }
            if (proper) {
                return k;
            }
            std::size_t j = 0;
            while (j < m && ++color[j] == k) {
                color[j++] = 0;
            }
            if (j == m) {
                break;
            }
        }
    }
}

} // namespace

TEST_CASE("Fano plane: chromatic and list chromatic index are both 7")
{
    const auto fano = projective_plane(2);
    const auto chi = brute_force_chromatic_index(fano);
    CHECK(chi.colors == 7);
    CHECK(chi.clique_bound == 7);
    CHECK(verify_coloring(fano, chi.witness).ok());
    const auto list = brute_force_list_chromatic_index(fano);
    CHECK(list.value == 7);
    CHECK(list.chromatic_index == 7);
    CHECK(list.degree_bound == 7);
}

TEST_CASE("cycles of pairs: even cycles need 2 colors, odd ones 3")
{
    for (std::size_t length = 3; length <= 9; ++length) {
        const auto h = cycle(length);
        const std::size_t expected = length % 2 == 0 ? 2 : 3;
        CHECK(brute_force_chromatic_index(h).colors == expected);
        // Cycles are 2-choosable when even and 3-choosable when odd.
        if (length <= 8) {
            CHECK(brute_force_list_chromatic_index(h).value == expected);
        }
    }
}

TEST_CASE("chromatic index agrees with plain enumeration")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto h = oracle::small_random(seed, 7);
        if (h.edges.empty()) {
            continue;
        }
        const auto result = brute_force_chromatic_index(h);
        CHECK_MESSAGE(result.colors == chromatic_index_by_enumeration(h), "seed " << seed);
        auto witness = result.witness;
        CHECK(verify_coloring(h, witness).ok());
        CHECK(witness.colors_used() == result.colors);
        CHECK(result.clique_bound <= result.colors);
    }
}

TEST_CASE("list chromatic index sits between chi' and line degree + 1")
{
    for (std::uint64_t seed = 50; seed <= 70; ++seed) {
        const auto h = oracle::small_random(seed, 6);
        if (h.edges.empty()) {
            continue;
        }
        ListOracleOptions options;
        options.max_assignments = 200'000;
        ListChromaticIndexResult list;
        try {
            list = brute_force_list_chromatic_index(h, options);
        } catch (const OracleRefused&) {
            continue; // dense cores are out of reach for exhaustive enumeration
        }
        CHECK(list.value >= list.chromatic_index);
        CHECK(list.value <= list.degree_bound);
        CHECK(list.chromatic_index == brute_force_chromatic_index(h).colors);
        CHECK(list.degree_bound == build_line_graph(h).max_degree() + 1);
    }
}

TEST_CASE("K_{2,3} as pairs: list index equals chromatic index")
{
    // Bipartite, so ch' = chi' = Delta = 3.
    Hypergraph k23;
    k23.n = 5;
    for (Vertex a : {0u, 1u}) {
        for (Vertex b : {2u, 3u, 4u}) {
            k23.edges.push_back({a, b});
        }
    }
    const auto list = brute_force_list_chromatic_index(k23);
    CHECK(list.chromatic_index == 3);
    CHECK(list.value == 3);
}

TEST_CASE("oracles refuse instances above their caps")
{
    const auto plane = projective_plane(3);
    CHECK_THROWS_AS(brute_force_chromatic_index(plane, 12), OracleRefused);
    CHECK_THROWS_AS(brute_force_list_chromatic_index(plane), OracleRefused);
    CHECK(brute_force_chromatic_index(Hypergraph{3, {}}).colors == 0);
}

namespace {

// A linear hypergraph whose line graph is the given simple graph: one
// hyperedge per graph vertex, holding the ids of its incident graph edges
// plus two private vertices so every rank is at least 2.
Hypergraph with_line_graph(std::size_t vertices, const std::vector<std::pair<int, int>>& graph_edges)
{
    Hypergraph h;
    h.n = graph_edges.size() + 2 * vertices;
    h.edges.resize(vertices);
    for (std::size_t j = 0; j < graph_edges.size(); ++j) {
        h.edges[graph_edges[j].first].push_back(static_cast<Vertex>(j));
        h.edges[graph_edges[j].second].push_back(static_cast<Vertex>(j));
    }
    for (std::size_t v = 0; v < vertices; ++v) {
        h.edges[v].push_back(static_cast<Vertex>(graph_edges.size() + 2 * v));
        h.edges[v].push_back(static_cast<Vertex>(graph_edges.size() + 2 * v + 1));
    }
    return h;
}

bool colorable_from(const Hypergraph& h, const std::vector<std::vector<Color>>& lists, std::vector<Color>& chosen,
                    std::size_t e)
{
    if (e == h.edge_count()) {
        return true;
    }
    for (Color c : lists[e]) {
        bool clash = false;
        for (std::size_t f = 0; f < e; ++f) {
            clash = clash || (chosen[f] == c && oracle::meets(h.edges[e], h.edges[f]));
        }
        if (!clash) {
            chosen[e] = c;
            if (colorable_from(h, lists, chosen, e + 1)) {
                return true;
            }
        }
    }
    return false;
}

// Least q such that every assignment of q-subsets of {0..universe-1} is
// colorable, trying every assignment with no symmetry reduction.
std::size_t list_index_by_enumeration(const Hypergraph& h, std::size_t universe)
{
    const std::size_t m = h.edge_count();
    for (std::size_t q = 1; q <= universe; ++q) {
        std::vector<std::vector<Color>> subsets;
        for (unsigned mask = 0; mask < (1u << universe); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) == q) {
                std::vector<Color> s;
                for (Color c = 0; c < universe; ++c) {
                    if (mask & (1u << c)) {
                        s.push_back(c);
                    }
                }
                subsets.push_back(s);
            }
        }
        std::vector<std::size_t> pick(m, 0);
        bool all = true;
        while (all) {
            std::vector<std::vector<Color>> lists(m);
            for (std::size_t e = 0; e < m; ++e) {
                lists[e] = subsets[pick[e]];
            }
            std::vector<Color> chosen(m);
            all = colorable_from(h, lists, chosen, 0);
            std::size_t j = 0;
            while (j < m && ++pick[j] == subsets.size()) {
                pick[j++] = 0;
            }
            if (j == m) {
                break;
            }
        }
        if (all) {
            return q;
        }
    }
    return universe;
}

} // namespace

TEST_CASE("line graphs K_{2,4} and K_{3,3} need a third list color")
{
    std::vector<std::pair<int, int>> k24;
    for (int a : {0, 1}) {
        for (int b : {2, 3, 4, 5}) {
            k24.emplace_back(a, b);
        }
    }
    const auto h24 = with_line_graph(6, k24);
    REQUIRE(validate_linear(h24).ok());
    const auto list24 = brute_force_list_chromatic_index(h24);
    CHECK(list24.chromatic_index == 2);
    CHECK(list24.value == 3);
    REQUIRE(list24.uncolorable_witness.has_value());

    std::vector<std::pair<int, int>> k33;
    for (int a : {0, 1, 2}) {
        for (int b : {3, 4, 5}) {
            k33.emplace_back(a, b);
        }
    }
    const auto list33 = brute_force_list_chromatic_index(with_line_graph(6, k33));
    CHECK(list33.chromatic_index == 2);
    CHECK(list33.value == 3);
}

TEST_CASE("the witness of K_{2,4} really is uncolorable")
{
    std::vector<std::pair<int, int>> k24;
    for (int a : {0, 1}) {
        for (int b : {2, 3, 4, 5}) {
            k24.emplace_back(a, b);
        }
    }
    const auto h = with_line_graph(6, k24);
    const auto list = brute_force_list_chromatic_index(h);
    REQUIRE(list.uncolorable_witness.has_value());
    const auto& lists = *list.uncolorable_witness;
    for (const auto& l : lists) {
        CHECK(l.size() == 2);
    }
    std::vector<Color> chosen(h.edge_count());
    CHECK_FALSE(colorable_from(h, lists, chosen, 0));
}

TEST_CASE("list oracle agrees with unreduced enumeration on tiny graphs")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Rng rng(seed);
        const std::size_t vertices = 3 + uniform_below(rng, 3);
        std::vector<std::pair<int, int>> graph;
        for (int a = 0; a < static_cast<int>(vertices); ++a) {
            for (int b = a + 1; b < static_cast<int>(vertices); ++b) {
                if (bernoulli(rng, 0.6)) {
                    graph.emplace_back(a, b);
                }
            }
        }
        const auto h = with_line_graph(vertices, graph);
        const std::size_t universe = 4;
        ListOracleOptions options;
        options.universe = universe;
        std::size_t value = 0;
        try {
            value = brute_force_list_chromatic_index(h, options).value;
        } catch (const OracleRefused&) {
            continue;
        }
        CHECK_MESSAGE(value == list_index_by_enumeration(h, universe), "seed " << seed);
    }
}
