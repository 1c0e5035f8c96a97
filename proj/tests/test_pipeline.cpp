#include <doctest.h>

#include <set>

#include "hyperchroma/coloring/pipeline.hpp"
#include "hyperchroma/coloring/split.hpp"
#include "hyperchroma/instances/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperchroma;

namespace {

bool proper_from(const Hypergraph& h, const EdgeColoring& coloring, const PaletteAssignment& palettes)
{
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const auto c = coloring.color(e);
        if (!c || !std::binary_search(palettes.at(e).begin(), palettes.at(e).end(), *c)) {
            return false;
        }
        for (EdgeId f = e + 1; f < h.edge_count(); ++f) {
            if (coloring.color(f) == c && oracle::meets(h.edges[e], h.edges[f])) {
                return false;
            }
        }
    }
    return true;
}

Hypergraph random_instance(std::size_t n, std::size_t rmin, std::size_t rmax, std::uint64_t seed)
{
    return random_linear_hypergraph({n, rmin, rmax, std::nullopt, 500, seed}).hypergraph;
}

} // namespace

TEST_CASE("palette size and split plan")
{
    CHECK(default_palette_size(500, 3, 1.0) == 1000);
    CHECK(default_palette_size(7, 3, 1.0) == 14);
    CHECK(default_palette_size(100, 5, 0.5) == 63);

    const auto plan = two_class_plan(500, 3, 1.0, 1000);
    CHECK(plan.p == doctest::Approx(0.375));
    CHECK(plan.class_one_threshold == doctest::Approx(250));
    CHECK(plan.class_two_threshold == doctest::Approx(500));
}

TEST_CASE("split thresholds leave room inside Q, expected class sizes clear them")
{
    for (int i = 2; i <= 8; ++i) {
        for (double eps : {0.1, 0.5, 1.0, 2.0}) {
            for (std::size_t n : {50, 500, 5000}) {
                const auto q = default_palette_size(n, i, eps);
                const auto plan = two_class_plan(n, i, eps, q);
                CHECK(plan.class_one_threshold + plan.class_two_threshold < static_cast<double>(q));
                CHECK(plan.p * q == doctest::Approx(1.5 * plan.class_one_threshold));
                CHECK((1 - plan.p) * q > plan.class_two_threshold);
            }
        }
    }
}

TEST_CASE("the split without the 1/(i-1) factor cannot be met")
{
    // p = 1.5 n eps / Q with thresholds n eps and n (1+eps)/(i-1) sum to at least Q for i >= 3.
    for (int i = 3; i <= 8; ++i) {
        for (double eps : {0.25, 1.0, 3.0}) {
            const std::size_t n = 500;
            const double q = std::ceil((1 + 3 * eps) * n / (i - 1));
            CHECK(n * eps + n * (1 + eps) / (i - 1) >= q - 1.0);
        }
    }
    const auto palettes = PaletteAssignment::uniform(5, 1000);
    const auto literal = split_palette_random(palettes, SplitParams::two_class(0.75, 500, 500, 1, 100));
    CHECK_FALSE(literal.ok());
}

TEST_CASE("subclass count is ceil(log2 k), at least one")
{
    CHECK(subclass_count(1) == 1);
    CHECK(subclass_count(2) == 1);
    CHECK(subclass_count(3) == 2);
    CHECK(subclass_count(4) == 2);
    CHECK(subclass_count(5) == 3);
    CHECK(subclass_count(8) == 3);
    CHECK(subclass_count(9) == 4);
}

TEST_CASE("pipeline colorings are proper and the report adds up")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto h = random_instance(200, 3, 20, seed);
        PipelineParams params;
        params.seed = seed;
        const auto result = full_pipeline(h, params);
        REQUIRE(result.ok());
        const auto& report = result.report;
        const auto palettes = PaletteAssignment::uniform(h.edge_count(), report.palette_size);
        CHECK(proper_from(h, result.outcome.coloring, palettes));
        CHECK(report.verified);
        CHECK(report.colors_used == result.outcome.coloring.colors_used());
        CHECK(report.colors_used <= report.palette_size);
        CHECK(report.small_edges + report.big_edges == h.edge_count());
        std::size_t family_edges = 0;
        for (const auto& family : report.families) {
            family_edges += family.edges;
            for (const auto& layer : family.layers) {
                CHECK((layer.class_index - family.base) % report.subclasses == 0);
                CHECK(layer.class_index >= params.k);
            }
        }
        CHECK(family_edges == report.big_edges);
        if (report.big_edges > 0) {
            CHECK(report.families.size() == static_cast<std::size_t>(report.subclasses));
        }
        CHECK(report.min_class_one >= report.plan.class_one_threshold);
        CHECK(report.min_class_two >= report.plan.class_two_threshold);
    }
}

TEST_CASE("pipeline honours arbitrary palettes")
{
    const auto h = random_instance(150, 3, 12, 4);
    PipelineParams params;
    params.seed = 8;
    const auto q = default_palette_size(h.n, params.i, params.eps);
    Rng rng(31);
    PaletteAssignment palettes(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        std::set<Color> pick;
        while (pick.size() < q) {
            pick.insert(static_cast<Color>(uniform_below(rng, 2 * q)));
        }
        palettes.set(e, {pick.begin(), pick.end()});
    }
    const auto result = full_pipeline(h, palettes, params);
    REQUIRE(result.ok());
    CHECK(result.report.palettes_hold);
    CHECK(proper_from(h, result.outcome.coloring, palettes));
}

TEST_CASE("unmet preconditions become warnings")
{
    const auto fano = projective_plane(2);
    PipelineParams params;
    const auto result = full_pipeline(fano, params);
    CHECK(result.report.min_rank_holds);
    CHECK_FALSE(result.report.rank_ceiling_holds);
    CHECK_FALSE(result.report.warnings.empty());

    const Hypergraph pairs{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
    const auto low = full_pipeline(pairs, params);
    CHECK_FALSE(low.report.min_rank_holds);

    auto short_lists = PaletteAssignment::uniform(7, 14);
    short_lists.set(3, {0, 1, 2});
    CHECK_FALSE(full_pipeline(fano, short_lists, params).report.palettes_hold);
}

TEST_CASE("a palette too small for the split fails in the split phase")
{
    const auto h = random_instance(100, 3, 6, 2);
    PipelineParams params;
    params.palette_size = 10;
    const auto result = full_pipeline(h, params);
    REQUIRE_FALSE(result.ok());
    CHECK(result.outcome.failure->phase == "split");
}

TEST_CASE("pipeline rejects empty, non-linear, and out-of-range parameters")
{
    PipelineParams params;
    CHECK_THROWS_AS(full_pipeline(Hypergraph{5, {}}, params), EmptyHypergraphError);
    CHECK_THROWS_AS(full_pipeline(Hypergraph{5, {{0, 1, 2}, {0, 1, 3}}}, params), std::invalid_argument);
    params.i = 1;
    CHECK_THROWS_AS(full_pipeline(projective_plane(2), params), std::invalid_argument);
    params = {};
    params.eps = 0;
    CHECK_THROWS_AS(full_pipeline(projective_plane(2), params), std::invalid_argument);
    params = {};
    params.retries = 0;
    CHECK_THROWS_AS(full_pipeline(projective_plane(2), params), std::invalid_argument);
}

TEST_CASE("pipeline is reproducible from the seed")
{
    const auto h = random_instance(200, 3, 20, 12);
    PipelineParams params;
    params.seed = 77;
    params.greedy.order = OrderPolicy::Random;
    params.greedy.seed = 5;
    const auto a = full_pipeline(h, params);
    const auto b = full_pipeline(h, params);
    CHECK(a.outcome.coloring == b.outcome.coloring);
    CHECK(a.report.split_attempts == b.report.split_attempts);
}
