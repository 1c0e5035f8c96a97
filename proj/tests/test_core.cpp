#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "hyperchroma/core/hypergraph.hpp"
#include "hyperchroma/instances/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperchroma;

namespace {

Hypergraph make(std::size_t n, std::vector<Edge> edges) { return Hypergraph{n, std::move(edges)}; }

std::vector<ViolationKind> kinds(const ValidationReport& report)
{
    std::vector<ViolationKind> out;
    for (const auto& v : report.violations) {
        out.push_back(v.kind);
    }
    return out;
}

} // namespace

TEST_CASE("validate_linear accepts the Fano plane and reports nothing")
{
    const auto report = validate_linear(projective_plane(2));
    CHECK(report.ok());
}

TEST_CASE("validate_linear names each defect")
{
    SUBCASE("rank one")
    {
        const auto report = validate_linear(make(4, {{0, 1}, {2}}));
        REQUIRE(kinds(report) == std::vector{ViolationKind::RankTooSmall});
        CHECK(report.violations[0].edge == 1);
    }
    SUBCASE("vertex out of range")
    {
        const auto report = validate_linear(make(3, {{0, 3}}));
        REQUIRE(kinds(report) == std::vector{ViolationKind::VertexOutOfRange});
        CHECK(report.violations[0].vertex == Vertex{3});
    }
    SUBCASE("unsorted")
    {
        CHECK(kinds(validate_linear(make(3, {{2, 0}}))) == std::vector{ViolationKind::NotStrictlySorted});
    }
    SUBCASE("repeated vertex")
    {
        const auto report = validate_linear(make(3, {{0, 1, 1}}));
        REQUIRE(kinds(report) == std::vector{ViolationKind::DuplicateVertex});
        CHECK(report.violations[0].vertex == Vertex{1});
    }
    SUBCASE("repeated edge")
    {
        const auto report = validate_linear(make(3, {{0, 1}, {0, 1}}));
        REQUIRE(kinds(report) == std::vector{ViolationKind::DuplicateEdge});
        CHECK(report.violations[0].other == EdgeId{1});
    }
    SUBCASE("two edges sharing a pair, reported once")
    {
        const auto report = validate_linear(make(5, {{0, 1, 2}, {1, 2, 3}, {3, 4}}));
        REQUIRE(kinds(report) == std::vector{ViolationKind::SharedPair});
        CHECK(report.violations[0].edge == 0);
        CHECK(report.violations[0].other == EdgeId{1});
        CHECK(report.violations[0].shared == 2);
    }
}

TEST_CASE("validate_linear agrees with pairwise intersection on random inputs")
{
    // Random edge sets, mostly non-linear, checked against the direct definition.
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed);
        Hypergraph h;
        h.n = 4 + uniform_below(rng, 8);
        const auto m = 1 + uniform_below(rng, 6);
        for (std::size_t j = 0; j < m; ++j) {
            std::set<Vertex> e;
            const auto r = 2 + uniform_below(rng, 3);
            while (e.size() < r) {
                e.insert(static_cast<Vertex>(uniform_below(rng, h.n)));
            }
            h.edges.emplace_back(e.begin(), e.end());
        }
        CHECK_MESSAGE(validate_linear(h).ok() == oracle::is_linear(h), "seed " << seed);
    }
}

TEST_CASE("ranks and emptiness")
{
    const auto h = make(6, {{0, 1}, {1, 2, 3, 4}, {0, 5, 2}});
    CHECK(min_rank(h) == 2);
    CHECK(max_rank(h) == 4);
    CHECK_THROWS_AS(min_rank(Hypergraph{3, {}}), EmptyHypergraphError);
    CHECK_THROWS_AS(max_rank(Hypergraph{3, {}}), EmptyHypergraphError);
    CHECK_THROWS_WITH(max_rank(Hypergraph{3, {}}), "no edges");
}

TEST_CASE("degree bound is tight on projective planes")
{
    // Each point of PG(2,q) lies on q+1 lines and (n-1)/(rho-1) = (q^2+q)/q = q+1.
    for (std::uint64_t q : {2, 3, 5}) {
        const auto plane = projective_plane(q);
        CHECK(max_vertex_degree(plane) == q + 1);
        CHECK(degree_bound(plane) == doctest::Approx(static_cast<double>(q + 1)));
    }
}

TEST_CASE("degree bound holds on random linear hypergraphs")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        RandomLinearSpec spec{40 + seed, 2, 2 + seed % 7, std::nullopt, 200, seed};
        const auto h = random_linear_hypergraph(spec).hypergraph;
        if (h.edges.empty()) {
            continue;
        }
        const auto delta = oracle::max_degree_by_scan(h);
        CHECK(max_vertex_degree(h) == delta);
        CHECK(static_cast<double>(delta) <= degree_bound(h) + 1e-12);
    }
}

TEST_CASE("max_vertex_degree refuses a non-linear input that breaks the bound")
{
    // Vertex 0 on three rank-3 edges with n = 5: 3 * 2 > 4. Only possible because the edges share a pair.
    const auto h = make(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_THROWS_AS(max_vertex_degree(h), std::logic_error);
}

TEST_CASE("truncated_log")
{
    CHECK(truncated_log(0.5) == 1.0);
    CHECK(truncated_log(2.0) == 1.0);
    CHECK(truncated_log(std::numbers::e) == doctest::Approx(1.0));
    CHECK(truncated_log(100.0) == doctest::Approx(std::log(100.0)));
}

TEST_CASE("dyadic_index matches the defining inequality")
{
    for (std::size_t rank = 2; rank < 5000; ++rank) {
        int expected = 0;
        while ((std::size_t{1} << (expected + 1)) <= rank) {
            ++expected;
        }
        REQUIRE(dyadic_index(rank) == expected);
    }
}

TEST_CASE("partition_dyadic buckets every edge once")
{
    const auto h = make(40, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12, 13, 14, 15, 16}, {17, 18, 19, 20, 21, 22, 23}});
    const auto partition = partition_dyadic(h);
    CHECK(partition.total() == 5);
    CHECK(partition.at(1) == std::vector<EdgeId>{0, 1});
    CHECK(partition.at(2) == std::vector<EdgeId>{2, 4});
    CHECK(partition.at(3) == std::vector<EdgeId>{3});
    CHECK(partition.at(7).empty());
}

TEST_CASE("sub_hypergraph keeps the vertex set and renumbers edges")
{
    const auto plane = projective_plane(2);
    const auto sub = sub_hypergraph(plane, {4, 1});
    CHECK(sub.n == 7);
    REQUIRE(sub.edge_count() == 2);
    CHECK(sub.edges[0] == plane.edges[4]);
    CHECK(sub.edges[1] == plane.edges[1]);
}
