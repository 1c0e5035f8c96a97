#include <doctest.h>

#include <set>

#include "hyperchroma/coloring/split.hpp"
#include "support/oracles.hpp"

using namespace hyperchroma;

namespace {

PaletteAssignment random_palettes(std::size_t edges, std::size_t size, std::size_t universe, std::uint64_t seed)
{
    Rng rng(seed);
    PaletteAssignment palettes(edges);
    for (EdgeId e = 0; e < edges; ++e) {
        std::set<Color> pick;
        while (pick.size() < size) {
            pick.insert(static_cast<Color>(uniform_below(rng, universe)));
        }
        palettes.set(e, {pick.begin(), pick.end()});
    }
    return palettes;
}

} // namespace

TEST_CASE("accepted splits partition every palette and meet the thresholds")
{
    const auto palettes = random_palettes(15, 60, 200, 5);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto result = split_palette_random(palettes, SplitParams::uniform(3, 12, seed));
        REQUIRE(result.ok());
        REQUIRE(result.classes.size() == 3);
        for (EdgeId e = 0; e < 15; ++e) {
            std::vector<Color> joined;
            for (std::size_t c = 0; c < 3; ++c) {
                const auto& part = result.classes[c].at(e);
                CHECK(part.size() >= 12);
                for (Color color : part) {
                    CHECK(result.color_class.at(color) == c);
                }
                joined.insert(joined.end(), part.begin(), part.end());
            }
            std::sort(joined.begin(), joined.end());
            CHECK(joined == palettes.at(e));
        }
        for (std::size_t c = 0; c < 3; ++c) {
            std::size_t smallest = SIZE_MAX;
            for (EdgeId e = 0; e < 15; ++e) {
                smallest = std::min(smallest, result.classes[c].at(e).size());
            }
            CHECK(result.min_sizes[c] == smallest);
        }
    }
}

TEST_CASE("a color lands in the same class for every palette")
{
    const auto palettes = random_palettes(30, 40, 60, 9);
    const auto result = split_palette_random(palettes, SplitParams::two_class(0.4, 5, 5, 3));
    REQUIRE(result.ok());
    for (EdgeId e = 0; e < 30; ++e) {
        for (std::size_t c = 0; c < 2; ++c) {
            for (Color color : result.classes[c].at(e)) {
                CHECK(result.color_class.at(color) == c);
            }
        }
    }
}

TEST_CASE("single-draw acceptance rate matches the binomial tail")
{
    // One edge, 100 colors, p = 1/2, thresholds 45/45: accepted iff 45 <= Bin(100, 1/2) <= 55.
    const auto palettes = PaletteAssignment::uniform(1, 100);
    const double expected = oracle::binomial_mass(100, 0.5, 45, 55);
    const int trials = 3000;
    int accepted = 0;
    for (int seed = 1; seed <= trials; ++seed) {
        accepted += split_palette_random(palettes, SplitParams::two_class(0.5, 45, 45, seed, 1)).ok() ? 1 : 0;
    }
    const double rate = static_cast<double>(accepted) / trials;
    const double sigma = std::sqrt(expected * (1 - expected) / trials);
    CHECK(std::abs(rate - expected) < 5 * sigma);
}

TEST_CASE("skewed two-class draws follow p")
{
    const auto palettes = PaletteAssignment::uniform(1, 4000);
    const auto result = split_palette_random(palettes, SplitParams::two_class(0.2, 1, 1, 77, 1));
    REQUIRE(result.ok());
    const double share = static_cast<double>(result.classes[0].at(0).size()) / 4000.0;
    CHECK(share == doctest::Approx(0.2).epsilon(0.15));
}

TEST_CASE("100-color palettes at 30/30 almost always split")
{
    CHECK(oracle::binomial_mass(100, 0.5, 30, 70) >= 0.99);
    const auto palettes = random_palettes(20, 100, 300, 2024);
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        ok += split_palette_random(palettes, SplitParams::two_class(0.5, 30, 30, seed)).ok() ? 1 : 0;
    }
    CHECK(ok >= 99);
}

TEST_CASE("thresholds above the palette fail without drawing")
{
    const auto palettes = PaletteAssignment::uniform(4, 100);
    const auto result = split_palette_random(palettes, SplitParams::two_class(0.5, 60, 60, 1));
    REQUIRE_FALSE(result.ok());
    CHECK(result.failure->infeasible);
    CHECK(result.failure->attempts == 0);
    CHECK(result.attempts == 0);
}

TEST_CASE("retry budget exhaustion names the worst edge")
{
    const auto palettes = PaletteAssignment::uniform(3, 20);
    const auto result = split_palette_random(palettes, SplitParams::two_class(0.05, 10, 5, 4, 7));
    REQUIRE_FALSE(result.ok());
    CHECK_FALSE(result.failure->infeasible);
    CHECK(result.failure->attempts == 7);
    CHECK(result.failure->class_index == 0);
    CHECK(result.failure->count < 10);
}

TEST_CASE("splits are reproducible from the seed")
{
    const auto palettes = random_palettes(10, 50, 120, 1);
    const auto a = split_palette_random(palettes, SplitParams::uniform(4, 5, 99));
    const auto b = split_palette_random(palettes, SplitParams::uniform(4, 5, 99));
    CHECK(a.color_class == b.color_class);
    CHECK(a.attempts == b.attempts);
}

TEST_CASE("split parameter validation")
{
    const auto palettes = PaletteAssignment::uniform(1, 10);
    CHECK_THROWS_AS(split_palette_random(palettes, SplitParams::two_class(1.0, 1, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(split_palette_random(palettes, SplitParams::two_class(0.5, 0, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(split_palette_random(palettes, SplitParams::uniform(0, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(split_palette_random(palettes, SplitParams::uniform(2, 1, 0, 0)), std::invalid_argument);
    auto wrong_length = SplitParams::uniform(3, 1, 0);
    wrong_length.thresholds = {1, 2};
    CHECK_THROWS_AS(split_palette_random(palettes, wrong_length), std::invalid_argument);
}
