#include <doctest.h>

#include <sstream>

#include "hyperchroma/coloring/io.hpp"
#include "hyperchroma/core/io.hpp"
#include "hyperchroma/instances/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperchroma;

namespace {

Hypergraph parse(const std::string& text)
{
    std::istringstream in(text);
    return read_hypergraph(in);
}

std::size_t error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("no ParseError for: " << text);
    return 0;
}

} // namespace

TEST_CASE("hypergraph text round-trips")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto h = oracle::small_random(seed, 25);
        CHECK(parse(format_hypergraph(h)) == h);
    }
    const auto plane = pad_isolated(projective_plane(3), 20);
    CHECK(parse(format_hypergraph(plane)) == plane);
}

TEST_CASE("comments and blank lines are skipped")
{
    const auto h = parse("# a triangle of pairs\n\n3 3\n2 0 1\n  # middle\n2 1 2\n\n2 0 2\n");
    CHECK(h.n == 3);
    CHECK(h.edges == std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("the reader keeps vertex order for the validator to judge")
{
    const auto h = parse("4 1\n3 2 0 1\n");
    CHECK(h.edges[0] == Edge{2, 0, 1});
}

TEST_CASE("malformed hypergraph files carry a line number")
{
    CHECK(error_line("") == 0);
    CHECK(error_line("# only a comment\n") == 0);
    CHECK(error_line("3\n") == 1);
    CHECK(error_line("3 x\n") == 1);
    CHECK(error_line("3 1 extra\n") == 1);
    CHECK(error_line("3 1\n2 0\n") == 2);
    CHECK(error_line("3 1\n2 0 3\n") == 2);
    CHECK(error_line("3 1\n2 0 1 2\n") == 2);
    CHECK(error_line("3 1\n2 0 -1\n") == 2);
    CHECK(error_line("3 1\n2 0 1\n2 1 2\n") == 3);
    CHECK(error_line("3 2\n2 0 1\n") == 2);
    CHECK_THROWS_WITH(parse("3 1\n2 0 7\n"), doctest::Contains("line 2"));
}

TEST_CASE("missing files are reported as parse errors")
{
    CHECK_THROWS_AS(read_hypergraph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("coloring text round-trips and records properness")
{
    EdgeColoring coloring(4);
    coloring.assign(0, 3);
    coloring.assign(2, 1);
    coloring.set_scope({0, 2});
    const std::string text = format_coloring(coloring, true);
    CHECK(text.rfind("# colors_used=2 proper=true\n", 0) == 0);
    std::istringstream in(text);
    const auto back = read_coloring(in, 4);
    CHECK(back == coloring);
}

TEST_CASE("coloring reader rejects bad lines")
{
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return read_coloring(in, 3);
    };
    CHECK_THROWS_AS(read("0 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(read("5 1\n"), ParseError);
    CHECK_THROWS_AS(read("0\n"), ParseError);
    CHECK_THROWS_AS(read("0 1 9\n"), ParseError);
    CHECK(read("# header\n\n1 4\n").color(1) == Color{4});
}

TEST_CASE("palette text round-trips")
{
    PaletteAssignment palettes(3);
    palettes.set(0, {5, 1, 3});
    palettes.set(2, {});
    std::ostringstream out;
    write_palettes(out, palettes);
    CHECK(out.str() == "0 3 1 3 5\n2 0\n");
    std::istringstream in(out.str());
    CHECK(read_palettes(in, 3) == palettes);
}

TEST_CASE("palette reader rejects bad lines")
{
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return read_palettes(in, 2);
    };
    CHECK_THROWS_AS(read("0 2 1\n"), ParseError);
    CHECK_THROWS_AS(read("0 2 1 1\n"), ParseError);
    CHECK_THROWS_AS(read("0 1 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read("3 1 1\n"), ParseError);
}
