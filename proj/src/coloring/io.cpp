#include "hyperchroma/coloring/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hyperchroma/core/io.hpp"

namespace hyperchroma {

namespace {

bool is_skippable(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::uint64_t read_number(std::istringstream& in, std::size_t line_no, const char* what)
{
    std::string token;
    if (!(in >> token) || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line_no, std::string("expected ") + what);
    }
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        throw ParseError(line_no, std::string(what) + " out of range");
    }
}

Color read_color(std::istringstream& in, std::size_t line_no)
{
    const auto c = read_number(in, line_no, "color id");
    if (c > std::numeric_limits<Color>::max()) {
        throw ParseError(line_no, "color id out of range");
    }
    return static_cast<Color>(c);
}

EdgeId read_edge(std::istringstream& in, std::size_t line_no, std::size_t edge_count)
{
    const auto e = read_number(in, line_no, "edge id");
    if (e >= edge_count) {
        throw ParseError(line_no, "edge " + std::to_string(e) + " out of range [0, " + std::to_string(edge_count) + ")");
    }
    return static_cast<EdgeId>(e);
}

void expect_end(std::istringstream& in, std::size_t line_no)
{
    std::string rest;
    if (in >> rest) {
        throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
    }
}

} // namespace

void write_coloring(std::ostream& out, const EdgeColoring& coloring, bool proper)
{
    out << "# colors_used=" << coloring.colors_used() << " proper=" << (proper ? "true" : "false") << '\n';
    for (EdgeId e = 0; e < coloring.edge_count(); ++e) {
        if (const auto c = coloring.color(e)) {
            out << e << ' ' << *c << '\n';
        }
    }
}

std::string format_coloring(const EdgeColoring& coloring, bool proper)
{
    std::ostringstream out;
    write_coloring(out, coloring, proper);
    return out.str();
}

EdgeColoring read_coloring(std::istream& in, std::size_t edge_count)
{
    EdgeColoring coloring(edge_count);
    std::vector<EdgeId> scope;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line)) {
            continue;
        }
        std::istringstream fields(line);
        const EdgeId e = read_edge(fields, line_no, edge_count);
        const Color c = read_color(fields, line_no);
        expect_end(fields, line_no);
        if (coloring.colored(e)) {
            throw ParseError(line_no, "edge " + std::to_string(e) + " colored twice");
        }
        coloring.assign(e, c);
        scope.push_back(e);
    }
    coloring.set_scope(std::move(scope));
    return coloring;
}

EdgeColoring read_coloring_file(const std::string& path, std::size_t edge_count)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    return read_coloring(in, edge_count);
}

void write_palettes(std::ostream& out, const PaletteAssignment& palettes)
{
    for (EdgeId e : palettes.edges()) {
        const auto& list = palettes.at(e);
        out << e << ' ' << list.size();
        for (Color c : list) {
            out << ' ' << c;
        }
        out << '\n';
    }
}

PaletteAssignment read_palettes(std::istream& in, std::size_t edge_count)
{
    PaletteAssignment palettes(edge_count);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line)) {
            continue;
        }
        std::istringstream fields(line);
        const EdgeId e = read_edge(fields, line_no, edge_count);
        if (palettes.has(e)) {
            throw ParseError(line_no, "edge " + std::to_string(e) + " has two palette lines");
        }
        const auto q = read_number(fields, line_no, "palette size");
        std::vector<Color> list;
        for (std::uint64_t j = 0; j < q; ++j) {
            list.push_back(read_color(fields, line_no));
        }
        expect_end(fields, line_no);
        try {
            palettes.set(e, std::move(list));
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_no, err.what());
        }
    }
    return palettes;
}

PaletteAssignment read_palettes_file(const std::string& path, std::size_t edge_count)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    return read_palettes(in, edge_count);
}

} // namespace hyperchroma
