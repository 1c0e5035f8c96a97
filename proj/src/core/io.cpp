#include "hyperchroma/core/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <vector>

namespace hyperchroma {

namespace {

std::string format_error(std::size_t line, const std::string& what)
{
    return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

bool is_skippable(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

// Reads the next unsigned integer token; rejects signs, fractions and overflow.
bool read_count(std::istringstream& in, std::uint64_t& value)
{
    std::string token;
    if (!(in >> token)) {
        return false;
    }
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        return false;
    }
    try {
        value = std::stoull(token);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

bool only_whitespace_left(std::istringstream& in)
{
    std::string rest;
    return !(in >> rest);
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(format_error(line, what)), line_(line)
{
}

Hypergraph read_hypergraph(std::istream& in)
{
    Hypergraph h;
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t expected_edges = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line)) {
            continue;
        }
        std::istringstream fields(line);
        if (!have_header) {
            std::uint64_t n = 0;
            if (!read_count(fields, n) || !read_count(fields, expected_edges) || !only_whitespace_left(fields)) {
                throw ParseError(line_no, "expected header 'n m'");
            }
            if (n > std::numeric_limits<Vertex>::max()) {
                throw ParseError(line_no, "vertex count too large");
            }
            h.n = static_cast<std::size_t>(n);
            have_header = true;
            continue;
        }
        if (h.edges.size() == expected_edges) {
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(expected_edges));
        }
        std::uint64_t rank = 0;
        if (!read_count(fields, rank)) {
            throw ParseError(line_no, "expected edge rank");
        }
        Edge edge;
        edge.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(rank, 1u << 16)));
        for (std::uint64_t j = 0; j < rank; ++j) {
            std::uint64_t v = 0;
            if (!read_count(fields, v)) {
                throw ParseError(line_no, "edge declares rank " + std::to_string(rank) + " but lists " +
                                              std::to_string(j) + " vertices");
            }
            if (v >= h.n) {
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range [0, " +
                                              std::to_string(h.n) + ")");
            }
            edge.push_back(static_cast<Vertex>(v));
        }
        if (!only_whitespace_left(fields)) {
            throw ParseError(line_no, "edge lists more vertices than its rank " + std::to_string(rank));
        }
        h.edges.push_back(std::move(edge));
    }
    if (!have_header) {
        throw ParseError(0, "missing header 'n m'");
    }
    if (h.edges.size() != expected_edges) {
        throw ParseError(line_no, "expected " + std::to_string(expected_edges) + " edges, found " +
                                      std::to_string(h.edges.size()));
    }
    return h;
}

Hypergraph read_hypergraph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << h.n << ' ' << h.edges.size() << '\n';
    for (const Edge& e : h.edges) {
        out << e.size();
        for (Vertex v : e) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

std::string format_hypergraph(const Hypergraph& h)
{
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_hypergraph(out, h);
}

} // namespace hyperchroma
