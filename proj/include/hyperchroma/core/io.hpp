#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hyperchroma/core/hypergraph.hpp"

namespace hyperchroma {

/// Malformed input file. `line()` is 1-based, 0 when the problem is not tied
/// to a particular line (for example a truncated file).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Hypergraph text format:
///   n m
///   r v_1 ... v_r        (m lines, one per edge, in edge-id order)
/// Lines starting with '#' and blank lines are ignored. The reader keeps the
/// vertex order as written; ordering and linearity are validate_linear's job.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

} // namespace hyperchroma
