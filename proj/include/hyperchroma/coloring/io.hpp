#pragma once

#include <iosfwd>
#include <string>

#include "hyperchroma/coloring/coloring.hpp"

namespace hyperchroma {

/// Coloring file:
///   # colors_used=C proper=true|false
///   edge_id color_id        (one line per colored edge, ascending edge id)
/// `proper` is whatever the caller determined, usually verify_coloring(...).ok().
void write_coloring(std::ostream& out, const EdgeColoring& coloring, bool proper);
std::string format_coloring(const EdgeColoring& coloring, bool proper);

/// Reads a coloring for a hypergraph with `edge_count` edges. The scope is
/// every edge listed. Other '#' lines and blank lines are ignored. Throws
/// ParseError on malformed lines, unknown edges, or an edge listed twice.
EdgeColoring read_coloring(std::istream& in, std::size_t edge_count);
EdgeColoring read_coloring_file(const std::string& path, std::size_t edge_count);

/// Palette file: one line per edge with a palette, `edge_id q c_1 ... c_q`.
void write_palettes(std::ostream& out, const PaletteAssignment& palettes);
PaletteAssignment read_palettes(std::istream& in, std::size_t edge_count);
PaletteAssignment read_palettes_file(const std::string& path, std::size_t edge_count);

} // namespace hyperchroma
