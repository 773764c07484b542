#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mostar/graph.hpp"

namespace mostar {

// Text format: first line "s t", then t lines "u v". Lines starting with '#'
// and blank lines are ignored on input. Output is canonical (u < v, sorted,
// LF-terminated).

/// Throws Error(kParse) on malformed input; graph validation errors
/// (self-loops, out-of-range ids, order 0) are reported as kParse too.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace mostar
