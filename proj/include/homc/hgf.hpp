#pragma once

#include <string>

#include "homc/graph.hpp"

namespace homc {

// HGF text format:
//   hgf 1 <directed|undirected>
//   v <id>
//   e <id> <id>
// plus '#' comment lines and blank lines, in any order after the header.
// Identifiers are non-empty, whitespace-free, UTF-8. A loop is `e x x`.
// Duplicate vertices or duplicate edges (after canonical orientation in
// undirected mode) are errors. Encoding UTF-8, newline '\n'.

Graph parse_hgf(const std::string& text);
std::string serialize_hgf(const Graph& g);

Graph load_hgf_file(const std::string& path);
void save_hgf_file(const Graph& g, const std::string& path);

}  // namespace homc
