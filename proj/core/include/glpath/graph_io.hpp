#pragma once

#include <string>
#include <vector>

#include "glpath/graph.hpp"

namespace glpath {

/// Parse a group spec: {"kind":"cyclic","n":2}, {"kind":"symmetric","m":3},
/// {"kind":"product","factors":[...]}, or
/// {"kind":"table","elems":[...],"table":[[...]]}.
/// Malformed input raises ValidationError with a JSON-pointer style path.
GroupPtr parse_group_spec(const std::string& json_text);

/// Parse a graph document:
///   {"group": <spec>, "vertices": [...], "S": [...], "T": [...],
///    "interface": [...optional...],
///    "edges": [{"u":..,"v":..,"label":<element name>}, ...]}
STGraph load_graph(const std::string& json_text);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// Byte-stable for equal graphs built the same way.
std::string save_graph(const STGraph& g);

/// Optional decoration for to_dot.
struct DotHighlight {
    std::vector<std::vector<int>> packing_paths; // vertex index sequences
    std::vector<int> hitting;                    // vertex indices
};

/// GraphViz export (write-only; there is no DOT importer). S vertices render
/// as boxes, T as diamonds, S-and-T as Msquares, interface vertices with a
/// doubled border. Packing paths colour their edges, hitting vertices fill.
std::string to_dot(const STGraph& g, const DotHighlight* hl = nullptr);

} // namespace glpath
