#pragma once

#include "subthresh/graph.hpp"

#include <string>
#include <string_view>

namespace subthresh {

/// Parses an edge list or a graph6 string.
///
/// Edge list: one edge per line as two 0-based vertex indices; `#` starts a
/// comment, blank lines are skipped. The order is one more than the largest
/// index, unless a `# order N` comment raises it. Input is treated as graph6
/// when it starts with ">>graph6<<" or its first content line consists only of
/// graph6 characters (ASCII 63..126).
///
/// Errors (input error, message prefixed with "line N:"): malformed line,
/// vertex index >= 64, duplicate edge, self-loop.
Graph parse_graph(std::string_view text);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

} // namespace subthresh
