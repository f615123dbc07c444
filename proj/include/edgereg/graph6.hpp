#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg::graph {

/// Encodes g in graph6: the vertex count (one byte 63+n for n <= 62, "~"
/// followed by three bytes otherwise), then the upper triangle of the
/// adjacency matrix column by column, six bits per byte, offset by 63.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Accepts an optional ">>graph6<<" header and
/// trailing whitespace. Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace edgereg::graph
