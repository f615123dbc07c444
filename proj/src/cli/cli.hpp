#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailures = 1,  // some verdict was fail, or an unexpected error
  kParseError = 2,
  kCapExceeded = 3,
  kOracleMismatch = 4,
};

/// Runs one command line (without the program name). Machine output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `cycle:n`, `anticycle:n`, `path:n`, `complete:n`. Throws ParseError.
graph::Graph parse_builder(std::string_view spec);
/// "0,2,5"; the empty string is the empty set. Throws ParseError.
graph::VertexSet parse_vertex_set(std::string_view text);

}  // namespace edgereg::cli
