#ifndef PRISMHULL_EDGE_LIST_HPP
#define PRISMHULL_EDGE_LIST_HPP

#include "prismhull/graph.hpp"

#include <iosfwd>

namespace prismhull {

// Text format: header line "n m", then m lines "u v" with 0 <= u < v < n.
// Lines whose first non-blank character is '#' are comments; blank lines
// are skipped.

/// Throws ParseError for malformed lines and RangeError for endpoints
/// outside [0, n).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace prismhull

#endif
