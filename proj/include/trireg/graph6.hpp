#pragma once

#include <string>
#include <string_view>

#include "trireg/graph.hpp"

namespace trireg {

// graph6: printable ASCII encoding of a simple graph. Size prefix (value + 63;
// '~' introduces the 18-bit long form for n > 62), then the upper triangle of
// the adjacency matrix read column by column, packed into 6-bit groups.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// sorted lexicographically. Lines starting with '#' are comments.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

}  // namespace trireg
