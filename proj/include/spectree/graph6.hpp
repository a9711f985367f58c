#ifndef SPECTREE_GRAPH6_HPP
#define SPECTREE_GRAPH6_HPP

#include <string>

#include "spectree/tree.hpp"

namespace spectree {

/// Parses one graph6 line (bit-exact per the published format: 6-bit
/// big-endian groups offset by 63, upper triangle column-major). Throws
/// kParse on malformed length, characters, or nonzero padding bits.
Graph parse_graph6(const std::string& line);

std::string emit_graph6(const Graph& g);
std::string emit_graph6(const Tree& t);

/// Edge-list convenience format: "el <n> <u1> <v1> <u2> <v2> ...".
Graph parse_edge_list(const std::string& line);

/// Either format, by sniffing the "el " prefix.
Graph parse_graph_line(const std::string& line);

}  // namespace spectree

#endif  // SPECTREE_GRAPH6_HPP
