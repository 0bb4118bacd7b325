#ifndef OPTURAN_GRAPH6_HPP
#define OPTURAN_GRAPH6_HPP

#include <string>
#include <string_view>

#include "opturan/graph.hpp"

namespace opturan {

/// Encodes a graph in the standard graph6 format (6-bit groups offset by 63,
/// upper-triangle bits in column order). Orders up to 258047 are supported.
std::string to_graph6(const Graph& g);

/// Parses a graph6 line. Tolerates a ">>graph6<<" prefix and trailing
/// whitespace; throws DomainError on malformed input.
Graph from_graph6(std::string_view text);

/// Graphviz DOT rendering; lists every vertex so isolated ones are visible.
std::string to_dot(const Graph& g);

} // namespace opturan

#endif
