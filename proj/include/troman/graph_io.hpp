#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "troman/graph.hpp"

namespace troman {

/// graph6 decoding. Accepts the optional ">>graph6<<" header and trailing
/// whitespace; uses the short size form for n <= 62 and the '~' long form
/// above that.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Plain edge list: "n m" on the first line, then m lines "u v" (0-indexed).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Sniffs the format: a first line with two integers is an edge list,
/// anything else is graph6.
Graph parse_graph_text(std::string_view text);

} // namespace troman
