#pragma once

#include <string>
#include <string_view>

#include "kempe/graph.hpp"

namespace kempe {

/// Header-less graph6. Throws Error{MalformedGraph6} on decode errors,
/// including non-zero padding bits, so decode accepts exactly the strings
/// encode produces. A single trailing newline is tolerated.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge-list text: "n m" then m lines "u v", 0-based. Throws Error{MalformedEdgeList}.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace kempe
