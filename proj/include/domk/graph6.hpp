#pragma once

#include <string>
#include <string_view>

#include "domk/graph.hpp"

namespace domk {

/// Parse one graph6 line. An optional ">>graph6<<" prefix and trailing
/// newline are accepted. Throws GraphError on a malformed header byte or a
/// truncated payload.
Graph parse_graph6(std::string_view text);

/// Encode without the optional header and without a newline.
std::string to_graph6(const Graph& g);

}  // namespace domk
