#pragma once

#include <map>
#include <optional>

#include "modhom/graph.hpp"

namespace modhom {

// Partially H-labelled graph: underlying graph, a partial pinning function
// into V(H), and optional distinguished vertices s and t. Distinguished
// vertices are never pinned.
struct LabelledGraph {
    Graph graph;
    std::map<int, int> pins;  // gadget vertex -> H vertex
    std::optional<int> s;
    std::optional<int> t;

    bool operator==(const LabelledGraph&) const = default;
};

}  // namespace modhom
