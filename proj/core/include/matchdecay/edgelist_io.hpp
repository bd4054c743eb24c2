#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "matchdecay/graph.hpp"
#include "matchdecay/weights.hpp"

namespace matchdecay {

struct EdgeListData {
    Graph graph;
    std::optional<WeightAssignment> weights;
};

/// Text edge-list format: first line "n m", then m lines "u v" (0-based),
/// or "u v w" in the weighted variant. Mixing weighted and unweighted
/// lines is rejected.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, const WeightAssignment* weights = nullptr);

}  // namespace matchdecay
