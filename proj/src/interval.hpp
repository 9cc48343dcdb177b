#pragma once

#include <optional>
#include <vector>

#include "competition.hpp"

namespace poc {

// All maximal cliques (vertex index lists, each ascending; list sorted).
// Bron-Kerbosch with pivoting. Requires <= 32 vertices; errors with
// Errc::budget past 64 cliques.
std::vector<std::vector<int>> maximal_cliques(const Graph &g);

// One closed interval per vertex; endpoints are clique positions in a
// consecutive arrangement, so u, v are adjacent iff their intervals meet.
struct IntervalModel {
    std::vector<std::pair<int, int>> intervals;
};

// An interval representation, when the graph is an interval graph. Searches
// clique orderings for the consecutive-containment property, then verifies
// the model edge-by-edge before returning it.
std::optional<IntervalModel> interval_model(const Graph &g);

bool is_interval_graph(const Graph &g);

}  // namespace poc
