#pragma once

#include <optional>
#include <string>
#include <vector>

#include "competition.hpp"

namespace poc {

struct SearchBudget {
    int d_max = 3;
    // isolated-point budget; -1 means |E(G)|, which is always enough: in any
    // realization one padding point per edge can be kept and the rest dropped
    int k_max = -1;
    // cap on the per-axis rank range of vertex placements; 0 means n (sound
    // and complete); smaller caps make an empty search inconclusive
    int rank_cap = 0;
    bool use_oracles = true;
    long long node_limit = 200'000'000;  // per-dimension candidate tries; 0 = unlimited
    int threads = 1;
};

enum class CellStatus {
    witness,    // realization found at this (d, k)
    exhausted,  // complete search, no realization
    pruned,     // proved empty without search
    aborted,    // node limit hit before an answer
    skipped,    // not attempted
};

const char *cell_status_name(CellStatus s);

// nodes is the whole dimension-d sweep's candidate count, repeated on each
// of its cells; the sweep decides all k at once
struct CellReport {
    int d = 0;
    int k = 0;
    CellStatus status = CellStatus::skipped;
    long long nodes = 0;
};

enum class DimStatus {
    exact,         // dim determined
    exhausted,     // every cell within budget searched empty: dim > d_max
    inconclusive,  // some cell aborted or a cap made the answer partial
};

const char *dim_status_name(DimStatus s);

struct DimResult {
    DimStatus status = DimStatus::inconclusive;
    std::optional<int> dim;
    int dim_lower_bound = 0;  // best proven lower bound on the dimension
    std::optional<int> witness_d, witness_k;
    std::optional<PointConfig> witness;  // vertices under their graph labels + padding
    std::vector<std::string> witness_graph_labels;
    bool witness_verified = false;
    std::vector<CellReport> cells;
    long long total_nodes = 0;
    std::string note;
};

// Least d such that the graph plus some isolated vertices is the competition
// graph of the coordinatewise strict order on a point set of R^d, searched
// up to the budget. With oracles on, the known characterizations decide
// d <= 2 (K_1 <-> 0; complete or clique-plus-one-isolated <-> 1; other
// interval graphs <-> 2) and the search starts at 3.
DimResult dim_poc(const Graph &g, const SearchBudget &budget = {});

// dim_poc of the complete multipartite graph with gamma parts of beta
// vertices. beta * gamma <= 12.
DimResult multipartite_probe(int beta, int gamma, const SearchBudget &budget = {});

struct MonotonicityReport {
    enum class Verdict { confirmed, violated, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::string detail;
    DimResult whole, sub;
};

// Checks dim(induced subgraph) <= dim(graph) by running both searches.
MonotonicityReport check_induced_monotonicity(const Graph &g, const std::vector<int> &subset,
                                              const SearchBudget &budget = {});

// All automorphisms (including the identity) if there are at most cap of
// them, else just the identity.
std::vector<std::vector<int>> graph_automorphisms(const Graph &g, size_t cap = 5000);

// Dimension-1 realization with k isolated padding points, if one exists.
// Complete as a decision procedure: on a line the competition graph of m >= 2
// distinct points is a clique on the top m-1 plus an isolated bottom, so only
// k <= 1 and one shape per k can work; the candidate is built and verified.
std::optional<PointConfig> realize_dimension_one(const Graph &g, int k);

}  // namespace poc
