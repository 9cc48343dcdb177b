#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace poc {

// A labeled list of points of common dimension. Labels are pairwise distinct;
// coordinate vectors may repeat (whether that is allowed is up to each
// consumer; a realization, being a point set, rejects repeats).
struct PointConfig {
    std::vector<std::string> labels;
    std::vector<Point> points;

    size_t size() const { return points.size(); }
    int dim() const { return points.empty() ? 0 : points.front().dim(); }
    int index_of(const std::string &label) const;  // -1 if absent

    // checks label uniqueness, nonemptiness of labels, equal dimensions
    void validate() const;
    bool has_duplicate_positions() const;
};

// Simple undirected graph on labeled vertices. Edges are stored as sorted
// index pairs (u < v), deduplicated, in ascending order.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>> &edges);
    static Graph from_label_edges(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>> &edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }
    int index_of(const std::string &label) const;

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    bool is_isolated(int v) const { return degree(v) == 0; }
    const std::vector<int> &neighbors(int v) const;
    std::vector<int> isolated_vertices() const;

    bool operator==(const Graph &o) const;  // same labels in order, same edge set

    static std::vector<std::string> default_labels(int n, const std::string &prefix = "");
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int leaves);  // K_{1,leaves}; vertex 0 is the center
    static Graph edgeless(int n);
    static Graph complete_multipartite(const std::vector<int> &part_sizes);
    // disjoint union; right-hand labels get a suffix when they collide
    static Graph disjoint_union(const Graph &a, const Graph &b);

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Digraph of the coordinatewise strict order on a configuration:
// an arc (x, y) for every pair with point(y) strictly below point(x) on every
// axis (x preys on y). Arcs are sorted index pairs in ascending order.
struct Digraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> arcs;
};

Digraph build_digraph(const PointConfig &cfg);

// Competition graph of the digraph: vertices are the digraph's, with an edge
// between two distinct vertices whenever some vertex is an out-neighbor of
// both.
Graph competition_graph(const Digraph &dg);

// Whether cfg realizes g together with isolated padding: the points named by
// graph_labels must induce exactly g's edges in the competition graph of cfg,
// and every other point of cfg must be isolated in it.
// Preconditions: cfg valid with pairwise-distinct coordinate vectors;
// graph_labels must be exactly g's label set and a subset of cfg's.
bool is_realization(const PointConfig &cfg, const Graph &g,
                    const std::vector<std::string> &graph_labels);

}  // namespace poc
