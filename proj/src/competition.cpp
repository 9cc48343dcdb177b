#include "competition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace poc {

int PointConfig::index_of(const std::string &label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

void PointConfig::validate() const {
    require(labels.size() == points.size(), Errc::invalid_argument, "config has ",
            labels.size(), " labels but ", points.size(), " points");
    std::set<std::string> seen;
    for (const auto &l : labels) {
        require(!l.empty(), Errc::invalid_argument, "config labels must be nonempty");
        require(seen.insert(l).second, Errc::invalid_argument, "duplicate label \"", l, "\"");
    }
    for (const auto &p : points)
        require(p.dim() == dim(), Errc::invalid_argument,
                "config points must share one dimension; got ", p.dim(), " and ", dim());
    if (!points.empty())
        require(dim() >= 1, Errc::invalid_argument, "config points must have dimension >= 1");
}

bool PointConfig::has_duplicate_positions() const {
    std::set<Point> seen;
    for (const auto &p : points)
        if (!seen.insert(p).second) return true;
    return false;
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>> &edges)
    : labels_(std::move(labels)) {
    int n = vertex_count();
    std::set<std::string> seen;
    for (const auto &l : labels_) {
        require(!l.empty(), Errc::invalid_argument, "graph labels must be nonempty");
        require(seen.insert(l).second, Errc::invalid_argument, "duplicate vertex label \"", l,
                "\"");
    }
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, Errc::invalid_argument, "edge (", u, ", ",
                v, ") out of range for ", n, " vertices");
        require(u != v, Errc::invalid_argument, "loop at vertex ", u, " not allowed");
        es.insert({std::min(u, v), std::max(u, v)});
    }
    edges_.assign(es.begin(), es.end());
    adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto &nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_label_edges(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>> &edges) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (const auto &[a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        require(ia != idx.end(), Errc::invalid_argument, "edge endpoint \"", a,
                "\" is not a vertex label");
        require(ib != idx.end(), Errc::invalid_argument, "edge endpoint \"", b,
                "\" is not a vertex label");
        es.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(labels), es);
}

int Graph::index_of(const std::string &label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    const auto &nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int> &Graph::neighbors(int v) const {
    require(v >= 0 && v < vertex_count(), Errc::invalid_argument, "vertex ", v,
            " out of range");
    return adj_[static_cast<size_t>(v)];
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_isolated(v)) out.push_back(v);
    return out;
}

bool Graph::operator==(const Graph &o) const {
    return labels_ == o.labels_ && edges_ == o.edges_;
}

std::vector<std::string> Graph::default_labels(int n, const std::string &prefix) {
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return ls;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(default_labels(n), es);
}

Graph Graph::cycle(int n) {
    require(n >= 3, Errc::invalid_argument, "a cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
    return Graph(default_labels(n), es);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph(default_labels(n), es);
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph(default_labels(leaves + 1), es);
}

Graph Graph::edgeless(int n) { return Graph(default_labels(n), {}); }

Graph Graph::complete_multipartite(const std::vector<int> &part_sizes) {
    std::vector<int> part_of;
    for (size_t p = 0; p < part_sizes.size(); ++p) {
        require(part_sizes[p] >= 1, Errc::invalid_argument, "part sizes must be >= 1");
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    }
    int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.emplace_back(u, v);
    return Graph(default_labels(n), es);
}

Graph Graph::disjoint_union(const Graph &a, const Graph &b) {
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto &l : b.labels()) {
        std::string nl = l;
        while (used.count(nl)) nl += "'";
        used.insert(nl);
        labels.push_back(nl);
    }
    std::vector<std::pair<int, int>> es = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) es.emplace_back(u + off, v + off);
    return Graph(std::move(labels), es);
}

Digraph build_digraph(const PointConfig &cfg) {
    cfg.validate();
    Digraph dg;
    dg.labels = cfg.labels;
    int n = static_cast<int>(cfg.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && precedes_strict(cfg.points[y], cfg.points[x]))
                dg.arcs.emplace_back(x, y);
    std::sort(dg.arcs.begin(), dg.arcs.end());
    return dg;
}

Graph competition_graph(const Digraph &dg) {
    int n = static_cast<int>(dg.labels.size());
    std::vector<std::vector<int>> predators(static_cast<size_t>(n));
    for (auto [x, y] : dg.arcs) predators[static_cast<size_t>(y)].push_back(x);
    std::set<std::pair<int, int>> es;
    for (const auto &pred : predators)
        for (size_t i = 0; i < pred.size(); ++i)
            for (size_t j = i + 1; j < pred.size(); ++j)
                es.insert({std::min(pred[i], pred[j]), std::max(pred[i], pred[j])});
    return Graph(dg.labels, {es.begin(), es.end()});
}

bool is_realization(const PointConfig &cfg, const Graph &g,
                    const std::vector<std::string> &graph_labels) {
    cfg.validate();
    require(!cfg.has_duplicate_positions(), Errc::invalid_argument,
            "a realization is a point set; coordinate vectors must be pairwise distinct");
    require(static_cast<int>(graph_labels.size()) == g.vertex_count(), Errc::invalid_argument,
            "expected ", g.vertex_count(), " designated labels, got ", graph_labels.size());
    std::set<std::string> gl(graph_labels.begin(), graph_labels.end());
    require(gl.size() == graph_labels.size(), Errc::invalid_argument,
            "designated labels must be pairwise distinct");
    std::set<std::string> own(g.labels().begin(), g.labels().end());
    require(gl == own, Errc::invalid_argument,
            "designated labels must be exactly the graph's label set");
    for (const auto &l : graph_labels)
        require(cfg.index_of(l) >= 0, Errc::invalid_argument, "designated label \"", l,
                "\" is not in the config");

    Graph comp = competition_graph(build_digraph(cfg));
    // designated vertices must induce exactly g; all other points are isolated
    for (auto [u, v] : comp.edges()) {
        const std::string &lu = cfg.labels[static_cast<size_t>(u)];
        const std::string &lv = cfg.labels[static_cast<size_t>(v)];
        if (!gl.count(lu) || !gl.count(lv)) return false;
        if (!g.adjacent(g.index_of(lu), g.index_of(lv))) return false;
    }
    for (auto [u, v] : g.edges()) {
        int cu = cfg.index_of(g.labels()[static_cast<size_t>(u)]);
        int cv = cfg.index_of(g.labels()[static_cast<size_t>(v)]);
        if (!comp.adjacent(cu, cv)) return false;
    }
    return true;
}

}  // namespace poc
