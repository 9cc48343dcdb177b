#include "interval.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace poc {

namespace {

using Mask = std::uint32_t;

struct CliqueCollector {
    const std::vector<Mask> &adj;
    std::vector<Mask> cliques;

    void bron_kerbosch(Mask r, Mask p, Mask x) {
        if (p == 0 && x == 0) {
            require(cliques.size() < 64, Errc::budget,
                    "more than 64 maximal cliques; this recognizer does not scale there");
            cliques.push_back(r);
            return;
        }
        // pivot: vertex of p|x with most neighbors in p
        Mask px = p | x;
        int pivot = -1, best = -1;
        for (Mask m = px; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int cnt = std::popcount(p & adj[static_cast<size_t>(v)]);
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
        Mask cand = p & ~adj[static_cast<size_t>(pivot)];
        for (Mask m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            Mask bit = Mask(1) << v;
            bron_kerbosch(r | bit, p & adj[static_cast<size_t>(v)],
                          x & adj[static_cast<size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph &g) {
    int n = g.vertex_count();
    require(n <= 32, Errc::budget, "clique enumeration supports <= 32 vertices, got ", n);
    if (n == 0) return {};
    std::vector<Mask> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= Mask(1) << v;
        adj[static_cast<size_t>(v)] |= Mask(1) << u;
    }
    CliqueCollector cc{adj, {}};
    Mask all = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
    cc.bron_kerbosch(0, all, 0);
    std::vector<std::vector<int>> out;
    for (Mask c : cc.cliques) {
        std::vector<int> q;
        for (Mask m = c; m; m &= m - 1) q.push_back(std::countr_zero(m));
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Backtracking over clique orderings: every vertex's cliques must occupy
// consecutive positions. State per vertex: how many of its cliques remain,
// and whether it is open (started, not finished) or shut (finished for good).
// State is copied per level; sizes are capped small enough for that.
struct Arranger {
    int ncliques;
    const std::vector<Mask> &member;  // per clique: vertex mask
    std::vector<int> order;

    bool extend(const std::vector<int> &remaining, Mask open, Mask shut, std::uint64_t used) {
        if (static_cast<int>(order.size()) == ncliques) return true;
        for (int c = 0; c < ncliques; ++c) {
            std::uint64_t cbit = 1ull << c;
            if (used & cbit) continue;
            Mask q = member[static_cast<size_t>(c)];
            if (q & shut) continue;  // would reopen a finished vertex
            std::vector<int> rem = remaining;
            Mask nopen = open, nshut = shut | (open & ~q);  // absentees finish
            nopen &= q;
            for (Mask m = q; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (--rem[static_cast<size_t>(v)] == 0) {
                    nopen &= ~(Mask(1) << v);
                    nshut |= Mask(1) << v;
                } else {
                    nopen |= Mask(1) << v;
                }
            }
            order.push_back(c);
            if (extend(rem, nopen, nshut, used | cbit)) return true;
            order.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<IntervalModel> interval_model(const Graph &g) {
    int n = g.vertex_count();
    auto cliques = maximal_cliques(g);
    int nc = static_cast<int>(cliques.size());
    if (nc == 0) return IntervalModel{};  // edgeless, vertexless
    std::vector<Mask> member(static_cast<size_t>(nc), 0);
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c = 0; c < nc; ++c)
        for (int v : cliques[static_cast<size_t>(c)]) {
            member[static_cast<size_t>(c)] |= Mask(1) << v;
            count[static_cast<size_t>(v)] += 1;
        }
    Arranger ar{nc, member, {}};
    if (!ar.extend(count, 0, 0, 0)) return std::nullopt;

    IntervalModel model;
    model.intervals.assign(static_cast<size_t>(n), {-1, -1});
    for (int pos = 0; pos < nc; ++pos)
        for (int v : cliques[static_cast<size_t>(ar.order[static_cast<size_t>(pos)])]) {
            auto &iv = model.intervals[static_cast<size_t>(v)];
            if (iv.first < 0) iv.first = pos;
            iv.second = pos;
        }
    // every vertex lies in some maximal clique, and the model must agree
    // with the graph edge for edge
    for (int v = 0; v < n; ++v)
        require(model.intervals[static_cast<size_t>(v)].first >= 0, Errc::internal,
                "vertex ", v, " missing from every maximal clique");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto [lu, ru] = model.intervals[static_cast<size_t>(u)];
            auto [lv, rv] = model.intervals[static_cast<size_t>(v)];
            bool meet = lu <= rv && lv <= ru;
            require(meet == g.adjacent(u, v), Errc::internal,
                    "interval model disagrees with the graph on pair (", u, ", ", v, ")");
        }
    return model;
}

bool is_interval_graph(const Graph &g) { return interval_model(g).has_value(); }

}  // namespace poc
