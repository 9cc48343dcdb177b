#include "dimsearch.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <future>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "error.hpp"
#include "interval.hpp"

namespace poc {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// odometer over {1..bound[a]} per slot, last slot fastest
bool next_tuple(std::vector<int> &r, const std::vector<int> &bound) {
    for (int a = (int)r.size() - 1; a >= 0; --a) {
        if (r[a] < bound[a]) {
            ++r[a];
            std::fill(r.begin() + a + 1, r.end(), 1);
            return true;
        }
    }
    return false;
}

struct AbortLimit {};

struct SweepOutcome {
    bool found = false;
    int j = 0;
    std::vector<std::vector<int>> vertex_ranks;  // by vertex id
    std::vector<std::vector<int>> pads;          // doubled-grid coordinates
    long long nodes = 0;
    bool aborted = false;
};

struct PadCandidate {
    std::vector<int> z;  // doubled-grid coordinates
    Mask up = 0;         // vertices strictly above on every axis
    Mask down = 0;       // vertices strictly below on every axis
    Mask cover = 0;      // uncovered-edge indices whose both ends lie in up
};

// Exhaustive placement search for one dimension, rooted at a fixed position
// of the first vertex. Vertex coordinates are per-axis ranks 1..R used
// without gaps; that loses no realization because only the coordinatewise
// order matters. The canonical-form prunes (sorted axis columns, relabeling
// by graph automorphisms) each discard a placement whose symmetry orbit
// holds a lexicographically smaller member, so the orbit minimum always
// survives; the remaining prunes are necessary conditions on any placement
// completable by isolated padding points.
class PlacementSearch {
public:
    PlacementSearch(const Graph &g, int d, int rank_range, int k_cap, int pair_cap,
                    const std::vector<int> &order, const std::vector<std::vector<int>> &auts,
                    long long node_limit)
        : n_(g.vertex_count()),
          d_(d),
          R_(rank_range),
          kcap_(k_cap),
          paircap_(pair_cap),
          limit_(node_limit),
          order_(order),
          auts_(auts),
          edges_(g.edges()) {
        adj_.resize(n_);
        deg_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            deg_[v] = g.degree(v);
            Mask m = 0;
            for (int u : g.neighbors(v)) m |= bit(u);
            adj_[v] = m;
        }
        pos_.assign(n_, std::vector<int>(d_, 0));
        upset_.assign(n_, 0);
        cnt_.assign(d_, std::vector<int>(R_ + 1, 0));
        maxv_.assign(d_, 0);
        gaps_.assign(d_, 0);
        colstate_.assign(d_ > 1 ? d_ - 1 : 0, 1);
    }

    SweepOutcome run(const std::vector<int> &first) {
        SweepOutcome out;
        try {
            count_node();
            Mask below = 0, above = 0;
            if (check_place(order_[0], first, below, above)) {
                Undo u = commit(order_[0], first, below, above);
                if (!dominated_by_relabel()) dfs(1);
                revert(order_[0], u);
            }
        } catch (const AbortLimit &) {
            out.aborted = true;
        }
        out.nodes = nodes_;
        if (bestj_ != INT_MAX) {
            out.found = true;
            out.j = bestj_;
            out.vertex_ranks = best_ranks_;
            out.pads = best_pads_;
        }
        return out;
    }

private:
    struct Corner {
        std::vector<int> m;  // coordinatewise minimum of an edge's endpoints
        Mask w = 0;          // vertices weakly above m
    };

    struct Undo {
        Mask below = 0;
        std::vector<char> colstate;
        std::vector<int> maxv, gaps;
        size_t ncorners = 0;
    };

    void count_node() {
        ++nodes_;
        if (limit_ > 0 && nodes_ > limit_) throw AbortLimit{};
    }

    void dfs(int depth) {
        if (stop_) return;
        if (depth == n_) {
            leaf();
            return;
        }
        int w = order_[depth];
        std::vector<int> r(d_, 1);
        const std::vector<int> bound(d_, R_);
        do {
            count_node();
            Mask below = 0, above = 0;
            if (check_place(w, r, below, above)) {
                Undo u = commit(w, r, below, above);
                if (!dominated_by_relabel()) dfs(depth + 1);
                revert(w, u);
                if (stop_) return;
            }
        } while (next_tuple(r, bound));
    }

    bool check_place(int w, const std::vector<int> &r, Mask &below_out, Mask &above_out) {
        // keep axis columns sorted: while two adjacent columns agree on every
        // placed vertex, the new vertex must not order them the wrong way
        for (int a = 0; a + 1 < d_; ++a)
            if (colstate_[a] && r[a] > r[a + 1]) return false;
        // every unused rank below an axis maximum must be fillable later
        int rem = n_ - depth_ - 1;
        for (int a = 0; a < d_; ++a) {
            int v = r[a];
            int gg = gaps_[a];
            if (v > maxv_[a])
                gg += v - maxv_[a] - 1;
            else if (cnt_[a][v] == 0)
                gg -= 1;
            if (gg > rem) return false;
        }
        Mask below = 0, above = 0;
        for (Mask m = assigned_; m; m &= m - 1) {
            int u = std::countr_zero(m);
            const std::vector<int> &p = pos_[u];
            bool le = true, ge = true, lt = true, gt = true;
            for (int a = 0; a < d_; ++a) {
                if (p[a] > r[a]) {
                    le = false;
                    lt = false;
                } else if (p[a] == r[a]) {
                    lt = false;
                    gt = false;
                } else {
                    ge = false;
                    gt = false;
                }
            }
            if (le && ge) return false;  // positions must be distinct
            bool adj = (adj_[w] >> u) & 1;
            // a dominated vertex with any edge has a common prey strictly
            // below it, hence below the dominator too: the pair must compete
            if (le && !adj && deg_[u] > 0) return false;
            if (ge && !adj && deg_[w] > 0) return false;
            if (lt) {
                if (upset_[u] & ~adj_[w]) return false;  // w joins u's predators
                below |= bit(u);
            }
            if (gt) above |= bit(u);
        }
        // predators of the new point share it as prey: must be pairwise adjacent
        for (Mask m = above; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (above & ~bit(u) & ~adj_[u]) return false;
        }
        // any prey of an edge lies strictly below the edge's corner, so every
        // vertex weakly above the corner becomes that prey's predator: the set
        // must stay a clique or the edge can never be covered
        for (const Corner &c : corners_) {
            bool above_c = true;
            for (int a = 0; a < d_; ++a)
                if (r[a] < c.m[a]) {
                    above_c = false;
                    break;
                }
            if (above_c && (c.w & ~adj_[w])) return false;
        }
        for (Mask m = assigned_ & adj_[w]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            std::vector<int> corner(d_);
            for (int a = 0; a < d_; ++a) corner[a] = std::min(r[a], pos_[u][a]);
            Mask wm = bit(w);
            for (Mask mm = assigned_; mm; mm &= mm - 1) {
                int y = std::countr_zero(mm);
                bool above_c = true;
                for (int a = 0; a < d_; ++a)
                    if (pos_[y][a] < corner[a]) {
                        above_c = false;
                        break;
                    }
                if (above_c) wm |= bit(y);
            }
            for (Mask mm = wm; mm; mm &= mm - 1) {
                int y = std::countr_zero(mm);
                Mask ad = (y == w) ? adj_[w] : adj_[y];
                if (wm & ~bit(y) & ~ad) return false;
            }
        }
        below_out = below;
        above_out = above;
        return true;
    }

    Undo commit(int w, const std::vector<int> &r, Mask below, Mask above) {
        Undo u;
        u.below = below;
        u.colstate = colstate_;
        u.maxv = maxv_;
        u.gaps = gaps_;
        u.ncorners = corners_.size();
        pos_[w] = r;
        for (int a = 0; a + 1 < d_; ++a)
            if (colstate_[a] && r[a] < r[a + 1]) colstate_[a] = 0;
        for (int a = 0; a < d_; ++a) {
            int v = r[a];
            if (v > maxv_[a]) {
                gaps_[a] += v - maxv_[a] - 1;
                maxv_[a] = v;
            } else if (cnt_[a][v] == 0) {
                --gaps_[a];
            }
            ++cnt_[a][v];
        }
        upset_[w] = above;
        for (Mask m = below; m; m &= m - 1) upset_[std::countr_zero(m)] |= bit(w);
        for (Corner &c : corners_) {
            bool above_c = true;
            for (int a = 0; a < d_; ++a)
                if (r[a] < c.m[a]) {
                    above_c = false;
                    break;
                }
            if (above_c) c.w |= bit(w);
        }
        assigned_ |= bit(w);
        ++depth_;
        for (Mask m = (assigned_ & ~bit(w)) & adj_[w]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            Corner c;
            c.m.resize(d_);
            for (int a = 0; a < d_; ++a) c.m[a] = std::min(r[a], pos_[v][a]);
            for (Mask mm = assigned_; mm; mm &= mm - 1) {
                int y = std::countr_zero(mm);
                bool above_c = true;
                for (int a = 0; a < d_; ++a)
                    if (pos_[y][a] < c.m[a]) {
                        above_c = false;
                        break;
                    }
                if (above_c) c.w |= bit(y);
            }
            corners_.push_back(std::move(c));
        }
        return u;
    }

    void revert(int w, const Undo &u) {
        corners_.resize(u.ncorners);
        for (Corner &c : corners_) c.w &= ~bit(w);
        --depth_;
        assigned_ &= ~bit(w);
        for (Mask m = u.below; m; m &= m - 1) upset_[std::countr_zero(m)] &= ~bit(w);
        upset_[w] = 0;
        for (int a = 0; a < d_; ++a) --cnt_[a][pos_[w][a]];
        maxv_ = u.maxv;
        gaps_ = u.gaps;
        colstate_ = u.colstate;
    }

    // prune placements whose relabeling by some automorphism is smaller in
    // the assignment-order flattening
    bool dominated_by_relabel() const {
        for (const std::vector<int> &sig : auts_) {
            Mask img = 0;
            for (Mask m = assigned_; m; m &= m - 1) img |= bit(sig[std::countr_zero(m)]);
            if (img != assigned_) continue;
            int cmp = 0;
            for (int i = 0; i < depth_ && cmp == 0; ++i) {
                const std::vector<int> &a = pos_[order_[i]];
                const std::vector<int> &b = pos_[sig[order_[i]]];
                for (int ax = 0; ax < d_; ++ax) {
                    if (b[ax] != a[ax]) {
                        cmp = b[ax] < a[ax] ? -1 : 1;
                        break;
                    }
                }
            }
            if (cmp < 0) return true;
        }
        return false;
    }

    void leaf() {
        count_node();
        std::vector<int> unc;
        for (int ei = 0; ei < (int)edges_.size(); ++ei) {
            auto [u, v] = edges_[ei];
            std::vector<int> corner(d_);
            for (int a = 0; a < d_; ++a) corner[a] = std::min(pos_[u][a], pos_[v][a]);
            bool covered = false;
            for (Mask m = assigned_; m && !covered; m &= m - 1) {
                int x = std::countr_zero(m);
                bool strictly_below = true;
                for (int a = 0; a < d_ && strictly_below; ++a)
                    if (pos_[x][a] >= corner[a]) strictly_below = false;
                if (strictly_below) covered = true;
            }
            if (!covered) unc.push_back(ei);
        }
        if (unc.empty()) {
            bestj_ = 0;
            best_ranks_ = pos_;
            best_pads_.clear();
            stop_ = true;
            return;
        }
        int cap = (bestj_ == INT_MAX) ? kcap_ : std::min(kcap_, bestj_ - 1);
        int lb = (int)((unc.size() + paircap_ - 1) / paircap_);
        if (lb > cap) return;
        auto sol = solve_pads(unc, lb, cap);
        if (sol) {
            bestj_ = sol->first;
            best_ranks_ = pos_;
            best_pads_ = sol->second;
        }
    }

    // Exact minimum number of isolated padding points finishing this leaf.
    // Padding lives on the half grid refining the vertex ranks: doubling the
    // vertex coordinates leaves one slot at, between, below and above every
    // used rank, and per axis that hits every ordering a real-valued padding
    // point could take against the vertices. Rounding a real completion to
    // the half grid therefore preserves all padding-vertex relations, and it
    // cannot create an all-strict domination between two padding points
    // (collapsed axes become ties), so the grid search is complete.
    std::optional<std::pair<int, std::vector<std::vector<int>>>> solve_pads(
        const std::vector<int> &unc, int lb, int cap) {
        size_t ne = unc.size();
        std::vector<int> bound(d_);
        for (int a = 0; a < d_; ++a) bound[a] = 2 * maxv_[a] + 1;
        std::vector<std::vector<Mask>> above_tab(d_), below_tab(d_);
        for (int a = 0; a < d_; ++a) {
            above_tab[a].assign(bound[a] + 1, 0);
            below_tab[a].assign(bound[a] + 1, 0);
            for (int val = 1; val <= bound[a]; ++val) {
                Mask ab = 0, be = 0;
                for (Mask m = assigned_; m; m &= m - 1) {
                    int x = std::countr_zero(m);
                    int vx = 2 * pos_[x][a];
                    if (vx > val) ab |= bit(x);
                    if (vx < val) be |= bit(x);
                }
                above_tab[a][val] = ab;
                below_tab[a][val] = be;
            }
        }
        Mask vertex_prey = 0;
        for (int v = 0; v < n_; ++v)
            if (upset_[v]) vertex_prey |= bit(v);
        std::set<std::vector<int>> vpos;
        for (int v = 0; v < n_; ++v) {
            std::vector<int> dbl(d_);
            for (int a = 0; a < d_; ++a) dbl[a] = 2 * pos_[v][a];
            vpos.insert(std::move(dbl));
        }
        std::vector<PadCandidate> cands;
        std::vector<int> z(d_, 1);
        do {
            Mask up = ~Mask{0};
            for (int a = 0; a < d_; ++a) up &= above_tab[a][z[a]];
            if (std::popcount(up) < 2) continue;
            Mask cover = 0;
            for (size_t i = 0; i < ne; ++i) {
                auto [eu, ev] = edges_[unc[i]];
                if (((up >> eu) & 1) && ((up >> ev) & 1)) cover |= Mask{1} << i;
            }
            if (!cover) continue;
            bool clique = true;
            for (Mask m = up; m && clique; m &= m - 1) {
                int y = std::countr_zero(m);
                if (up & ~bit(y) & ~adj_[y]) clique = false;
            }
            if (!clique) continue;
            Mask down = ~Mask{0};
            for (int a = 0; a < d_; ++a) down &= below_tab[a][z[a]];
            // a padding point must not prey on anything that has another
            // predator, vertex or padding: it would stop being isolated
            if (down & vertex_prey) continue;
            if (vpos.count(z)) continue;
            cands.push_back(PadCandidate{z, up, down, cover});
        } while (next_tuple(z, bound));
        std::vector<std::vector<int>> lists(ne);
        for (int ci = 0; ci < (int)cands.size(); ++ci)
            for (size_t i = 0; i < ne; ++i)
                if ((cands[ci].cover >> i) & 1) lists[i].push_back(ci);
        for (const std::vector<int> &l : lists)
            if (l.empty()) return std::nullopt;
        Mask full = ne >= 64 ? ~Mask{0} : (Mask{1} << ne) - 1;
        std::vector<int> chosen;
        for (int j = std::max(lb, 1); j <= cap; ++j) {
            chosen.clear();
            if (pad_dfs(cands, lists, full, j, 0, chosen)) {
                std::vector<std::vector<int>> out;
                out.reserve(chosen.size());
                for (int idx : chosen) out.push_back(cands[idx].z);
                return std::make_pair(j, out);
            }
        }
        return std::nullopt;
    }

    static bool strictly_dominates(const std::vector<int> &hi, const std::vector<int> &lo) {
        for (size_t a = 0; a < hi.size(); ++a)
            if (hi[a] <= lo[a]) return false;
        return true;
    }

    bool pad_dfs(const std::vector<PadCandidate> &cands, const std::vector<std::vector<int>> &lists,
                 Mask full, int j, Mask covered, std::vector<int> &chosen) {
        if (covered == full) return true;
        int take = (int)chosen.size();
        if (take == j) return false;
        int remaining = std::popcount(full & ~covered);
        if ((long long)(j - take) * paircap_ < remaining) return false;
        int pick = -1;
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < lists.size(); ++i)
            if (!((covered >> i) & 1) && lists[i].size() < best) {
                best = lists[i].size();
                pick = (int)i;
            }
        for (int idx : lists[pick]) {
            count_node();
            const PadCandidate &c = cands[idx];
            bool ok = true;
            for (int o : chosen) {
                const PadCandidate &p = cands[o];
                if (c.down & p.down) {  // two paddings must not share a prey
                    ok = false;
                    break;
                }
                if (strictly_dominates(c.z, p.z) || strictly_dominates(p.z, c.z)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(idx);
            if (pad_dfs(cands, lists, full, j, covered | c.cover, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    int n_, d_, R_, kcap_, paircap_;
    long long limit_;
    const std::vector<int> &order_;
    const std::vector<std::vector<int>> &auts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Mask> adj_;
    std::vector<int> deg_;

    std::vector<std::vector<int>> pos_;
    Mask assigned_ = 0;
    int depth_ = 0;
    std::vector<Mask> upset_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> maxv_, gaps_;
    std::vector<char> colstate_;
    std::vector<Corner> corners_;

    long long nodes_ = 0;
    bool stop_ = false;
    int bestj_ = INT_MAX;
    std::vector<std::vector<int>> best_ranks_;
    std::vector<std::vector<int>> best_pads_;
};

// Shards are the canonical first-vertex positions (nondecreasing rank
// tuples). Each shard searches independently with its own node slice, so the
// outcome is identical for any thread count.
SweepOutcome sweep_dimension(const Graph &g, int d, int rank_range, int k_cap, int pair_cap,
                             const std::vector<int> &order,
                             const std::vector<std::vector<int>> &auts, long long node_limit,
                             int threads) {
    std::vector<std::vector<int>> shards;
    {
        std::vector<int> r(d, 1);
        const std::vector<int> bound(d, rank_range);
        do {
            bool nondec = true;
            for (int a = 0; a + 1 < d; ++a)
                if (r[a] > r[a + 1]) {
                    nondec = false;
                    break;
                }
            if (nondec) shards.push_back(r);
        } while (next_tuple(r, bound));
    }
    long long per_shard =
        node_limit > 0 ? std::max<long long>(1, node_limit / (long long)shards.size()) : 0;
    std::vector<SweepOutcome> results(shards.size());
    auto run_shard = [&](size_t i) {
        PlacementSearch ps(g, d, rank_range, k_cap, pair_cap, order, auts, per_shard);
        results[i] = ps.run(shards[i]);
    };
    int workers = std::min<int>(threads, (int)shards.size());
    if (workers <= 1) {
        for (size_t i = 0; i < shards.size(); ++i) run_shard(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::future<void>> futs;
        futs.reserve(workers);
        for (int t = 0; t < workers; ++t)
            futs.push_back(std::async(std::launch::async, [&]() {
                for (size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1))
                    run_shard(i);
            }));
        for (std::future<void> &f : futs) f.get();
    }
    SweepOutcome merged;
    for (const SweepOutcome &sh : results) {
        merged.nodes += sh.nodes;
        merged.aborted = merged.aborted || sh.aborted;
        if (sh.found && (!merged.found || sh.j < merged.j)) {
            merged.found = true;
            merged.j = sh.j;
            merged.vertex_ranks = sh.vertex_ranks;
            merged.pads = sh.pads;
        }
    }
    return merged;
}

PointConfig assemble_witness(const Graph &g, const SweepOutcome &sw, int d) {
    std::vector<std::string> labels = g.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<Point> pts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<Coord> c(d);
        for (int a = 0; a < d; ++a) c[a] = 2 * sw.vertex_ranks[v][a];
        pts.emplace_back(std::move(c));
    }
    for (size_t i = 0; i < sw.pads.size(); ++i) {
        std::string name = "pad" + std::to_string(i);
        while (used.count(name)) name += "_";
        used.insert(name);
        labels.push_back(name);
        std::vector<Coord> c(sw.pads[i].begin(), sw.pads[i].end());
        pts.emplace_back(std::move(c));
    }
    PointConfig cfg;
    cfg.labels = std::move(labels);
    cfg.points = std::move(pts);
    cfg.validate();
    return cfg;
}

std::vector<std::vector<int>> graph_components(const Graph &g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = (int)out.size();
        std::vector<int> stack{s}, members;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

const char *cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::witness: return "witness";
        case CellStatus::exhausted: return "exhausted";
        case CellStatus::pruned: return "pruned";
        case CellStatus::aborted: return "aborted";
        case CellStatus::skipped: return "skipped";
    }
    return "unknown";
}

const char *dim_status_name(DimStatus s) {
    switch (s) {
        case DimStatus::exact: return "exact";
        case DimStatus::exhausted: return "exhausted";
        case DimStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::vector<std::vector<int>> graph_automorphisms(const Graph &g, size_t cap) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    bool overflow = false;
    auto rec = [&](auto &&self, int i) -> void {
        if (overflow) return;
        if (i == n) {
            out.push_back(perm);
            if (out.size() > cap) overflow = true;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || g.degree(c) != g.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (g.adjacent(i, j) != g.adjacent(c, perm[j])) ok = false;
            if (!ok) continue;
            perm[i] = c;
            used[c] = 1;
            self(self, i + 1);
            used[c] = 0;
            perm[i] = -1;
            if (overflow) return;
        }
    };
    rec(rec, 0);
    if (overflow) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return {id};
    }
    return out;
}

std::optional<PointConfig> realize_dimension_one(const Graph &g, int k) {
    int n = g.vertex_count();
    require(n >= 1, Errc::invalid_argument, "graph must be nonempty");
    require(k >= 0, Errc::invalid_argument, "padding count must be nonnegative");
    // On a line the competition graph of m >= 2 distinct points is a clique
    // on the top m-1 points plus an isolated bottom point. All padding must
    // stay isolated, so only the bottom slot can take it: k >= 2 never works,
    // and for k <= 1 there is one candidate shape each, verified directly.
    if (k >= 2) return std::nullopt;
    std::vector<std::string> labels;
    std::vector<Point> pts;
    Coord next = 1;
    if (k == 1) {
        std::string name = "pad0";
        const std::vector<std::string> &gl = g.labels();
        while (std::find(gl.begin(), gl.end(), name) != gl.end()) name += "_";
        labels.push_back(name);
        pts.emplace_back(std::vector<Coord>{next++});
        for (int v = 0; v < n; ++v) {
            labels.push_back(gl[v]);
            pts.emplace_back(std::vector<Coord>{next++});
        }
    } else {
        int bottom = 0;
        for (int v = 0; v < n; ++v)
            if (g.is_isolated(v)) {
                bottom = v;
                break;
            }
        labels.push_back(g.labels()[bottom]);
        pts.emplace_back(std::vector<Coord>{next++});
        for (int v = 0; v < n; ++v) {
            if (v == bottom) continue;
            labels.push_back(g.labels()[v]);
            pts.emplace_back(std::vector<Coord>{next++});
        }
    }
    PointConfig cfg;
    cfg.labels = std::move(labels);
    cfg.points = std::move(pts);
    cfg.validate();
    if (!is_realization(cfg, g, g.labels())) return std::nullopt;
    return cfg;
}

static std::string trim_note(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == ';')) s.pop_back();
    return s;
}

DimResult dim_poc(const Graph &g, const SearchBudget &budget) {
    int n = g.vertex_count();
    require(n >= 1, Errc::invalid_argument, "dimension search needs at least one vertex");
    require(n <= 32, Errc::budget, "dimension search supports at most 32 vertices, got ", n);
    require(budget.d_max >= 0, Errc::invalid_argument, "d_max must be nonnegative");
    require(budget.threads >= 1, Errc::invalid_argument, "threads must be positive");
    int E = (int)g.edge_count();

    DimResult res;
    res.witness_graph_labels = g.labels();
    std::ostringstream note;

    int k_eff = budget.k_max < 0 ? E : std::min(budget.k_max, E);
    bool k_complete = k_eff == E;
    if (budget.k_max > E)
        note << "k budget clamped to " << E << ", one padding point per edge always suffices; ";
    if (!k_complete) note << "k searched only to " << k_eff << " of " << E << ", empty cells are not proofs; ";
    int R = budget.rank_cap > 0 ? std::min(budget.rank_cap, n) : n;
    bool rank_complete = R == n;
    if (!rank_complete)
        note << "rank range capped at " << R << " of " << n << ", empty cells are not proofs; ";

    if (n == 1) {
        res.status = DimStatus::exact;
        res.dim = 0;
        res.dim_lower_bound = 0;
        note << "single vertex: the empty point of R^0 realizes it";
        res.note = trim_note(note.str());
        return res;
    }

    res.dim_lower_bound = 1;
    int start_d = 1;
    bool below_clean = true;  // dimensions below the current one proven empty

    // shared search machinery
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<std::vector<int>> auts;
    for (std::vector<int> &s : graph_automorphisms(g, 5000)) {
        bool ident = true;
        for (int v = 0; v < n; ++v)
            if (s[v] != v) {
                ident = false;
                break;
            }
        if (!ident) auts.push_back(std::move(s));
    }
    // a padding point's predators form a clique, so it covers at most
    // C(omega, 2) edges; used as a lower bound on the padding count
    int paircap = std::max(1, E);
    try {
        int omega = 1;
        for (const std::vector<int> &c : maximal_cliques(g)) omega = std::max(omega, (int)c.size());
        paircap = omega >= 2 ? omega * (omega - 1) / 2 : 1;
    } catch (const Error &e) {
        if (e.code() != Errc::budget) throw;
    }

    if (budget.use_oracles) {
        bool complete = E == n * (n - 1) / 2;
        std::vector<std::vector<int>> comps = graph_components(g);
        bool clique_plus_point = false;
        if (comps.size() == 2) {
            const std::vector<int> &big = comps[0].size() >= comps[1].size() ? comps[0] : comps[1];
            const std::vector<int> &one = comps[0].size() >= comps[1].size() ? comps[1] : comps[0];
            if (one.size() == 1) {
                clique_plus_point = true;
                for (int v : big)
                    if (g.degree(v) != (int)big.size() - 1) clique_plus_point = false;
            }
        }
        if (complete) {
            res.status = DimStatus::exact;
            res.dim = 1;
            note << "complete graph: a line of points with one padding point below realizes it; ";
            res.cells.push_back({1, 0, CellStatus::pruned, 0});
            if (k_eff >= 1) {
                std::optional<PointConfig> cfg = realize_dimension_one(g, 1);
                require(cfg.has_value(), Errc::internal, "line realization of a complete graph failed");
                require(is_realization(*cfg, g, g.labels()), Errc::internal,
                        "line witness failed verification");
                res.cells.push_back({1, 1, CellStatus::witness, 0});
                res.witness = std::move(*cfg);
                res.witness_d = 1;
                res.witness_k = 1;
                res.witness_verified = true;
            } else {
                note << "witness needs one padding point, outside the k budget; ";
            }
            res.note = trim_note(note.str());
            return res;
        }
        if (clique_plus_point) {
            res.status = DimStatus::exact;
            res.dim = 1;
            note << "clique plus one isolated vertex: a line of points realizes it; ";
            std::optional<PointConfig> cfg = realize_dimension_one(g, 0);
            require(cfg.has_value(), Errc::internal,
                    "line realization of a clique plus isolated vertex failed");
            require(is_realization(*cfg, g, g.labels()), Errc::internal,
                    "line witness failed verification");
            res.cells.push_back({1, 0, CellStatus::witness, 0});
            res.witness = std::move(*cfg);
            res.witness_d = 1;
            res.witness_k = 0;
            res.witness_verified = true;
            res.note = trim_note(note.str());
            return res;
        }
        bool interval_known = true, interval = false;
        try {
            interval = is_interval_graph(g);
        } catch (const Error &e) {
            if (e.code() != Errc::budget) throw;
            interval_known = false;
            note << "interval recognition exceeded its budget, dimension two undecided; ";
        }
        if (interval_known && interval) {
            res.status = DimStatus::exact;
            res.dim = 2;
            res.dim_lower_bound = 2;
            note << "interval graph, neither complete nor a clique plus an isolated vertex: "
                    "dimension two; ";
            if (budget.d_max >= 2) {
                require(E <= 64, Errc::budget, "placement search supports at most 64 edges, got ",
                        E);
                SweepOutcome sw = sweep_dimension(g, 2, R, k_eff, paircap, order, auts,
                                                  budget.node_limit, budget.threads);
                res.total_nodes += sw.nodes;
                if (sw.found) {
                    for (int k = 0; k <= k_eff; ++k)
                        res.cells.push_back({2, k,
                                             k >= sw.j ? CellStatus::witness
                                                       : (sw.aborted ? CellStatus::aborted
                                                                     : CellStatus::exhausted),
                                             sw.nodes});
                    PointConfig cfg = assemble_witness(g, sw, 2);
                    require(is_realization(cfg, g, g.labels()), Errc::internal,
                            "search witness failed verification");
                    res.witness = std::move(cfg);
                    res.witness_d = 2;
                    res.witness_k = sw.j;
                    res.witness_verified = true;
                } else if (sw.aborted) {
                    for (int k = 0; k <= k_eff; ++k)
                        res.cells.push_back({2, k, CellStatus::aborted, sw.nodes});
                    note << "witness search at dimension two hit the node limit; ";
                } else {
                    require(!(k_complete && rank_complete), Errc::internal,
                            "interval graph has no planar realization within a complete budget");
                    for (int k = 0; k <= k_eff; ++k)
                        res.cells.push_back({2, k, CellStatus::exhausted, sw.nodes});
                    note << "witness search at dimension two found nothing within the capped "
                            "budget; ";
                }
            } else {
                note << "witness search skipped, d_max below two; ";
            }
            res.note = trim_note(note.str());
            return res;
        }
        if (interval_known) {
            res.dim_lower_bound = 3;
            start_d = 3;
            note << "not an interval graph: dimension at least three; ";
        } else {
            res.dim_lower_bound = 2;
            start_d = 2;
        }
    }

    for (int d = start_d; d <= budget.d_max; ++d) {
        if (d == 1) {
            bool found1 = false;
            for (int k = 0; k <= std::min(k_eff, 1); ++k) {
                std::optional<PointConfig> cfg = realize_dimension_one(g, k);
                if (cfg.has_value()) {
                    res.cells.push_back({1, k, CellStatus::witness, 0});
                    res.witness = std::move(*cfg);
                    res.witness_d = 1;
                    res.witness_k = k;
                    res.witness_verified = true;
                    found1 = true;
                    break;
                }
                res.cells.push_back({1, k, CellStatus::pruned, 0});
            }
            if (found1) {
                res.status = DimStatus::exact;
                res.dim = 1;
                break;
            }
            for (int k = 2; k <= k_eff; ++k) res.cells.push_back({1, k, CellStatus::pruned, 0});
            res.dim_lower_bound = std::max(res.dim_lower_bound, 2);
            continue;
        }
        require(E <= 64, Errc::budget, "placement search supports at most 64 edges, got ", E);
        SweepOutcome sw =
            sweep_dimension(g, d, R, k_eff, paircap, order, auts, budget.node_limit, budget.threads);
        res.total_nodes += sw.nodes;
        if (sw.found) {
            for (int k = 0; k <= k_eff; ++k)
                res.cells.push_back({d, k,
                                     k >= sw.j ? CellStatus::witness
                                               : (sw.aborted ? CellStatus::aborted
                                                             : CellStatus::exhausted),
                                     sw.nodes});
            PointConfig cfg = assemble_witness(g, sw, d);
            require(is_realization(cfg, g, g.labels()), Errc::internal,
                    "search witness failed verification");
            res.witness = std::move(cfg);
            res.witness_d = d;
            res.witness_k = sw.j;
            res.witness_verified = true;
            if (below_clean) {
                res.status = DimStatus::exact;
                res.dim = d;
                res.dim_lower_bound = d;
            } else {
                res.status = DimStatus::inconclusive;
                note << "realizes in dimension " << d
                     << ", but smaller dimensions were not fully excluded; ";
            }
            break;
        }
        CellStatus st = sw.aborted ? CellStatus::aborted : CellStatus::exhausted;
        for (int k = 0; k <= k_eff; ++k) res.cells.push_back({d, k, st, sw.nodes});
        if (sw.aborted) {
            below_clean = false;
            note << "dimension " << d << " sweep hit the node limit; ";
        } else if (!k_complete || !rank_complete) {
            below_clean = false;
        } else {
            res.dim_lower_bound = std::max(res.dim_lower_bound, d + 1);
        }
    }

    if (!res.dim.has_value() && !res.witness.has_value()) {
        if (start_d > budget.d_max) {
            res.status = DimStatus::inconclusive;
            note << "search skipped, d_max " << budget.d_max
                 << " is below the first undecided dimension " << start_d << "; ";
        } else if (below_clean) {
            res.status = DimStatus::exhausted;
            note << "no realization in any dimension up to " << budget.d_max << "; ";
        } else {
            res.status = DimStatus::inconclusive;
        }
    }
    res.note = trim_note(note.str());
    return res;
}

DimResult multipartite_probe(int beta, int gamma, const SearchBudget &budget) {
    require(beta >= 1 && gamma >= 1, Errc::invalid_argument,
            "part size and part count must be positive");
    require(beta * gamma <= 12, Errc::budget, "probe supports at most 12 vertices, got ",
            beta * gamma);
    Graph g = Graph::complete_multipartite(std::vector<int>(gamma, beta));
    return dim_poc(g, budget);
}

MonotonicityReport check_induced_monotonicity(const Graph &g, const std::vector<int> &subset,
                                              const SearchBudget &budget) {
    int n = g.vertex_count();
    require(!subset.empty(), Errc::invalid_argument, "subset must be nonempty");
    std::set<int> seen;
    for (int v : subset) {
        require(v >= 0 && v < n, Errc::invalid_argument, "subset vertex ", v, " out of range");
        require(seen.insert(v).second, Errc::invalid_argument, "subset repeats vertex ", v);
    }
    std::vector<int> verts(seen.begin(), seen.end());
    std::vector<int> where(n, -1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < verts.size(); ++i) {
        where[verts[i]] = (int)i;
        labels.push_back(g.labels()[verts[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (where[u] >= 0 && where[v] >= 0) edges.emplace_back(where[u], where[v]);
    Graph h(labels, edges);

    MonotonicityReport rep;
    rep.whole = dim_poc(g, budget);
    rep.sub = dim_poc(h, budget);
    std::ostringstream detail;
    if (rep.whole.status == DimStatus::exact && rep.sub.status == DimStatus::exact) {
        detail << "dim(subgraph) = " << *rep.sub.dim << ", dim(graph) = " << *rep.whole.dim;
        rep.verdict = *rep.sub.dim <= *rep.whole.dim ? MonotonicityReport::Verdict::confirmed
                                                     : MonotonicityReport::Verdict::violated;
    } else {
        detail << "graph search " << dim_status_name(rep.whole.status) << ", subgraph search "
               << dim_status_name(rep.sub.status);
        rep.verdict = MonotonicityReport::Verdict::inconclusive;
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace poc
