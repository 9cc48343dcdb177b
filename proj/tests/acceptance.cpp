// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each criterion carries its runtime ceiling; exceeding it is a failure.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "competition.hpp"
#include "dimsearch.hpp"
#include "error.hpp"
#include "es.hpp"
#include "geometry.hpp"
#include "rng.hpp"
#include "witness.hpp"

using namespace poc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double budget_s;  // 0 means unbounded
    std::function<Outcome()> run;
};

std::string fmt(const char *f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[512];
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---- helpers shared by several criteria ----

std::vector<Point> random_distinct_points(Rng &rng, int n, int d, Coord lo, Coord hi) {
    std::set<std::vector<Coord>> seen;
    std::vector<Point> pts;
    while ((int)pts.size() < n) {
        std::vector<Coord> c((size_t)d);
        for (Coord &x : c) x = rng.range(lo, hi);
        if (seen.insert(c).second) pts.emplace_back(c);
    }
    return pts;
}

// longest pairwise-comparable subset size, quadratic dynamic program
int longest_chain(const std::vector<Point> &pts) {
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
        return pts[a][2] < pts[b][2];
    });
    std::vector<int> dp(pts.size(), 1);
    int best = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (precedes(pts[order[j]], pts[order[i]])) dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

// longest pairwise-incomparable subset size; in the plane such a set is
// strictly increasing on one axis and strictly decreasing on the other
int longest_antichain(const std::vector<Point> &pts) {
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
        return pts[a][2] > pts[b][2];
    });
    std::vector<int> dp(pts.size(), 1);
    int best = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (pts[order[j]][1] < pts[order[i]][1] && pts[order[j]][2] > pts[order[i]][2])
                dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

bool axis_monotone(const std::vector<Point> &pts, const std::vector<int> &idx, int axis) {
    Coord a = pts[(size_t)idx[0]][axis];
    Coord b = pts[(size_t)idx[1]][axis];
    Coord c = pts[(size_t)idx[2]][axis];
    return (a <= b && b <= c) || (a >= b && b >= c);
}

bool triple_monotone(const std::vector<Point> &pts, const std::vector<int> &idx, int d, int t) {
    if (!axis_monotone(pts, idx, 1)) return false;
    for (int a = t; a <= d; ++a)
        if (!axis_monotone(pts, idx, a)) return false;
    return true;
}

std::vector<Point> chain_family(int d, const IndexSet &part, int size, Rng &rng, Coord base,
                                Coord top) {
    std::vector<Point> fam;
    Coord up = 0, down = 0;
    for (int t = 0; t < size; ++t) {
        up += t == 0 ? 0 : rng.range(1, 3);
        down += t == 0 ? 0 : rng.range(1, 3);
        std::vector<Coord> c((size_t)d);
        for (int a = 1; a <= d; ++a)
            c[(size_t)a - 1] = part.contains(a) ? base + up : top - base - down;
        fam.push_back(Point(c));
    }
    return fam;
}

bool oracle_has_quadruple(const std::vector<std::vector<Point>> &families) {
    int nf = (int)families.size();
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            if (i == j) continue;
            for (const Point &a : families[(size_t)i])
                for (const Point &b : families[(size_t)j])
                    for (int k = 0; k < nf; ++k)
                        for (size_t ci = 0; ci < families[(size_t)k].size(); ++ci)
                            for (size_t di = ci + 1; di < families[(size_t)k].size(); ++di)
                                if (precedes(min_point(a, b),
                                             min_point(families[(size_t)k][ci],
                                                       families[(size_t)k][di])))
                                    return true;
        }
    return false;
}

Graph graph_of(const std::vector<Point> &pts) {
    PointConfig cfg;
    for (size_t i = 0; i < pts.size(); ++i) {
        cfg.labels.push_back(std::to_string(i));
        cfg.points.push_back(pts[i]);
    }
    return competition_graph(build_digraph(cfg));
}

// ---- the criteria ----

Outcome small_graph_dimensions() {
    struct Row {
        Graph g;
        int want;
        const char *name;
    };
    std::vector<Row> rows;
    rows.push_back({Graph::complete(1), 0, "K_1"});
    for (int t = 2; t <= 5; ++t) {
        rows.push_back({Graph::complete(t), 1, "K_t"});
        rows.push_back({Graph::disjoint_union(Graph::complete(t), Graph::edgeless(1)), 1,
                        "K_t plus isolated"});
    }
    rows.push_back({Graph::path(3), 2, "P_3"});
    rows.push_back({Graph::path(4), 2, "P_4"});
    rows.push_back({Graph::star(3), 2, "K_{1,3}"});
    for (const Row &row : rows) {
        DimResult r = dim_poc(row.g);
        if (r.status != DimStatus::exact || !r.dim || *r.dim != row.want)
            return {false, fmt("%s: wanted %d, got %s", row.name, row.want,
                               r.dim ? std::to_string(*r.dim).c_str() : "none")};
    }
    return {true, fmt("%zu graphs decided correctly", rows.size())};
}

Outcome cycle_dimension_three() {
    for (int n : {4, 5}) {
        Graph g = Graph::cycle(n);
        SearchBudget b;
        b.d_max = 3;
        b.k_max = g.edge_count();
        b.node_limit = 0;
        DimResult r = dim_poc(g, b);
        if (r.status != DimStatus::exact || !r.dim || *r.dim != 3)
            return {false, fmt("cycle of %d: dimension not determined as 3", n)};
        if (!r.witness || !r.witness_verified)
            return {false, fmt("cycle of %d: no verified witness", n)};
        if (!is_realization(*r.witness, g, r.witness_graph_labels))
            return {false, fmt("cycle of %d: witness fails re-verification", n)};
    }
    return {true, "cycles of length 4 and 5 both need exactly three axes"};
}

Outcome order_type_counts() {
    for (int d = 2; d <= 8; ++d) {
        std::uint64_t want = (1ull << (d - 1)) - 1;
        if (count_possible_order_types(d) != want)
            return {false, fmt("count at d=%d is not %llu", d, (unsigned long long)want)};
        if (enumerate_order_types(d).size() != want)
            return {false, fmt("enumeration size at d=%d is not %llu", d,
                               (unsigned long long)want)};
    }
    std::vector<OrderType> types = order_types(Point({1, 2, 5}), Point({1, 3, 4}));
    std::vector<std::string> got;
    for (const OrderType &t : types) got.push_back(t.to_string());
    std::vector<std::string> want = {"{{1,2},{3}}", "{{1,3},{2}}"};
    if (got != want) {
        std::string s;
        for (const std::string &g : got) s += g + " ";
        return {false, "pair (1,2,5)/(1,3,4) gave " + s};
    }
    return {true, "counts match 2^(d-1)-1 for d=2..8; the worked pair gives both its types"};
}

Outcome chain_antichain_guarantee() {
    for (int n : {2, 3, 5, 10}) {
        int npts = n * n + 1;
        for (int trial = 0; trial < 10000; ++trial) {
            Rng rng(0x45530000u + (std::uint64_t)n * 100000 + (std::uint64_t)trial);
            std::vector<Point> pts;
            pts.reserve((size_t)npts);
            for (int i = 0; i < npts; ++i)
                pts.push_back(Point({rng.range(0, 1000), rng.range(0, 1000)}));
            ChainResult res = chain_or_antichain(pts, n);
            if ((int)res.indices.size() < n + 1)
                return {false, fmt("n=%d trial %d: structure shorter than %d", n, trial, n + 1)};
            if (n <= 5) {
                int lc = longest_chain(pts);
                int la = longest_antichain(pts);
                bool ok = res.kind == ChainResult::Kind::chain
                              ? (lc >= n + 1 && (int)res.indices.size() == lc)
                              : (lc < n + 1 && (int)res.indices.size() == la);
                if (!ok)
                    return {false, fmt("n=%d trial %d: disagrees with the exact oracle (chain %d"
                                       ", antichain %d, returned %zu)",
                                       n, trial, lc, la, res.indices.size())};
            }
        }
    }
    return {true, "40000 seeded inputs, all structures long enough, oracle-exact for n <= 5"};
}

Outcome triple_extraction() {
    for (int t : {3, 2}) {
        int need = (int)extraction_threshold(3, t);
        for (int trial = 0; trial < 1000; ++trial) {
            Rng rng(0xE0000000u + (std::uint64_t)t * 1000000 + (std::uint64_t)trial);
            std::vector<Point> pts = random_distinct_points(rng, need, 3, 0, 300);
            ExtractResult res = extract_monotone_triple(pts, t);
            std::vector<int> idx(res.triple.begin(), res.triple.end());
            if (!triple_monotone(pts, idx, 3, t))
                return {false, fmt("t=%d trial %d: returned triple is not monotone", t, trial)};
            bool exists = false;  // exhaustive scan, every choice of middle point
            int n = (int)pts.size();
            for (int p = 0; p < n && !exists; ++p)
                for (int q = p + 1; q < n && !exists; ++q)
                    for (int r = q + 1; r < n && !exists; ++r)
                        exists = triple_monotone(pts, {p, q, r}, 3, t) ||
                                 triple_monotone(pts, {p, r, q}, 3, t) ||
                                 triple_monotone(pts, {q, p, r}, 3, t);
            if (!exists)
                return {false, fmt("t=%d trial %d: oracle finds no monotone triple", t, trial)};
        }
    }
    return {true, "1000 instances each at sizes 5 and 17, every triple monotone, oracle agrees"};
}

Outcome witness_quadruple() {
    for (int s_size : {1, 2}) {
        int nf = s_size == 1 ? 2 : 5;
        for (int trial = 0; trial < 1000; ++trial) {
            Rng rng(0x3B000000u + (std::uint64_t)s_size * 1000000 + (std::uint64_t)trial);
            IndexSet s = s_size == 1 ? IndexSet::from_members(3, {1})
                                     : IndexSet::from_members(3, {1, 2});
            FamilyInstance inst;
            inst.d = 3;
            inst.shared_type = OrderType(s);
            inst.designated_part = s;
            int size = (s_size == 1 ? 2 : 3) + (int)rng.below(2);
            for (int f = 0; f < nf; ++f)
                inst.families.push_back(
                    chain_family(3, s, size, rng, (Coord)(1000 * f) + rng.range(0, 400),
                                 1000000 + rng.range(0, 5)));
            inst.validate();
            WitnessQuadruple q = find_witness(inst);
            q.verify_against(inst.families);
            if (q.fam_i == q.fam_j || !precedes(q.min_ab, q.min_cd))
                return {false, fmt("s=%d trial %d: invalid quadruple", s_size, trial)};
            if (!oracle_has_quadruple(inst.families))
                return {false, fmt("s=%d trial %d: exhaustive search disagrees", s_size, trial)};
        }
    }
    return {true, "1000 two-family and 1000 five-family instances, quadruple always found"};
}

Outcome forbidden_pipeline() {
    int beta = (int)pipeline_beta(3);
    int gamma = (int)pipeline_gamma(3);
    const std::vector<OrderType> &types = enumerate_order_types(3);
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng(0xF0BB0000u + (std::uint64_t)seed);
        MultipartiteInstance inst;
        inst.d = 3;
        for (int p = 0; p < gamma; ++p) {
            const OrderType &tp = types[rng.below(types.size())];
            // ascend on the part holding axis 1 so axis-1 blocks stay disjoint
            inst.parts.push_back(chain_family(3, tp.low_part(), beta, rng,
                                              (Coord)(100000 * p),
                                              2000000000 + rng.range(0, 9)));
        }
        inst.validate();
        ForbiddenOutcome out = find_forbidden_configuration(inst);
        if (!out.full_scale) return {false, fmt("seed %d: scale flag lost", seed)};
        if (!out.certificate) return {false, fmt("seed %d: no certificate", seed)};
        if (!out.certificate->prey_check_passed)
            return {false, fmt("seed %d: prey check failed", seed)};
        out.certificate->quad.verify_against(inst.parts);
        if (!check_prey_forces_edge(inst, *out.certificate))
            return {false, fmt("seed %d: prey does not force the same-part edge", seed)};
    }
    return {true, "10 seeded instances of 52 parts x 17 points, certificate and prey check"
                  " every time"};
}

Outcome invariance_suite() {
    int reparam_pairs = 0, padding_runs = 0, incomparable_pairs = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Rng rng(0x1BBB0000u + (std::uint64_t)trial);
        int n = 2 + (int)rng.below(7);   // up to 8 points
        int d = 2 + (int)rng.below(3);   // up to 4 axes
        std::vector<Point> pts = random_distinct_points(rng, n, d, 0, 12);
        Graph base = graph_of(pts);

        // per-axis strictly increasing remap: same graph
        std::vector<std::vector<Coord>> mapped_coords(pts.size(),
                                                      std::vector<Coord>((size_t)d));
        for (int a = 1; a <= d; ++a) {
            std::vector<Coord> vals;
            for (const Point &p : pts) vals.push_back(p[a]);
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            std::vector<Coord> image(vals.size());
            Coord acc = rng.range(-40, 40);
            for (size_t i = 0; i < vals.size(); ++i) {
                acc += rng.range(1, 9);
                image[i] = acc;
            }
            for (size_t i = 0; i < pts.size(); ++i) {
                size_t pos = (size_t)(std::lower_bound(vals.begin(), vals.end(), pts[i][a]) -
                                      vals.begin());
                mapped_coords[i][(size_t)a - 1] = image[pos];
            }
        }
        std::vector<Point> mapped;
        for (auto &c : mapped_coords) mapped.push_back(Point(c));
        if (!(graph_of(mapped) == base))
            return {false, fmt("trial %d: monotone remap changed the graph", trial)};
        reparam_pairs++;

        // an extra axis that repeats an old one or sums them all: same graph
        std::vector<Point> padded;
        bool dup_axis = rng.chance(1, 2);
        int src = 1 + (int)rng.below((std::uint64_t)d);
        for (const Point &p : pts) {
            std::vector<Coord> c;
            Coord sum = 0;
            for (int a = 1; a <= d; ++a) {
                c.push_back(p[a]);
                sum += p[a];
            }
            c.push_back(dup_axis ? p[src] : sum);
            padded.push_back(Point(c));
        }
        if (!(graph_of(padded) == base))
            return {false, fmt("trial %d: axis padding changed the graph", trial)};
        padding_runs++;

        // nonadjacent points that both compete somewhere must be incomparable
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (base.adjacent(u, v) || base.is_isolated(u) || base.is_isolated(v)) continue;
                if (comparable(pts[(size_t)u], pts[(size_t)v]))
                    return {false, fmt("trial %d: comparable nonadjacent pair %d,%d", trial, u, v)};
                incomparable_pairs++;
            }
    }
    return {true, fmt("1000 configurations: %d remaps, %d paddings, %d incomparable pairs",
                      reparam_pairs, padding_runs, incomparable_pairs)};
}

Outcome scale_record() {
    // the conjectured five-axis threshold graph has 65537 x 655366 vertices;
    // no desk search touches that, so the record is the two smallest probes
    SearchBudget b;
    b.d_max = 3;
    b.node_limit = 0;
    std::ostringstream note;
    for (auto [beta, gamma] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        DimResult r = multipartite_probe(beta, gamma, b);
        if (r.status != DimStatus::exact || !r.dim || *r.dim != 3)
            return {false, fmt("probe %dx%d did not settle at dimension 3", beta, gamma)};
        if (!r.witness_verified)
            return {false, fmt("probe %dx%d witness unverified", beta, gamma)};
        int exhausted = 0, witnesses = 0;
        for (const CellReport &c : r.cells) {
            exhausted += c.status == CellStatus::exhausted;
            witnesses += c.status == CellStatus::witness;
        }
        note << beta << "x" << gamma << ": dim 3, k_min " << *r.witness_k << ", "
             << exhausted << " exhausted / " << witnesses << " witness cells, "
             << r.total_nodes << " nodes; ";
    }
    note << "the 65537x655366 threshold graph stays out of search range";
    return {true, note.str()};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"small-graph dimensions", 10.0, small_graph_dimensions},
        {"cycle dimension three", 1200.0, cycle_dimension_three},
        {"order-type counts", 1.0, order_type_counts},
        {"chain-antichain guarantee", 60.0, chain_antichain_guarantee},
        {"triple extraction", 60.0, triple_extraction},
        {"witness quadruple", 120.0, witness_quadruple},
        {"forbidden-configuration pipeline", 300.0, forbidden_pipeline},
        {"invariance suite", 60.0, invariance_suite},
        {"probe scale record", 0.0, scale_record},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool in_budget = c.budget_s == 0.0 || secs <= c.budget_s;
        bool pass = out.pass && in_budget;
        failures += !pass;
        printf("[%s] %s (%.2f s%s) %s\n", pass ? "PASS" : "FAIL", c.name.c_str(), secs,
               in_budget ? "" : fmt(", over the %.0f s ceiling", c.budget_s).c_str(),
               out.detail.c_str());
        fflush(stdout);
    }
    if (failures) printf("%d of %zu criteria failed\n", failures, criteria.size());
    else printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
