#include "verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "competition.hpp"
#include "error.hpp"
#include "es.hpp"
#include "geometry.hpp"
#include "rng.hpp"
#include "witness.hpp"

namespace poc {

namespace {

[[noreturn]] void violate(const std::string &what) { fail(Errc::internal, what); }

void expect(bool ok, const char *what) {
    if (!ok) violate(what);
}

Point random_point(Rng &rng, int d, long long lo, long long hi) {
    std::vector<Coord> c(d);
    for (int a = 0; a < d; ++a) c[a] = (Coord)rng.range(lo, hi);
    return Point(c);
}

std::pair<Point, Point> random_incomparable_pair(Rng &rng, int d) {
    for (int i = 0; i < 200; ++i) {
        Point u = random_point(rng, d, 0, 8);
        Point v = random_point(rng, d, 0, 8);
        if (!comparable(u, v)) return {u, v};
    }
    std::vector<Coord> a(d, 0), b(d, 0);
    b[0] = 1;
    b[1] = -1;
    return {Point(a), Point(b)};
}

IndexSet random_subset_of_size(Rng &rng, int d, int size) {
    std::set<int> members;
    while ((int)members.size() < size) members.insert(1 + (int)rng.below((std::uint64_t)d));
    return IndexSet::from_members(d, std::vector<int>(members.begin(), members.end()));
}

// points ascending on the axes of S and descending elsewhere; consecutive
// steps are strict, so every in-family pair is incomparable and {S, S-bar}
// is its unique order type
std::vector<Point> chain_family(Rng &rng, int d, const IndexSet &S, int size,
                                std::set<Point> &taken, long long spread) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Coord> base(d + 1);
        for (int a = 1; a <= d; ++a) base[a] = (Coord)rng.range(0, spread);
        std::vector<Point> fam;
        bool clash = false;
        for (int i = 0; i < size && !clash; ++i) {
            std::vector<Coord> c(d);
            for (int a = 1; a <= d; ++a) c[a - 1] = S.contains(a) ? base[a] + i : base[a] - i;
            Point p(std::move(c));
            if (taken.count(p))
                clash = true;
            else
                fam.push_back(std::move(p));
        }
        if (clash) continue;
        for (const Point &p : fam) taken.insert(p);
        return fam;
    }
    fail(Errc::internal, "family generator found no disjoint placement");
}

void trial_order_types(Rng &rng, const VerifyOptions &opts) {
    int d = opts.d;
    auto [u, v] = random_incomparable_pair(rng, d);
    std::vector<OrderType> types = order_types(u, v);
    expect(!types.empty(), "incomparable pair admits no order type");
    expect((std::uint64_t)types.size() <= count_possible_order_types(d),
           "more order types than the closed form allows");
    // the explicit witness: axes where u <= v against the rest
    std::vector<int> low;
    for (int a = 1; a <= d; ++a)
        if (u[a] <= v[a]) low.push_back(a);
    OrderType wit(IndexSet::from_members(d, low));
    expect(std::find(types.begin(), types.end(), wit) != types.end(),
           "explicit order type missing from the enumeration");
    for (const OrderType &t : types) {
        expect(t.low_part().universe() == d, "order type universe mismatch");
        expect((t.low_part().mask() | t.high_part().mask()) == (std::uint64_t{1} << d) - 1,
               "order type parts do not cover the axes");
        expect((t.low_part().mask() & t.high_part().mask()) == 0,
               "order type parts overlap");
        bool fwd = precedes_on(u, v, t.low_part()) && precedes_on(v, u, t.high_part());
        bool bwd = precedes_on(v, u, t.low_part()) && precedes_on(u, v, t.high_part());
        expect(fwd || bwd, "enumerated order type does not hold for the pair");
    }
}

void trial_min_point(Rng &rng, const VerifyOptions &opts) {
    int d = opts.d;
    Point x = random_point(rng, d, 0, 20);
    std::uint64_t full = (std::uint64_t{1} << d) - 1;
    IndexSet S(d, 1 + rng.below(full - 1));
    IndexSet T = S.complement();
    std::vector<Coord> yc(d), zc(d);
    for (int a = 1; a <= d; ++a) {
        yc[a - 1] = S.contains(a) ? x[a] - (Coord)rng.below(6) : x[a] + (Coord)rng.range(-5, 5);
        zc[a - 1] = T.contains(a) ? x[a] - (Coord)rng.below(6) : x[a] + (Coord)rng.range(-5, 5);
    }
    Point y(yc), z(zc);
    expect(precedes_on(y, x, S), "generator broke the part ordering");
    expect(precedes_on(z, x, T), "generator broke the complement ordering");
    expect(precedes(min_point(y, z), x), "coordinatewise minimum does not precede the target");
}

void trial_incomparable(Rng &rng, const VerifyOptions &) {
    int d = 2 + (int)rng.below(3);
    int n = 3 + (int)rng.below(6);
    std::set<Point> taken;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        for (int attempt = 0;; ++attempt) {
            expect(attempt < 200, "generator found no distinct points");
            Point p = random_point(rng, d, 0, 6);
            if (taken.insert(p).second) {
                pts.push_back(std::move(p));
                break;
            }
        }
    }
    PointConfig cfg;
    cfg.labels = Graph::default_labels(n);
    cfg.points = pts;
    cfg.validate();
    Graph comp = competition_graph(build_digraph(cfg));
    // a dominated vertex with any edge shares prey with its dominator
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || !precedes(pts[u], pts[v])) continue;
            if (!comp.is_isolated(u))
                expect(comp.adjacent(u, v), "dominated non-isolated vertex lacks the edge");
        }
}

int longest_chain_quadratic(const std::vector<Point> &pts) {
    int m = (int)pts.size();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
        if (pts[a][2] != pts[b][2]) return pts[a][2] < pts[b][2];
        return a < b;
    });
    std::vector<int> dp(m, 1);
    int best = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            if (precedes(pts[idx[j]], pts[idx[i]])) dp[i] = std::max(dp[i], dp[j] + 1);
            best = std::max(best, dp[i]);
        }
    return best;
}

int longest_antichain_quadratic(const std::vector<Point> &pts) {
    int m = (int)pts.size();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
        return a < b;
    });
    // in the plane a pairwise-incomparable set is strictly increasing on one
    // axis and strictly decreasing on the other
    std::vector<int> dp(m, 1);
    int best = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            if (pts[idx[j]][1] < pts[idx[i]][1] && pts[idx[j]][2] > pts[idx[i]][2])
                dp[i] = std::max(dp[i], dp[j] + 1);
            best = std::max(best, dp[i]);
        }
    return best;
}

void trial_chain_antichain(Rng &rng, const VerifyOptions &opts) {
    int n = opts.n_es;
    int m = n * n + 1;
    std::vector<Point> pts;
    pts.reserve(m);
    for (int i = 0; i < m; ++i) pts.push_back(random_point(rng, 2, 0, n));
    ChainResult res = chain_or_antichain(pts, n);
    expect(res.indices.size() >= (size_t)n + 1, "result shorter than n + 1");
    expect(std::is_sorted(res.indices.begin(), res.indices.end()) &&
               std::adjacent_find(res.indices.begin(), res.indices.end()) == res.indices.end(),
           "result indices not strictly ascending");
    for (int i : res.indices) expect(i >= 0 && i < m, "result index out of range");
    for (size_t i = 0; i < res.indices.size(); ++i)
        for (size_t j = i + 1; j < res.indices.size(); ++j) {
            const Point &a = pts[res.indices[i]];
            const Point &b = pts[res.indices[j]];
            if (res.kind == ChainResult::Kind::chain)
                expect(comparable(a, b), "chain members incomparable");
            else
                expect(!comparable(a, b), "antichain members comparable");
        }
    if (n <= 5) {
        int lc = longest_chain_quadratic(pts);
        int la = longest_antichain_quadratic(pts);
        expect(lc >= n + 1 || la >= n + 1, "oracle found neither a chain nor an antichain");
        if (res.kind == ChainResult::Kind::antichain)
            expect(lc < n + 1, "antichain returned although a long chain exists");
        else
            expect(lc >= n + 1, "chain returned but the oracle finds none");
    }
}

bool monotone_triple_on(const Point &a, const Point &b, const Point &c,
                        const std::vector<int> &axes) {
    for (int ax : axes) {
        bool up = a[ax] <= b[ax] && b[ax] <= c[ax];
        bool down = a[ax] >= b[ax] && b[ax] >= c[ax];
        if (!up && !down) return false;
    }
    return true;
}

void trial_extraction(Rng &rng, const VerifyOptions &opts) {
    int d = opts.d;
    int t = opts.t_extract;
    std::uint64_t need = extraction_threshold(d, t);
    int m = (int)need + (int)rng.below(3);
    std::vector<Point> pts;
    pts.reserve(m);
    for (int i = 0; i < m; ++i) pts.push_back(random_point(rng, d, 0, 6));
    ExtractResult er = extract_monotone_triple(pts, t);
    std::vector<int> axes{1};
    for (int a = t; a <= d; ++a) axes.push_back(a);
    auto [i0, i1, i2] = er.triple;
    expect(i0 != i1 && i1 != i2 && i0 != i2, "triple repeats an index");
    for (int i : {i0, i1, i2}) expect(i >= 0 && i < m, "triple index out of range");
    expect(monotone_triple_on(pts[i0], pts[i1], pts[i2], axes),
           "extracted triple not monotone on the tracked axes");
    expect(er.trace.size() == (size_t)(d - t + 1), "trace round count wrong");
    for (int r = 0; r < (int)er.trace.size(); ++r) {
        int j = t + r;
        std::uint64_t want = (std::uint64_t{1} << (1u << (unsigned)(d - j))) + 1;
        expect(er.trace[r].size() == want, "trace round size wrong");
    }
    // independent existence scan
    bool oracle = false;
    for (int a = 0; a < m && !oracle; ++a)
        for (int b = 0; b < m && !oracle; ++b)
            for (int c = 0; c < m && !oracle; ++c) {
                if (a == b || b == c || a == c) continue;
                if (monotone_triple_on(pts[a], pts[b], pts[c], axes)) oracle = true;
            }
    expect(oracle, "oracle finds no monotone triple above the threshold");
}

void trial_witness(Rng &rng, const VerifyOptions &opts) {
    int d = opts.d;
    int ssz = opts.s_size;
    IndexSet S = random_subset_of_size(rng, d, ssz);
    int alpha = ssz == 1 ? 2 : (int)extraction_threshold(d, 3);
    std::set<Point> taken;
    std::vector<std::vector<Point>> families;
    for (int f = 0; f < alpha; ++f) {
        int size = ssz == 1 ? 2 + (int)rng.below(3) : 3 + (int)rng.below(2);
        families.push_back(chain_family(rng, d, S, size, taken, 40));
    }
    FamilyInstance inst{d, OrderType(S), S, families};
    // exhaustive search for any qualifying quadruple
    bool oracle = false;
    int nf = (int)families.size();
    for (int i = 0; i < nf && !oracle; ++i)
        for (int j = 0; j < nf && !oracle; ++j) {
            if (i == j) continue;
            for (const Point &a : families[i])
                for (const Point &b : families[j]) {
                    Point mab = min_point(a, b);
                    for (int k = 0; k < nf && !oracle; ++k)
                        for (size_t c = 0; c < families[k].size() && !oracle; ++c)
                            for (size_t e = c + 1; e < families[k].size() && !oracle; ++e)
                                if (precedes(mab, min_point(families[k][c], families[k][e])))
                                    oracle = true;
                    if (oracle) break;
                }
        }
    expect(oracle, "exhaustive scan finds no witness quadruple");
    WitnessQuadruple q = find_witness(inst);  // self-verifying
    expect(precedes(q.min_ab, q.min_cd), "witness minima not ordered");
}

void trial_forbidden(Rng &rng, int trial, const VerifyOptions &opts) {
    int d = opts.d;
    bool stacked = trial % 2 == 0;
    std::set<Point> taken;
    std::vector<std::vector<Point>> parts;
    for (int p = 0; p < opts.parts; ++p) {
        IndexSet S = stacked ? IndexSet::from_members(d, {1})
                             : random_subset_of_size(rng, d, 1 + (int)rng.below(2));
        parts.push_back(chain_family(rng, d, S, opts.part_points, taken, 60));
    }
    MultipartiteInstance inst{d, parts};
    ForbiddenOutcome out = find_forbidden_configuration(inst);
    expect(!out.full_scale, "reduced instance flagged as full scale");
    if (out.certificate) {
        expect(out.certificate->prey_check_passed, "certificate prey check failed");
        expect(precedes(out.certificate->quad.min_ab, out.certificate->quad.min_cd),
               "certificate minima not ordered");
    }
    if (stacked) {
        // every part chooses the same singleton-part type, so the first
        // phase must produce a certificate
        expect(out.certificate.has_value(), "stacked instance produced no certificate");
        expect(out.certificate->phase == ForbiddenCertificate::Phase::equal_singleton_types,
               "stacked instance resolved in an unexpected phase");
    }
}

enum class CheckId {
    order_types,
    min_point,
    incomparable,
    chain_antichain,
    extraction,
    witness,
    forbidden,
};

const std::vector<std::pair<std::string, CheckId>> &check_table() {
    static const std::vector<std::pair<std::string, CheckId>> table{
        {"order-types", CheckId::order_types},
        {"min-point", CheckId::min_point},
        {"incomparable", CheckId::incomparable},
        {"chain-antichain", CheckId::chain_antichain},
        {"extraction", CheckId::extraction},
        {"witness", CheckId::witness},
        {"forbidden", CheckId::forbidden},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &verify_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &e : check_table()) v.push_back(e.first);
        return v;
    }();
    return names;
}

VerifyReport run_verify(const std::string &check, int trials, std::uint64_t seed,
                        const VerifyOptions &opts) {
    require(trials >= 1, Errc::invalid_argument, "trials must be positive");
    const CheckId *id = nullptr;
    for (const auto &e : check_table())
        if (e.first == check) id = &e.second;
    if (!id) {
        std::string names;
        for (const auto &e : check_table()) names += (names.empty() ? "" : ", ") + e.first;
        fail(Errc::invalid_argument, "unknown check '", check, "', expected one of: ", names);
    }
    require(opts.d >= 2 && opts.d <= 6, Errc::invalid_argument, "check dimension must be in 2..6");
    switch (*id) {
        case CheckId::order_types:
        case CheckId::min_point:
        case CheckId::incomparable:
            break;
        case CheckId::chain_antichain:
            require(opts.n_es >= 1 && opts.n_es <= 20, Errc::invalid_argument,
                    "chain/antichain parameter must be in 1..20");
            break;
        case CheckId::extraction:
            require(opts.d >= 3, Errc::invalid_argument, "extraction needs dimension >= 3");
            extraction_threshold(opts.d, opts.t_extract);  // validates t and size
            break;
        case CheckId::witness:
            require(opts.d >= 3, Errc::invalid_argument, "witness check needs dimension >= 3");
            require(opts.s_size == 1 || opts.s_size == 2, Errc::invalid_argument,
                    "designated part size must be 1 or 2");
            if (opts.s_size == 2) extraction_threshold(opts.d, 3);
            break;
        case CheckId::forbidden:
            require(opts.d >= 3, Errc::invalid_argument, "forbidden check needs dimension >= 3");
            require(opts.parts >= 2, Errc::invalid_argument, "need at least two parts");
            require(opts.part_points >= 3, Errc::invalid_argument,
                    "need at least three points per part");
            break;
    }

    VerifyReport rep;
    rep.check = check;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        try {
            Rng rng(seed + (std::uint64_t)t);
            switch (*id) {
                case CheckId::order_types: trial_order_types(rng, opts); break;
                case CheckId::min_point: trial_min_point(rng, opts); break;
                case CheckId::incomparable: trial_incomparable(rng, opts); break;
                case CheckId::chain_antichain: trial_chain_antichain(rng, opts); break;
                case CheckId::extraction: trial_extraction(rng, opts); break;
                case CheckId::witness: trial_witness(rng, opts); break;
                case CheckId::forbidden: trial_forbidden(rng, t, opts); break;
            }
            ++rep.passes;
        } catch (const Error &e) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = cat("trial ", t, ": ", e.what());
        }
    }
    return rep;
}

}  // namespace poc
