#include "es.hpp"

#include <algorithm>

namespace poc {

std::optional<std::uint64_t> pow2_checked(unsigned e) {
    if (e >= 64) return std::nullopt;
    return 1ull << e;
}

std::uint64_t extraction_threshold(int d, int t) {
    require(d >= 3, Errc::invalid_argument, "extraction needs dimension >= 3, got ", d);
    require(t >= 2 && t <= d, Errc::invalid_argument, "start axis t must be in [2, ", d,
            "], got ", t);
    auto outer_exp = pow2_checked(static_cast<unsigned>(d - t + 1));
    require(outer_exp.has_value() && *outer_exp <= 63, Errc::invalid_argument,
            "extraction threshold 2^(2^(d-t+1))+1 does not fit in 64 bits for d=", d,
            ", t=", t);
    return (1ull << *outer_exp) + 1;
}

// patience sorting with parent pointers; cmp decides where a value may extend
namespace {

// Longest subsequence whose consecutive elements satisfy keep(prev, next).
// Implemented for the two monotone cases below via binary search on tails.
struct Patience {
    const std::vector<Coord> &vals;
    // tails[k] = index of the smallest viable tail of a subsequence of
    // length k+1 (under the case's ordering)
    std::vector<int> tails;
    std::vector<int> parent;

    explicit Patience(const std::vector<Coord> &v) : vals(v), parent(v.size(), -1) {}

    std::vector<int> reconstruct() {
        std::vector<int> out;
        if (tails.empty()) return out;
        for (int i = tails.back(); i >= 0; i = parent[static_cast<size_t>(i)])
            out.push_back(i);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

}  // namespace

std::vector<int> longest_nondecreasing_positions(const std::vector<Coord> &vals) {
    Patience p(vals);
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
        // first tail with value > vals[i] gets replaced (upper_bound)
        auto it = std::upper_bound(
            p.tails.begin(), p.tails.end(), vals[static_cast<size_t>(i)],
            [&](Coord x, int j) { return x < vals[static_cast<size_t>(j)]; });
        if (it != p.tails.begin()) p.parent[static_cast<size_t>(i)] = *(it - 1);
        if (it == p.tails.end())
            p.tails.push_back(i);
        else
            *it = i;
    }
    return p.reconstruct();
}

std::vector<int> longest_strictly_decreasing_positions(const std::vector<Coord> &vals) {
    // strictly decreasing in vals == strictly increasing in -vals
    Patience p(vals);
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
        Coord x = -vals[static_cast<size_t>(i)];
        auto it = std::lower_bound(p.tails.begin(), p.tails.end(), x, [&](int j, Coord y) {
            return -vals[static_cast<size_t>(j)] < y;
        });
        if (it != p.tails.begin()) p.parent[static_cast<size_t>(i)] = *(it - 1);
        if (it == p.tails.end())
            p.tails.push_back(i);
        else
            *it = i;
    }
    return p.reconstruct();
}

ChainResult chain_or_antichain(const std::vector<Point> &pts, int n) {
    require(n >= 1, Errc::invalid_argument, "n must be >= 1, got ", n);
    for (const auto &p : pts)
        require(p.dim() == 2, Errc::invalid_argument,
                "chain_or_antichain works in dimension 2; got a point of dimension ", p.dim());
    std::uint64_t need = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 1;
    require(pts.size() >= need, Errc::precondition, "need at least n^2+1 = ", need,
            " points for n = ", n, ", got ", pts.size());

    // sort by (axis 1, axis 2, input index); scan order for both searches
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto &pa = pts[static_cast<size_t>(a)].coords();
        const auto &pb = pts[static_cast<size_t>(b)].coords();
        if (pa[0] != pb[0]) return pa[0] < pb[0];
        if (pa[1] != pb[1]) return pa[1] < pb[1];
        return a < b;
    });
    std::vector<Coord> seq(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        seq[i] = pts[static_cast<size_t>(order[i])].coords()[1];

    // A nondecreasing run of axis-2 values along the sorted order is a chain
    // (axis 1 is nondecreasing by the sort). A strictly decreasing run is an
    // antichain: its axis-1 values are strictly increasing, because ties in
    // axis 1 were sorted with axis 2 ascending. One of the two has length
    // >= n+1: the classical pairing of (longest-ending-here, shortest-...)
    // lengths is injective, so max(L_chain * L_anti) >= n^2 + 1 forces it.
    auto chain_pos = longest_nondecreasing_positions(seq);
    auto anti_pos = longest_strictly_decreasing_positions(seq);

    ChainResult res;
    const std::vector<int> *picked;
    if (chain_pos.size() >= static_cast<size_t>(n) + 1) {
        res.kind = ChainResult::Kind::chain;
        picked = &chain_pos;
    } else if (anti_pos.size() >= static_cast<size_t>(n) + 1) {
        res.kind = ChainResult::Kind::antichain;
        picked = &anti_pos;
    } else {
        fail(Errc::internal, "no chain or antichain of length ", n + 1, " among ", pts.size(),
             " points; the guarantee is violated");
    }
    for (int pos : *picked) res.indices.push_back(order[static_cast<size_t>(pos)]);
    std::sort(res.indices.begin(), res.indices.end());

    // re-verify before returning
    for (size_t i = 0; i < res.indices.size(); ++i)
        for (size_t j = i + 1; j < res.indices.size(); ++j) {
            const Point &a = pts[static_cast<size_t>(res.indices[i])];
            const Point &b = pts[static_cast<size_t>(res.indices[j])];
            bool ok = res.kind == ChainResult::Kind::chain ? comparable(a, b)
                                                           : !comparable(a, b);
            require(ok, Errc::internal, "result re-verification failed on indices ",
                    res.indices[i], ", ", res.indices[j]);
        }
    return res;
}

ExtractResult extract_monotone_triple(const std::vector<Point> &pts, int t) {
    require(!pts.empty(), Errc::invalid_argument, "empty input");
    int d = pts.front().dim();
    std::uint64_t need = extraction_threshold(d, t);
    for (const auto &p : pts)
        require(p.dim() == d, Errc::invalid_argument,
                "points must share one dimension; got ", p.dim(), " and ", d);
    require(pts.size() >= need, Errc::precondition, "need at least 2^(2^(d-t+1))+1 = ", need,
            " points for d = ", d, ", t = ", t, ", got ", pts.size());

    // scan order: stable sort by axis 1, so axis 1 is nondecreasing along any
    // kept subsequence and ties keep input order
    std::vector<int> current(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) current[i] = static_cast<int>(i);
    std::stable_sort(current.begin(), current.end(), [&](int a, int b) {
        return pts[static_cast<size_t>(a)].coords()[0] < pts[static_cast<size_t>(b)].coords()[0];
    });

    ExtractResult res;
    for (int j = t; j <= d; ++j) {
        // this round's guarantee: |current| >= n^2+1 for n = 2^(2^(d-j))
        std::uint64_t n = *pow2_checked(1u << static_cast<unsigned>(d - j));
        std::vector<Coord> seq(current.size());
        for (size_t i = 0; i < current.size(); ++i)
            seq[i] = pts[static_cast<size_t>(current[i])].coords()[static_cast<size_t>(j - 1)];

        auto up = longest_nondecreasing_positions(seq);
        const std::vector<int> *picked = &up;
        std::vector<int> down;
        if (up.size() < n + 1) {
            down = longest_strictly_decreasing_positions(seq);
            require(down.size() >= n + 1, Errc::internal,
                    "round ", j, ": no monotone subsequence of length ", n + 1, " among ",
                    current.size(), " values");
            picked = &down;
        }
        std::vector<int> next;
        // trim to exactly n+1, keeping the earliest entries
        for (size_t i = 0; i < picked->size() && next.size() < n + 1; ++i)
            next.push_back(current[static_cast<size_t>((*picked)[i])]);
        current = std::move(next);

        std::vector<int> snapshot = current;
        std::sort(snapshot.begin(), snapshot.end());
        res.trace.push_back(std::move(snapshot));
    }

    require(current.size() == 3, Errc::internal, "extraction ended with ", current.size(),
            " points instead of 3");
    res.triple = {current[0], current[1], current[2]};

    // re-verify: monotone on axis 1 and on every axis t..d, in retained order
    auto mono = [&](int axis) {
        Coord a = pts[static_cast<size_t>(res.triple[0])].coords()[static_cast<size_t>(axis - 1)];
        Coord b = pts[static_cast<size_t>(res.triple[1])].coords()[static_cast<size_t>(axis - 1)];
        Coord c = pts[static_cast<size_t>(res.triple[2])].coords()[static_cast<size_t>(axis - 1)];
        return (a <= b && b <= c) || (a >= b && b >= c);
    };
    require(mono(1), Errc::internal, "triple not monotone on axis 1");
    for (int j = t; j <= d; ++j)
        require(mono(j), Errc::internal, "triple not monotone on axis ", j);
    return res;
}

}  // namespace poc
