#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "competition.hpp"
#include "dimsearch.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "rng.hpp"

using namespace poc;

namespace {

template <typename F>
Errc thrown_code(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<Errc>(0);
}

SearchBudget small_budget() {
    SearchBudget b;
    b.d_max = 3;
    b.node_limit = 5'000'000;
    return b;
}

int exact_dim(const Graph &g, SearchBudget b = small_budget()) {
    DimResult r = dim_poc(g, b);
    REQUIRE(r.status == DimStatus::exact);
    REQUIRE(r.dim.has_value());
    return *r.dim;
}

// a witness realization must re-verify against the graph it was found for
void check_witness(const Graph &g, const DimResult &r) {
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_verified);
    REQUIRE(r.witness_graph_labels.size() == static_cast<size_t>(g.vertex_count()));
    CHECK(is_realization(*r.witness, g, r.witness_graph_labels));
    CHECK(r.witness->dim() == *r.witness_d);
    CHECK(r.witness->size() == static_cast<size_t>(g.vertex_count() + *r.witness_k));
}

Graph relabel(const Graph &g, const std::vector<int> &perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({perm[(size_t)u], perm[(size_t)v]});
    return Graph(Graph::default_labels(g.vertex_count()), edges);
}

Graph plus_isolated(const Graph &g, int k) {
    return Graph::disjoint_union(g, Graph::edgeless(k));
}

Graph random_graph(int n, Rng &rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(1, 2)) edges.push_back({u, v});
    return Graph(Graph::default_labels(n), edges);
}

void add(PointConfig &cfg, const std::string &label, Point p) {
    cfg.labels.push_back(label);
    cfg.points.push_back(std::move(p));
}

}  // namespace

TEST_CASE("known shapes get their dimensions without search") {
    CHECK(exact_dim(Graph::complete(1)) == 0);
    CHECK(exact_dim(Graph::complete(2)) == 1);
    CHECK(exact_dim(Graph::complete(5)) == 1);
    CHECK(exact_dim(plus_isolated(Graph::complete(4), 1)) == 1);
    CHECK(exact_dim(Graph::edgeless(2)) == 1);
    CHECK(exact_dim(Graph::edgeless(3)) == 2);
    CHECK(exact_dim(Graph::path(3)) == 2);
    CHECK(exact_dim(Graph::path(4)) == 2);
    CHECK(exact_dim(Graph::star(4)) == 2);
    CHECK(exact_dim(plus_isolated(Graph::path(3), 2)) == 2);
}

TEST_CASE("four-cycle needs three dimensions") {
    SearchBudget b = small_budget();
    b.k_max = 4;
    DimResult r = dim_poc(Graph::cycle(4), b);
    REQUIRE(r.status == DimStatus::exact);
    CHECK(*r.dim == 3);
    CHECK(r.dim_lower_bound == 3);
    CHECK(*r.witness_d == 3);
    check_witness(Graph::cycle(4), r);
    CHECK(r.total_nodes > 0);
    bool saw_witness_cell = false;
    for (const CellReport &c : r.cells)
        if (c.d == 3 && c.status == CellStatus::witness) saw_witness_cell = true;
    CHECK(saw_witness_cell);
}

TEST_CASE("five-cycle needs three dimensions") {
    SearchBudget b;
    b.d_max = 3;
    b.node_limit = 0;  // full tree is about 29M tries
    DimResult r = dim_poc(Graph::cycle(5), b);
    REQUIRE(r.status == DimStatus::exact);
    CHECK(*r.dim == 3);
    check_witness(Graph::cycle(5), r);
}

TEST_CASE("hand-built realizations confirm the cycle dimensions directly") {
    // C_4 on vertices 0-3 with one padding point per edge
    PointConfig c4;
    add(c4, "0", Point({2, 8, 4}));
    add(c4, "1", Point({4, 6, 2}));
    add(c4, "2", Point({6, 4, 2}));
    add(c4, "3", Point({8, 2, 6}));
    add(c4, "p01", Point({1, 5, 1}));
    add(c4, "p12", Point({3, 3, 1}));
    add(c4, "p23", Point({5, 1, 1}));
    add(c4, "p30", Point({1, 1, 3}));
    CHECK(is_realization(c4, Graph::cycle(4), {"0", "1", "2", "3"}));

    // C_5: heights (4, 3, 2, 1, 5) over the antichain (i, 4 - i)
    PointConfig c5;
    std::vector<Coord> h = {4, 3, 2, 1, 5};
    for (int i = 0; i < 5; ++i)
        add(c5, std::to_string(i), Point({(Coord)i, (Coord)(4 - i), h[(size_t)i]}));
    add(c5, "p01", Point({-1, 2, 2}));
    add(c5, "p12", Point({0, 1, 1}));
    add(c5, "p23", Point({1, 0, 0}));
    add(c5, "p34", Point({2, -1, 0}));
    add(c5, "p40", Point({-1, -1, 3}));
    CHECK(is_realization(c5, Graph::cycle(5), {"0", "1", "2", "3", "4"}));
}

TEST_CASE("oracle answers agree with the raw search in low dimension") {
    SearchBudget with, without;
    with.d_max = without.d_max = 2;
    without.use_oracles = false;
    for (const Graph &g : {Graph::complete(1), Graph::complete(3), Graph::edgeless(2),
                           Graph::edgeless(3), Graph::path(3), Graph::path(4),
                           Graph::star(3), plus_isolated(Graph::complete(3), 1)}) {
        DimResult a = dim_poc(g, with);
        DimResult b = dim_poc(g, without);
        REQUIRE(a.status == DimStatus::exact);
        REQUIRE(b.status == DimStatus::exact);
        CHECK(*a.dim == *b.dim);
        if (*b.dim >= 1) check_witness(g, b);
    }
}

TEST_CASE("raw search rediscovers the interval characterization") {
    // triangle with a pendant is interval, dimension 2
    Graph g(Graph::default_labels(4), {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    SearchBudget b;
    b.d_max = 2;
    b.use_oracles = false;
    DimResult r = dim_poc(g, b);
    REQUIRE(r.status == DimStatus::exact);
    CHECK(*r.dim == 2);
    check_witness(g, r);
}

TEST_CASE("the dimension is invariant under relabeling") {
    Rng rng(402);
    Graph c4 = Graph::cycle(4);
    SearchBudget b = small_budget();
    b.k_max = 4;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        Graph h = relabel(c4, perm);
        DimResult r = dim_poc(h, b);
        REQUIRE(r.status == DimStatus::exact);
        CHECK(*r.dim == 3);
        check_witness(h, r);
    }
}

TEST_CASE("thread count changes nothing observable") {
    SearchBudget one = small_budget(), four = small_budget();
    one.k_max = four.k_max = 4;
    one.threads = 1;
    four.threads = 4;
    for (const Graph &g : {Graph::cycle(4), Graph::path(4), Graph::edgeless(3)}) {
        DimResult a = dim_poc(g, one);
        DimResult b = dim_poc(g, four);
        CHECK(a.status == b.status);
        CHECK(a.dim == b.dim);
        CHECK(a.dim_lower_bound == b.dim_lower_bound);
        CHECK(a.total_nodes == b.total_nodes);
        CHECK(a.note == b.note);
        REQUIRE(a.cells.size() == b.cells.size());
        for (size_t i = 0; i < a.cells.size(); ++i) {
            CHECK(a.cells[i].d == b.cells[i].d);
            CHECK(a.cells[i].k == b.cells[i].k);
            CHECK(a.cells[i].status == b.cells[i].status);
            CHECK(a.cells[i].nodes == b.cells[i].nodes);
        }
        if (a.witness.has_value()) {
            REQUIRE(b.witness.has_value());
            CHECK(a.witness->labels == b.witness->labels);
            CHECK(a.witness->points == b.witness->points);
        }
    }
}

TEST_CASE("a tiny node limit reports an honest abort") {
    SearchBudget b;
    b.d_max = 3;
    b.k_max = 4;
    b.node_limit = 50;
    DimResult r = dim_poc(Graph::cycle(4), b);
    CHECK(r.status == DimStatus::inconclusive);
    CHECK_FALSE(r.dim.has_value());
    CHECK(r.dim_lower_bound == 3);  // non-interval, so the oracle floor stands
    bool saw_abort = false;
    for (const CellReport &c : r.cells)
        if (c.status == CellStatus::aborted) saw_abort = true;
    CHECK(saw_abort);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("d_max below the true dimension exhausts honestly") {
    SearchBudget b;
    b.d_max = 2;
    b.use_oracles = false;
    b.node_limit = 5'000'000;
    DimResult r = dim_poc(Graph::cycle(4), b);
    CHECK(r.status == DimStatus::exhausted);
    CHECK_FALSE(r.dim.has_value());
    CHECK(r.dim_lower_bound == 3);
    for (const CellReport &c : r.cells)
        CHECK((c.status == CellStatus::exhausted || c.status == CellStatus::pruned));
}

TEST_CASE("rank caps that cut the grid come back inconclusive, not wrong") {
    SearchBudget b;
    b.d_max = 3;
    b.k_max = 4;
    b.rank_cap = 1;  // nowhere near enough room for a four-cycle
    DimResult r = dim_poc(Graph::cycle(4), b);
    CHECK(r.status != DimStatus::exact);
    CHECK_FALSE(r.dim.has_value());
}

TEST_CASE("multipartite probe handles the smallest stacked case") {
    SearchBudget b;
    b.d_max = 3;
    b.node_limit = 0;
    DimResult r = multipartite_probe(2, 2, b);
    REQUIRE(r.status == DimStatus::exact);
    CHECK(*r.dim == 3);
    check_witness(Graph::complete_multipartite({2, 2}), r);

    CHECK(thrown_code([&] { multipartite_probe(4, 4, b); }) == Errc::budget);
    CHECK(thrown_code([&] { multipartite_probe(0, 2, b); }) == Errc::invalid_argument);
}

TEST_CASE("automorphism groups have the right order") {
    CHECK(graph_automorphisms(Graph::cycle(4)).size() == 8);
    CHECK(graph_automorphisms(Graph::cycle(5)).size() == 10);
    CHECK(graph_automorphisms(Graph::complete(4)).size() == 24);
    CHECK(graph_automorphisms(Graph::path(4)).size() == 2);
    CHECK(graph_automorphisms(Graph::complete_multipartite({2, 2, 2})).size() == 48);
    // above the cap only the identity comes back
    CHECK(graph_automorphisms(Graph::complete(8), 100).size() == 1);
    for (const auto &perm : graph_automorphisms(Graph::star(3))) {
        CHECK(perm.size() == 4);
        CHECK(perm[0] == 0);  // the hub is degree-fixed
    }
    CHECK(graph_automorphisms(Graph::star(3)).size() == 6);
}

TEST_CASE("line realizations exist exactly for cliques with a spare bottom") {
    CHECK_FALSE(realize_dimension_one(Graph::complete(3), 0).has_value());
    auto cfg = realize_dimension_one(Graph::complete(3), 1);
    REQUIRE(cfg.has_value());
    CHECK(cfg->dim() == 1);
    CHECK(cfg->size() == 4);
    CHECK(is_realization(*cfg, Graph::complete(3), Graph::complete(3).labels()));
    CHECK(realize_dimension_one(plus_isolated(Graph::complete(3), 1), 0).has_value());
    CHECK_FALSE(realize_dimension_one(Graph::path(3), 1).has_value());
    CHECK_FALSE(realize_dimension_one(Graph::cycle(4), 1).has_value());
    CHECK(realize_dimension_one(Graph::complete(1), 0).has_value());
    CHECK(realize_dimension_one(Graph::edgeless(2), 0).has_value());
    CHECK_FALSE(realize_dimension_one(Graph::edgeless(3), 0).has_value());
    // a second isolated point never helps on a line
    CHECK_FALSE(realize_dimension_one(Graph::complete(3), 2).has_value());
}

TEST_CASE("induced subgraphs never need more dimensions") {
    SearchBudget b = small_budget();
    b.k_max = 4;
    MonotonicityReport rep = check_induced_monotonicity(Graph::cycle(4), {0, 1, 2}, b);
    CHECK(rep.verdict == MonotonicityReport::Verdict::confirmed);
    REQUIRE(rep.whole.dim.has_value());
    REQUIRE(rep.sub.dim.has_value());
    CHECK(*rep.sub.dim <= *rep.whole.dim);
    CHECK(*rep.sub.dim == 2);  // a three-vertex path inside the cycle

    Rng rng(977);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_graph(5, rng);
        MonotonicityReport r = check_induced_monotonicity(g, {0, 1, 2, 3}, b);
        CHECK(r.verdict != MonotonicityReport::Verdict::violated);
    }
}

TEST_CASE("budgets and graphs out of range are rejected up front") {
    SearchBudget b;
    b.d_max = -1;
    CHECK(thrown_code([&] { dim_poc(Graph::complete(2), b); }) == Errc::invalid_argument);
    b = SearchBudget{};
    b.threads = 0;
    CHECK(thrown_code([&] { dim_poc(Graph::complete(2), b); }) == Errc::invalid_argument);
    // the placement sweep keeps edge cover sets in one 64-bit word
    b = SearchBudget{};
    b.node_limit = 1000;
    CHECK(thrown_code([&] { dim_poc(Graph::complete_multipartite({5, 5, 5}), b); }) ==
          Errc::budget);
}
