#include "poc/poc.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "competition.hpp"
#include "dimsearch.hpp"
#include "error.hpp"
#include "es.hpp"
#include "geometry.hpp"
#include "verify.hpp"

namespace {

thread_local std::string t_err;
thread_local poc_status t_status = POC_OK;

poc_status map_errc(poc::Errc c) {
    switch (c) {
        case poc::Errc::invalid_argument: return POC_EINVAL;
        case poc::Errc::precondition: return POC_EPRECOND;
        case poc::Errc::budget: return POC_EBUDGET;
        case poc::Errc::internal: return POC_EINTERNAL;
    }
    return POC_EINTERNAL;
}

poc_status record(poc_status st, const char *msg) {
    t_err = msg;
    t_status = st;
    return st;
}

template <typename F>
poc_status guarded(F &&f) noexcept {
    try {
        f();
        return POC_OK;
    } catch (const poc::Error &e) {
        return record(map_errc(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return record(POC_ENOMEM, "out of memory");
    } catch (const std::exception &e) {
        return record(POC_EINTERNAL, e.what());
    } catch (...) {
        return record(POC_EINTERNAL, "unknown error");
    }
}

void need(bool cond, const char *msg) {
    if (!cond) throw poc::Error(poc::Errc::invalid_argument, msg);
}

std::vector<poc::Point> make_points(int32_t dim, int64_t n, const int64_t *coords) {
    need(dim >= 1, "dim must be >= 1");
    need(n >= 1, "need at least one point");
    need(coords != nullptr, "coords is null");
    need(n <= std::numeric_limits<int>::max() / dim, "too many points");
    std::vector<poc::Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        const int64_t *row = coords + i * dim;
        pts.emplace_back(std::vector<poc::Coord>(row, row + dim));
    }
    return pts;
}

poc::Point make_point(int32_t dim, const int64_t *c, const char *what) {
    need(dim >= 1, "dim must be >= 1");
    need(c != nullptr, what);
    return poc::Point(std::vector<poc::Coord>(c, c + dim));
}

poc::SearchBudget to_budget(const poc_search_budget *b) {
    poc::SearchBudget s;
    if (b != nullptr) {
        s.d_max = b->d_max;
        s.k_max = b->k_max;
        s.rank_cap = b->rank_cap;
        s.use_oracles = b->use_oracles != 0;
        s.node_limit = b->node_limit;
        s.threads = b->threads;
    }
    return s;
}

}  // namespace

extern "C" {

struct poc_compete_result {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> arcs;
};

struct poc_dim_result {
    poc::DimResult r;
};

const char *poc_last_error(void) { return t_err.c_str(); }

poc_status poc_last_status(void) { return t_status; }

poc_status poc_precedes(int32_t dim, const int64_t *u, const int64_t *v, int32_t strict,
                        int32_t *out) {
    return guarded([&] {
        need(out != nullptr, "out is null");
        poc::Point pu = make_point(dim, u, "u is null");
        poc::Point pv = make_point(dim, v, "v is null");
        bool r = strict != 0 ? poc::precedes_strict(pu, pv) : poc::precedes(pu, pv);
        *out = r ? 1 : 0;
    });
}

poc_status poc_comparable(int32_t dim, const int64_t *u, const int64_t *v, int32_t *out) {
    return guarded([&] {
        need(out != nullptr, "out is null");
        poc::Point pu = make_point(dim, u, "u is null");
        poc::Point pv = make_point(dim, v, "v is null");
        *out = poc::comparable(pu, pv) ? 1 : 0;
    });
}

poc_status poc_min_point(int32_t dim, const int64_t *u, const int64_t *v, int64_t *out_coords) {
    return guarded([&] {
        need(out_coords != nullptr, "out_coords is null");
        poc::Point m = poc::min_point(make_point(dim, u, "u is null"), make_point(dim, v, "v is null"));
        for (int a = 1; a <= dim; ++a) out_coords[a - 1] = m[a];
    });
}

poc_status poc_count_order_types(int32_t dim, uint64_t *out) {
    return guarded([&] {
        need(out != nullptr, "out is null");
        *out = poc::count_possible_order_types(dim);
    });
}

poc_status poc_order_types(int32_t dim, const int64_t *u, const int64_t *v, uint64_t *masks,
                           int64_t cap, int64_t *count) {
    return guarded([&] {
        need(count != nullptr, "count is null");
        need(masks != nullptr || cap == 0, "masks is null");
        std::vector<poc::OrderType> ts =
            poc::order_types(make_point(dim, u, "u is null"), make_point(dim, v, "v is null"));
        *count = static_cast<int64_t>(ts.size());
        int64_t take = std::min<int64_t>(cap, *count);
        for (int64_t i = 0; i < take; ++i) masks[i] = ts[static_cast<size_t>(i)].low_part().mask();
    });
}

poc_compete_result *poc_compete_new(int32_t dim, int64_t n, const int64_t *coords) {
    poc_compete_result *out = nullptr;
    guarded([&] {
        poc::PointConfig cfg;
        cfg.points = make_points(dim, n, coords);
        cfg.labels = poc::Graph::default_labels(static_cast<int>(n));
        cfg.validate();
        if (cfg.has_duplicate_positions())
            throw poc::Error(poc::Errc::precondition,
                             "rows must form a point set: duplicate coordinate vector");
        poc::Digraph dg = poc::build_digraph(cfg);
        poc::Graph g = poc::competition_graph(dg);
        auto res = std::make_unique<poc_compete_result>();
        res->edges = g.edges();
        res->arcs = dg.arcs;
        out = res.release();
    });
    return out;
}

void poc_compete_free(poc_compete_result *res) { delete res; }

int64_t poc_compete_edge_count(const poc_compete_result *res) {
    return res == nullptr ? -1 : static_cast<int64_t>(res->edges.size());
}

poc_status poc_compete_edge(const poc_compete_result *res, int64_t i, int64_t *u, int64_t *v) {
    return guarded([&] {
        need(res != nullptr, "result is null");
        need(u != nullptr && v != nullptr, "out pointer is null");
        need(i >= 0 && i < static_cast<int64_t>(res->edges.size()), "edge index out of range");
        *u = res->edges[static_cast<size_t>(i)].first;
        *v = res->edges[static_cast<size_t>(i)].second;
    });
}

int64_t poc_compete_arc_count(const poc_compete_result *res) {
    return res == nullptr ? -1 : static_cast<int64_t>(res->arcs.size());
}

poc_status poc_compete_arc(const poc_compete_result *res, int64_t i, int64_t *predator,
                           int64_t *prey) {
    return guarded([&] {
        need(res != nullptr, "result is null");
        need(predator != nullptr && prey != nullptr, "out pointer is null");
        need(i >= 0 && i < static_cast<int64_t>(res->arcs.size()), "arc index out of range");
        *predator = res->arcs[static_cast<size_t>(i)].first;
        *prey = res->arcs[static_cast<size_t>(i)].second;
    });
}

poc_status poc_chain_or_antichain(int64_t npts, const int64_t *coords, int32_t n, int32_t *kind,
                                  int32_t *indices, int64_t cap, int64_t *len) {
    return guarded([&] {
        need(kind != nullptr && len != nullptr, "out pointer is null");
        need(indices != nullptr || cap == 0, "indices is null");
        std::vector<poc::Point> pts = make_points(2, npts, coords);
        poc::ChainResult r = poc::chain_or_antichain(pts, n);
        *kind = r.kind == poc::ChainResult::Kind::chain ? 0 : 1;
        *len = static_cast<int64_t>(r.indices.size());
        int64_t take = std::min<int64_t>(cap, *len);
        for (int64_t i = 0; i < take; ++i) indices[i] = r.indices[static_cast<size_t>(i)];
    });
}

poc_status poc_extraction_threshold(int32_t d, int32_t t, uint64_t *out) {
    return guarded([&] {
        need(out != nullptr, "out is null");
        *out = poc::extraction_threshold(d, t);
    });
}

poc_status poc_extract_triple(int32_t dim, int32_t t, int64_t npts, const int64_t *coords,
                              int32_t *triple, int32_t *trace, int64_t trace_cap,
                              int64_t *trace_len, int64_t *round_sizes, int64_t rounds_cap,
                              int64_t *rounds) {
    return guarded([&] {
        need(triple != nullptr, "triple is null");
        need(trace_len != nullptr && rounds != nullptr, "out pointer is null");
        need(trace != nullptr || trace_cap == 0, "trace is null");
        need(round_sizes != nullptr || rounds_cap == 0, "round_sizes is null");
        std::vector<poc::Point> pts = make_points(dim, npts, coords);
        poc::ExtractResult r = poc::extract_monotone_triple(pts, t);
        for (int i = 0; i < 3; ++i) triple[i] = r.triple[static_cast<size_t>(i)];
        int64_t total = 0;
        for (const auto &round : r.trace) total += static_cast<int64_t>(round.size());
        *trace_len = total;
        *rounds = static_cast<int64_t>(r.trace.size());
        int64_t at = 0;
        for (size_t j = 0; j < r.trace.size(); ++j) {
            if (static_cast<int64_t>(j) < rounds_cap)
                round_sizes[j] = static_cast<int64_t>(r.trace[j].size());
            for (int idx : r.trace[j]) {
                if (at >= trace_cap) break;
                trace[at++] = idx;
            }
        }
    });
}

const char *poc_verify_checks(void) {
    static const std::string joined = [] {
        std::string s;
        for (const std::string &name : poc::verify_check_names()) {
            if (!s.empty()) s += ',';
            s += name;
        }
        return s;
    }();
    return joined.c_str();
}

void poc_verify_options_default(poc_verify_options *out) {
    if (out == nullptr) return;
    poc::VerifyOptions d;
    out->d = d.d;
    out->s_size = d.s_size;
    out->n_es = d.n_es;
    out->t_extract = d.t_extract;
    out->parts = d.parts;
    out->part_points = d.part_points;
}

poc_status poc_verify(const char *check, int32_t trials, uint64_t seed,
                      const poc_verify_options *opts, poc_verify_report *out) {
    return guarded([&] {
        need(check != nullptr, "check is null");
        need(out != nullptr, "out is null");
        poc::VerifyOptions vo;
        if (opts != nullptr) {
            vo.d = opts->d;
            vo.s_size = opts->s_size;
            vo.n_es = opts->n_es;
            vo.t_extract = opts->t_extract;
            vo.parts = opts->parts;
            vo.part_points = opts->part_points;
        }
        poc::VerifyReport rep = poc::run_verify(check, trials, seed, vo);
        out->trials = rep.trials;
        out->passes = rep.passes;
        out->failures = rep.failures;
        out->seed = rep.seed;
        std::snprintf(out->first_failure, sizeof(out->first_failure), "%s",
                      rep.first_failure.c_str());
    });
}

void poc_search_budget_default(poc_search_budget *out) {
    if (out == nullptr) return;
    poc::SearchBudget d;
    out->d_max = d.d_max;
    out->k_max = d.k_max;
    out->rank_cap = d.rank_cap;
    out->use_oracles = d.use_oracles ? 1 : 0;
    out->node_limit = d.node_limit;
    out->threads = d.threads;
}

poc_dim_result *poc_dim_search(int32_t n, int64_t m, const int32_t *edges,
                               const poc_search_budget *budget) {
    poc_dim_result *out = nullptr;
    guarded([&] {
        need(n >= 1, "n must be >= 1");
        need(m >= 0, "m must be >= 0");
        need(edges != nullptr || m == 0, "edges is null");
        std::vector<std::pair<int, int>> es;
        es.reserve(static_cast<size_t>(m));
        for (int64_t i = 0; i < m; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
        poc::Graph g(poc::Graph::default_labels(n), es);
        auto res = std::make_unique<poc_dim_result>();
        res->r = poc::dim_poc(g, to_budget(budget));
        out = res.release();
    });
    return out;
}

poc_dim_result *poc_probe(int32_t beta, int32_t gamma, const poc_search_budget *budget) {
    poc_dim_result *out = nullptr;
    guarded([&] {
        auto res = std::make_unique<poc_dim_result>();
        res->r = poc::multipartite_probe(beta, gamma, to_budget(budget));
        out = res.release();
    });
    return out;
}

void poc_dim_result_free(poc_dim_result *res) { delete res; }

int32_t poc_dim_status(const poc_dim_result *res) {
    return res == nullptr ? -1 : static_cast<int32_t>(res->r.status);
}

const char *poc_dim_status_name(int32_t status) {
    if (status < 0 || status > 2) return "unknown";
    return poc::dim_status_name(static_cast<poc::DimStatus>(status));
}

int32_t poc_dim_value(const poc_dim_result *res, int32_t *dim) {
    if (res == nullptr || !res->r.dim.has_value()) return 0;
    if (dim != nullptr) *dim = *res->r.dim;
    return 1;
}

int32_t poc_dim_lower_bound(const poc_dim_result *res) {
    return res == nullptr ? -1 : res->r.dim_lower_bound;
}

int64_t poc_dim_total_nodes(const poc_dim_result *res) {
    return res == nullptr ? -1 : res->r.total_nodes;
}

const char *poc_dim_note(const poc_dim_result *res) {
    return res == nullptr ? "" : res->r.note.c_str();
}

int64_t poc_dim_cell_count(const poc_dim_result *res) {
    return res == nullptr ? -1 : static_cast<int64_t>(res->r.cells.size());
}

poc_status poc_dim_cell(const poc_dim_result *res, int64_t i, int32_t *d, int32_t *k,
                        int32_t *status, int64_t *nodes) {
    return guarded([&] {
        need(res != nullptr, "result is null");
        need(i >= 0 && i < static_cast<int64_t>(res->r.cells.size()), "cell index out of range");
        const poc::CellReport &c = res->r.cells[static_cast<size_t>(i)];
        if (d != nullptr) *d = c.d;
        if (k != nullptr) *k = c.k;
        if (status != nullptr) *status = static_cast<int32_t>(c.status);
        if (nodes != nullptr) *nodes = c.nodes;
    });
}

const char *poc_cell_status_name(int32_t status) {
    if (status < 0 || status > 4) return "unknown";
    return poc::cell_status_name(static_cast<poc::CellStatus>(status));
}

int32_t poc_dim_witness_present(const poc_dim_result *res) {
    return res != nullptr && res->r.witness.has_value() ? 1 : 0;
}

int32_t poc_dim_witness_verified(const poc_dim_result *res) {
    return res != nullptr && res->r.witness_verified ? 1 : 0;
}

poc_status poc_dim_witness_shape(const poc_dim_result *res, int32_t *wd, int32_t *wk,
                                 int64_t *npoints, int32_t *dim) {
    return guarded([&] {
        need(res != nullptr, "result is null");
        need(res->r.witness.has_value(), "result holds no witness");
        if (wd != nullptr) *wd = res->r.witness_d.value_or(0);
        if (wk != nullptr) *wk = res->r.witness_k.value_or(0);
        if (npoints != nullptr) *npoints = static_cast<int64_t>(res->r.witness->size());
        if (dim != nullptr) *dim = res->r.witness->dim();
    });
}

poc_status poc_dim_witness_point(const poc_dim_result *res, int64_t i, char *label,
                                 int64_t label_cap, int64_t *coords) {
    return guarded([&] {
        need(res != nullptr, "result is null");
        need(res->r.witness.has_value(), "result holds no witness");
        const poc::PointConfig &cfg = *res->r.witness;
        need(i >= 0 && i < static_cast<int64_t>(cfg.size()), "point index out of range");
        need(label != nullptr || label_cap == 0, "label is null");
        if (label_cap > 0)
            std::snprintf(label, static_cast<size_t>(label_cap), "%s",
                          cfg.labels[static_cast<size_t>(i)].c_str());
        if (coords != nullptr) {
            const poc::Point &p = cfg.points[static_cast<size_t>(i)];
            for (int a = 1; a <= p.dim(); ++a) coords[a - 1] = p[a];
        }
    });
}

}  // extern "C"
