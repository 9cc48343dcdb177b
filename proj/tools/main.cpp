#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "formats.hpp"
#include "poc/poc.h"

using nlohmann::json;

// Exit codes: 0 answered, 1 malformed input or violated precondition,
// 2 out of budget, 3 property violation or failed self-check.

namespace {

struct ApiError : std::runtime_error {
    poc_status status;
    ApiError(poc_status st, const std::string &msg) : std::runtime_error(msg), status(st) {}
};

int exit_code_for(poc_status st) {
    switch (st) {
        case POC_OK: return 0;
        case POC_EINVAL:
        case POC_EPRECOND: return 1;
        case POC_EBUDGET:
        case POC_ENOMEM: return 2;
        case POC_EINTERNAL: return 3;
    }
    return 3;
}

void check(poc_status st) {
    if (st != POC_OK) throw ApiError(st, poc_last_error());
}

[[noreturn]] void fail_last() { throw ApiError(poc_last_status(), poc_last_error()); }

std::vector<int64_t> parse_coord_list(const std::string &s, const std::string &what) {
    std::vector<int64_t> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(pocfmt::parse_int(tok, what));
    if (out.empty()) throw std::runtime_error(what + " is empty");
    return out;
}

std::string join_coords(const std::vector<int64_t> &v) {
    std::string s;
    for (int64_t c : v) {
        if (!s.empty()) s += ',';
        s += std::to_string(c);
    }
    return s;
}

std::vector<int> mask_axes(uint64_t mask, int dim, bool inside) {
    std::vector<int> out;
    for (int a = 1; a <= dim; ++a)
        if ((((mask >> (a - 1)) & 1) != 0) == inside) out.push_back(a);
    return out;
}

std::string format_type(uint64_t mask, int dim) {
    std::string lo, hi;
    for (int a = 1; a <= dim; ++a) {
        std::string &dst = ((mask >> (a - 1)) & 1) != 0 ? lo : hi;
        if (!dst.empty()) dst += ',';
        dst += std::to_string(a);
    }
    return "{{" + lo + "},{" + hi + "}}";
}

// ---- compete ----

struct CompeteOpts {
    std::string file;
    bool as_json = false;
};

int run_compete(const CompeteOpts &o) {
    std::string text = pocfmt::read_file(o.file);
    pocfmt::PointsFile pf = pocfmt::parse_points(text, o.file);
    poc_compete_result *raw = poc_compete_new(pf.dim, pf.count(), pf.coords.data());
    if (raw == nullptr) fail_last();
    std::unique_ptr<poc_compete_result, decltype(&poc_compete_free)> res(raw, &poc_compete_free);

    int64_t m = poc_compete_edge_count(res.get());
    int64_t na = poc_compete_arc_count(res.get());
    std::vector<std::pair<std::string, std::string>> edges, arcs;
    for (int64_t i = 0; i < m; ++i) {
        int64_t u = 0, v = 0;
        check(poc_compete_edge(res.get(), i, &u, &v));
        edges.emplace_back(pf.labels[static_cast<size_t>(u)], pf.labels[static_cast<size_t>(v)]);
    }
    for (int64_t i = 0; i < na; ++i) {
        int64_t p = 0, q = 0;
        check(poc_compete_arc(res.get(), i, &p, &q));
        arcs.emplace_back(pf.labels[static_cast<size_t>(p)], pf.labels[static_cast<size_t>(q)]);
    }

    if (o.as_json) {
        json doc;
        doc["command"] = "compete";
        doc["input_digest"] = pocfmt::digest_string(text);
        doc["points"] = pf.count();
        doc["dim"] = pf.dim;
        doc["edges"] = json::array();
        for (const auto &[u, v] : edges) doc["edges"].push_back({u, v});
        doc["arcs"] = json::array();
        for (const auto &[p, q] : arcs) doc["arcs"].push_back({p, q});
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "points " << pf.count() << " dim " << pf.dim << '\n';
        std::cout << "edges " << m << '\n';
        for (const auto &[u, v] : edges) std::cout << u << ' ' << v << '\n';
        std::cout << "arcs " << na << '\n';
        for (const auto &[p, q] : arcs) std::cout << p << ' ' << q << '\n';
    }
    return 0;
}

// ---- ordertype ----

struct OrderTypeOpts {
    std::string u, v;
    int32_t dim = 0;
    bool as_json = false;
};

int run_ordertype(const OrderTypeOpts &o) {
    if (o.u.empty() != o.v.empty())
        throw std::runtime_error("give both -u and -v, or neither with --dim");
    if (o.u.empty()) {
        if (o.dim <= 0) throw std::runtime_error("give -u/-v or --dim");
        uint64_t cand = 0;
        check(poc_count_order_types(o.dim, &cand));
        if (o.as_json) {
            json doc;
            doc["command"] = "ordertype";
            doc["dim"] = o.dim;
            doc["candidates"] = cand;
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "dim " << o.dim << '\n' << "candidates " << cand << '\n';
        }
        return 0;
    }

    std::vector<int64_t> u = parse_coord_list(o.u, "u coordinate");
    std::vector<int64_t> v = parse_coord_list(o.v, "v coordinate");
    if (u.size() != v.size()) throw std::runtime_error("u and v must have equal dimensions");
    int32_t dim = static_cast<int32_t>(u.size());

    uint64_t cand = 0;
    check(poc_count_order_types(dim, &cand));
    int64_t count = 0;
    check(poc_order_types(dim, u.data(), v.data(), nullptr, 0, &count));
    std::vector<uint64_t> masks(static_cast<size_t>(count));
    check(poc_order_types(dim, u.data(), v.data(), masks.data(), count, &count));

    if (o.as_json) {
        json doc;
        doc["command"] = "ordertype";
        doc["input_digest"] =
            pocfmt::digest_string("ordertype u=" + join_coords(u) + " v=" + join_coords(v));
        doc["dim"] = dim;
        doc["candidates"] = cand;
        doc["count"] = count;
        doc["types"] = json::array();
        for (uint64_t m : masks)
            doc["types"].push_back({{"low", mask_axes(m, dim, true)},
                                    {"high", mask_axes(m, dim, false)},
                                    {"text", format_type(m, dim)}});
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "dim " << dim << '\n';
        std::cout << "candidates " << cand << '\n';
        std::cout << "types " << count << '\n';
        for (uint64_t m : masks) std::cout << format_type(m, dim) << '\n';
    }
    return 0;
}

// ---- es ----

struct EsOpts {
    std::string file;
    int32_t n = 0;
    bool as_json = false;
};

int run_es(const EsOpts &o) {
    std::string text = pocfmt::read_file(o.file);
    pocfmt::PointsFile pf = pocfmt::parse_points(text, o.file);
    int32_t kind = 0;
    int64_t len = 0;
    check(poc_chain_or_antichain(pf.count(), pf.coords.data(), o.n, &kind, nullptr, 0, &len));
    std::vector<int32_t> idx(static_cast<size_t>(len));
    check(poc_chain_or_antichain(pf.count(), pf.coords.data(), o.n, &kind, idx.data(), len, &len));

    const char *kind_name = kind == 0 ? "chain" : "antichain";
    if (o.as_json) {
        json doc;
        doc["command"] = "es";
        doc["input_digest"] = pocfmt::digest_string(text);
        doc["n"] = o.n;
        doc["kind"] = kind_name;
        doc["length"] = len;
        doc["members"] = json::array();
        for (int32_t i : idx) {
            size_t s = static_cast<size_t>(i);
            doc["members"].push_back({{"index", i},
                                      {"label", pf.labels[s]},
                                      {"coords", {pf.coords[2 * s], pf.coords[2 * s + 1]}}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "kind " << kind_name << '\n';
        std::cout << "length " << len << '\n';
        for (int32_t i : idx) {
            size_t s = static_cast<size_t>(i);
            std::cout << i << ' ' << pf.labels[s] << ' ' << pf.coords[2 * s] << ' '
                      << pf.coords[2 * s + 1] << '\n';
        }
    }
    return 0;
}

// ---- extract ----

struct ExtractOpts {
    std::string file;
    int32_t t = 2;
    bool as_json = false;
};

int run_extract(const ExtractOpts &o) {
    std::string text = pocfmt::read_file(o.file);
    pocfmt::PointsFile pf = pocfmt::parse_points(text, o.file);
    int32_t triple[3] = {0, 0, 0};
    int64_t trace_len = 0, rounds = 0;
    check(poc_extract_triple(pf.dim, o.t, pf.count(), pf.coords.data(), triple, nullptr, 0,
                             &trace_len, nullptr, 0, &rounds));
    std::vector<int32_t> trace(static_cast<size_t>(trace_len));
    std::vector<int64_t> sizes(static_cast<size_t>(rounds));
    check(poc_extract_triple(pf.dim, o.t, pf.count(), pf.coords.data(), triple, trace.data(),
                             trace_len, &trace_len, sizes.data(), rounds, &rounds));

    if (o.as_json) {
        json doc;
        doc["command"] = "extract";
        doc["input_digest"] = pocfmt::digest_string(text);
        doc["t"] = o.t;
        doc["dim"] = pf.dim;
        doc["triple"] = {triple[0], triple[1], triple[2]};
        doc["triple_labels"] = {pf.labels[static_cast<size_t>(triple[0])],
                                pf.labels[static_cast<size_t>(triple[1])],
                                pf.labels[static_cast<size_t>(triple[2])]};
        doc["rounds"] = json::array();
        int64_t at = 0;
        for (int64_t r = 0; r < rounds; ++r) {
            json round = json::array();
            for (int64_t i = 0; i < sizes[static_cast<size_t>(r)]; ++i)
                round.push_back(trace[static_cast<size_t>(at++)]);
            doc["rounds"].push_back(round);
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "triple " << triple[0] << ' ' << triple[1] << ' ' << triple[2] << '\n';
        std::cout << "labels " << pf.labels[static_cast<size_t>(triple[0])] << ' '
                  << pf.labels[static_cast<size_t>(triple[1])] << ' '
                  << pf.labels[static_cast<size_t>(triple[2])] << '\n';
        std::cout << "rounds " << rounds << '\n';
        int64_t at = 0;
        for (int64_t r = 0; r < rounds; ++r) {
            std::cout << "round " << (r + 1) << " size " << sizes[static_cast<size_t>(r)] << ":";
            for (int64_t i = 0; i < sizes[static_cast<size_t>(r)]; ++i)
                std::cout << ' ' << trace[static_cast<size_t>(at++)];
            std::cout << '\n';
        }
    }
    return 0;
}

// ---- verify ----

struct VerifyOpts {
    std::string check = "all";
    int32_t trials = 100;
    uint64_t seed = 1;
    poc_verify_options params{};
    bool as_json = false;
    bool list_only = false;
};

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(tok);
    return out;
}

int run_verify(const VerifyOpts &o) {
    if (o.list_only) {
        for (const std::string &name : split_commas(poc_verify_checks()))
            std::cout << name << '\n';
        return 0;
    }
    std::vector<std::string> names =
        o.check == "all" ? split_commas(poc_verify_checks()) : split_commas(o.check);

    std::string param_line = "verify trials=" + std::to_string(o.trials) +
                             " seed=" + std::to_string(o.seed) +
                             " d=" + std::to_string(o.params.d) +
                             " s_size=" + std::to_string(o.params.s_size) +
                             " n_es=" + std::to_string(o.params.n_es) +
                             " t_extract=" + std::to_string(o.params.t_extract) +
                             " parts=" + std::to_string(o.params.parts) +
                             " part_points=" + std::to_string(o.params.part_points);

    int32_t failures_total = 0;
    json checks = json::array();
    std::vector<std::string> lines;
    for (const std::string &name : names) {
        poc_verify_report rep{};
        check(poc_verify(name.c_str(), o.trials, o.seed, &o.params, &rep));
        failures_total += rep.failures;
        if (o.as_json) {
            checks.push_back({{"check", name},
                              {"trials", rep.trials},
                              {"passes", rep.passes},
                              {"failures", rep.failures},
                              {"seed", rep.seed},
                              {"first_failure", std::string(rep.first_failure)}});
        } else {
            std::ostringstream ln;
            ln << "check " << name << ": trials " << rep.trials << " passes " << rep.passes
               << " failures " << rep.failures;
            lines.push_back(ln.str());
            if (rep.failures > 0)
                lines.push_back(std::string("  first-failure: ") + rep.first_failure);
        }
    }

    if (o.as_json) {
        json doc;
        doc["command"] = "verify";
        doc["input_digest"] = pocfmt::digest_string(param_line);
        doc["trials"] = o.trials;
        doc["seed"] = o.seed;
        doc["checks"] = checks;
        doc["failures_total"] = failures_total;
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const std::string &ln : lines) std::cout << ln << '\n';
        std::cout << "total checks " << names.size() << " failures " << failures_total << '\n';
    }
    return failures_total > 0 ? 3 : 0;
}

// ---- dimsearch / probe ----

struct BudgetOpts {
    poc_search_budget budget{};
    bool no_oracles = false;
    uint64_t seed = 0;
    bool as_json = false;
    std::string cert_path;
    std::string witness_out;
};

void add_budget_flags(CLI::App *cmd, BudgetOpts &b) {
    poc_search_budget_default(&b.budget);
    cmd->add_option("--d-max", b.budget.d_max, "largest dimension to try");
    cmd->add_option("--k-max", b.budget.k_max, "padding budget; -1 means one point per edge");
    cmd->add_option("--rank-cap", b.budget.rank_cap, "per-axis rank range; 0 means vertex count");
    cmd->add_option("--node-limit", b.budget.node_limit,
                    "candidate tries per dimension sweep; 0 means unlimited");
    cmd->add_option("--threads", b.budget.threads, "worker threads (results do not depend on it)");
    cmd->add_flag("--no-oracles", b.no_oracles, "skip the closed-form decisions for dim <= 2");
    cmd->add_option("--seed", b.seed, "recorded in the certificate; the search is deterministic");
    cmd->add_flag("--json", b.as_json, "emit the certificate document on stdout");
    cmd->add_option("--cert", b.cert_path, "write the certificate document to this file");
    cmd->add_option("--witness-out", b.witness_out, "write the witness as a points file");
}

struct Witness {
    int32_t wd = 0, wk = 0;
    bool verified = false;
    pocfmt::PointsFile pf;
};

std::optional<Witness> fetch_witness(poc_dim_result *res, const std::vector<std::string> &vlabels) {
    if (poc_dim_witness_present(res) == 0) return std::nullopt;
    Witness w;
    int64_t npoints = 0;
    check(poc_dim_witness_shape(res, &w.wd, &w.wk, &npoints, &w.pf.dim));
    w.verified = poc_dim_witness_verified(res) != 0;

    std::set<std::string> used;
    std::vector<int64_t> coords(static_cast<size_t>(w.pf.dim));
    char label[256];
    for (int64_t i = 0; i < npoints; ++i) {
        check(poc_dim_witness_point(res, i, label, sizeof label, coords.data()));
        std::string name(label);
        // engine vertex labels are "0".."n-1"; swap in the caller's labels
        if (!vlabels.empty()) {
            bool digits = !name.empty();
            for (char c : name) digits = digits && c >= '0' && c <= '9';
            if (digits && name.size() <= 9) {
                size_t idx = static_cast<size_t>(std::stoul(name));
                if (idx < vlabels.size() && i == static_cast<int64_t>(idx)) name = vlabels[idx];
            }
        }
        while (!used.insert(name).second) name += '_';
        w.pf.labels.push_back(name);
        w.pf.coords.insert(w.pf.coords.end(), coords.begin(), coords.end());
    }
    return w;
}

int finish_dim(poc_dim_result *raw, const std::string &command, const json &input_desc,
               const std::string &text_head, const BudgetOpts &b, bool no_oracles,
               const std::vector<std::string> &vlabels) {
    std::unique_ptr<poc_dim_result, decltype(&poc_dim_result_free)> res(raw, &poc_dim_result_free);
    int32_t status = poc_dim_status(res.get());
    int32_t dim = 0;
    bool have_dim = poc_dim_value(res.get(), &dim) != 0;
    std::optional<Witness> w = fetch_witness(res.get(), vlabels);

    json cells = json::array();
    int64_t nc = poc_dim_cell_count(res.get());
    for (int64_t i = 0; i < nc; ++i) {
        int32_t cd = 0, ck = 0, cs = 0;
        int64_t nodes = 0;
        check(poc_dim_cell(res.get(), i, &cd, &ck, &cs, &nodes));
        cells.push_back(
            {{"d", cd}, {"k", ck}, {"status", poc_cell_status_name(cs)}, {"nodes", nodes}});
    }

    json doc;
    doc["format"] = "poc-certificate";
    doc["version"] = 1;
    doc["command"] = command;
    doc["input"] = input_desc;
    doc["seed"] = b.seed;
    // threads is omitted on purpose: the result must not depend on it
    doc["budget"] = {{"d_max", b.budget.d_max},
                     {"k_max", b.budget.k_max},
                     {"rank_cap", b.budget.rank_cap},
                     {"use_oracles", !no_oracles},
                     {"node_limit", b.budget.node_limit}};
    doc["result"] = {{"status", poc_dim_status_name(status)},
                     {"dim", have_dim ? json(dim) : json(nullptr)},
                     {"lower_bound", poc_dim_lower_bound(res.get())},
                     {"total_nodes", poc_dim_total_nodes(res.get())},
                     {"note", std::string(poc_dim_note(res.get()))},
                     {"cells", cells}};
    doc["witness"] = w.has_value() ? json({{"d", w->wd},
                                           {"k", w->wk},
                                           {"verified", w->verified},
                                           {"points", pocfmt::points_to_text(w->pf)}})
                                   : json(nullptr);

    if (!b.cert_path.empty()) pocfmt::write_file(b.cert_path, doc.dump(2) + "\n");
    if (!b.witness_out.empty()) {
        if (!w.has_value()) throw std::runtime_error("no witness produced, nothing to write");
        pocfmt::write_file(b.witness_out, pocfmt::points_to_text(w->pf));
    }

    if (b.as_json) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text_head << '\n';
        std::cout << "status " << poc_dim_status_name(status) << '\n';
        if (have_dim) std::cout << "dim " << dim << '\n';
        std::cout << "lower-bound " << poc_dim_lower_bound(res.get()) << '\n';
        std::cout << "total-nodes " << poc_dim_total_nodes(res.get()) << '\n';
        std::string note = poc_dim_note(res.get());
        if (!note.empty()) std::cout << "note " << note << '\n';
        std::cout << "cells " << nc << '\n';
        for (const json &c : cells)
            std::cout << "cell d=" << c["d"].get<int>() << " k=" << c["k"].get<int>()
                      << " status=" << c["status"].get<std::string>()
                      << " nodes=" << c["nodes"].get<int64_t>() << '\n';
        if (w.has_value()) {
            std::cout << "witness d=" << w->wd << " k=" << w->wk
                      << " verified=" << (w->verified ? "yes" : "no") << '\n';
            std::cout << pocfmt::points_to_text(w->pf);
        } else {
            std::cout << "witness none" << '\n';
        }
    }

    if (w.has_value() && !w->verified) return 3;
    if (status == 2) return 2;
    return 0;
}

struct DimsearchOpts {
    std::string file;
    BudgetOpts b;
};

int run_dimsearch(DimsearchOpts &o) {
    std::string text = pocfmt::read_file(o.file);
    pocfmt::GraphFile gf = pocfmt::parse_graph(text, o.file);
    std::vector<int32_t> flat;
    flat.reserve(gf.edges.size() * 2);
    for (const auto &[u, v] : gf.edges) {
        flat.push_back(u);
        flat.push_back(v);
    }
    o.b.budget.use_oracles = o.b.no_oracles ? 0 : 1;
    poc_dim_result *raw = poc_dim_search(gf.n, static_cast<int64_t>(gf.edges.size()),
                                         flat.data(), &o.b.budget);
    if (raw == nullptr) fail_last();

    json input_desc = {{"kind", "graph-file"},
                       {"digest", pocfmt::digest_string(text)},
                       {"n", gf.n},
                       {"m", static_cast<int64_t>(gf.edges.size())}};
    std::ostringstream head;
    head << "graph n=" << gf.n << " m=" << gf.edges.size();
    return finish_dim(raw, "dimsearch", input_desc, head.str(), o.b, o.b.no_oracles, gf.labels);
}

struct ProbeOpts {
    int32_t beta = 2;
    int32_t gamma = 2;
    BudgetOpts b;
};

int run_probe(ProbeOpts &o) {
    o.b.budget.use_oracles = o.b.no_oracles ? 0 : 1;
    poc_dim_result *raw = poc_probe(o.beta, o.gamma, &o.b.budget);
    if (raw == nullptr) fail_last();

    int64_t n = static_cast<int64_t>(o.beta) * o.gamma;
    int64_t m = (n * n - static_cast<int64_t>(o.gamma) * o.beta * o.beta) / 2;
    std::string param_line =
        "probe beta=" + std::to_string(o.beta) + " gamma=" + std::to_string(o.gamma);
    json input_desc = {{"kind", "probe"},
                       {"digest", pocfmt::digest_string(param_line)},
                       {"beta", o.beta},
                       {"gamma", o.gamma},
                       {"n", n},
                       {"m", m}};
    std::ostringstream head;
    head << "probe beta=" << o.beta << " gamma=" << o.gamma << " n=" << n << " m=" << m;
    return finish_dim(raw, "probe", input_desc, head.str(), o.b, o.b.no_oracles, {});
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"competition graphs of coordinatewise orders"};
    app.require_subcommand(1);

    CompeteOpts compete;
    auto *c1 = app.add_subcommand("compete", "competition graph of a points file");
    c1->add_option("file", compete.file, "points file")->required();
    c1->add_flag("--json", compete.as_json, "emit JSON");

    OrderTypeOpts ordertype;
    auto *c2 = app.add_subcommand("ordertype", "order types of an incomparable pair");
    c2->add_option("-u", ordertype.u, "first point, comma-separated coordinates");
    c2->add_option("-v", ordertype.v, "second point, comma-separated coordinates");
    c2->add_option("--dim", ordertype.dim, "with no points: print the candidate count only");
    c2->add_flag("--json", ordertype.as_json, "emit JSON");

    EsOpts es;
    auto *c3 = app.add_subcommand("es", "chain or antichain in a planar points file");
    c3->add_option("file", es.file, "points file of dimension 2")->required();
    c3->add_option("-n", es.n, "guarantee parameter; needs n*n + 1 points")->required();
    c3->add_flag("--json", es.as_json, "emit JSON");

    ExtractOpts extract;
    auto *c4 = app.add_subcommand("extract", "monotone triple by iterated row selection");
    c4->add_option("file", extract.file, "points file")->required();
    c4->add_option("-t", extract.t, "first tracked axis after axis 1 (default 2)");
    c4->add_flag("--json", extract.as_json, "emit JSON");

    VerifyOpts verify;
    auto *c5 = app.add_subcommand("verify", "run seeded property checks");
    c5->add_option("--check", verify.check, "check name, or \"all\"");
    c5->add_option("--trials", verify.trials, "trials per check");
    c5->add_option("--seed", verify.seed, "base seed");
    c5->add_option("--d", verify.params.d, "ambient dimension");
    c5->add_option("--s-size", verify.params.s_size, "designated part size (witness check)");
    c5->add_option("--n-es", verify.params.n_es, "chain/antichain parameter");
    c5->add_option("--t-extract", verify.params.t_extract, "first tracked axis (extraction)");
    c5->add_option("--parts", verify.params.parts, "parts (forbidden check)");
    c5->add_option("--part-points", verify.params.part_points, "points per part (forbidden)");
    c5->add_flag("--json", verify.as_json, "emit JSON");
    c5->add_flag("--list", verify.list_only, "print the known check names and exit");
    poc_verify_options_default(&verify.params);

    DimsearchOpts dimsearch;
    auto *c6 = app.add_subcommand("dimsearch", "least dimension realizing a graph");
    c6->add_option("file", dimsearch.file, "graph file")->required();
    add_budget_flags(c6, dimsearch.b);

    ProbeOpts probe;
    auto *c7 = app.add_subcommand("probe", "dimension of a complete multipartite graph");
    c7->add_option("--beta", probe.beta, "vertices per part")->required();
    c7->add_option("--gamma", probe.gamma, "number of parts")->required();
    add_budget_flags(c7, probe.b);

    int exit_code = 0;
    c1->callback([&] { exit_code = run_compete(compete); });
    c2->callback([&] { exit_code = run_ordertype(ordertype); });
    c3->callback([&] { exit_code = run_es(es); });
    c4->callback([&] { exit_code = run_extract(extract); });
    c5->callback([&] { exit_code = run_verify(verify); });
    c6->callback([&] { exit_code = run_dimsearch(dimsearch); });
    c7->callback([&] { exit_code = run_probe(probe); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ApiError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.status);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
