#include "witness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace poc {

void FamilyInstance::validate() const {
    require(d >= 3, Errc::invalid_argument, "the witness search needs dimension >= 3, got ", d);
    require(shared_type.universe() == d, Errc::invalid_argument, "shared type universe ",
            shared_type.universe(), " does not match dimension ", d);
    IndexSet lo = shared_type.low_part(), hi = shared_type.high_part();
    require(designated_part == lo || designated_part == hi, Errc::invalid_argument,
            "designated part ", designated_part.to_string(), " is not a part of ",
            shared_type.to_string());
    int s = designated_part.size();
    require(s == 1 || s == 2, Errc::precondition, "designated part must have size 1 or 2, got ",
            s);
    std::uint64_t alpha = families.size();
    if (s == 1)
        require(alpha >= 2, Errc::precondition, "the |S|=1 branch needs >= 2 families, got ",
                alpha);
    else
        require(alpha >= extraction_threshold(d, 3), Errc::precondition,
                "the |S|=2 branch needs >= 2^(2^(d-2))+1 = ", extraction_threshold(d, 3),
                " families, got ", alpha);
    size_t min_size = (s == 2) ? 3 : 2;
    std::set<Point> seen;
    for (size_t f = 0; f < families.size(); ++f) {
        require(families[f].size() >= min_size, Errc::precondition, "family ", f, " has ",
                families[f].size(), " points; this branch needs >= ", min_size);
        for (const auto &p : families[f]) {
            require(p.dim() == d, Errc::invalid_argument, "family ", f,
                    " holds a point of dimension ", p.dim(), ", expected ", d);
            require(seen.insert(p).second, Errc::precondition, "families are not disjoint: ",
                    p.to_string(), " repeats in family ", f);
        }
        for (size_t i = 0; i < families[f].size(); ++i)
            for (size_t j = i + 1; j < families[f].size(); ++j) {
                const Point &u = families[f][i], &v = families[f][j];
                require(!comparable(u, v), Errc::precondition, "family ", f, " pair ",
                        u.to_string(), ", ", v.to_string(), " is comparable");
                auto ts = order_types(u, v);
                require(std::find(ts.begin(), ts.end(), shared_type) != ts.end(),
                        Errc::precondition, "family ", f, " pair ", u.to_string(), ", ",
                        v.to_string(), " does not have the shared order type ",
                        shared_type.to_string());
            }
    }
}

void WitnessQuadruple::verify_against(const std::vector<std::vector<Point>> &families) const {
    auto member = [&](int f, int pos, const Point &p, const char *name) {
        require(f >= 0 && f < static_cast<int>(families.size()), Errc::internal,
                "witness family index out of range for ", name);
        require(pos >= 0 && pos < static_cast<int>(families[static_cast<size_t>(f)].size()),
                Errc::internal, "witness position out of range for ", name);
        require(families[static_cast<size_t>(f)][static_cast<size_t>(pos)] == p, Errc::internal,
                "witness point ", name, " does not match its claimed slot");
    };
    member(fam_i, pos_a, a, "a");
    member(fam_j, pos_b, b, "b");
    member(fam_k, pos_c, c, "c");
    member(fam_k, pos_d, d, "d");
    require(fam_i != fam_j, Errc::internal, "witness needs a and b in distinct families");
    require(c != d, Errc::internal, "witness needs c != d");
    require(min_ab == min_point(a, b) && min_cd == min_point(c, d), Errc::internal,
            "witness minima are stale");
    require(precedes(min_ab, min_cd), Errc::internal,
            "witness violates min{a,b} <= min{c,d}");
}

namespace {

// orient the first two points of a family so lo <=_S hi and hi <=_co lo
void orient_pair(const std::vector<Point> &fam, const IndexSet &S, const IndexSet &co, int &lo,
                 int &hi) {
    if (precedes_on(fam[0], fam[1], S) && precedes_on(fam[1], fam[0], co)) {
        lo = 0;
        hi = 1;
    } else {
        require(precedes_on(fam[1], fam[0], S) && precedes_on(fam[0], fam[1], co),
                Errc::internal, "validated pair admits neither orientation");
        lo = 1;
        hi = 0;
    }
}

WitnessQuadruple witness_singleton(const FamilyInstance &inst) {
    const IndexSet &S = inst.designated_part;
    IndexSet co = S.complement();
    int s = S.members()[0];
    int lo0, hi0, lo1, hi1;
    orient_pair(inst.families[0], S, co, lo0, hi0);
    orient_pair(inst.families[1], S, co, lo1, hi1);
    // x: the S-lower point whose axis-s value is smaller; z, w: the S-lower
    // and S-higher points of the other family. Then min{x,w} <= min{w,z}.
    bool first_is_x = inst.families[0][static_cast<size_t>(lo0)][s] <=
                      inst.families[1][static_cast<size_t>(lo1)][s];
    int fi = first_is_x ? 0 : 1, fj = first_is_x ? 1 : 0;
    int lox = first_is_x ? lo0 : lo1;
    int loz = first_is_x ? lo1 : lo0, hiw = first_is_x ? hi1 : hi0;

    WitnessQuadruple q;
    q.fam_i = fi;
    q.fam_j = fj;
    q.fam_k = fj;
    q.pos_a = lox;
    q.pos_b = hiw;
    q.pos_c = hiw;
    q.pos_d = loz;
    q.a = inst.families[static_cast<size_t>(fi)][static_cast<size_t>(lox)];
    q.b = inst.families[static_cast<size_t>(fj)][static_cast<size_t>(hiw)];
    q.c = q.b;
    q.d = inst.families[static_cast<size_t>(fj)][static_cast<size_t>(loz)];
    q.min_ab = min_point(q.a, q.b);
    q.min_cd = min_point(q.c, q.d);
    return q;
}

WitnessQuadruple witness_pair_part(const FamilyInstance &inst) {
    const IndexSet &S = inst.designated_part;
    auto mem = S.members();
    int s1 = mem[0], s2 = mem[1];
    int d = inst.d;
    int alpha = static_cast<int>(inst.families.size());

    // chain each family's first three points: x <=_S y <=_S z, descending on
    // the complement
    struct Fam {
        int orig;
        std::array<int, 3> pos;  // positions of x, y, z within the family
    };
    std::vector<Fam> fams(static_cast<size_t>(alpha));
    for (int f = 0; f < alpha; ++f) {
        const auto &fam = inst.families[static_cast<size_t>(f)];
        auto perm = sort_by_part(fam[0], fam[1], fam[2], S);
        fams[static_cast<size_t>(f)] = {f, {perm[0] - 1, perm[1] - 1, perm[2] - 1}};
    }

    // families ordered by the middle point's axis-s1 value, ties by index
    std::vector<int> ord(static_cast<size_t>(alpha));
    std::iota(ord.begin(), ord.end(), 0);
    auto point_of = [&](int pos_in_ord, int role) -> const Point & {
        const Fam &fm = fams[static_cast<size_t>(ord[static_cast<size_t>(pos_in_ord)])];
        return inst.families[static_cast<size_t>(fm.orig)]
                            [static_cast<size_t>(fm.pos[static_cast<size_t>(role)])];
    };
    std::sort(ord.begin(), ord.end(), [&](int fa, int fb) {
        const Point &ya = inst.families[static_cast<size_t>(fa)]
                                       [static_cast<size_t>(fams[static_cast<size_t>(fa)].pos[1])];
        const Point &yb = inst.families[static_cast<size_t>(fb)]
                                       [static_cast<size_t>(fams[static_cast<size_t>(fb)].pos[1])];
        if (ya[s1] != yb[s1]) return ya[s1] < yb[s1];
        return fa < fb;
    });
    auto x_of = [&](int i) -> const Point & { return point_of(i, 0); };
    auto y_of = [&](int i) -> const Point & { return point_of(i, 1); };
    auto z_of = [&](int i) -> const Point & { return point_of(i, 2); };
    auto fam_of = [&](int i) { return fams[static_cast<size_t>(ord[static_cast<size_t>(i)])]; };

    auto make_quad = [&](int fi, int pa, const Point &a, int fj, int pb, const Point &b, int fk,
                         int pc, const Point &c, int pd, const Point &dd) {
        WitnessQuadruple q;
        q.fam_i = fi;
        q.fam_j = fj;
        q.fam_k = fk;
        q.pos_a = pa;
        q.pos_b = pb;
        q.pos_c = pc;
        q.pos_d = pd;
        q.a = a;
        q.b = b;
        q.c = c;
        q.d = dd;
        q.min_ab = min_point(a, b);
        q.min_cd = min_point(c, dd);
        return q;
    };

    // scan for the first pair (row-major) whose middles rise on axis s2
    for (int i = 0; i < alpha; ++i)
        for (int j = i + 1; j < alpha; ++j)
            if (y_of(i)[s2] <= y_of(j)[s2]) {
                const Fam &fi = fam_of(i), &fj = fam_of(j);
                return make_quad(fi.orig, fi.pos[1], y_of(i), fj.orig, fj.pos[2], z_of(j),
                                 fj.orig, fj.pos[1], y_of(j), fj.pos[2], z_of(j));
            }

    // middles now fall strictly on axis s2 along ord; extract a triple
    // monotone on s1 and on every axis outside {s1, s2}. Projected axis
    // order: s1, s2, the rest ascending; tracked axes under t = 3 are then
    // exactly {s1} and the rest.
    std::vector<int> axes = {s1, s2};
    for (int l = 1; l <= d; ++l)
        if (l != s1 && l != s2) axes.push_back(l);
    std::vector<Point> proj(static_cast<size_t>(alpha));
    for (int i = 0; i < alpha; ++i) {
        std::vector<Coord> c(static_cast<size_t>(d));
        for (int l = 0; l < d; ++l) c[static_cast<size_t>(l)] = y_of(i)[axes[static_cast<size_t>(l)]];
        proj[static_cast<size_t>(i)] = Point(std::move(c));
    }
    auto ext = extract_monotone_triple(proj, 3);
    int p = ext.triple[0], q = ext.triple[1], r = ext.triple[2];
    // proj is already nondecreasing on its axis 1, so the extraction's
    // stable sort keeps ord order and p < q < r holds in it
    require(p < q && q < r, Errc::internal, "extraction broke the scan order");

    // the middle of the triple dominates the minimum of the extremes
    Point m_pr = min_point(y_of(p), y_of(r));
    for (int l = 1; l <= d; ++l)
        require(m_pr[l] <= y_of(q)[l], Errc::internal,
                "extracted triple violates the min bound on axis ", l);

    const Fam &fp = fam_of(p), &fq = fam_of(q), &fr = fam_of(r);
    if (x_of(q)[s1] < y_of(p)[s1])
        return make_quad(fq.orig, fq.pos[0], x_of(q), fp.orig, fp.pos[2], z_of(p), fp.orig,
                         fp.pos[1], y_of(p), fp.pos[2], z_of(p));
    if (x_of(q)[s2] < y_of(r)[s2])
        return make_quad(fq.orig, fq.pos[0], x_of(q), fr.orig, fr.pos[2], z_of(r), fr.orig,
                         fr.pos[1], y_of(r), fr.pos[2], z_of(r));
    return make_quad(fp.orig, fp.pos[1], y_of(p), fr.orig, fr.pos[1], y_of(r), fq.orig,
                     fq.pos[0], x_of(q), fq.pos[1], y_of(q));
}

}  // namespace

WitnessQuadruple find_witness(const FamilyInstance &inst) {
    inst.validate();
    WitnessQuadruple q = inst.designated_part.size() == 1 ? witness_singleton(inst)
                                                          : witness_pair_part(inst);
    q.verify_against(inst.families);
    return q;
}

void MultipartiteInstance::validate() const {
    require(d >= 3 && d <= 6, Errc::invalid_argument,
            "the pipeline supports dimension in [3, 6], got ", d);
    require(parts.size() >= 2, Errc::invalid_argument, "need >= 2 parts, got ", parts.size());
    std::set<Point> seen;
    for (size_t p = 0; p < parts.size(); ++p) {
        require(!parts[p].empty(), Errc::invalid_argument, "part ", p, " is empty");
        for (const auto &pt : parts[p]) {
            require(pt.dim() == d, Errc::invalid_argument, "part ", p,
                    " holds a point of dimension ", pt.dim(), ", expected ", d);
            require(seen.insert(pt).second, Errc::precondition, "parts are not disjoint: ",
                    pt.to_string(), " repeats in part ", p);
        }
        for (size_t i = 0; i < parts[p].size(); ++i)
            for (size_t j = i + 1; j < parts[p].size(); ++j) {
                const Point &u = parts[p][i], &v = parts[p][j];
                require(!comparable(u, v), Errc::precondition, "part ", p, " pair ",
                        u.to_string(), ", ", v.to_string(), " is comparable");
                auto ts = order_types(u, v);
                bool small = std::any_of(ts.begin(), ts.end(),
                                         [](const OrderType &t) { return t.min_part_size() <= 2; });
                require(small, Errc::precondition, "part ", p, " pair ", u.to_string(), ", ",
                        v.to_string(), " has no order type with a part of size 1 or 2");
            }
    }
}

std::uint64_t pipeline_beta(int d) {
    require(d >= 3 && d <= 6, Errc::invalid_argument,
            "pipeline thresholds are defined for dimension in [3, 6], got ", d);
    return (1ull << (1u << static_cast<unsigned>(d - 1))) + 1;
}

std::uint64_t pipeline_gamma(int d) {
    std::uint64_t choose2 = static_cast<std::uint64_t>(d) * (d - 1) / 2;
    return choose2 * (pipeline_beta(d) - 1) + static_cast<std::uint64_t>(d) + 1;
}

std::uint64_t pipeline_alpha(int d) {
    pipeline_beta(d);  // range check
    return (1ull << (1u << static_cast<unsigned>(d - 2))) + 1;
}

std::string ForbiddenCertificate::phase_name() const {
    switch (phase) {
        case Phase::equal_singleton_types: return "equal-singleton-types";
        case Phase::pigeonhole: return "pigeonhole";
        case Phase::exhaustive: return "exhaustive";
    }
    return "?";
}

namespace {

Point prey_below(const Point &m) {
    std::vector<Coord> c = m.coords();
    for (auto &v : c) {
        require(v > std::numeric_limits<Coord>::min(), Errc::invalid_argument,
                "coordinate underflow while placing the prey point");
        v -= 1;
    }
    return Point(std::move(c));
}

// lexicographically least common order type of the three points whose
// smaller part has size <= 2, if any
std::optional<OrderType> small_common_type(const Point &a, const Point &b, const Point &c) {
    for (const auto &t : common_order_types(a, b, c))
        if (t.min_part_size() <= 2) return t;
    return std::nullopt;
}

}  // namespace

bool check_prey_forces_edge(const MultipartiteInstance &inst, const ForbiddenCertificate &cert) {
    std::vector<int> involved = {cert.quad.fam_i, cert.quad.fam_j, cert.quad.fam_k};
    std::sort(involved.begin(), involved.end());
    involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
    PointConfig cfg;
    for (int p : involved)
        for (size_t i = 0; i < inst.parts[static_cast<size_t>(p)].size(); ++i) {
            cfg.labels.push_back(cat("p", p, "_", i));
            cfg.points.push_back(inst.parts[static_cast<size_t>(p)][i]);
        }
    cfg.labels.push_back("w");
    cfg.points.push_back(cert.prey);
    Graph comp = competition_graph(build_digraph(cfg));
    int ic = comp.index_of(cat("p", cert.quad.fam_k, "_", cert.quad.pos_c));
    int id = comp.index_of(cat("p", cert.quad.fam_k, "_", cert.quad.pos_d));
    return ic >= 0 && id >= 0 && comp.adjacent(ic, id);
}

ForbiddenOutcome find_forbidden_configuration(const MultipartiteInstance &inst) {
    inst.validate();
    int d = inst.d;
    size_t nparts = inst.parts.size();

    ForbiddenOutcome out;
    out.full_scale = nparts >= pipeline_gamma(d);
    for (const auto &part : inst.parts)
        if (part.size() < pipeline_beta(d)) out.full_scale = false;

    // one triple and one chosen small-part common type per part
    struct Chosen {
        int part;
        std::array<int, 3> triple;
        OrderType type;
    };
    std::vector<Chosen> chosen;
    std::uint64_t extract_need = extraction_threshold(d, 2);
    for (size_t p = 0; p < nparts; ++p) {
        const auto &part = inst.parts[p];
        if (part.size() >= extract_need) {
            auto ext = extract_monotone_triple(part, 2);
            const Point &a = part[static_cast<size_t>(ext.triple[0])];
            const Point &b = part[static_cast<size_t>(ext.triple[1])];
            const Point &c = part[static_cast<size_t>(ext.triple[2])];
            auto t = small_common_type(a, b, c);
            // the extreme pair's small-part type is shared by all three
            // pairs of a per-axis monotone triple, so this cannot miss
            require(t.has_value(), Errc::internal, "extracted triple of part ", p,
                    " has no small-part common type");
            chosen.push_back({static_cast<int>(p), ext.triple, *t});
        } else {
            bool found = false;
            size_t m = part.size();
            for (size_t i = 0; i < m && !found; ++i)
                for (size_t j = i + 1; j < m && !found; ++j)
                    for (size_t k = j + 1; k < m && !found; ++k)
                        if (auto t = small_common_type(part[i], part[j], part[k])) {
                            chosen.push_back({static_cast<int>(p),
                                              {static_cast<int>(i), static_cast<int>(j),
                                               static_cast<int>(k)},
                                              *t});
                            found = true;
                        }
            // a small part without such a triple is skipped; at full scale
            // every part takes the extraction branch instead
        }
    }

    auto finish = [&](WitnessQuadruple q, const std::vector<const Chosen *> &fam_map,
                      ForbiddenCertificate::Phase phase, const OrderType &type,
                      const IndexSet &part) -> ForbiddenOutcome {
        // map family-local indices back to the instance's parts
        const Chosen *ca = fam_map[static_cast<size_t>(q.fam_i)];
        const Chosen *cb = fam_map[static_cast<size_t>(q.fam_j)];
        const Chosen *ck = fam_map[static_cast<size_t>(q.fam_k)];
        q.fam_i = ca->part;
        q.pos_a = ca->triple[static_cast<size_t>(q.pos_a)];
        q.fam_j = cb->part;
        q.pos_b = cb->triple[static_cast<size_t>(q.pos_b)];
        q.fam_k = ck->part;
        q.pos_c = ck->triple[static_cast<size_t>(q.pos_c)];
        q.pos_d = ck->triple[static_cast<size_t>(q.pos_d)];
        q.verify_against(inst.parts);

        ForbiddenCertificate cert;
        cert.phase = phase;
        cert.quad = q;
        cert.chosen_type = type;
        cert.designated_part = part;
        cert.prey = prey_below(q.min_ab);
        cert.prey_check_passed = check_prey_forces_edge(inst, cert);
        require(cert.prey_check_passed, Errc::internal,
                "prey point failed to force the in-part edge");
        out.certificate = std::move(cert);
        return out;
    };

    // phase 1: two parts that chose one type with a singleton part
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j)
            if (chosen[i].type == chosen[j].type && chosen[i].type.has_part_of_size(1)) {
                FamilyInstance fi;
                fi.d = d;
                fi.shared_type = chosen[i].type;
                fi.designated_part = chosen[i].type.part_of_size(1);
                for (const auto *c : {&chosen[i], &chosen[j]}) {
                    std::vector<Point> fam;
                    for (int idx : c->triple)
                        fam.push_back(inst.parts[static_cast<size_t>(c->part)]
                                                [static_cast<size_t>(idx)]);
                    fi.families.push_back(std::move(fam));
                }
                auto q = find_witness(fi);
                return finish(q, {&chosen[i], &chosen[j]},
                              ForbiddenCertificate::Phase::equal_singleton_types,
                              chosen[i].type, fi.designated_part);
            }

    // phase 2: the largest class of one type without a singleton part (its
    // smaller part then has size 2); lex-least type wins ties
    std::map<OrderType, std::vector<size_t>> classes;
    for (size_t i = 0; i < chosen.size(); ++i)
        if (!chosen[i].type.has_part_of_size(1)) classes[chosen[i].type].push_back(i);
    const std::vector<size_t> *best = nullptr;
    OrderType best_type;
    for (const auto &[t, members] : classes)
        if (!best || members.size() > best->size()) {
            best = &members;
            best_type = t;
        }
    if (out.full_scale)
        require(best && best->size() >= pipeline_alpha(d), Errc::internal,
                "full-scale pigeonhole class is too small after phase 1 found nothing");
    if (best && best->size() >= pipeline_alpha(d)) {
        FamilyInstance fi;
        fi.d = d;
        fi.shared_type = best_type;
        fi.designated_part = best_type.low_part().size() == 2 ? best_type.low_part()
                                                              : best_type.high_part();
        std::vector<const Chosen *> fam_map;
        for (size_t idx : *best) {
            std::vector<Point> fam;
            for (int pidx : chosen[idx].triple)
                fam.push_back(inst.parts[static_cast<size_t>(chosen[idx].part)]
                                        [static_cast<size_t>(pidx)]);
            fi.families.push_back(std::move(fam));
            fam_map.push_back(&chosen[idx]);
        }
        auto q = find_witness(fi);
        return finish(q, fam_map, ForbiddenCertificate::Phase::pigeonhole, best_type,
                      fi.designated_part);
    }

    require(!out.full_scale, Errc::internal,
            "full-scale instance reached the fallback without a certificate");

    // reduced scale: exhaustive fallback over whole parts, capped
    size_t total = 0;
    for (const auto &part : inst.parts) total += part.size();
    if (total > 200) {
        out.note = cat("no certificate at this scale; exhaustive fallback skipped (", total,
                       " points exceed the 200-point cap)");
        return out;
    }
    for (size_t i = 0; i < nparts; ++i)
        for (size_t j = i + 1; j < nparts; ++j)
            for (size_t ai = 0; ai < inst.parts[i].size(); ++ai)
                for (size_t bj = 0; bj < inst.parts[j].size(); ++bj) {
                    Point m = min_point(inst.parts[i][ai], inst.parts[j][bj]);
                    for (size_t k = 0; k < nparts; ++k)
                        for (size_t ck = 0; ck < inst.parts[k].size(); ++ck)
                            for (size_t dk = ck + 1; dk < inst.parts[k].size(); ++dk) {
                                if (!precedes(m, min_point(inst.parts[k][ck],
                                                           inst.parts[k][dk])))
                                    continue;
                                WitnessQuadruple q;
                                q.fam_i = static_cast<int>(i);
                                q.fam_j = static_cast<int>(j);
                                q.fam_k = static_cast<int>(k);
                                q.pos_a = static_cast<int>(ai);
                                q.pos_b = static_cast<int>(bj);
                                q.pos_c = static_cast<int>(ck);
                                q.pos_d = static_cast<int>(dk);
                                q.a = inst.parts[i][ai];
                                q.b = inst.parts[j][bj];
                                q.c = inst.parts[k][ck];
                                q.d = inst.parts[k][dk];
                                q.min_ab = m;
                                q.min_cd = min_point(q.c, q.d);
                                q.verify_against(inst.parts);

                                ForbiddenCertificate cert;
                                cert.phase = ForbiddenCertificate::Phase::exhaustive;
                                cert.quad = q;
                                cert.designated_part = IndexSet(d, 0);
                                cert.prey = prey_below(q.min_ab);
                                cert.prey_check_passed = check_prey_forces_edge(inst, cert);
                                require(cert.prey_check_passed, Errc::internal,
                                        "prey point failed to force the in-part edge");
                                out.certificate = std::move(cert);
                                return out;
                            }
                }
    out.note = "no certificate found at this scale";
    return out;
}

}  // namespace poc
