#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "rng.hpp"
#include "witness.hpp"

using namespace poc;

namespace {

Point P(std::vector<Coord> c) { return Point(std::move(c)); }

template <typename F>
Errc thrown_code(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<Errc>(0);
}

// family of `size` points ascending on the part, strictly descending on the
// complement; every in-family pair then has exactly the type {part, ~part}
std::vector<Point> chain_family(int d, const IndexSet &part, int size, Coord base, Coord top) {
    std::vector<Point> fam;
    for (int t = 0; t < size; ++t) {
        std::vector<Coord> c(static_cast<size_t>(d));
        for (int a = 1; a <= d; ++a)
            c[(size_t)a - 1] = part.contains(a) ? base + t : top - base - t;
        fam.push_back(P(c));
    }
    return fam;
}

FamilyInstance singleton_instance() {
    FamilyInstance inst;
    inst.d = 3;
    IndexSet s = IndexSet::from_members(3, {1});
    inst.shared_type = OrderType(s);
    inst.designated_part = s;
    inst.families.push_back({P({0, 10, 10}), P({1, 9, 9})});
    inst.families.push_back({P({2, 8, 8}), P({3, 7, 7})});
    return inst;
}

FamilyInstance pair_instance() {
    FamilyInstance inst;
    inst.d = 3;
    IndexSet s = IndexSet::from_members(3, {1, 2});
    inst.shared_type = OrderType(s);
    inst.designated_part = s;
    for (int f = 0; f < 5; ++f) inst.families.push_back(chain_family(3, s, 3, 10 * f, 1000));
    return inst;
}

// quartic reference scan for quadruple existence
bool oracle_has_quadruple(const std::vector<std::vector<Point>> &families) {
    int nf = (int)families.size();
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            if (i == j) continue;
            for (const Point &a : families[(size_t)i])
                for (const Point &b : families[(size_t)j])
                    for (int k = 0; k < nf; ++k)
                        for (size_t ci = 0; ci < families[(size_t)k].size(); ++ci)
                            for (size_t di = ci + 1; di < families[(size_t)k].size(); ++di) {
                                const Point &c = families[(size_t)k][ci];
                                const Point &d = families[(size_t)k][di];
                                if (precedes(min_point(a, b), min_point(c, d))) return true;
                            }
        }
    return false;
}

MultipartiteInstance stacked_instance(int parts, int per_part) {
    MultipartiteInstance inst;
    inst.d = 3;
    IndexSet s = IndexSet::from_members(3, {1});
    for (int p = 0; p < parts; ++p)
        inst.parts.push_back(chain_family(3, s, per_part, 100 * p, 100000));
    return inst;
}

}  // namespace

TEST_CASE("pipeline scales follow the closed forms") {
    CHECK(pipeline_beta(3) == 17);
    CHECK(pipeline_gamma(3) == 52);
    CHECK(pipeline_alpha(3) == 5);
    CHECK(pipeline_beta(4) == 257);
    CHECK(pipeline_gamma(4) == 1541);
    CHECK(pipeline_alpha(4) == 17);
    CHECK(pipeline_beta(5) == 65537);
    CHECK(pipeline_gamma(5) == 655366);
    CHECK(pipeline_alpha(5) == 257);
    CHECK(pipeline_beta(6) == 4294967297ull);
    CHECK(pipeline_gamma(6) == 64424509447ull);
    CHECK(pipeline_alpha(6) == 65537);
    CHECK(thrown_code([] { pipeline_beta(7); }) == Errc::invalid_argument);
    CHECK(thrown_code([] { pipeline_beta(2); }) == Errc::invalid_argument);
}

TEST_CASE("family instances reject malformed input") {
    FamilyInstance inst = singleton_instance();
    CHECK_NOTHROW(inst.validate());

    FamilyInstance bad = inst;
    bad.d = 2;
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::invalid_argument);

    bad = inst;
    bad.designated_part = IndexSet::from_members(3, {2});  // not a part of the type
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::invalid_argument);

    bad = inst;
    bad.families.pop_back();  // one family is below the branch threshold
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.families[1] = {P({2, 8, 8})};  // family of one point
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.families[1][1] = P({0, 10, 10});  // collides with family 0
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.families[1][1] = P({3, 9, 9});  // comparable with (2, 8, 8)
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.families[1][1] = P({3, 9, 6});  // incomparable, but type {{1,2},{3}}
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);
}

TEST_CASE("the two-axis branch requires five families at dimension three") {
    FamilyInstance inst = pair_instance();
    CHECK_NOTHROW(inst.validate());

    FamilyInstance bad = inst;
    bad.families.pop_back();
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.families[0].pop_back();  // two points; this branch needs three
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);
}

TEST_CASE("singleton branch produces a checked quadruple") {
    FamilyInstance inst = singleton_instance();
    WitnessQuadruple q = find_witness(inst);
    q.verify_against(inst.families);
    CHECK(q.fam_i != q.fam_j);
    CHECK(precedes(q.min_ab, q.min_cd));
    CHECK(q.min_ab == min_point(q.a, q.b));
    CHECK(q.min_cd == min_point(q.c, q.d));
    CHECK(oracle_has_quadruple(inst.families));
}

TEST_CASE("pair branch produces a checked quadruple") {
    FamilyInstance inst = pair_instance();
    WitnessQuadruple q = find_witness(inst);
    q.verify_against(inst.families);
    CHECK(precedes(q.min_ab, q.min_cd));
    CHECK(oracle_has_quadruple(inst.families));
}

TEST_CASE("random valid instances always carry a quadruple") {
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        bool pair_branch = trial % 2 == 1;
        int d = 3;
        IndexSet s = pair_branch ? IndexSet::from_members(3, {1, 2})
                                 : IndexSet::from_members(3, {1});
        FamilyInstance inst;
        inst.d = d;
        inst.shared_type = OrderType(s);
        inst.designated_part = s;
        int nf = pair_branch ? 5 + (int)rng.below(2) : 2 + (int)rng.below(3);
        int size = (pair_branch ? 3 : 2) + (int)rng.below(2);
        for (int f = 0; f < nf; ++f) {
            Coord base = (Coord)(1000 * f) + rng.range(0, 400);
            inst.families.push_back(chain_family(3, s, size, base, 1000000 + rng.range(0, 5)));
        }
        inst.validate();
        WitnessQuadruple q = find_witness(inst);
        q.verify_against(inst.families);
        CHECK(precedes(q.min_ab, q.min_cd));
        CHECK(oracle_has_quadruple(inst.families));
    }
}

TEST_CASE("witness verification rejects tampered quadruples") {
    FamilyInstance inst = singleton_instance();
    WitnessQuadruple q = find_witness(inst);
    WitnessQuadruple bad = q;
    bad.fam_j = bad.fam_i;  // a and b must come from distinct families
    CHECK(thrown_code([&] { bad.verify_against(inst.families); }) == Errc::internal);
    bad = q;
    bad.min_cd = P({-100, -100, -100});
    CHECK(thrown_code([&] { bad.verify_against(inst.families); }) == Errc::internal);
}

TEST_CASE("multipartite instances validate their parts") {
    MultipartiteInstance inst = stacked_instance(3, 3);
    CHECK_NOTHROW(inst.validate());

    MultipartiteInstance bad = inst;
    bad.parts.resize(1);
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::invalid_argument);

    bad = inst;
    bad.d = 7;
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::invalid_argument);

    bad = inst;
    bad.parts[1][0] = bad.parts[0][0];  // cross-part duplicate
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);

    bad = inst;
    bad.parts[1][1] = P({101, 99901, 99901});  // comparable with part 1 point 0
    CHECK(thrown_code([&] { bad.validate(); }) == Errc::precondition);
}

TEST_CASE("parts sharing a singleton type certify without full scale") {
    MultipartiteInstance inst = stacked_instance(6, 5);
    ForbiddenOutcome out = find_forbidden_configuration(inst);
    CHECK_FALSE(out.full_scale);
    REQUIRE(out.certificate.has_value());
    const ForbiddenCertificate &cert = *out.certificate;
    CHECK(cert.phase == ForbiddenCertificate::Phase::equal_singleton_types);
    CHECK(cert.phase_name() == "equal-singleton-types");
    CHECK(cert.prey_check_passed);
    cert.quad.verify_against(inst.parts);
    CHECK(precedes(cert.quad.min_ab, cert.quad.min_cd));
    // the prey sits strictly below all four quadruple points
    for (const Point *p : {&cert.quad.a, &cert.quad.b, &cert.quad.c, &cert.quad.d})
        CHECK(precedes_strict(cert.prey, *p));
    CHECK(check_prey_forces_edge(inst, cert));
}

TEST_CASE("the full scale instance is certified and flagged as such") {
    MultipartiteInstance inst =
        stacked_instance((int)pipeline_gamma(3), (int)pipeline_beta(3));
    ForbiddenOutcome out = find_forbidden_configuration(inst);
    CHECK(out.full_scale);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->prey_check_passed);
    CHECK(check_prey_forces_edge(inst, *out.certificate));
}

TEST_CASE("parts with only a two-axis type fall through to the pigeonhole") {
    MultipartiteInstance inst;
    inst.d = 4;
    IndexSet s = IndexSet::from_members(4, {1, 2});
    for (int p = 0; p < (int)pipeline_alpha(4); ++p)
        inst.parts.push_back(chain_family(4, s, 3, 50 * p, 100000));
    inst.validate();
    ForbiddenOutcome out = find_forbidden_configuration(inst);
    CHECK_FALSE(out.full_scale);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->phase == ForbiddenCertificate::Phase::pigeonhole);
    CHECK(out.certificate->phase_name() == "pigeonhole");
    CHECK(out.certificate->prey_check_passed);
    out.certificate->quad.verify_against(inst.parts);
    CHECK(check_prey_forces_edge(inst, *out.certificate));
}

TEST_CASE("three parts of pairwise different types stay coherent") {
    MultipartiteInstance inst;
    inst.d = 3;
    inst.parts.push_back(chain_family(3, IndexSet::from_members(3, {1}), 2, 0, 1000));
    inst.parts.push_back(chain_family(3, IndexSet::from_members(3, {1, 2}), 2, 50, 1000));
    inst.parts.push_back(chain_family(3, IndexSet::from_members(3, {1, 3}), 2, 100, 1000));
    inst.validate();
    ForbiddenOutcome out = find_forbidden_configuration(inst);
    CHECK_FALSE(out.full_scale);
    if (out.certificate.has_value()) {
        // neither large phase can fire here, only the reduced-scale scan
        CHECK(out.certificate->phase == ForbiddenCertificate::Phase::exhaustive);
        CHECK(out.certificate->prey_check_passed);
        out.certificate->quad.verify_against(inst.parts);
        CHECK(check_prey_forces_edge(inst, *out.certificate));
    } else {
        CHECK_FALSE(out.note.empty());
    }
}
