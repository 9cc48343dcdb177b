#pragma once

#include <optional>
#include <string>
#include <vector>

#include "competition.hpp"
#include "es.hpp"
#include "geometry.hpp"

namespace poc {

// Families of points sharing one order type, with a designated part S of
// that type. The designated part selects which branch of the witness search
// applies (|S| = 1 or |S| = 2).
struct FamilyInstance {
    int d = 0;
    OrderType shared_type;
    IndexSet designated_part;
    std::vector<std::vector<Point>> families;

    // Checks: d >= 3, designated_part is one of shared_type's parts with
    // size 1 or 2, families pairwise disjoint, |V_i| >= 2 (>= 3 when
    // |S| = 2), every in-family pair incomparable with shared_type among its
    // order types, and the branch's family-count threshold:
    // alpha >= 2 when |S| = 1, alpha >= 2^(2^(d-2))+1 when |S| = 2.
    void validate() const;
};

// Four points with min{a,b} <= min{c,d} coordinatewise, a and b from
// distinct families, c != d from one family.
struct WitnessQuadruple {
    int fam_i = -1, fam_j = -1, fam_k = -1;
    int pos_a = -1, pos_b = -1, pos_c = -1, pos_d = -1;
    Point a, b, c, d;
    Point min_ab, min_cd;

    // re-checks membership, fam_i != fam_j, c != d, and min{a,b} <= min{c,d}
    void verify_against(const std::vector<std::vector<Point>> &families) const;
};

// Deterministic witness search following the designated branch.
// |S| = 1: the first two points of the first two families suffice.
// |S| = 2: per-family chains under <=_S (descending on the complement), a
// scan for a nondecreasing pair of middle points, and otherwise an iterated
// Erdos-Szekeres extraction on the middles followed by a three-way subcase
// split. Every path re-verifies its result before returning.
WitnessQuadruple find_witness(const FamilyInstance &inst);

// Disjoint point families, each intended as one partite class.
struct MultipartiteInstance {
    int d = 0;
    std::vector<std::vector<Point>> parts;

    // Checks: 3 <= d <= 6, >= 2 parts, parts pairwise disjoint, every
    // in-part pair incomparable with some order type having a part of
    // size <= 2.
    void validate() const;
};

// Full-scale thresholds: a witness is guaranteed when every part has at
// least pipeline_beta(d) points and there are at least pipeline_gamma(d)
// parts. pipeline_alpha(d) is the same-type class size the pigeonhole phase
// hands to find_witness.
std::uint64_t pipeline_beta(int d);   // 2^(2^(d-1)) + 1
std::uint64_t pipeline_gamma(int d);  // C(d,2) * 2^(2^(d-1)) + d + 1
std::uint64_t pipeline_alpha(int d);  // 2^(2^(d-2)) + 1

struct ForbiddenCertificate {
    enum class Phase {
        equal_singleton_types,  // two parts chose the same type with a singleton part
        pigeonhole,             // a large same-type class with small part of size 2
        exhaustive,             // reduced-scale fallback scan
    };
    Phase phase;
    WitnessQuadruple quad;      // family indices refer to the instance's parts
    OrderType chosen_type;      // shared type of the class the witness came from
    IndexSet designated_part;   // part handed to find_witness ({} for exhaustive)
    // prey point min{a,b} - (1,...,1); strictly below a, b, c, d, so in the
    // competition graph of the involved parts plus this point, c and d are
    // adjacent although they lie in one part
    Point prey;
    bool prey_check_passed = false;

    std::string phase_name() const;
};

struct ForbiddenOutcome {
    bool full_scale = false;
    std::optional<ForbiddenCertificate> certificate;
    std::string note;  // explanation when no certificate was found
};

// Searches the instance for a certificate that its parts cannot be the
// partite classes of a realized complete multipartite competition graph.
// At full scale a certificate is guaranteed; below the thresholds the
// outcome may honestly report that nothing was found at this scale.
ForbiddenOutcome find_forbidden_configuration(const MultipartiteInstance &inst);

// Competition-graph demonstration used for the certificate's prey check:
// the configuration holding every point of the involved parts plus the prey
// point must put an edge between c and d. Exposed for tests.
bool check_prey_forces_edge(const MultipartiteInstance &inst, const ForbiddenCertificate &cert);

}  // namespace poc
