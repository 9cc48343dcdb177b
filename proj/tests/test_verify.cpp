#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "error.hpp"
#include "verify.hpp"

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

}  // namespace

TEST_CASE("the check list is fixed and nonempty") {
    const auto &names = verify_check_names();
    std::vector<std::string> expected = {"order-types", "min-point",  "incomparable",
                                         "chain-antichain", "extraction", "witness",
                                         "forbidden"};
    CHECK(names == expected);
}

TEST_CASE("every check passes a quick seeded run") {
    for (const std::string &name : verify_check_names()) {
        VerifyReport rep = run_verify(name, 25, 20240816);
        CAPTURE(name);
        CAPTURE(rep.first_failure);
        CHECK(rep.check == name);
        CHECK(rep.trials == 25);
        CHECK(rep.passes == 25);
        CHECK(rep.failures == 0);
        CHECK(rep.first_failure.empty());
        CHECK(rep.seed == 20240816);
    }
}

TEST_CASE("reports are reproducible for a fixed seed") {
    VerifyReport a = run_verify("chain-antichain", 40, 7);
    VerifyReport b = run_verify("chain-antichain", 40, 7);
    CHECK(a.passes == b.passes);
    CHECK(a.failures == b.failures);
    CHECK(a.first_failure == b.first_failure);
}

TEST_CASE("option variants cover both branches and higher dimensions") {
    VerifyOptions o;
    o.s_size = 2;
    CHECK(run_verify("witness", 10, 99, o).failures == 0);
    o = VerifyOptions{};
    o.d = 4;
    CHECK(run_verify("order-types", 20, 99, o).failures == 0);
    CHECK(run_verify("min-point", 20, 99, o).failures == 0);
    o = VerifyOptions{};
    o.t_extract = 2;  // drives the 17-point extraction
    CHECK(run_verify("extraction", 5, 99, o).failures == 0);
    o = VerifyOptions{};
    o.n_es = 5;
    CHECK(run_verify("chain-antichain", 20, 99, o).failures == 0);
    o = VerifyOptions{};
    o.parts = 4;
    o.part_points = 3;
    CHECK(run_verify("forbidden", 5, 99, o).failures == 0);
}

TEST_CASE("unknown names and bad options are rejected") {
    CHECK(thrown_code([] { run_verify("no-such-check", 5, 1); }) == Errc::invalid_argument);
    try {
        run_verify("no-such-check", 5, 1);
    } catch (const Error &e) {
        // the message lists the valid names
        CHECK(std::string(e.what()).find("order-types") != std::string::npos);
        CHECK(std::string(e.what()).find("forbidden") != std::string::npos);
    }
    CHECK(thrown_code([] { run_verify("order-types", 0, 1); }) == Errc::invalid_argument);
    VerifyOptions o;
    o.d = 7;
    CHECK(thrown_code([&] { run_verify("order-types", 5, 1, o); }) == Errc::invalid_argument);
    o = VerifyOptions{};
    o.d = 2;
    CHECK(thrown_code([&] { run_verify("extraction", 5, 1, o); }) == Errc::invalid_argument);
    CHECK(thrown_code([&] { run_verify("witness", 5, 1, o); }) == Errc::invalid_argument);
    o = VerifyOptions{};
    o.s_size = 3;
    CHECK(thrown_code([&] { run_verify("witness", 5, 1, o); }) == Errc::invalid_argument);
    o = VerifyOptions{};
    o.n_es = 0;
    CHECK(thrown_code([&] { run_verify("chain-antichain", 5, 1, o); }) == Errc::invalid_argument);
    o = VerifyOptions{};
    o.parts = 1;
    CHECK(thrown_code([&] { run_verify("forbidden", 5, 1, o); }) == Errc::invalid_argument);
    o = VerifyOptions{};
    o.part_points = 2;
    CHECK(thrown_code([&] { run_verify("forbidden", 5, 1, o); }) == Errc::invalid_argument);
}
