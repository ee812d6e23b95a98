#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotdt/verify.hpp"

using namespace quotdt;

namespace {

VerifyOptions fast_options() {
    VerifyOptions o;
    o.order = 6;
    o.ranks = {1, 2};
    o.instances = 10;
    return o;
}

} // namespace

TEST_CASE("axioms suite passes with the real power structure") {
    auto report = run_suite("axioms", fast_options());
    CHECK(report.all_pass());
    CHECK(report.suite == "axioms");
    // fail cases always carry first_discrepancy; pass cases never do
    for (const auto& c : report.cases) {
        CHECK(c.pass);
        CHECK_FALSE(c.first_discrepancy.has_value());
    }
}

TEST_CASE("corrupted power structure is detected at the lowest failing degree") {
    VerifyOptions o = fast_options();
    o.power_impl = [](const MotiveSeries& a, const TateClass& c) {
        MotiveSeries out = power(a, c);
        out.set_coeff(2, out.coeff(2) + TateClass::lefschetz(1));
        return out;
    };
    auto report = run_suite("axioms", o);
    CHECK_FALSE(report.all_pass());
    bool saw_axiom_failure = false;
    for (const auto& c : report.cases) {
        if (c.identity.rfind("power_axiom_", 0) == 0 && !c.pass) {
            saw_axiom_failure = true;
            REQUIRE(c.first_discrepancy.has_value());
            // the injected error sits at t^2 and nothing below fails
            CHECK(c.first_discrepancy->degree == 2);
        }
    }
    CHECK(saw_axiom_failure);
    // exp/log cases do not use the power structure and must still pass
    for (const auto& c : report.cases)
        if (c.identity == "exp_log_inverse") CHECK(c.pass);
}

TEST_CASE("identity filter selects a single family") {
    VerifyOptions o = fast_options();
    o.only_identity = "gen_function_affine";
    auto report = run_suite("identities", o);
    CHECK(report.cases.size() == 2); // one per rank
    for (const auto& c : report.cases) CHECK(c.identity == "gen_function_affine");
    CHECK(report.all_pass());

    o.only_identity = "no_such_identity";
    CHECK_THROWS(run_suite("identities", o));
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS(run_suite("bogus", fast_options()));
}

TEST_CASE("report JSON is deterministic and carries the failure payload") {
    VerifyOptions o = fast_options();
    auto r1 = run_suite("effectivity", o);
    auto r2 = run_suite("effectivity", o);
    CHECK(r1.to_json(false).dump() == r2.to_json(false).dump());
    auto j = r1.to_json(false);
    CHECK(j["suite"] == "effectivity");
    CHECK(j["passed"] == true);
    for (const auto& jc : j["cases"]) {
        CHECK(jc.contains("identity"));
        CHECK(jc.contains("status"));
        CHECK_FALSE(jc.contains("elapsed_ms")); // timings only on request
    }
    auto jt = r1.to_json(true);
    CHECK(jt["cases"][0].contains("elapsed_ms"));
}

TEST_CASE("suite catalogue") {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK(std::find(names.begin(), names.end(), "identities") != names.end());
}

TEST_CASE("every dt identity family is reachable from the identities suite") {
    VerifyOptions o = fast_options();
    auto report = run_suite("identities", o);
    std::vector<std::string> want = {"gen_function_affine",   "omega_generation",
                                     "threefold_closed_form", "vc_weight_identity",
                                     "r1_hilbert_reduction",  "euler_specialization",
                                     "effectivity_punctual",  "effectivity_affine"};
    for (const auto& name : want) {
        bool found = false;
        for (const auto& c : report.cases) found |= (c.identity == name);
        CHECK_MESSAGE(found, name);
    }
}
