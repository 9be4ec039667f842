#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqarg/gallery.hpp"
#include "eqarg/method2.hpp"
#include "eqarg/simplex.hpp"
#include "eqarg/thimm.hpp"
#include "helpers.hpp"

using namespace eqarg;

TEST_CASE("the fig7 distribution is not p-justifiable") {
    auto af = figures::fig7();
    auto report = p_justifiable(af, figures::fig7_distribution());
    CHECK(!report.p_justifiable);
    CHECK(!report.method2_legitimate);
    const auto& a3 = report.bounds[af.index("a3")];
    CHECK(!a3.holds);
    CHECK(a3.lower_slack == Rational(-1, 20));  // 0.3 against the bound 0.35
    for (const auto& [y, slack] : a3.upper_slack) CHECK(slack >= 0);
}

TEST_CASE("asymmetric fig22 marginals: p-justifiable but not legitimate") {
    auto af = figures::fig22();
    auto d = figures::fig22_asymmetric();
    auto report = p_justifiable(af, d);
    CHECK(report.p_justifiable);
    CHECK(!report.method2_legitimate);
}

TEST_CASE("uniform fig11 masses: p-justifiable but not legitimate") {
    auto report = p_justifiable(figures::fig11(), figures::fig11_uniform());
    CHECK(report.p_justifiable);
    CHECK(!report.method2_legitimate);
}

TEST_CASE("legitimate distributions are p-justifiable") {
    std::mt19937 rng(231);
    for (int trial = 0; trial < 25; ++trial) {
        auto af = testing::random_framework(rng, 1, 5);
        for (const auto& d : enumerate_vertices(af, 8)) {
            auto report = p_justifiable(af, d);
            CHECK(report.method2_legitimate);
            CHECK(report.p_justifiable);
        }
    }
}

TEST_CASE("interior spot checks are reported, not enforced") {
    auto af = figures::fig16();
    auto report = p_justifiable(af, figures::fig16_p2());
    CHECK(report.p_justifiable);
    // a and b sit at 1/2 with their only attacker (themselves) above 0: no notes.
    CHECK(report.interior_notes.empty());
    CHECK(!report.surface_note.empty());
}
