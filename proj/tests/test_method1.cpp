#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqarg/constraints.hpp"
#include "eqarg/gallery.hpp"
#include "eqarg/method1.hpp"
#include "helpers.hpp"

using namespace eqarg;

namespace {

AtomProbability random_rational_probs(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(0, 8);
    AtomProbability ap;
    for (int i = 0; i < n; ++i) {
        Rational q(num(rng), 8);
        q.canonicalize();
        ap.p.push_back(q);
    }
    return ap;
}

}  // namespace

TEST_CASE("product distribution over fig9 at (1/2, 1/2, 1/4)") {
    auto af = figures::fig9();
    AtomProbability ap{{Rational(1, 2), Rational(1, 2), Rational(1, 4)}};
    auto d = product_distribution(af, ap);
    const std::uint32_t a3 = 1u << af.index("a3");
    for (std::uint32_t m = 0; m < 8; ++m)
        CHECK(d.mass(m) == ((m & a3) ? Rational(1, 16) : Rational(3, 16)));
}

TEST_CASE("product distribution over fig16 at (1/2, 1/2, 1/4)") {
    auto af = figures::fig16();
    AtomProbability ap{{Rational(1, 2), Rational(1, 2), Rational(1, 4)}};
    auto d = product_distribution(af, ap);
    const std::uint32_t x = 1u << af.index("x");
    for (std::uint32_t m = 0; m < 8; ++m)
        CHECK(d.mass(m) == ((m & x) ? Rational(1, 16) : Rational(3, 16)));
}

TEST_CASE("all-ones probabilities give the point mass on the all-true model") {
    auto af = figures::fig9();
    AtomProbability ap{{Rational(1), Rational(1), Rational(1)}};
    auto d = product_distribution(af, ap);
    CHECK(d.masses().size() == 1);
    CHECK(d.mass(0b111) == 1);
}

TEST_CASE("product masses sum to exactly one and marginals are exact") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        auto af = testing::random_framework(rng, 1, 6);
        auto ap = random_rational_probs(rng, af.size());
        auto d = product_distribution(af, ap);  // the constructor checks the sum is exactly 1
        for (int q = 0; q < af.size(); ++q) CHECK(d.marginal(q) == ap.p[q]);
    }
}

TEST_CASE("legitimacy goldens") {
    auto fig4 = figures::fig4();
    auto golden = solve(build_equations(fig4, EquationKind::Inv)).solutions.at(0);
    CHECK(is_method1_legitimate(fig4, atom_probability_from_doubles(fig4, golden)).legitimate);

    auto fig3 = figures::fig3();
    AtomProbability half{{Rational(1, 2), Rational(1, 2)}};
    auto report = is_method1_legitimate(fig3, half, Rational(0));
    CHECK(!report.legitimate);
    CHECK(report.defects[fig3.index("a")] == Rational(1, 4));

    auto fig16 = figures::fig16();
    AtomProbability p1{{Rational(1, 2), Rational(1, 2), Rational(1, 4)}};
    auto exact = is_method1_legitimate(fig16, p1, Rational(0));
    CHECK(exact.legitimate);
    for (const auto& defect : exact.defects) CHECK(defect == 0);
}

TEST_CASE("syntactic and semantic legitimacy agree through the product distribution") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 40; ++trial) {
        auto af = testing::random_framework(rng, 1, 6);
        auto ap = random_rational_probs(rng, af.size());
        auto method1 = is_method1_legitimate(af, ap, Rational(0));
        auto method2 = check_legitimate(af, product_distribution(af, ap));
        CHECK(method1.legitimate == method2.legitimate);
        // The per-argument defects coincide exactly, not just in sign.
        for (int x = 0; x < af.size(); ++x) CHECK(method1.defects[x] == method2.defects[x]);
    }
}

TEST_CASE("solver solutions reinterpreted as atom probabilities are legitimate") {
    std::mt19937 rng(121);
    for (int trial = 0; trial < 15; ++trial) {
        auto af = testing::random_framework(rng, 1, 5);
        for (const auto& ap : find_method1(af)) {
            CHECK(is_method1_legitimate(af, ap).legitimate);
            CHECK(check_legitimate(af, product_distribution(af, ap)).legitimate ==
                  is_method1_legitimate(af, ap, Rational(0)).legitimate);
        }
    }
}

TEST_CASE("find_method1 goldens: fig3 and an isolated node") {
    auto fig3 = figures::fig3();
    auto found = find_method1(fig3);
    REQUIRE(found.size() == 1);
    CHECK(found[0].p[0] == 0);
    CHECK(found[0].p[1] == 1);

    auto lone = parse_af("arg x");
    auto lone_found = find_method1(lone);
    REQUIRE(lone_found.size() == 1);
    CHECK(lone_found[0].p[0] == 1);
}

TEST_CASE("input validation") {
    auto af = figures::fig3();
    CHECK_THROWS_AS(product_distribution(af, AtomProbability{{Rational(1, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(product_distribution(af, AtomProbability{{Rational(3, 2), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(atom_probability_from_doubles(af, {0.5, 1.5}), std::invalid_argument);
}
