#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eqarg/constructions.hpp"
#include "eqarg/errors.hpp"
#include "eqarg/gallery.hpp"
#include "eqarg/solver.hpp"
#include "helpers.hpp"

using namespace eqarg;

TEST_CASE("equation structure: fig4, unattacked node, pinned fig26") {
    auto sys = build_equations(figures::fig4(), EquationKind::Inv);
    // u = 1-u; a = (1-u)(1-a)(1-b); b = (1-u)(1-a), probed at a sample point
    Valuation v{0.25, 0.5, 0.2};  // a, b, u
    auto af = figures::fig4();
    CHECK(equation_rhs(sys, v, af.index("u")) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(equation_rhs(sys, v, af.index("a")) == doctest::Approx(0.8 * 0.75 * 0.5).epsilon(1e-12));
    CHECK(equation_rhs(sys, v, af.index("b")) == doctest::Approx(0.8 * 0.75).epsilon(1e-12));

    auto lone = build_equations(parse_af("arg x"), EquationKind::Inv);
    CHECK(equation_rhs(lone, {0.3}, 0) == 1.0);

    auto pinned = build_equations(figures::fig26(), EquationKind::Inv, {{"a", 1}, {"b", 0}});
    auto f26 = figures::fig26();
    Valuation w(f26.size(), 0.5);
    CHECK(equation_rhs(pinned, w, f26.index("a")) == 1.0);
    CHECK(equation_rhs(pinned, w, f26.index("b")) == 0.0);
    CHECK(equation_rhs(pinned, w, f26.index("c")) == doctest::Approx(0.25));

    CHECK_THROWS_AS(build_equations(f26, EquationKind::Inv, {{"a", 2}}), std::invalid_argument);
}

TEST_CASE("residuals: exact solution, all-half point, golden point") {
    auto fig3 = figures::fig3();
    auto sys = build_equations(fig3, EquationKind::Inv);
    CHECK(residual(sys, {0.0, 1.0}) == 0.0);
    CHECK(residual(sys, {0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-15));

    auto fig4sys = build_equations(figures::fig4(), EquationKind::Inv);
    double a = std::sqrt(5.0) - 2.0, b = (3.0 - std::sqrt(5.0)) / 2.0;
    CHECK(residual(fig4sys, {a, b, 0.5}) <= 1e-9);
}

TEST_CASE("solve finds the golden fig4 solution and only (0,1) on fig3") {
    auto result = solve(build_equations(figures::fig4(), EquationKind::Inv));
    bool golden = false;
    for (const auto& v : result.solutions)
        if (std::abs(v[0] - (std::sqrt(5.0) - 2.0)) <= 1e-9 &&
            std::abs(v[1] - (3.0 - std::sqrt(5.0)) / 2.0) <= 1e-9 && std::abs(v[2] - 0.5) <= 1e-9)
            golden = true;
    CHECK(golden);

    auto fig3 = solve(build_equations(figures::fig3(), EquationKind::Inv));
    REQUIRE(fig3.solutions.size() == 1);
    CHECK(fig3.solutions[0][0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fig3.solutions[0][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chain gadget sink values") {
    for (int n : {1, 3, 20}) {
        auto af = un_chain(n);
        auto result = solve(build_equations(af, EquationKind::Inv));
        REQUIRE(result.solutions.size() == 1);
        const auto& v = result.solutions[0];
        for (int i = 0; i < n; ++i) CHECK(v[i] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(v[n] - std::ldexp(1.0, -n)) <= 1e-12);
    }
}

TEST_CASE("projection with boundary snapping") {
    CHECK(project({1.0, 0.0, 0.5}) == Labelling{{Label::In, Label::Out, Label::Und}});
    CHECK(project({1.0 - 1e-12, 1e-12, 0.3}) == Labelling{{Label::In, Label::Out, Label::Und}});
    CHECK(project({0.236, 0.382, 0.5}) == Labelling{{Label::Und, Label::Und, Label::Und}});
}

TEST_CASE("every accepted solution stays in the unit box with a small residual") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        auto af = testing::random_framework(rng, 1, 5);
        auto sys = build_equations(af, EquationKind::Inv);
        auto result = solve(sys);
        for (const auto& v : result.solutions) {
            for (double x : v) {
                CHECK(x >= 0.0);
                CHECK(x <= 1.0);
            }
            CHECK(residual(sys, v) <= 1e-9);
        }
        for (std::size_t i = 0; i < result.solutions.size(); ++i)
            for (std::size_t j = i + 1; j < result.solutions.size(); ++j) {
                double d = 0.0;
                for (std::size_t k = 0; k < result.solutions[i].size(); ++k)
                    d = std::max(d,
                                 std::abs(result.solutions[i][k] - result.solutions[j][k]));
                CHECK(d >= 1e-6);
            }
    }
}

TEST_CASE("inv solutions project to legal labellings (small corpus)") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        auto af = testing::random_framework(rng, 1, 6);
        auto sys = build_equations(af, EquationKind::Inv);
        for (const auto& v : solve(sys).solutions) {
            if (residual(sys, v) > 1e-10) continue;
            CHECK(is_legal_labelling(af, project(v)));
        }
    }
}

TEST_CASE("preferred labellings are reachable from their own seeds (small corpus)") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        auto af = testing::random_framework(rng, 1, 5);
        auto ext = enumerate_complete(af);
        auto sys = build_equations(af, EquationKind::Inv);
        for (std::size_t k = 0; k < ext.all.size(); ++k) {
            if (!ext.preferred[k]) continue;
            SolveConfig cfg;
            cfg.strategy = SeedStrategy::Explicit;
            cfg.explicit_seeds = {labelling_seed(ext.all[k])};
            bool realized = false;
            for (const auto& v : solve(sys, cfg).solutions)
                if (project(v) == ext.all[k]) realized = true;
            CHECK(realized);
        }
    }
}

TEST_CASE("exact max-form solutions are exactly the complete labellings") {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 60; ++trial) {
        auto af = testing::random_framework(rng, 1, 6);
        auto exact = exact_max_solutions(af);
        auto oracle = enumerate_complete(af).all;
        auto key = [](const Labelling& lab) { return lab.labels; };
        std::vector<std::vector<Label>> lhs, rhs;
        for (const auto& l : exact) lhs.push_back(key(l));
        for (const auto& l : oracle) rhs.push_back(key(l));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("float max-form solve finds both fig3 solutions") {
    auto result = solve(build_equations(figures::fig3(), EquationKind::Max));
    bool decided = false, half = false;
    for (const auto& v : result.solutions) {
        if (std::abs(v[0]) <= 1e-9 && std::abs(v[1] - 1.0) <= 1e-9) decided = true;
        if (std::abs(v[0] - 0.5) <= 1e-9 && std::abs(v[1] - 0.5) <= 1e-9) half = true;
    }
    CHECK(decided);
    CHECK(half);
}

TEST_CASE("identical configuration gives identical solution sets across runs") {
    auto sys = build_equations(figures::fig4(), EquationKind::Inv);
    auto a = solve(sys);
    auto b = solve(sys);
    CHECK(a.solutions == b.solutions);
    CHECK(solve_serial(sys).solutions == a.solutions);
}

TEST_CASE("explicit seed validation and the no-convergence report") {
    auto sys = build_equations(figures::fig3(), EquationKind::Inv);
    SolveConfig cfg;
    cfg.strategy = SeedStrategy::Explicit;
    cfg.explicit_seeds = {{0.5}};
    CHECK_THROWS_AS(solve(sys, cfg), std::invalid_argument);

    // An unreachable residual tolerance: nothing converges, best residual reported.
    SolveConfig strict;
    strict.residual_tolerance = 1e-300;
    strict.tolerance = 1e-300;
    auto result = solve(build_equations(figures::fig4(), EquationKind::Inv), strict);
    // Only a bitwise-exact fixed point of the rounded map may survive.
    CHECK(result.solutions.size() <= 1);
    CHECK(result.best_residual < 1e-12);
    CHECK(result.seeds_tried == 27);

    SolveConfig bad;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(solve(build_equations(figures::fig3(), EquationKind::Inv), bad),
                    std::invalid_argument);
    SolveConfig bad2;
    bad2.cluster_radius = 0.0;
    CHECK_THROWS_AS(solve(build_equations(figures::fig3(), EquationKind::Inv), bad2),
                    std::invalid_argument);
}

TEST_CASE("grid seeding walks the solution family of fig9") {
    SolveConfig cfg;
    cfg.strategy = SeedStrategy::Grid;
    cfg.grid_points = 5;
    auto result = solve(build_equations(figures::fig9(), EquationKind::Inv), cfg);
    CHECK(result.seeds_tried == 125);
    CHECK(result.solutions.size() >= 3);
    for (const auto& v : result.solutions) {
        CHECK(v[1] == doctest::Approx(1.0 - v[0]).epsilon(1e-8));
        CHECK(v[2] == doctest::Approx(v[0] * (1.0 - v[0])).epsilon(1e-8));
    }
}

TEST_CASE("labelling seeding above the cap raises, random seeding still solves") {
    std::mt19937 rng(91);
    auto af = testing::random_framework(rng, 11, 0.25);
    SolveConfig cfg;
    cfg.strategy = SeedStrategy::Labelling;
    CHECK_THROWS_AS(solve(build_equations(af, EquationKind::Inv), cfg), SizeCapError);
    auto result = solve(build_equations(af, EquationKind::Inv));  // Auto falls back to Random
    CHECK(result.seeds_tried == 65);
}
