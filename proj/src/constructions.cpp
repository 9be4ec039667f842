#include "eqarg/constructions.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "eqarg/errors.hpp"

namespace eqarg {

namespace {

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
    if (!taken.count(base)) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!taken.count(cand)) return cand;
    }
}

void require_legal(const ArgumentationFramework& af, const Labelling& lab, const char* op) {
    if (!is_legal_labelling(af, lab))
        throw std::invalid_argument(std::string(op) + " requires a legal labelling, got " +
                                    labelling_str(af, lab));
}

Rational pow2_inverse(int n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
    return Rational(mpz_class(1), den);
}

}  // namespace

AugmentationResult augment_und(const ArgumentationFramework& af, const Labelling& lab,
                               AugmentMode mode, int chain_n) {
    require_legal(af, lab, "augment_und");
    if (mode == AugmentMode::Chain && chain_n < 1)
        throw std::invalid_argument("chain length must be at least 1");

    std::set<std::string> taken(af.arguments().begin(), af.arguments().end());
    AugmentationResult out;
    out.af = af;
    out.extended = lab;
    out.fresh = fresh_name(taken, "u");
    taken.insert(out.fresh);
    int u = out.af.add_argument(out.fresh);
    out.extended.labels.push_back(Label::Und);

    if (mode == AugmentMode::SelfLoop) {
        out.af.add_attack(u, u);
    } else {
        for (int k = 1; k <= chain_n; ++k) {
            std::string name = fresh_name(taken, out.fresh + "_" + std::to_string(k));
            taken.insert(name);
            int c = out.af.add_argument(name);
            out.extended.labels.push_back(Label::Und);
            out.af.add_attack(c, c);
            out.af.add_attack(c, u);
        }
    }
    for (int v = 0; v < af.size(); ++v)
        if (lab[v] == Label::Und) out.af.add_attack(u, v);
    return out;
}

ArgumentationFramework un_chain(int n) {
    if (n < 1) throw std::invalid_argument("chain length must be at least 1");
    ArgumentationFramework af;
    for (int k = 1; k <= n; ++k) af.add_argument("u" + std::to_string(k));
    int sink = af.add_argument("u");
    for (int k = 0; k < n; ++k) {
        af.add_attack(k, k);
        af.add_attack(k, sink);
    }
    return af;
}

namespace {

// Snaps solver doubles to small rationals and verifies them exactly against
// x = factor * prod (1 - y) over the given system; falls back to the exact
// binary values when the snapped ones do not solve the equations.
bool snap_solution(const ArgumentationFramework& af, const std::vector<double>& v,
                   const Rational& factor, std::vector<Rational>& out) {
    std::vector<Rational> snapped;
    snapped.reserve(v.size());
    for (double x : v) snapped.push_back(rational_from_double_bounded(x, 1000000));
    for (int x = 0; x < af.size(); ++x) {
        Rational rhs = factor;
        for (int y : af.attackers(x)) rhs *= 1 - snapped[y];
        if (snapped[x] != rhs) {
            out.clear();
            for (double d : v) out.push_back(rational_from_double(d));
            return false;
        }
    }
    out = std::move(snapped);
    return true;
}

// Product distribution over the full framework concentrated on models that
// fix the decided arguments: in arguments true, out arguments false, und
// arguments weighted by their solution values.
ModelDistribution decided_product(const ArgumentationFramework& af, const Labelling& lab,
                                  const std::vector<int>& und_args,
                                  const std::vector<Rational>& und_values) {
    std::uint32_t base = 0;
    for (int i = 0; i < af.size(); ++i)
        if (lab[i] == Label::In) base |= 1u << i;

    std::map<std::uint32_t, Rational> masses;
    struct Frame {
        std::uint32_t bits;
        Rational mass;
        std::size_t next;
    };
    std::vector<Frame> stack{{base, Rational(1), 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.next == und_args.size()) {
            masses[f.bits] += f.mass;
            continue;
        }
        const Rational& q = und_values[f.next];
        std::uint32_t bit = 1u << und_args[f.next];
        if (q != 0) stack.push_back({f.bits | bit, f.mass * q, f.next + 1});
        if (q != 1) stack.push_back({f.bits, f.mass * (1 - q), f.next + 1});
    }
    return ModelDistribution(AtomIndex::of(af), std::move(masses));
}

std::vector<double> solve_deterministic(const EquationSystem& sys, SolveConfig cfg,
                                        const Valuation& first_seed, const char* what) {
    cfg.strategy = SeedStrategy::Explicit;
    cfg.explicit_seeds = {first_seed};
    auto result = solve(sys, cfg);
    if (result.solutions.empty()) {
        cfg.strategy = SeedStrategy::Auto;
        cfg.explicit_seeds.clear();
        result = solve(sys, cfg);
    }
    if (result.solutions.empty())
        throw std::runtime_error(std::string("no equation solution found for ") + what +
                                 " (best residual " + std::to_string(result.best_residual) + ")");
    return result.solutions.front();
}

}  // namespace

ApproxReport approximate_plambda(const ArgumentationFramework& af, const Labelling& lab, int n,
                                 const SolveConfig& cfg, int cap) {
    require_legal(af, lab, "approximate_plambda");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    int limit = std::min(cap, 20);
    if (af.size() > limit)
        throw SizeCapError("framework has " + std::to_string(af.size()) +
                           " arguments, above the model cap " + std::to_string(limit));

    auto oracle = enumerate_complete(af);
    bool preferred = false;
    for (std::size_t k = 0; k < oracle.all.size(); ++k)
        if (oracle.all[k] == lab) preferred = oracle.preferred[k];

    const Rational pu = pow2_inverse(n);
    std::vector<int> und_args;
    for (int i = 0; i < af.size(); ++i)
        if (lab[i] == Label::Und) und_args.push_back(i);

    std::vector<Rational> values;     // per solved node
    std::vector<std::pair<std::string, Rational>> und_solution;
    bool exact = false;

    if (preferred) {
        // Direct solution of the full system from the labelling's own seed.
        auto sys = build_equations(af, EquationKind::Inv);
        SolveConfig seeded = cfg;
        seeded.strategy = SeedStrategy::Explicit;
        seeded.explicit_seeds = {labelling_seed(lab)};
        auto result = solve(sys, seeded);
        const Valuation* match = nullptr;
        for (const auto& v : result.solutions)
            if (project(v, cfg.residual_tolerance) == lab) {
                match = &v;
                break;
            }
        if (!match)
            throw std::runtime_error(
                "no equation solution realizing the preferred labelling was found from its seed "
                "(best residual " +
                std::to_string(result.best_residual) + ")");
        exact = snap_solution(af, *match, Rational(1), values);
        for (int i = 0; i < af.size(); ++i) und_solution.push_back({af.name(i), values[i]});

        std::vector<Rational> und_values;
        for (int i : und_args) und_values.push_back(values[i]);
        // For decided arguments the product factors are exactly 1 or 0, so the
        // concentrated product below equals the plain product distribution.
        ModelDistribution dist = decided_product(af, project(*match, cfg.residual_tolerance),
                                                 und_args, und_values);
        ApproxReport report{n,  true, exact, pu + Rational(1, 100000000), Rational(0), false,
                            {}, std::move(und_solution), std::move(dist)};
        for (int x = 0; x < af.size(); ++x) {
            Rational defect =
                abs(report.distribution.marginal(x) -
                    report.distribution.prob_all_false(af.attackers(x)));
            report.max_residual = std::max(report.max_residual, defect);
            report.residuals.push_back(std::move(defect));
        }
        report.bound_satisfied = report.max_residual <= report.epsilon_bound;
        return report;
    }

    // Restriction to the und arguments, with the external attacker of value
    // 2^-n folded in as the factor (1 - 2^-n) on every equation.
    ArgumentationFramework sub;
    for (int i : und_args) sub.add_argument(af.name(i));
    for (const auto& [s, t] : af.attacks()) {
        auto si = sub.find(af.name(s)), ti = sub.find(af.name(t));
        if (si && ti) sub.add_attack(*si, *ti);
    }
    auto sys = build_equations(sub, EquationKind::Inv);
    double factor_d = 1.0 - std::ldexp(1.0, -n);
    for (auto& f : sys.factor) f = factor_d;

    auto solution = solve_deterministic(sys, cfg, Valuation(sub.size(), 0.5),
                                        "the undecided part");
    exact = snap_solution(sub, solution, 1 - pu, values);

    std::set<std::string> taken(af.arguments().begin(), af.arguments().end());
    for (int i = 0; i < sub.size(); ++i) und_solution.push_back({sub.name(i), values[i]});
    und_solution.push_back({fresh_name(taken, "u"), pu});

    ModelDistribution dist = decided_product(af, lab, und_args, values);
    ApproxReport report{n,  false, exact, pu + Rational(1, 100000000), Rational(0), false,
                        {}, std::move(und_solution), std::move(dist)};
    for (int x = 0; x < af.size(); ++x) {
        Rational defect = abs(report.distribution.marginal(x) -
                              report.distribution.prob_all_false(af.attackers(x)));
        report.max_residual = std::max(report.max_residual, defect);
        report.residuals.push_back(std::move(defect));
    }
    report.bound_satisfied = report.max_residual <= report.epsilon_bound;
    return report;
}

}  // namespace eqarg
