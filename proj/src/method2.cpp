#include "eqarg/method2.hpp"

#include <set>
#include <stdexcept>

#include "eqarg/errors.hpp"

namespace eqarg {

namespace {

void require_legitimate(const ArgumentationFramework& af, const ModelDistribution& d,
                        const char* op) {
    auto report = check_legitimate(af, d);
    if (!report.legitimate)
        throw std::invalid_argument(std::string(op) +
                                    " requires a distribution satisfying the attack equations");
}

}  // namespace

Labelling gr_labelling(const ArgumentationFramework& af, const ModelDistribution& d) {
    require_legitimate(af, d, "gr_labelling");
    Labelling lab;
    lab.labels.reserve(af.size());
    for (int x = 0; x < af.size(); ++x) {
        Rational q = d.prob_any_true(af.attackers(x));
        lab.labels.push_back(q == 0 ? Label::In : q == 1 ? Label::Out : Label::Und);
    }
    return lab;
}

ModelDistribution plambda_construct(const ArgumentationFramework& af, const Labelling& lab) {
    auto legality = check_labelling(af, lab);
    if (!legality.legal)
        throw std::invalid_argument("plambda_construct requires a legal labelling, got " +
                                    labelling_str(af, lab));
    std::uint32_t base = 0, und_mask = 0;
    for (int i = 0; i < af.size(); ++i) {
        if (lab[i] == Label::In) base |= 1u << i;
        if (lab[i] == Label::Und) und_mask |= 1u << i;
    }
    std::map<std::uint32_t, Rational> masses;
    if (und_mask == 0) {
        masses[base] = 1;
    } else {
        masses[base | und_mask] = Rational(1, 2);
        masses[base] = Rational(1, 2);
    }
    return ModelDistribution(AtomIndex::of(af), std::move(masses));
}

Lemma5Report lemma5_bounds(const ArgumentationFramework& af, const ModelDistribution& d) {
    if (!(d.atoms() == AtomIndex::of(af)))
        throw std::invalid_argument("distribution is not over this framework's arguments");
    Lemma5Report report;
    report.input_legitimate = check_legitimate(af, d).legitimate;
    report.all_hold = true;
    for (int x = 0; x < af.size(); ++x) {
        Lemma5Bound bound;
        bound.argument = x;
        bound.holds = true;
        Rational px = d.marginal(x);
        Rational att_sum = 0;
        for (int y : af.attackers(x)) {
            Rational slack = (1 - d.marginal(y)) - px;
            if (slack < 0) bound.holds = false;
            bound.upper_slack.push_back({y, slack});
            att_sum += d.marginal(y);
        }
        bound.lower_slack = px - (1 - att_sum);
        if (bound.lower_slack < 0) bound.holds = false;
        if (!bound.holds) report.all_hold = false;
        report.bounds.push_back(std::move(bound));
    }
    return report;
}

Lemma13Report lemma13_check(const ArgumentationFramework& af, const ModelDistribution& d) {
    require_legitimate(af, d, "lemma13_check");
    Lemma13Report report;
    report.all_hold = true;
    for (int x = 0; x < af.size(); ++x) {
        Lemma13Check check;
        check.argument = x;
        bool any_one = false, all_zero = true;
        for (int y : af.attackers(x)) {
            Rational py = d.marginal(y);
            if (py == 1) any_one = true;
            if (py != 0) all_zero = false;
        }
        Rational px = d.marginal(x);
        if (any_one) {
            check.forced_out_applies = true;
            check.holds = px == 0;
        }
        if (all_zero) {
            check.forced_in_applies = true;
            check.holds = check.holds && px == 1;
        }
        if (!check.holds) report.all_hold = false;
        report.checks.push_back(check);
    }
    return report;
}

InstantiatedNetwork InstantiatedNetwork::identity(const ArgumentationFramework& af) {
    InstantiatedNetwork net;
    net.af = af;
    for (const auto& a : af.arguments()) net.instantiation.push_back(Formula::atom(a));
    return net;
}

InstantiationResult instantiate_and_solve(const InstantiatedNetwork& net, int cap) {
    const auto& af = net.af;
    if (static_cast<int>(net.instantiation.size()) != af.size())
        throw std::invalid_argument("instantiation is not total over the framework");

    // Atom universe: first occurrence over arguments in declaration order.
    std::vector<std::string> universe;
    std::set<std::string> seen;
    for (const auto& f : net.instantiation)
        for (const auto& a : f.atoms())
            if (seen.insert(a).second) universe.push_back(a);

    InstantiationResult out;
    out.universe = AtomIndex(std::move(universe));
    int limit = std::min(cap, 20);
    if (out.universe.size() > limit)
        throw SizeCapError("instantiation universe has " + std::to_string(out.universe.size()) +
                           " atoms, above the model cap " + std::to_string(limit));

    const std::uint32_t n_models = 1u << out.universe.size();
    out.constraints.atoms = out.universe;
    for (int x = 0; x < af.size(); ++x) {
        Formula body = Formula::top();
        const auto& att = af.attackers(x);
        for (std::size_t k = 0; k < att.size(); ++k) {
            Formula lit = Formula::negation(net.instantiation[att[k]]);
            body = k == 0 ? lit : Formula::conj(body, lit);
        }
        out.theory.push_back(Formula::iff(net.instantiation[x], body));

        ConstraintRow row;
        row.label = "eq:" + af.name(x);
        row.rhs = 0;
        row.coeff.assign(n_models, 0);
        for (std::uint32_t m = 0; m < n_models; ++m) {
            int c = classical_eval(net.instantiation[x], out.universe, m) ? 1 : 0;
            if (classical_eval(body, out.universe, m)) c -= 1;
            row.coeff[m] = static_cast<std::int8_t>(c);
        }
        out.constraints.rows.push_back(std::move(row));
    }
    ConstraintRow sum;
    sum.label = "sum";
    sum.rhs = 1;
    sum.coeff.assign(n_models, 1);
    out.constraints.rows.push_back(std::move(sum));

    out.result = solve_feasibility(out.constraints);
    return out;
}

}  // namespace eqarg
