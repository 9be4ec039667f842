#include "eqarg/thimm.hpp"

#include <stdexcept>

#include "eqarg/constraints.hpp"

namespace eqarg {

JustifiabilityReport p_justifiable(const ArgumentationFramework& af, const ModelDistribution& d) {
    if (!(d.atoms() == AtomIndex::of(af)))
        throw std::invalid_argument("distribution is not over this framework's arguments");

    JustifiabilityReport report;
    report.surface_note =
        "inequalities evaluated on argument marginals of the model distribution";
    report.p_justifiable = true;
    report.method2_legitimate = check_legitimate(af, d).legitimate;

    for (int x = 0; x < af.size(); ++x) {
        JustifiabilityBound bound;
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
        if (!bound.holds) report.p_justifiable = false;

        if (px > 0 && px < 1) {
            bool attacker_at_one = false, attacker_above_zero = false;
            for (int y : af.attackers(x)) {
                if (d.marginal(y) == 1) attacker_at_one = true;
                if (d.marginal(y) > 0) attacker_above_zero = true;
            }
            if (attacker_at_one)
                report.interior_notes.push_back(af.name(x) +
                                                ": interior probability with an attacker at 1");
            if (!attacker_above_zero)
                report.interior_notes.push_back(af.name(x) +
                                                ": interior probability with no attacker above 0");
        }
        report.bounds.push_back(std::move(bound));
    }
    return report;
}

}  // namespace eqarg
