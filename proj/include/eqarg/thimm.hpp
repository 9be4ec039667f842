#pragma once

#include <string>
#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/rational.hpp"

namespace eqarg {

struct JustifiabilityBound {
    int argument;
    std::vector<std::pair<int, Rational>> upper_slack;  // attacker, (1 - P(y)) - P(x)
    Rational lower_slack;                               // P(x) - (1 - sum P(y))
    bool holds = false;
};

struct JustifiabilityReport {
    /// Where the numbers come from: the inequalities are evaluated on the
    /// argument marginals of a model distribution.
    std::string surface_note;
    bool p_justifiable = false;
    bool method2_legitimate = false;  // comparison verdict against the attack equations
    std::vector<JustifiabilityBound> bounds;
    /// Interior-probability spot checks (no attacker at probability 1, some
    /// attacker above 0); reported only, never enforced.
    std::vector<std::string> interior_notes;
};

/// p-justifiability: P(x) <= 1 - P(y) for every attacker y, and
/// P(x) >= 1 - sum of attacker probabilities. Weaker than the attack
/// equations; the report carries both verdicts.
JustifiabilityReport p_justifiable(const ArgumentationFramework& af, const ModelDistribution& d);

}  // namespace eqarg
