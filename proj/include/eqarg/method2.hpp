#pragma once

#include <string>
#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/constraints.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/labelling.hpp"
#include "eqarg/simplex.hpp"

namespace eqarg {

/// Probabilistic labelling of a legitimate distribution: an argument is in
/// when the disjunction of its attackers has probability 0, out when it has
/// probability 1, und otherwise. Unattacked arguments are in (empty
/// disjunction). Throws std::invalid_argument for illegitimate input.
Labelling gr_labelling(const ArgumentationFramework& af, const ModelDistribution& d);

/// Two-model distribution realizing a complete labelling exactly: mass 1/2 on
/// the model with all und arguments true and 1/2 on the one with all und
/// arguments false (in arguments true, out arguments false in both). The two
/// coincide when nothing is und. Throws for illegal labellings.
ModelDistribution plambda_construct(const ArgumentationFramework& af, const Labelling& lab);

struct Lemma5Bound {
    int argument;
    std::vector<std::pair<int, Rational>> upper_slack;  // attacker, (1-P(y)) - P(x)
    Rational lower_slack;                               // P(x) - (1 - sum P(y))
    bool holds = false;
};

struct Lemma5Report {
    bool all_hold = false;
    bool input_legitimate = false;  // bounds are only guaranteed for legitimate input
    std::vector<Lemma5Bound> bounds;
};

/// Necessary bounds for the attack equations: P(x) <= 1 - P(y) per attacker
/// and P(x) >= 1 - sum of attacker probabilities. Applies them to any
/// distribution and flags whether the input was legitimate.
Lemma5Report lemma5_bounds(const ArgumentationFramework& af, const ModelDistribution& d);

struct Lemma13Check {
    int argument;
    bool forced_out_applies = false;  // some attacker has probability 1
    bool forced_in_applies = false;   // every attacker has probability 0
    bool holds = true;
};

struct Lemma13Report {
    bool all_hold = false;
    std::vector<Lemma13Check> checks;
};

/// For legitimate distributions only (throws otherwise): an attacker with
/// probability 1 forces P(x) = 0, and all attackers at probability 0 force
/// P(x) = 1.
Lemma13Report lemma13_check(const ArgumentationFramework& af, const ModelDistribution& d);

/// Argument-to-formula instantiation of a framework.
struct InstantiatedNetwork {
    ArgumentationFramework af;
    std::vector<Formula> instantiation;  // one formula per argument

    static InstantiatedNetwork identity(const ArgumentationFramework& af);
};

struct InstantiationResult {
    AtomIndex universe;           // atoms of the instantiation, first-occurrence order
    std::vector<Formula> theory;  // the induced biconditional theory
    ConstraintSystem constraints;
    FeasibilityResult result;
};

/// Lifts the attack equations to formula probabilities: for every argument x,
/// P(I(x)) = P(conjunction of negated attacker formulas), as equality rows
/// over the models of the instantiation's atom universe, then searches for a
/// satisfying distribution.
InstantiationResult instantiate_and_solve(const InstantiatedNetwork& net, int cap = 16);

}  // namespace eqarg
