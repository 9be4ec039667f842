#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/labelling.hpp"
#include "eqarg/rational.hpp"
#include "eqarg/solver.hpp"

namespace eqarg {

enum class AugmentMode {
    SelfLoop,  // fresh self-attacking u attacks every und argument
    Chain,     // fresh sink u, fed by n self-attacking nodes, attacks every und argument
};

struct AugmentationResult {
    ArgumentationFramework af;
    std::string fresh;   // the added node u
    Labelling extended;  // input labelling plus und for every added node
};

/// Forces the und arguments of a legal labelling to stay undecided by
/// attacking them from a fresh undecided node.
AugmentationResult augment_und(const ArgumentationFramework& af, const Labelling& lab,
                               AugmentMode mode, int chain_n = 1);

/// n self-attacking nodes u1..un all attacking a sink u. The product-form
/// equations give every ui the value 1/2 and the sink the value 2^-n.
ArgumentationFramework un_chain(int n);

struct ApproxReport {
    int n = 1;
    bool preferred_case = false;  // solved directly instead of via the und part
    bool exact = false;           // solution values verified as exact rationals
    Rational epsilon_bound;       // 2^-n plus the solver allowance
    Rational max_residual;        // largest attack-equation defect of the distribution
    bool bound_satisfied = false;
    std::vector<Rational> residuals;  // per argument, computed from the distribution
    std::vector<std::pair<std::string, Rational>> und_solution;  // includes the u value
    ModelDistribution distribution;
};

/// Builds a product-form distribution whose labelling matches `lab`:
/// preferred labellings are realized by a direct equation solution; for
/// non-preferred ones the und arguments are re-solved with an exogenous
/// attacker of value 2^-n, and the distribution concentrates on models fixing
/// the in/out arguments. Residuals shrink like 2^-n.
ApproxReport approximate_plambda(const ArgumentationFramework& af, const Labelling& lab, int n,
                                 const SolveConfig& cfg = {}, int cap = 16);

}  // namespace eqarg
