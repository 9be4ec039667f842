#pragma once

#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/rational.hpp"
#include "eqarg/solver.hpp"

namespace eqarg {

/// Independent probability per argument, aligned with declaration order.
/// Values are exact rationals; floats entering from the solver are carried
/// as their exact binary value.
struct AtomProbability {
    std::vector<Rational> p;
};

AtomProbability atom_probability_from_doubles(const ArgumentationFramework& af,
                                              const std::vector<double>& values);

/// Product distribution over all models: mass of a model is the product of
/// p(q) for its true atoms and 1-p(q) for its false atoms. The masses sum to
/// exactly 1 by construction; nothing is renormalized.
ModelDistribution product_distribution(const ArgumentationFramework& af,
                                       const AtomProbability& ap);

struct Method1Report {
    bool legitimate = false;
    std::vector<Rational> defects;  // per argument: p(x) - prod (1 - p(y))
};

/// Syntactic legitimacy: the atom probabilities solve the product-form attack
/// equations within tol (tol = 0 checks exactly).
Method1Report is_method1_legitimate(const ArgumentationFramework& af, const AtomProbability& ap,
                                    const Rational& tol = Rational(1, 1000000000));

/// All atom probabilities found by the product-form equation solver.
std::vector<AtomProbability> find_method1(const ArgumentationFramework& af,
                                          const SolveConfig& cfg = {});

}  // namespace eqarg
