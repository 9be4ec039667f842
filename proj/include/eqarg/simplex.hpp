#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqarg/constraints.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/formula.hpp"

namespace eqarg {

/// Extra equality row P(formula) = target.
struct FormulaPin {
    Formula formula;
    Rational target;
};

/// Farkas-style witness of infeasibility: multipliers y per row such that
/// y'A <= 0 on every model column while y'b > 0.
struct InfeasibilityCertificate {
    std::vector<std::pair<std::string, Rational>> multipliers;
};

struct FeasibilityResult {
    std::optional<ModelDistribution> distribution;
    std::optional<InfeasibilityCertificate> certificate;

    bool feasible() const { return distribution.has_value(); }
};

/// Exact-rational phase-1 simplex with Bland's rule over the given equality
/// system (variables are the model masses, nonnegative). Returns a basic
/// feasible solution or a verified infeasibility certificate.
FeasibilityResult solve_feasibility(const ConstraintSystem& cs);

/// Attack-equation feasibility for a framework, with optional pinned formula
/// probabilities as extra rows.
FeasibilityResult find_distribution(const ArgumentationFramework& af,
                                    const std::vector<FormulaPin>& pins = {}, int cap = 16);

/// Up to max_count distinct basic feasible solutions, found by deterministic
/// pivoting from the phase-1 vertex. Best-effort sampling of the polytope's
/// vertices, not a complete enumeration. Requires |S| <= 8.
std::vector<ModelDistribution> enumerate_vertices(const ArgumentationFramework& af,
                                                  std::size_t max_count = 64);

/// Same exploration on an arbitrary constraint system.
std::vector<ModelDistribution> enumerate_feasible_vertices(const ConstraintSystem& cs,
                                                           std::size_t max_count);

}  // namespace eqarg
