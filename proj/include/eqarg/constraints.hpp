#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/rational.hpp"

namespace eqarg {

/// One linear equality over the model masses: sum_j coeff[j] * mass_j = rhs.
struct ConstraintRow {
    std::string label;
    std::vector<std::int8_t> coeff;  // one entry per model (2^n)
    Rational rhs;

    bool operator==(const ConstraintRow& other) const = default;
};

/// The attack equations P(x) = P(all attackers false) as signed incidence
/// rows over the model space, plus the normalization row.
struct ConstraintSystem {
    AtomIndex atoms;
    std::vector<ConstraintRow> rows;  // per-argument rows, then "sum"

    std::size_t n_models() const { return std::size_t(1) << atoms.size(); }
};

/// Builds the |S|+1 equality rows over 2^|S| variables. Throws SizeCapError
/// above min(cap, 20). Rows are built in parallel; output does not depend on
/// the worker count.
ConstraintSystem build_constraints(const ArgumentationFramework& af, int cap = 16);
ConstraintSystem build_constraints_serial(const ArgumentationFramework& af, int cap = 16);

struct LegitimacyReport {
    bool legitimate = false;
    std::vector<Rational> defects;  // per argument: P(x) - P(all attackers false)
};

/// Exact check of the attack equations for a distribution over the
/// framework's arguments.
LegitimacyReport check_legitimate(const ArgumentationFramework& af, const ModelDistribution& d);

}  // namespace eqarg
