#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqarg/af.hpp"

namespace eqarg {

/// Candidate solution: one value in [0,1] per argument, in declaration order.
using Valuation = std::vector<double>;

enum class EquationKind { Inv, Max };

/// Per-node numeric equations derived from the attack relation.
///   Inv: x = factor(x) * prod over attackers (1 - y); unattacked x = 1.
///   Max: x = 1 - max over attackers y; unattacked x = 1.
/// Pinned nodes contribute the equation x = pin (0 or 1) instead of their own
/// update but still appear in other nodes' right-hand sides. The optional
/// exogenous factor models an external attacker of fixed value v as the
/// multiplier (1 - v) without adding a graph node.
struct EquationSystem {
    ArgumentationFramework af;
    EquationKind kind = EquationKind::Inv;
    std::vector<std::optional<int>> pinned;  // 0 or 1 per node, or unset
    std::vector<double> factor;              // multiplier in (0,1], Inv only

    int size() const { return af.size(); }
};

EquationSystem build_equations(const ArgumentationFramework& af, EquationKind kind,
                               const std::map<std::string, int>& pins = {});

/// Right-hand side of node x's equation at v.
double equation_rhs(const EquationSystem& sys, const Valuation& v, int x);

/// Max-norm defect: max over nodes of |v(x) - rhs(x)|.
double residual(const EquationSystem& sys, const Valuation& v);
std::vector<double> residual_vector(const EquationSystem& sys, const Valuation& v);

}  // namespace eqarg
