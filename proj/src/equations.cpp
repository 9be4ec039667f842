#include "eqarg/equations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqarg {

EquationSystem build_equations(const ArgumentationFramework& af, EquationKind kind,
                               const std::map<std::string, int>& pins) {
    EquationSystem sys;
    sys.af = af;
    sys.kind = kind;
    sys.pinned.assign(af.size(), std::nullopt);
    sys.factor.assign(af.size(), 1.0);
    for (const auto& [name, value] : pins) {
        if (value != 0 && value != 1)
            throw std::invalid_argument("pin value for '" + name + "' must be 0 or 1");
        sys.pinned[af.index(name)] = value;
    }
    return sys;
}

double equation_rhs(const EquationSystem& sys, const Valuation& v, int x) {
    if (sys.pinned[x]) return static_cast<double>(*sys.pinned[x]);
    const auto& att = sys.af.attackers(x);
    if (sys.kind == EquationKind::Inv) {
        double p = sys.factor[x];
        for (int y : att) p *= 1.0 - v[y];
        return p;
    }
    double m = 0.0;
    for (int y : att) m = std::max(m, v[y]);
    return 1.0 - m;
}

std::vector<double> residual_vector(const EquationSystem& sys, const Valuation& v) {
    if (static_cast<int>(v.size()) != sys.size())
        throw std::invalid_argument("valuation size does not match framework");
    std::vector<double> r(sys.size());
    for (int x = 0; x < sys.size(); ++x) r[x] = std::abs(v[x] - equation_rhs(sys, v, x));
    return r;
}

double residual(const EquationSystem& sys, const Valuation& v) {
    double worst = 0.0;
    for (double r : residual_vector(sys, v)) worst = std::max(worst, r);
    return worst;
}

}  // namespace eqarg
