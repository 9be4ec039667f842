#include "eqarg/method1.hpp"

#include <stdexcept>

namespace eqarg {

AtomProbability atom_probability_from_doubles(const ArgumentationFramework& af,
                                              const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != af.size())
        throw std::invalid_argument("atom probability vector does not match framework");
    AtomProbability ap;
    ap.p.reserve(values.size());
    for (double v : values) {
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("atom probability outside [0,1]");
        ap.p.push_back(rational_from_double(v));
    }
    return ap;
}

ModelDistribution product_distribution(const ArgumentationFramework& af,
                                       const AtomProbability& ap) {
    const int n = af.size();
    if (static_cast<int>(ap.p.size()) != n)
        throw std::invalid_argument("atom probability vector does not match framework");
    for (const auto& q : ap.p)
        if (q < 0 || q > 1) throw std::invalid_argument("atom probability outside [0,1]");

    // Depth-first expansion, pruning branches whose partial product is 0.
    std::map<std::uint32_t, Rational> masses;
    struct Frame {
        std::uint32_t bits;
        Rational mass;
        int next;
    };
    std::vector<Frame> stack{{0u, Rational(1), 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.next == n) {
            masses[f.bits] = std::move(f.mass);
            continue;
        }
        const Rational& q = ap.p[f.next];
        if (q != 0) stack.push_back({f.bits | (1u << f.next), f.mass * q, f.next + 1});
        if (q != 1) stack.push_back({f.bits, f.mass * (1 - q), f.next + 1});
    }
    return ModelDistribution(AtomIndex::of(af), std::move(masses));
}

Method1Report is_method1_legitimate(const ArgumentationFramework& af, const AtomProbability& ap,
                                    const Rational& tol) {
    if (static_cast<int>(ap.p.size()) != af.size())
        throw std::invalid_argument("atom probability vector does not match framework");
    Method1Report report;
    report.legitimate = true;
    for (int x = 0; x < af.size(); ++x) {
        Rational rhs = 1;
        for (int y : af.attackers(x)) rhs *= 1 - ap.p[y];
        Rational defect = ap.p[x] - rhs;
        if (abs(defect) > tol) report.legitimate = false;
        report.defects.push_back(defect);
    }
    return report;
}

std::vector<AtomProbability> find_method1(const ArgumentationFramework& af,
                                          const SolveConfig& cfg) {
    auto result = solve(build_equations(af, EquationKind::Inv), cfg);
    std::vector<AtomProbability> out;
    out.reserve(result.solutions.size());
    for (const auto& v : result.solutions) out.push_back(atom_probability_from_doubles(af, v));
    return out;
}

}  // namespace eqarg
