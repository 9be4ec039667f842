#pragma once

#include <map>
#include <random>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"

namespace eqarg::testing {

/// Random framework over arguments x0..x(n-1); every directed edge (including
/// self-loops) is present with probability edge_p.
inline ArgumentationFramework random_framework(std::mt19937& rng, int n, double edge_p) {
    ArgumentationFramework af;
    for (int i = 0; i < n; ++i) af.add_argument("x" + std::to_string(i));
    std::bernoulli_distribution edge(edge_p);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (edge(rng)) af.add_attack(s, t);
    return af;
}

inline ArgumentationFramework random_framework(std::mt19937& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::uniform_real_distribution<double> density(0.15, 0.55);
    return random_framework(rng, size(rng), density(rng));
}

/// Random exact distribution: small integer weights normalized by their sum.
inline ModelDistribution random_distribution(std::mt19937& rng,
                                             const ArgumentationFramework& af) {
    const std::uint32_t n_models = 1u << af.size();
    std::uniform_int_distribution<int> weight(0, 6);
    std::vector<long> w(n_models);
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) {
        w[0] = 1;
        total = 1;
    }
    std::map<std::uint32_t, Rational> masses;
    for (std::uint32_t m = 0; m < n_models; ++m) {
        if (!w[m]) continue;
        Rational q(w[m], total);
        q.canonicalize();
        masses.emplace(m, q);
    }
    return ModelDistribution(AtomIndex::of(af), std::move(masses));
}

}  // namespace eqarg::testing
