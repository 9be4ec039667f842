#include "eqarg/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "eqarg/errors.hpp"
#include "eqarg/parallel.hpp"

namespace eqarg {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t p = 1;
    for (int i = 0; i < exp; ++i) p *= base;
    return p;
}

void validate_config(const SolveConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
        throw std::invalid_argument("damping must lie in (0,1]");
    if (cfg.max_iterations < 1) throw std::invalid_argument("iteration budget must be positive");
    if (!(cfg.tolerance > 0.0) || !(cfg.residual_tolerance > 0.0) ||
        !(cfg.cluster_radius > 0.0))
        throw std::invalid_argument("tolerances and the cluster radius must be positive");
}

std::vector<Valuation> make_seeds(const EquationSystem& sys, const SolveConfig& cfg) {
    const int n = sys.size();
    SeedStrategy strategy = cfg.strategy;
    if (strategy == SeedStrategy::Auto)
        strategy = n <= cfg.labelling_seed_cap ? SeedStrategy::Labelling : SeedStrategy::Random;

    std::vector<Valuation> seeds;
    switch (strategy) {
        case SeedStrategy::Labelling: {
            if (n > cfg.labelling_seed_cap)
                throw SizeCapError("labelling seeding above cap " +
                                   std::to_string(cfg.labelling_seed_cap));
            const std::uint64_t total = pow_u64(3, n);
            static constexpr double kLevels[3] = {0.0, 0.5, 1.0};
            for (std::uint64_t code = 0; code < total; ++code) {
                Valuation v(n);
                std::uint64_t c = code;
                for (int i = 0; i < n; ++i) {
                    v[i] = kLevels[c % 3];
                    c /= 3;
                }
                seeds.push_back(std::move(v));
            }
            break;
        }
        case SeedStrategy::Grid: {
            const int g = std::max(2, cfg.grid_points);
            const std::uint64_t total = pow_u64(g, n);
            if (total > 500000) throw SizeCapError("grid seeding would need too many seeds");
            for (std::uint64_t code = 0; code < total; ++code) {
                Valuation v(n);
                std::uint64_t c = code;
                for (int i = 0; i < n; ++i) {
                    v[i] = static_cast<double>(c % g) / (g - 1);
                    c /= g;
                }
                seeds.push_back(std::move(v));
            }
            break;
        }
        case SeedStrategy::Random: {
            seeds.push_back(Valuation(n, 0.5));
            std::mt19937 rng(cfg.rng_seed);
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            for (int k = 0; k < cfg.random_seeds; ++k) {
                Valuation v(n);
                for (double& x : v) x = uni(rng);
                seeds.push_back(std::move(v));
            }
            break;
        }
        case SeedStrategy::Explicit:
            for (const auto& s : cfg.explicit_seeds) {
                if (static_cast<int>(s.size()) != n)
                    throw std::invalid_argument("explicit seed size does not match framework");
                seeds.push_back(s);
            }
            break;
        case SeedStrategy::Auto:
            break;  // resolved above
    }
    for (auto& s : seeds)
        for (int x = 0; x < n; ++x)
            if (sys.pinned[x]) s[x] = static_cast<double>(*sys.pinned[x]);
    return seeds;
}

// Row of the Jacobian of F(v) = v - rhs(v) for node x, written into jrow.
void jacobian_row(const EquationSystem& sys, const Valuation& v, int x, std::vector<double>& jrow) {
    const int n = sys.size();
    std::fill(jrow.begin(), jrow.end(), 0.0);
    jrow[x] = 1.0;
    if (sys.pinned[x]) return;
    const auto& att = sys.af.attackers(x);
    if (att.empty()) return;
    if (sys.kind == EquationKind::Inv) {
        for (int y : att) {
            double partial = sys.factor[x];
            for (int z : att)
                if (z != y) partial *= 1.0 - v[z];
            // d rhs / d v_y = -partial, F = v - rhs
            jrow[y] += partial;
        }
    } else {
        int best = att[0];
        for (int y : att)
            if (v[y] > v[best]) best = y;
        jrow[best] += 1.0;
    }
    (void)n;
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    out.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r][c] * out[c];
        out[r] = s / a[r][r];
    }
    return true;
}

struct SeedOutcome {
    Valuation v;
    double residual = 1.0;
};

SeedOutcome refine(const EquationSystem& sys, const SolveConfig& cfg, Valuation v) {
    const int n = sys.size();

    // Damped fixed-point phase.
    Valuation next(n);
    for (int it = 0; it < cfg.max_iterations; ++it) {
        double delta = 0.0;
        for (int x = 0; x < n; ++x) {
            next[x] = clamp01((1.0 - cfg.alpha) * v[x] + cfg.alpha * equation_rhs(sys, v, x));
            delta = std::max(delta, std::abs(next[x] - v[x]));
        }
        v.swap(next);
        if (delta <= cfg.tolerance) break;
    }

    // Newton polish on F(v) = v - rhs(v), clamped, with backtracking. Polishes
    // well below the iteration tolerance so reported values are accurate to
    // roughly the same order as the residual.
    const double polish_target = std::max(cfg.tolerance * 0.01, 2e-16);
    double res = residual(sys, v);
    std::vector<std::vector<double>> jac(n, std::vector<double>(n));
    std::vector<double> rhs_neg(n), step;
    for (int it = 0; it < 60 && res > polish_target; ++it) {
        for (int x = 0; x < n; ++x) {
            jacobian_row(sys, v, x, jac[x]);
            rhs_neg[x] = equation_rhs(sys, v, x) - v[x];  // -F
        }
        if (!solve_linear(jac, rhs_neg, step)) break;
        bool improved = false;
        for (double t = 1.0; t >= 1.0 / 32.0; t /= 2.0) {
            Valuation trial(n);
            for (int x = 0; x < n; ++x) trial[x] = clamp01(v[x] + t * step[x]);
            double tres = residual(sys, trial);
            if (tres < res) {
                v.swap(trial);
                res = tres;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return {std::move(v), res};
}

SeedOutcome run_seed(const EquationSystem& sys, const SolveConfig& cfg, Valuation v) {
    SeedOutcome best = refine(sys, cfg, std::move(v));

    // Degenerate roots can leave the iterate far from the solution while the
    // residual is already tiny (the defect vanishes to higher order along a
    // flat direction). Rounding near-boundary coordinates to exact 0/1 and
    // re-solving recovers the boundary root in those cases; the attempt is
    // kept only when it still meets solution quality.
    const double polish_target = std::max(cfg.tolerance * 0.01, 2e-16);
    for (double window : {1e-2, 1e-3, 1e-6}) {
        Valuation w = best.v;
        bool changed = false;
        for (int x = 0; x < sys.size(); ++x) {
            if (sys.pinned[x]) continue;
            if (w[x] != 0.0 && w[x] <= window) {
                w[x] = 0.0;
                changed = true;
            } else if (w[x] != 1.0 && w[x] >= 1.0 - window) {
                w[x] = 1.0;
                changed = true;
            }
        }
        if (!changed) continue;
        SeedOutcome sharp = refine(sys, cfg, std::move(w));
        if (sharp.residual <= std::max(best.residual, polish_target)) {
            best = std::move(sharp);
            break;
        }
    }
    return best;
}

double max_norm(const Valuation& a, const Valuation& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

SolveResult merge(const EquationSystem& sys, const SolveConfig& cfg,
                  std::vector<SeedOutcome> outcomes) {
    (void)sys;
    SolveResult result;
    result.seeds_tried = outcomes.size();
    result.best_residual = 1.0;
    std::vector<Valuation> accepted;
    for (auto& o : outcomes) {
        result.best_residual = std::min(result.best_residual, o.residual);
        if (o.residual <= cfg.residual_tolerance) {
            ++result.converged;
            accepted.push_back(std::move(o.v));
        }
    }
    std::sort(accepted.begin(), accepted.end());
    for (auto& v : accepted) {
        bool dup = false;
        for (const auto& kept : result.solutions)
            if (max_norm(v, kept) < cfg.cluster_radius) {
                dup = true;
                break;
            }
        if (!dup) result.solutions.push_back(std::move(v));
    }
    return result;
}

}  // namespace

SolveResult solve_serial(const EquationSystem& sys, const SolveConfig& cfg) {
    validate_config(cfg);
    auto seeds = make_seeds(sys, cfg);
    std::vector<SeedOutcome> outcomes(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i)
        outcomes[i] = run_seed(sys, cfg, std::move(seeds[i]));
    return merge(sys, cfg, std::move(outcomes));
}

SolveResult solve(const EquationSystem& sys, const SolveConfig& cfg) {
    validate_config(cfg);
    auto seeds = make_seeds(sys, cfg);
    std::vector<SeedOutcome> outcomes(seeds.size());
    const int workers = worker_count();
    if (workers <= 1 || seeds.size() < 8) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            outcomes[i] = run_seed(sys, cfg, std::move(seeds[i]));
    } else {
        const long count = static_cast<long>(seeds.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
        for (long i = 0; i < count; ++i) outcomes[i] = run_seed(sys, cfg, std::move(seeds[i]));
    }
    return merge(sys, cfg, std::move(outcomes));
}

Labelling project(const Valuation& v, double snap) {
    Labelling lab;
    lab.labels.reserve(v.size());
    for (double x : v) {
        if (x <= snap)
            lab.labels.push_back(Label::Out);
        else if (x >= 1.0 - snap)
            lab.labels.push_back(Label::In);
        else
            lab.labels.push_back(Label::Und);
    }
    return lab;
}

Valuation labelling_seed(const Labelling& lab) {
    Valuation v;
    v.reserve(lab.labels.size());
    for (Label l : lab.labels)
        v.push_back(l == Label::In ? 1.0 : l == Label::Out ? 0.0 : 0.5);
    return v;
}

std::vector<Labelling> exact_max_solutions(const EquationSystem& sys, int cap) {
    if (sys.kind != EquationKind::Max)
        throw std::invalid_argument("exact enumeration applies to Max-form systems");
    const int n = sys.size();
    if (n > cap) throw SizeCapError("exact enumeration above cap " + std::to_string(cap));

    // Values carried in half units {0,1,2}; equations hold exactly or not.
    std::vector<Labelling> found;
    std::vector<int> h(n);
    const std::uint64_t total = pow_u64(3, n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            h[i] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            int rhs;
            if (sys.pinned[x]) {
                rhs = 2 * *sys.pinned[x];
            } else {
                int m = 0;
                for (int y : sys.af.attackers(x)) m = std::max(m, h[y]);
                rhs = 2 - m;
            }
            ok = h[x] == rhs;
        }
        if (!ok) continue;
        Labelling lab;
        lab.labels.reserve(n);
        for (int i = 0; i < n; ++i)
            lab.labels.push_back(h[i] == 2 ? Label::In : h[i] == 0 ? Label::Out : Label::Und);
        found.push_back(std::move(lab));
    }
    return found;
}

std::vector<Labelling> exact_max_solutions(const ArgumentationFramework& af, int cap) {
    return exact_max_solutions(build_equations(af, EquationKind::Max), cap);
}

}  // namespace eqarg
