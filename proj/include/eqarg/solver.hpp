#pragma once

#include <cstddef>
#include <vector>

#include "eqarg/equations.hpp"
#include "eqarg/labelling.hpp"

namespace eqarg {

enum class SeedStrategy {
    Auto,       // labelling seeds up to the cap, random above it
    Labelling,  // all 3^n vectors over {0, 1/2, 1}
    Grid,       // grid_points^n vectors with evenly spaced coordinates
    Random,     // random_seeds uniform vectors plus the all-1/2 seed
    Explicit,   // exactly explicit_seeds
};

struct SolveConfig {
    double alpha = 0.5;               // damping of the fixed-point iteration
    int max_iterations = 2000;
    double tolerance = 1e-12;         // iteration / polish target
    double residual_tolerance = 1e-9; // acceptance threshold for a solution
    double cluster_radius = 1e-6;     // max-norm dedup distance
    SeedStrategy strategy = SeedStrategy::Auto;
    int labelling_seed_cap = 9;       // Auto switches to Random above this
    int grid_points = 5;
    int random_seeds = 64;
    unsigned rng_seed = 20140532;
    std::vector<Valuation> explicit_seeds;
};

struct SolveResult {
    /// Accepted solutions, lexicographically sorted, pairwise at least
    /// cluster_radius apart in max-norm. All entries lie in [0,1] and have
    /// residual <= residual_tolerance.
    std::vector<Valuation> solutions;
    double best_residual = 0.0;  // smallest final residual over all seeds
    std::size_t seeds_tried = 0;
    std::size_t converged = 0;
};

/// Damped fixed-point iteration x <- (1-alpha) x + alpha rhs(x), clamped to
/// [0,1] each step, followed by Newton polishing. Multi-start across seeds;
/// the merged output is identical for any worker count.
SolveResult solve(const EquationSystem& sys, const SolveConfig& cfg = {});
/// Single-threaded reference implementation with identical output.
SolveResult solve_serial(const EquationSystem& sys, const SolveConfig& cfg = {});

/// Valuation -> labelling: 1 -> in, 0 -> out, interior -> und. Values within
/// `snap` of the boundary count as exact.
Labelling project(const Valuation& v, double snap = 1e-9);

/// All exact {0, 1/2, 1} solutions of the Max-form equations, enumerated in
/// exact arithmetic (no floats). Throws SizeCapError above the cap.
std::vector<Labelling> exact_max_solutions(const EquationSystem& sys, int cap = 14);
std::vector<Labelling> exact_max_solutions(const ArgumentationFramework& af, int cap = 14);

/// Seed vector of a labelling: in -> 1, out -> 0, und -> 1/2.
Valuation labelling_seed(const Labelling& lab);

}  // namespace eqarg
