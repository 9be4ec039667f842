// Compares the serial reference implementations against the OpenMP kernels:
// labelling-space enumeration, multi-start equation solving, and constraint
// row construction.

#include <chrono>
#include <cstdio>
#include <random>

#include "eqarg/constraints.hpp"
#include "eqarg/labelling.hpp"
#include "eqarg/parallel.hpp"
#include "eqarg/solver.hpp"

using namespace eqarg;
using clock_type = std::chrono::steady_clock;

namespace {

ArgumentationFramework random_framework(std::mt19937& rng, int n, double edge_p) {
    ArgumentationFramework af;
    for (int i = 0; i < n; ++i) af.add_argument("x" + std::to_string(i));
    std::bernoulli_distribution edge(edge_p);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (edge(rng)) af.add_attack(s, t);
    return af;
}

template <typename F>
double time_ms(F&& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("workers: %d\n", worker_count());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    std::mt19937 rng(12345);

    {
        auto af = random_framework(rng, 12, 0.25);
        CompleteLabellings serial_out, parallel_out;
        double s = time_ms([&] { serial_out = enumerate_complete_serial(af); });
        double p = time_ms([&] { parallel_out = enumerate_complete(af); });
        if (serial_out.all != parallel_out.all) {
            std::printf("enumeration outputs differ!\n");
            return 1;
        }
        row("labelling enumeration n=12", s, p);
    }

    {
        auto af = random_framework(rng, 7, 0.35);
        auto sys = build_equations(af, EquationKind::Inv);
        SolveConfig cfg;
        cfg.labelling_seed_cap = 7;
        SolveResult serial_out, parallel_out;
        double s = time_ms([&] { serial_out = solve_serial(sys, cfg); });
        double p = time_ms([&] { parallel_out = solve(sys, cfg); });
        if (serial_out.solutions != parallel_out.solutions) {
            std::printf("solver outputs differ!\n");
            return 1;
        }
        row("multi-start solve 3^7 seeds", s, p);
    }

    {
        auto af = random_framework(rng, 16, 0.2);
        ConstraintSystem serial_out, parallel_out;
        double s = time_ms([&] { serial_out = build_constraints_serial(af); });
        double p = time_ms([&] { parallel_out = build_constraints(af); });
        if (!(serial_out.rows == parallel_out.rows)) {
            std::printf("constraint rows differ!\n");
            return 1;
        }
        row("constraint rows n=16", s, p);
    }

    return 0;
}
