#include "eqarg/constraints.hpp"

#include <omp.h>

#include <stdexcept>

#include "eqarg/errors.hpp"
#include "eqarg/parallel.hpp"

namespace eqarg {

namespace {

void check_model_cap(const ArgumentationFramework& af, int cap) {
    int limit = std::min(cap, 20);
    if (af.size() > limit)
        throw SizeCapError("framework has " + std::to_string(af.size()) +
                           " arguments, above the model cap " + std::to_string(limit));
}

// coeff[m] = [m |= x] - [m |= all attackers false]; both 1 gives 0.
void fill_argument_row(const ArgumentationFramework& af, int x, ConstraintRow& row) {
    const std::uint32_t n_models = 1u << af.size();
    std::uint32_t att_mask = 0;
    for (int y : af.attackers(x)) att_mask |= 1u << y;
    row.coeff.assign(n_models, 0);
    for (std::uint32_t m = 0; m < n_models; ++m) {
        int c = ((m >> x) & 1u) ? 1 : 0;
        if ((m & att_mask) == 0) c -= 1;
        row.coeff[m] = static_cast<std::int8_t>(c);
    }
    row.rhs = 0;
    row.label = "eq:" + af.name(x);
}

ConstraintRow sum_row(const ArgumentationFramework& af) {
    ConstraintRow row;
    row.coeff.assign(std::size_t(1) << af.size(), 1);
    row.rhs = 1;
    row.label = "sum";
    return row;
}

}  // namespace

ConstraintSystem build_constraints_serial(const ArgumentationFramework& af, int cap) {
    check_model_cap(af, cap);
    ConstraintSystem cs;
    cs.atoms = AtomIndex::of(af);
    cs.rows.resize(af.size());
    for (int x = 0; x < af.size(); ++x) fill_argument_row(af, x, cs.rows[x]);
    cs.rows.push_back(sum_row(af));
    return cs;
}

ConstraintSystem build_constraints(const ArgumentationFramework& af, int cap) {
    check_model_cap(af, cap);
    ConstraintSystem cs;
    cs.atoms = AtomIndex::of(af);
    cs.rows.resize(af.size());
    const int workers = worker_count();
#pragma omp parallel for num_threads(workers) schedule(dynamic)
    for (int x = 0; x < af.size(); ++x) fill_argument_row(af, x, cs.rows[x]);
    cs.rows.push_back(sum_row(af));
    return cs;
}

LegitimacyReport check_legitimate(const ArgumentationFramework& af, const ModelDistribution& d) {
    if (!(d.atoms() == AtomIndex::of(af)))
        throw std::invalid_argument("distribution is not over this framework's arguments");
    LegitimacyReport report;
    report.legitimate = true;
    report.defects.reserve(af.size());
    for (int x = 0; x < af.size(); ++x) {
        Rational defect = d.marginal(x) - d.prob_all_false(af.attackers(x));
        if (defect != 0) report.legitimate = false;
        report.defects.push_back(defect);
    }
    return report;
}

}  // namespace eqarg
