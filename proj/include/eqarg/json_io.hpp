#pragma once

#include <json.hpp>

#include "eqarg/af.hpp"
#include "eqarg/constraints.hpp"
#include "eqarg/constructions.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/labelling.hpp"
#include "eqarg/method1.hpp"
#include "eqarg/method2.hpp"
#include "eqarg/simplex.hpp"
#include "eqarg/solver.hpp"
#include "eqarg/thimm.hpp"

namespace eqarg {

using Json = nlohmann::ordered_json;

Json framework_to_json(const ArgumentationFramework& af);
ArgumentationFramework framework_from_json(const Json& j);

Json labelling_to_json(const ArgumentationFramework& af, const Labelling& lab);
Labelling labelling_from_json(const ArgumentationFramework& af, const Json& j);

Json distribution_to_json(const ModelDistribution& d);

struct DistributionInput {
    ModelDistribution distribution;
    bool converted_floats = false;  // some masses arrived as floats
};

/// Reads {"masses": [{"model_bits": "...", "mass": "1/3" | 0.25}, ...]}.
/// String masses are parsed exactly; numeric masses are converted to the
/// best rational with denominator <= max_den and the conversion is flagged.
DistributionInput distribution_from_json(const AtomIndex& atoms, const Json& j,
                                         std::uint64_t max_den = 1000000000ull);
DistributionInput load_distribution(const ArgumentationFramework& af, const std::string& path);

Json solve_report_to_json(const EquationSystem& sys, const SolveResult& result, double snap,
                          const std::vector<bool>* preferred_flags = nullptr);
Json method1_report_to_json(const ArgumentationFramework& af, const AtomProbability& ap,
                            const Method1Report& report);
Json legitimacy_to_json(const ArgumentationFramework& af, const LegitimacyReport& report);
Json feasibility_to_json(const FeasibilityResult& result);
Json lemma5_to_json(const ArgumentationFramework& af, const Lemma5Report& report);
Json lemma13_to_json(const ArgumentationFramework& af, const Lemma13Report& report);
Json justifiability_to_json(const ArgumentationFramework& af, const JustifiabilityReport& report);
Json approx_report_to_json(const ArgumentationFramework& af, const ApproxReport& report);
Json constraints_to_json(const ConstraintSystem& cs);
Json extensions_to_json(const ArgumentationFramework& af, const CompleteLabellings& ext);

}  // namespace eqarg
