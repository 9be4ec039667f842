#include "eqarg/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace eqarg {

Json framework_to_json(const ArgumentationFramework& af) {
    Json j;
    j["arguments"] = af.arguments();
    Json atts = Json::array();
    for (const auto& [s, t] : af.attacks()) atts.push_back({af.name(s), af.name(t)});
    j["attacks"] = atts;
    return j;
}

ArgumentationFramework framework_from_json(const Json& j) {
    ArgumentationFramework af;
    for (const auto& a : j.at("arguments")) af.add_argument(a.get<std::string>());
    for (const auto& att : j.at("attacks"))
        af.add_attack(att.at(0).get<std::string>(), att.at(1).get<std::string>());
    return af;
}

Json labelling_to_json(const ArgumentationFramework& af, const Labelling& lab) {
    Json labels;
    for (int i = 0; i < af.size(); ++i) labels[af.name(i)] = label_name(lab[i]);
    return Json{{"labels", labels}};
}

Labelling labelling_from_json(const ArgumentationFramework& af, const Json& j) {
    const Json& labels = j.contains("labels") ? j.at("labels") : j;
    Labelling lab;
    lab.labels.assign(af.size(), Label::Und);
    std::vector<bool> seen(af.size(), false);
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        int i = af.index(it.key());
        lab.labels[i] = label_from_name(it.value().get<std::string>());
        seen[i] = true;
    }
    for (int i = 0; i < af.size(); ++i)
        if (!seen[i])
            throw std::invalid_argument("labelling is not total: '" + af.name(i) + "' missing");
    return lab;
}

Json distribution_to_json(const ModelDistribution& d) {
    Json j;
    j["atoms"] = d.atoms().atoms();
    Json masses = Json::array();
    for (const auto& [bits, m] : d.masses())
        masses.push_back({{"model_bits", model_bits_str(bits, d.n_atoms())},
                          {"mass", rational_str(m)}});
    j["masses"] = masses;
    return j;
}

DistributionInput distribution_from_json(const AtomIndex& atoms, const Json& j,
                                         std::uint64_t max_den) {
    if (j.contains("atoms")) {
        std::vector<std::string> listed = j.at("atoms").get<std::vector<std::string>>();
        if (listed != atoms.atoms())
            throw std::invalid_argument("distribution atom list does not match the framework");
    }
    std::map<std::uint32_t, Rational> masses;
    bool converted = false;
    for (const auto& entry : j.at("masses")) {
        std::uint32_t bits =
            parse_model_bits(entry.at("model_bits").get<std::string>(), atoms.size());
        const Json& mass = entry.at("mass");
        Rational value;
        if (mass.is_string()) {
            auto parsed = parse_rational(mass.get<std::string>());
            if (!parsed)
                throw std::invalid_argument("cannot parse mass '" + mass.get<std::string>() + "'");
            value = *parsed;
        } else if (mass.is_number()) {
            value = rational_from_double_bounded(mass.get<double>(), max_den);
            converted = true;
        } else {
            throw std::invalid_argument("mass must be a rational string or a number");
        }
        if (masses.count(bits))
            throw std::invalid_argument("duplicate model '" +
                                        entry.at("model_bits").get<std::string>() + "'");
        masses.emplace(bits, std::move(value));
    }
    return {ModelDistribution(atoms, std::move(masses)), converted};
}

DistributionInput load_distribution(const ArgumentationFramework& af, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j = Json::parse(in);
    return distribution_from_json(AtomIndex::of(af), j);
}

Json solve_report_to_json(const EquationSystem& sys, const SolveResult& result, double snap,
                          const std::vector<bool>* preferred_flags) {
    const auto& af = sys.af;
    Json j;
    j["seeds_tried"] = result.seeds_tried;
    j["converged_seeds"] = result.converged;
    j["best_residual"] = result.best_residual;
    Json sols = Json::array();
    for (std::size_t k = 0; k < result.solutions.size(); ++k) {
        const auto& v = result.solutions[k];
        Json values;
        for (int i = 0; i < af.size(); ++i) values[af.name(i)] = v[i];
        Json entry;
        entry["values"] = values;
        entry["residual"] = residual(sys, v);
        entry["labelling"] = labelling_to_json(af, project(v, snap))["labels"];
        if (preferred_flags && k < preferred_flags->size())
            entry["is_preferred_candidate"] = (*preferred_flags)[k];
        sols.push_back(entry);
    }
    j["solutions"] = sols;
    return j;
}

Json method1_report_to_json(const ArgumentationFramework& af, const AtomProbability& ap,
                            const Method1Report& report) {
    Json probs, defects;
    for (int i = 0; i < af.size(); ++i) {
        probs[af.name(i)] = rational_str(ap.p[i]);
        defects[af.name(i)] = rational_str(report.defects[i]);
    }
    return Json{{"atom_probabilities", probs},
                {"legitimate", report.legitimate},
                {"defects", defects}};
}

Json legitimacy_to_json(const ArgumentationFramework& af, const LegitimacyReport& report) {
    Json defects;
    for (int i = 0; i < af.size(); ++i) defects[af.name(i)] = rational_str(report.defects[i]);
    return Json{{"legitimate", report.legitimate}, {"defects", defects}};
}

Json feasibility_to_json(const FeasibilityResult& result) {
    Json j;
    j["feasible"] = result.feasible();
    if (result.feasible()) {
        j["distribution"] = distribution_to_json(*result.distribution);
    } else if (result.certificate) {
        Json mult;
        for (const auto& [label, y] : result.certificate->multipliers)
            mult[label] = rational_str(y);
        j["certificate"] = Json{{"row_multipliers", mult}};
    }
    return j;
}

Json lemma5_to_json(const ArgumentationFramework& af, const Lemma5Report& report) {
    Json j;
    j["all_hold"] = report.all_hold;
    j["input_legitimate"] = report.input_legitimate;
    Json bounds = Json::array();
    for (const auto& b : report.bounds) {
        Json upper = Json::array();
        for (const auto& [y, slack] : b.upper_slack)
            upper.push_back({{"attacker", af.name(y)}, {"slack", rational_str(slack)}});
        bounds.push_back({{"argument", af.name(b.argument)},
                          {"holds", b.holds},
                          {"upper_bounds", upper},
                          {"lower_slack", rational_str(b.lower_slack)}});
    }
    j["bounds"] = bounds;
    return j;
}

Json lemma13_to_json(const ArgumentationFramework& af, const Lemma13Report& report) {
    Json j;
    j["all_hold"] = report.all_hold;
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"argument", af.name(c.argument)},
                          {"forced_out_applies", c.forced_out_applies},
                          {"forced_in_applies", c.forced_in_applies},
                          {"holds", c.holds}});
    j["checks"] = checks;
    return j;
}

Json justifiability_to_json(const ArgumentationFramework& af,
                            const JustifiabilityReport& report) {
    Json j;
    j["note"] = report.surface_note;
    j["p_justifiable"] = report.p_justifiable;
    j["method2_legitimate"] = report.method2_legitimate;
    Json bounds = Json::array();
    for (const auto& b : report.bounds) {
        Json upper = Json::array();
        for (const auto& [y, slack] : b.upper_slack)
            upper.push_back({{"attacker", af.name(y)}, {"slack", rational_str(slack)}});
        bounds.push_back({{"argument", af.name(b.argument)},
                          {"holds", b.holds},
                          {"upper_bounds", upper},
                          {"lower_slack", rational_str(b.lower_slack)}});
    }
    j["bounds"] = bounds;
    j["interior_notes"] = report.interior_notes;
    return j;
}

Json approx_report_to_json(const ArgumentationFramework& af, const ApproxReport& report) {
    Json j;
    j["n"] = report.n;
    j["preferred_case"] = report.preferred_case;
    j["exact"] = report.exact;
    j["epsilon_bound"] = rational_str(report.epsilon_bound);
    j["max_residual"] = rational_str(report.max_residual);
    j["bound_satisfied"] = report.bound_satisfied;
    Json residuals;
    for (int i = 0; i < af.size(); ++i) residuals[af.name(i)] = rational_str(report.residuals[i]);
    j["residuals"] = residuals;
    Json und;
    for (const auto& [name, value] : report.und_solution) und[name] = rational_str(value);
    j["und_solution"] = und;
    j["distribution"] = distribution_to_json(report.distribution);
    return j;
}

Json constraints_to_json(const ConstraintSystem& cs) {
    Json j;
    j["atoms"] = cs.atoms.atoms();
    Json rows = Json::array();
    for (const auto& row : cs.rows) {
        Json coeff = Json::array();
        for (auto c : row.coeff) coeff.push_back(static_cast<int>(c));
        rows.push_back({{"label", row.label}, {"rhs", rational_str(row.rhs)}, {"coeff", coeff}});
    }
    j["rows"] = rows;
    return j;
}

Json extensions_to_json(const ArgumentationFramework& af, const CompleteLabellings& ext) {
    Json j;
    j["count"] = ext.all.size();
    Json list = Json::array();
    for (std::size_t k = 0; k < ext.all.size(); ++k) {
        list.push_back({{"labels", labelling_to_json(af, ext.all[k])["labels"]},
                        {"preferred", static_cast<bool>(ext.preferred[k])},
                        {"grounded", static_cast<int>(k) == ext.grounded}});
    }
    j["complete"] = list;
    return j;
}

}  // namespace eqarg
