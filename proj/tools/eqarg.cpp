#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eqarg/af.hpp"
#include "eqarg/constraints.hpp"
#include "eqarg/constructions.hpp"
#include "eqarg/errors.hpp"
#include "eqarg/gallery.hpp"
#include "eqarg/json_io.hpp"
#include "eqarg/method1.hpp"
#include "eqarg/method2.hpp"
#include "eqarg/simplex.hpp"
#include "eqarg/solver.hpp"
#include "eqarg/thimm.hpp"

namespace {

using namespace eqarg;

struct Output {
    std::string path;  // empty = stdout
    std::string format = "json";

    void emit(const Json& j, const std::string& text) const {
        const std::string& body = format == "text" ? text : j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write '" + path + "'");
            out << body;
        }
    }

    void emit_raw(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write '" + path + "'");
            out << body;
        }
    }
};

Rational parse_rational_or_throw(const std::string& s) {
    if (auto q = parse_rational(s)) return *q;
    throw std::invalid_argument("cannot parse rational '" + s + "'");
}

std::vector<FormulaPin> parse_pins(const std::vector<std::string>& raw) {
    std::vector<FormulaPin> pins;
    for (const auto& spec : raw) {
        auto eq = spec.rfind('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("pin must look like '<formula>=<rational>', got '" +
                                        spec + "'");
        pins.push_back(
            {parse_formula(spec.substr(0, eq)), parse_rational_or_throw(spec.substr(eq + 1))});
    }
    return pins;
}

// Preferred flags for projected solutions via the brute-force oracle, when
// the framework is small enough to enumerate.
std::optional<std::vector<bool>> preferred_flags(const ArgumentationFramework& af,
                                                 const SolveResult& result, double snap) {
    if (af.size() > 14) return std::nullopt;
    auto ext = enumerate_complete(af);
    std::vector<bool> flags;
    for (const auto& v : result.solutions) {
        Labelling lab = project(v, snap);
        bool flag = false;
        for (std::size_t k = 0; k < ext.all.size(); ++k)
            if (ext.all[k] == lab) flag = ext.preferred[k];
        flags.push_back(flag);
    }
    return flags;
}

std::string solve_text(const EquationSystem& sys, const SolveResult& result, double snap) {
    std::ostringstream out;
    out << result.solutions.size() << " solution(s), best residual " << result.best_residual
        << "\n";
    for (const auto& v : result.solutions) {
        for (int i = 0; i < sys.af.size(); ++i) out << sys.af.name(i) << "=" << v[i] << " ";
        out << " residual=" << residual(sys, v)
            << "  labelling: " << labelling_str(sys.af, project(v, snap)) << "\n";
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"equational probabilistic semantics for argumentation frameworks"};
    app.require_subcommand(1);

    SolveConfig cfg;
    std::string out_path, format = "json";
    app.add_option("--tol", cfg.residual_tolerance, "solver residual tolerance");
    app.add_option("--alpha", cfg.alpha, "fixed-point damping factor");
    app.add_option("--max-iter", cfg.max_iterations, "fixed-point iteration budget");
    app.add_option("--seed", cfg.rng_seed, "random seed for the fallback seeding");
    app.add_option("-o,--output", out_path, "write the report to a file instead of stdout");
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve the numeric attack equations");
    solve_cmd->fallthrough();
    std::string kind_str, af_path;
    bool exact = false;
    int solve_cap = 9;
    solve_cmd->add_option("kind", kind_str, "inv or max")->required()->check(
        CLI::IsMember({"inv", "max"}));
    solve_cmd->add_option("af", af_path, ".af file")->required();
    solve_cmd->add_flag("--exact", exact, "max only: enumerate exact {0,1/2,1} solutions");
    solve_cmd->add_option("--cap", solve_cap, "labelling-seed cap (3^cap seeds)");

    // extensions
    auto* ext_cmd = app.add_subcommand("extensions", "enumerate complete labellings");
    ext_cmd->fallthrough();
    std::string ext_af;
    int ext_cap = 14;
    ext_cmd->add_option("af", ext_af)->required();
    ext_cmd->add_option("--cap", ext_cap, "enumeration cap on the argument count");

    // method1
    auto* m1_cmd = app.add_subcommand("method1", "independent atom probabilities");
    m1_cmd->fallthrough();
    std::string m1_action, m1_af, m1_probs;
    bool m1_exact = false;
    m1_cmd->add_option("action", m1_action)->required()->check(CLI::IsMember({"find", "check"}));
    m1_cmd->add_option("af", m1_af)->required();
    m1_cmd->add_option("probs", m1_probs, "check: 'a=1/2,b=0.25' or a JSON file of that map");
    m1_cmd->add_flag("--exact", m1_exact, "check with zero tolerance");

    // method2
    auto* m2_cmd = app.add_subcommand("method2", "distributions over classical models");
    m2_cmd->fallthrough();
    std::string m2_action, m2_af, m2_dist, m2_label;
    std::vector<std::string> m2_pins;
    int m2_cap = 16;
    std::size_t m2_count = 16;
    m2_cmd->add_option("action", m2_action)
        ->required()
        ->check(CLI::IsMember({"check", "find", "vertices", "plambda", "gr-label", "constraints"}));
    m2_cmd->add_option("af", m2_af)->required();
    m2_cmd->add_option("dist", m2_dist, "distribution JSON (check / gr-label)");
    m2_cmd->add_option("--pin", m2_pins, "extra row '<formula>=<rational>' (find)");
    m2_cmd->add_option("--label", m2_label, "labelling 'a=in,b=out,...' (plambda)");
    m2_cmd->add_option("--cap", m2_cap, "model cap (find/check)");
    m2_cmd->add_option("--count", m2_count, "vertex budget (vertices)");

    // approximate
    auto* ap_cmd = app.add_subcommand("approximate", "product-form approximation of a labelling");
    ap_cmd->fallthrough();
    std::string ap_af, ap_label;
    int ap_n = 1;
    ap_cmd->add_option("af", ap_af)->required();
    ap_cmd->add_option("--label", ap_label, "labelling 'a=in,...'")->required();
    ap_cmd->add_option("--n", ap_n, "external attacker strength exponent (value 2^-n)");

    // thimm
    auto* th_cmd = app.add_subcommand("thimm", "p-justifiability report for a distribution");
    th_cmd->fallthrough();
    std::string th_af, th_dist;
    th_cmd->add_option("af", th_af)->required();
    th_cmd->add_option("dist", th_dist)->required();

    // instantiate
    auto* in_cmd = app.add_subcommand("instantiate", "argument-to-formula instantiation");
    in_cmd->fallthrough();
    std::string in_af, in_map;
    int in_cap = 16;
    in_cmd->add_option("af", in_af)->required();
    in_cmd->add_option("map", in_map, "JSON file: {\"x\": \"a1 | a2\", ...}")->required();
    in_cmd->add_option("--cap", in_cap, "model cap on the atom universe");

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "GraphViz rendering of a framework");
    dot_cmd->fallthrough();
    std::string dot_af, dot_values;
    dot_cmd->add_option("af", dot_af)->required();
    dot_cmd->add_option("--values", dot_values, "node decorations 'a=0.25,b=1'");

    // gallery
    auto* gal_cmd = app.add_subcommand("gallery", "write and verify the example gallery");
    gal_cmd->fallthrough();
    std::string gal_dir;
    gal_cmd->add_option("dir", gal_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);
    Output output{out_path, format};
    // The iteration target tracks the requested residual tolerance three
    // orders below it, so loosening --tol genuinely loosens the solver.
    cfg.tolerance = cfg.residual_tolerance * 1e-3;

    if (*solve_cmd) {
        auto af = load_af(af_path);
        cfg.labelling_seed_cap = solve_cap;
        auto sys = build_equations(af, kind_str == "inv" ? EquationKind::Inv : EquationKind::Max);
        if (exact) {
            if (kind_str != "max")
                throw std::invalid_argument("--exact applies to the max kind only");
            auto sols = exact_max_solutions(sys);
            Json j;
            j["exact_solutions"] = Json::array();
            std::ostringstream text;
            text << sols.size() << " exact solution(s)\n";
            for (const auto& lab : sols) {
                Json values;
                for (int i = 0; i < af.size(); ++i)
                    values[af.name(i)] = lab[i] == Label::In    ? "1"
                                         : lab[i] == Label::Out ? "0"
                                                                : "1/2";
                j["exact_solutions"].push_back(
                    {{"values", values}, {"labelling", labelling_to_json(af, lab)["labels"]}});
                text << labelling_str(af, lab) << "\n";
            }
            output.emit(j, text.str());
            return 0;
        }
        auto result = solve(sys, cfg);
        auto flags = preferred_flags(af, result, cfg.residual_tolerance);
        output.emit(solve_report_to_json(sys, result, cfg.residual_tolerance,
                                         flags ? &*flags : nullptr),
                    solve_text(sys, result, cfg.residual_tolerance));
        if (result.solutions.empty()) {
            std::cerr << "no solution converged (best residual " << result.best_residual << ")\n";
            return 1;
        }
        return 0;
    }

    if (*ext_cmd) {
        auto af = load_af(ext_af);
        auto ext = enumerate_complete(af, ext_cap);
        std::ostringstream text;
        text << ext.all.size() << " complete labelling(s)\n";
        for (std::size_t k = 0; k < ext.all.size(); ++k) {
            text << labelling_str(af, ext.all[k]);
            if (ext.preferred[k]) text << "  [preferred]";
            if (ext.grounded == static_cast<int>(k)) text << "  [grounded]";
            text << "\n";
        }
        output.emit(extensions_to_json(af, ext), text.str());
        return 0;
    }

    if (*m1_cmd) {
        auto af = load_af(m1_af);
        if (m1_action == "find") {
            auto found = find_method1(af, cfg);
            Json j = Json::array();
            std::ostringstream text;
            for (const auto& ap : found) {
                auto report = is_method1_legitimate(af, ap);
                j.push_back(method1_report_to_json(af, ap, report));
                for (int i = 0; i < af.size(); ++i)
                    text << af.name(i) << "=" << to_double(ap.p[i]) << " ";
                text << (report.legitimate ? " [legitimate]" : " [not legitimate]") << "\n";
            }
            output.emit(j, text.str());
            return found.empty() ? 1 : 0;
        }
        // check
        AtomProbability ap;
        ap.p.assign(af.size(), Rational(0));
        std::vector<bool> seen(af.size(), false);
        std::string spec = m1_probs;
        if (!spec.empty() && spec.find('=') == std::string::npos) {
            std::ifstream in(spec);
            if (!in) throw std::runtime_error("cannot open '" + spec + "'");
            Json j = Json::parse(in);
            std::ostringstream flat;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) flat << ",";
                first = false;
                flat << it.key() << "="
                     << (it.value().is_string() ? it.value().get<std::string>()
                                                : it.value().dump());
            }
            spec = flat.str();
        }
        std::istringstream items(spec);
        std::string item;
        while (std::getline(items, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("expected '<arg>=<rational>', got '" + item + "'");
            int i = af.index(item.substr(0, eq));
            ap.p[i] = parse_rational_or_throw(item.substr(eq + 1));
            seen[i] = true;
        }
        for (int i = 0; i < af.size(); ++i)
            if (!seen[i])
                throw std::invalid_argument("no probability given for '" + af.name(i) + "'");
        Rational tol = m1_exact ? Rational(0) : rational_from_double(cfg.residual_tolerance);
        auto report = is_method1_legitimate(af, ap, tol);
        std::ostringstream text;
        text << (report.legitimate ? "legitimate" : "not legitimate") << "\n";
        for (int i = 0; i < af.size(); ++i)
            text << af.name(i) << ": defect " << rational_str(report.defects[i]) << "\n";
        output.emit(method1_report_to_json(af, ap, report), text.str());
        return report.legitimate ? 0 : 1;
    }

    if (*m2_cmd) {
        auto af = load_af(m2_af);
        if (m2_action == "check" || m2_action == "gr-label") {
            if (m2_dist.empty()) throw std::invalid_argument("a distribution JSON is required");
            auto input = load_distribution(af, m2_dist);
            if (m2_action == "check") {
                auto report = check_legitimate(af, input.distribution);
                Json j = legitimacy_to_json(af, report);
                if (input.converted_floats) j["converted_floats"] = true;
                std::ostringstream text;
                text << (report.legitimate ? "legitimate" : "not legitimate") << "\n";
                for (int i = 0; i < af.size(); ++i)
                    text << af.name(i) << ": defect " << rational_str(report.defects[i]) << "\n";
                output.emit(j, text.str());
                return report.legitimate ? 0 : 1;
            }
            auto lab = gr_labelling(af, input.distribution);
            output.emit(labelling_to_json(af, lab), labelling_str(af, lab) + "\n");
            return 0;
        }
        if (m2_action == "find") {
            auto result = find_distribution(af, parse_pins(m2_pins), m2_cap);
            std::ostringstream text;
            if (result.feasible())
                text << "feasible\n" << distribution_to_json(*result.distribution).dump(2) << "\n";
            else
                text << "infeasible\n";
            output.emit(feasibility_to_json(result), text.str());
            return result.feasible() ? 0 : 1;
        }
        if (m2_action == "vertices") {
            auto vertices = enumerate_vertices(af, m2_count);
            Json j = Json::array();
            for (const auto& d : vertices) j.push_back(distribution_to_json(d));
            output.emit(j, std::to_string(vertices.size()) + " vertex distribution(s)\n");
            return 0;
        }
        if (m2_action == "constraints") {
            Json j = constraints_to_json(build_constraints(af, m2_cap));
            output.emit(j, j.dump(2) + "\n");
            return 0;
        }
        // plambda
        if (m2_label.empty()) throw std::invalid_argument("--label is required for plambda");
        auto d = plambda_construct(af, parse_labelling(af, m2_label));
        output.emit(distribution_to_json(d), distribution_to_json(d).dump(2) + "\n");
        return 0;
    }

    if (*ap_cmd) {
        auto af = load_af(ap_af);
        auto report = approximate_plambda(af, parse_labelling(af, ap_label), ap_n, cfg);
        Json j = approx_report_to_json(af, report);
        output.emit(j, j.dump(2) + "\n");
        return report.bound_satisfied ? 0 : 1;
    }

    if (*th_cmd) {
        auto af = load_af(th_af);
        auto input = load_distribution(af, th_dist);
        auto report = p_justifiable(af, input.distribution);
        std::ostringstream text;
        text << report.surface_note << "\n"
             << (report.p_justifiable ? "p-justifiable" : "not p-justifiable")
             << (report.method2_legitimate ? ", satisfies the attack equations"
                                           : ", does not satisfy the attack equations")
             << "\n";
        output.emit(justifiability_to_json(af, report), text.str());
        return 0;
    }

    if (*in_cmd) {
        auto af = load_af(in_af);
        std::ifstream in(in_map);
        if (!in) throw std::runtime_error("cannot open '" + in_map + "'");
        Json map = Json::parse(in);
        InstantiatedNetwork net;
        net.af = af;
        for (int i = 0; i < af.size(); ++i) {
            if (!map.contains(af.name(i)))
                throw std::invalid_argument("instantiation misses argument '" + af.name(i) + "'");
            net.instantiation.push_back(parse_formula(map.at(af.name(i)).get<std::string>()));
        }
        auto result = instantiate_and_solve(net, in_cap);
        Json j;
        j["universe"] = result.universe.atoms();
        Json theory = Json::array();
        for (const auto& f : result.theory) theory.push_back(f.str());
        j["theory"] = theory;
        j["result"] = feasibility_to_json(result.result);
        output.emit(j, j.dump(2) + "\n");
        return result.result.feasible() ? 0 : 1;
    }

    if (*dot_cmd) {
        auto af = load_af(dot_af);
        std::vector<double> values;
        if (!dot_values.empty()) {
            values.assign(af.size(), 0.0);
            std::istringstream items(dot_values);
            std::string item;
            while (std::getline(items, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("expected '<arg>=<value>', got '" + item + "'");
                values[af.index(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
            }
        }
        output.emit_raw(to_dot(af, dot_values.empty() ? nullptr : &values));
        return 0;
    }

    if (*gal_cmd) {
        auto cases = run_gallery(cfg);
        int failures = write_gallery(gal_dir, cases);
        for (const auto& c : cases)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
        std::cout << (failures == 0 ? "gallery clean" : std::to_string(failures) + " failure(s)")
                  << ", fixtures in " << gal_dir << "\n";
        return failures == 0 ? 0 : 1;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
