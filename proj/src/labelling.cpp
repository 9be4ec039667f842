#include "eqarg/labelling.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "eqarg/errors.hpp"
#include "eqarg/parallel.hpp"

namespace eqarg {

const char* label_name(Label l) {
    switch (l) {
        case Label::In: return "in";
        case Label::Out: return "out";
        case Label::Und: return "und";
    }
    return "?";
}

Label label_from_name(const std::string& s) {
    if (s == "in") return Label::In;
    if (s == "out") return Label::Out;
    if (s == "und") return Label::Und;
    throw std::invalid_argument("unknown label '" + s + "' (expected in|out|und)");
}

Labelling parse_labelling(const ArgumentationFramework& af, const std::string& text) {
    std::vector<int> seen(af.size(), 0);
    Labelling lab;
    lab.labels.assign(af.size(), Label::Und);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected '<arg>=<in|out|und>', got '" + item + "'");
        int i = af.index(item.substr(0, eq));
        if (seen[i]++) throw std::invalid_argument("argument '" + af.name(i) + "' assigned twice");
        lab.labels[i] = label_from_name(item.substr(eq + 1));
    }
    for (int i = 0; i < af.size(); ++i)
        if (!seen[i])
            throw std::invalid_argument("labelling is not total: '" + af.name(i) + "' missing");
    return lab;
}

std::string labelling_str(const ArgumentationFramework& af, const Labelling& lab) {
    std::ostringstream out;
    for (int i = 0; i < af.size(); ++i) {
        if (i) out << ",";
        out << af.name(i) << "=" << label_name(lab[i]);
    }
    return out.str();
}

LegalityReport check_labelling(const ArgumentationFramework& af, const Labelling& lab) {
    if (static_cast<int>(lab.labels.size()) != af.size())
        throw std::invalid_argument("labelling size does not match framework");
    LegalityReport report;
    report.legal = true;
    for (int x = 0; x < af.size(); ++x) {
        bool attacker_in = false, attacker_und = false, all_out = true;
        for (int y : af.attackers(x)) {
            if (lab[y] == Label::In) attacker_in = true;
            if (lab[y] == Label::Und) attacker_und = true;
            if (lab[y] != Label::Out) all_out = false;
        }
        std::string clause;
        switch (lab[x]) {
            case Label::In:
                if (!all_out) clause = "labelled in but not all attackers are out";
                break;
            case Label::Out:
                if (!attacker_in) clause = "labelled out but no attacker is in";
                break;
            case Label::Und:
                if (attacker_in)
                    clause = "labelled und but an attacker is in";
                else if (!attacker_und)
                    clause = "labelled und but no attacker is und";
                break;
        }
        if (!clause.empty()) {
            report.legal = false;
            report.violations.push_back({x, clause});
        }
    }
    return report;
}

bool is_legal_labelling(const ArgumentationFramework& af, const Labelling& lab) {
    return check_labelling(af, lab).legal;
}

namespace {

Labelling decode_code(std::uint64_t code, int n) {
    Labelling lab;
    lab.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        lab.labels[i] = static_cast<Label>(code % 3);
        code /= 3;
    }
    return lab;
}

bool legal_code(const ArgumentationFramework& af, std::uint64_t code, std::vector<Label>& buf) {
    const int n = af.size();
    for (int i = 0; i < n; ++i) {
        buf[i] = static_cast<Label>(code % 3);
        code /= 3;
    }
    for (int x = 0; x < n; ++x) {
        bool attacker_in = false, attacker_und = false, all_out = true;
        for (int y : af.attackers(x)) {
            Label ly = buf[y];
            if (ly == Label::In) attacker_in = true;
            if (ly == Label::Und) attacker_und = true;
            if (ly != Label::Out) all_out = false;
        }
        switch (buf[x]) {
            case Label::In:
                if (!all_out) return false;
                break;
            case Label::Out:
                if (!attacker_in) return false;
                break;
            case Label::Und:
                if (attacker_in || !attacker_und) return false;
                break;
        }
    }
    return true;
}

std::vector<std::uint64_t> scan_range(const ArgumentationFramework& af, std::uint64_t lo,
                                      std::uint64_t hi) {
    std::vector<std::uint64_t> found;
    std::vector<Label> buf(af.size());
    for (std::uint64_t code = lo; code < hi; ++code)
        if (legal_code(af, code, buf)) found.push_back(code);
    return found;
}

CompleteLabellings finish(const ArgumentationFramework& af,
                          const std::vector<std::uint64_t>& codes) {
    const int n = af.size();
    CompleteLabellings result;
    for (auto code : codes) result.all.push_back(decode_code(code, n));

    // Decided-set masks for the preferred/grounded flags.
    std::vector<std::uint32_t> in_mask(result.all.size(), 0), out_mask(result.all.size(), 0);
    for (std::size_t k = 0; k < result.all.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            if (result.all[k][i] == Label::In) in_mask[k] |= 1u << i;
            if (result.all[k][i] == Label::Out) out_mask[k] |= 1u << i;
        }
    }

    result.preferred.assign(result.all.size(), true);
    for (std::size_t a = 0; a < result.all.size(); ++a) {
        for (std::size_t b = 0; b < result.all.size(); ++b) {
            if (a == b) continue;
            bool contained = (in_mask[a] & ~in_mask[b]) == 0 && (out_mask[a] & ~out_mask[b]) == 0;
            bool strictly = in_mask[a] != in_mask[b] || out_mask[a] != out_mask[b];
            if (contained && strictly) {
                result.preferred[a] = false;
                break;
            }
        }
    }

    for (std::size_t a = 0; a < result.all.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < result.all.size() && minimal; ++b)
            if ((in_mask[a] & ~in_mask[b]) != 0) minimal = false;
        if (minimal) {
            result.grounded = static_cast<int>(a);
            break;
        }
    }
    if (result.grounded < 0 && !result.all.empty())
        throw std::logic_error("no grounded labelling among complete labellings");
    return result;
}

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

void check_cap(const ArgumentationFramework& af, int cap) {
    if (af.size() > cap)
        throw SizeCapError("framework has " + std::to_string(af.size()) +
                           " arguments, above the enumeration cap " + std::to_string(cap));
}

}  // namespace

CompleteLabellings enumerate_complete_serial(const ArgumentationFramework& af, int cap) {
    check_cap(af, cap);
    return finish(af, scan_range(af, 0, pow3(af.size())));
}

CompleteLabellings enumerate_complete(const ArgumentationFramework& af, int cap) {
    check_cap(af, cap);
    const std::uint64_t total = pow3(af.size());
    const int workers = worker_count();
    if (workers <= 1 || total < 4096) return finish(af, scan_range(af, 0, total));

    // Contiguous slice per worker; concatenating in worker order keeps the
    // ascending-code output identical for any worker count.
    std::vector<std::vector<std::uint64_t>> parts(workers);
#pragma omp parallel for num_threads(workers) schedule(static, 1)
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = total * w / workers;
        std::uint64_t hi = total * (w + 1) / workers;
        parts[w] = scan_range(af, lo, hi);
    }
    std::vector<std::uint64_t> codes;
    for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
    return finish(af, codes);
}

Labelling grounded_labelling(const ArgumentationFramework& af) {
    const int n = af.size();
    std::vector<int> state(n, -1);  // -1 undecided, 0 in, 1 out
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (state[x] != -1) continue;
            bool all_out = true, some_in = false;
            for (int y : af.attackers(x)) {
                if (state[y] != 1) all_out = false;
                if (state[y] == 0) some_in = true;
            }
            if (all_out) {
                state[x] = 0;
                changed = true;
            } else if (some_in) {
                state[x] = 1;
                changed = true;
            }
        }
    }
    Labelling lab;
    lab.labels.resize(n);
    for (int x = 0; x < n; ++x)
        lab.labels[x] = state[x] == 0 ? Label::In : state[x] == 1 ? Label::Out : Label::Und;
    return lab;
}

}  // namespace eqarg
