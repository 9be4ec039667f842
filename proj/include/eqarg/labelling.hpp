#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqarg/af.hpp"

namespace eqarg {

enum class Label : std::uint8_t { In = 0, Out = 1, Und = 2 };

const char* label_name(Label l);
Label label_from_name(const std::string& s);

/// Total in/out/und assignment, aligned with the framework's argument order.
struct Labelling {
    std::vector<Label> labels;

    Label operator[](int i) const { return labels[i]; }
    bool operator==(const Labelling& other) const = default;
};

/// "a=in,b=out,c=und" (every argument must be assigned exactly once).
Labelling parse_labelling(const ArgumentationFramework& af, const std::string& text);
std::string labelling_str(const ArgumentationFramework& af, const Labelling& lab);

struct LegalityViolation {
    int argument;
    std::string clause;  // which legality clause the argument breaks
};

struct LegalityReport {
    bool legal = false;
    std::vector<LegalityViolation> violations;
};

/// Checks the three legality clauses: out iff some attacker in, in iff all
/// attackers out, und iff no attacker in and some attacker und.
LegalityReport check_labelling(const ArgumentationFramework& af, const Labelling& lab);
bool is_legal_labelling(const ArgumentationFramework& af, const Labelling& lab);

struct CompleteLabellings {
    std::vector<Labelling> all;   // ascending base-3 code order (in<out<und per digit)
    std::vector<bool> preferred;  // maximal among `all` in decided (in/out) sets
    int grounded = -1;            // index of the labelling with the minimal in-set
};

/// Brute force over all 3^n candidates. Throws SizeCapError above the cap.
/// Partitioned across workers; output is identical for any worker count.
CompleteLabellings enumerate_complete(const ArgumentationFramework& af, int cap = 14);
/// Single-threaded reference implementation of the same scan.
CompleteLabellings enumerate_complete_serial(const ArgumentationFramework& af, int cap = 14);

/// Grounded labelling by iterated fixpoint, independent of the enumeration.
Labelling grounded_labelling(const ArgumentationFramework& af);

}  // namespace eqarg
