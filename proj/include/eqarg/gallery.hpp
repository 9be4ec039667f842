#pragma once

#include <string>
#include <vector>

#include "eqarg/af.hpp"
#include "eqarg/distribution.hpp"
#include "eqarg/json_io.hpp"
#include "eqarg/solver.hpp"

namespace eqarg {

/// The example networks the test suite and documentation are built around.
namespace figures {

ArgumentationFramework fig3();    // a self-attacks and attacks b; b attacks a
ArgumentationFramework fig4();    // fig3 plus a self-attacking u attacking a and b
ArgumentationFramework fig7();    // five-argument network with a 2-cycle and joint attacks
ArgumentationFramework fig9();    // mutual attackers a1, a2 both attacking a3
ArgumentationFramework fig11();   // a and b each attacked by both a and b
ArgumentationFramework fig16();   // self-attacking a and b jointly attacking x
ArgumentationFramework fig22();   // fig16 with a mirrored second target x2
ArgumentationFramework fig25();   // two disjoint 2-cycles
ArgumentationFramework fig26();   // fig25 plus a self-attacking u attacking c and d
ArgumentationFramework fig30();   // 2-cycle plus the fig3 pattern on c and d
ArgumentationFramework fig13a();  // unattacked x attacking a3

ModelDistribution fig7_distribution();        // four-model distribution over fig7
ModelDistribution fig9_distribution();        // two-model distribution over fig9
ModelDistribution fig16_p2();                 // joint-attack witness over fig16
ModelDistribution fig22_asymmetric();         // p-justifiable but not legitimate
ModelDistribution fig11_uniform();            // uniform over fig11's four models

}  // namespace figures

struct GalleryCase {
    std::string id;
    std::string description;
    bool pass = false;
    Json fixture;  // description, inputs, expected, actual
};

/// Recomputes every golden example with the given solver configuration and
/// compares against the pinned expected values.
std::vector<GalleryCase> run_gallery(const SolveConfig& cfg = {});

/// Writes the example networks, distributions and one fixture JSON per case
/// into `dir` (created if needed) plus a summary.json; returns the number of
/// failing cases.
int write_gallery(const std::string& dir, const std::vector<GalleryCase>& cases);
int write_gallery(const std::string& dir, const SolveConfig& cfg = {});

}  // namespace eqarg
