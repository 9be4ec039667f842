#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eqarg {

/// Finite set of arguments plus a binary attack relation. Argument order is
/// insertion order and is what model bit indices and serialization use.
/// Immutable once built (the mutating calls are for construction only).
class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    /// Adds an argument; returns its index. Throws on duplicates and on
    /// identifiers containing whitespace or '#'.
    int add_argument(const std::string& id);
    /// Adds an attack between declared arguments; throws on unknown endpoints
    /// and duplicate pairs.
    void add_attack(const std::string& source, const std::string& target);
    void add_attack(int source, int target);

    int size() const { return static_cast<int>(arguments_.size()); }
    const std::vector<std::string>& arguments() const { return arguments_; }
    const std::string& name(int i) const { return arguments_.at(i); }
    std::optional<int> find(const std::string& id) const;
    /// Index of a declared argument; throws std::invalid_argument otherwise.
    int index(const std::string& id) const;

    const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
    bool has_attack(int source, int target) const;
    /// Attacker indices of `target`, sorted ascending.
    const std::vector<int>& attackers(int target) const { return attackers_.at(target); }
    std::vector<std::string> attacker_names(const std::string& target) const;

    bool operator==(const ArgumentationFramework& other) const;

private:
    std::vector<std::string> arguments_;
    std::vector<std::pair<int, int>> attacks_;
    std::vector<std::vector<int>> attackers_;
    std::set<std::pair<int, int>> attack_set_;
};

/// Parses the .af text format: one directive per line, `arg <id>` or
/// `att <source> <target>`, blank lines and `# comments` ignored.
/// Throws ParseError with a 1-based line number.
ArgumentationFramework parse_af(const std::string& text);
ArgumentationFramework load_af(const std::string& path);

/// Canonical form: arguments in declaration order, attacks sorted by
/// (source index, target index). parse(serialize(af)) == af.
std::string serialize_af(const ArgumentationFramework& af);

/// GraphViz export; when `values` is given (one per argument), node labels
/// become "id\n[value]".
std::string to_dot(const ArgumentationFramework& af,
                   const std::vector<double>* values = nullptr);

}  // namespace eqarg
