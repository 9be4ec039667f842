#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqarg/af.hpp"

namespace eqarg {

/// Maps atom names to bit positions of a model. For plain frameworks the
/// atoms are the arguments in declaration order; instantiated networks derive
/// their own universe.
class AtomIndex {
public:
    AtomIndex() = default;
    explicit AtomIndex(std::vector<std::string> atoms);
    static AtomIndex of(const ArgumentationFramework& af);

    int size() const { return static_cast<int>(atoms_.size()); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& name(int i) const { return atoms_.at(i); }
    /// Bit position of an atom; throws std::invalid_argument for unknown atoms.
    int index(const std::string& atom) const;
    bool contains(const std::string& atom) const { return pos_.count(atom) > 0; }
    bool operator==(const AtomIndex& other) const { return atoms_ == other.atoms_; }

private:
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, int> pos_;
};

/// Immutable propositional formula tree (shared structure).
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

    static Formula atom(std::string name);
    static Formula top();
    static Formula bottom();
    static Formula negation(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);

    Kind kind() const;
    const std::string& atom_name() const;  // Atom only
    Formula lhs() const;                   // Not/And/Or/Implies/Iff
    Formula rhs() const;                   // And/Or/Implies/Iff

    /// Atom names in first-occurrence order, without duplicates.
    std::vector<std::string> atoms() const;
    std::string str() const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses `!`, `&`, `|`, `->`, `<->`, parentheses and the constants
/// `true`/`false`. Precedence: ! > & > | > -> (right-assoc) > <->.
Formula parse_formula(const std::string& text);

/// Two-valued evaluation against a model given as a bit mask over `idx`.
bool classical_eval(const Formula& f, const AtomIndex& idx, std::uint32_t model_bits);

enum class KleeneValue : std::uint8_t { False = 0, Half = 1, True = 2 };

inline KleeneValue kleene_not(KleeneValue v) {
    return static_cast<KleeneValue>(2 - static_cast<int>(v));
}

/// Strong-Kleene evaluation: not = complement to 1, and = min, or = max,
/// A->B = !A|B, A<->B = (A->B)&(B->A). `values` holds one entry per atom
/// of `idx`.
KleeneValue kleene_eval(const Formula& f, const AtomIndex& idx,
                        const std::vector<KleeneValue>& values);

/// Satisfaction in Kleene mode: the value is at least 1/2 and both sides of
/// every biconditional in the formula evaluate to the same value. Under this
/// notion a valuation satisfies the translated theory exactly when it solves
/// the max-form equations, so x=1/2 satisfies x<->!x.
bool kleene_satisfies(const Formula& f, const AtomIndex& idx,
                      const std::vector<KleeneValue>& values);

/// One biconditional per argument, in declaration order:
/// x <-> (!y1 & !y2 & ...) over the attackers of x; unattacked x gives
/// x <-> true.
std::vector<Formula> translate_theory(const ArgumentationFramework& af);

}  // namespace eqarg
