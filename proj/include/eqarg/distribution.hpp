#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "eqarg/formula.hpp"
#include "eqarg/rational.hpp"

namespace eqarg {

/// "0101" <-> bit mask; character position j is the truth value of atom j.
std::string model_bits_str(std::uint32_t bits, int n_atoms);
std::uint32_t parse_model_bits(const std::string& s, int n_atoms);

/// Probability mass over the 2^n classical models of an atom set, stored
/// sparsely (absent model = mass 0) with exact rational masses. Masses are
/// nonnegative and sum to exactly 1; construction validates both.
class ModelDistribution {
public:
    ModelDistribution(AtomIndex atoms, std::map<std::uint32_t, Rational> masses);

    const AtomIndex& atoms() const { return atoms_; }
    int n_atoms() const { return atoms_.size(); }
    const std::map<std::uint32_t, Rational>& masses() const { return mass_; }
    Rational mass(std::uint32_t bits) const;

    /// P(atom i).
    Rational marginal(int atom) const;
    /// P of the conjunction of the negations of the given atoms (1 if empty).
    Rational prob_all_false(const std::vector<int>& atoms) const;
    /// P of the disjunction of the given atoms (0 if empty).
    Rational prob_any_true(const std::vector<int>& atoms) const;

    bool operator==(const ModelDistribution& other) const;

private:
    AtomIndex atoms_;
    std::map<std::uint32_t, Rational> mass_;
};

/// P(f) = sum of the masses of the models satisfying f (exact).
Rational prob_of_formula(const ModelDistribution& d, const Formula& f);

}  // namespace eqarg
