#include "eqarg/distribution.hpp"

#include <stdexcept>

namespace eqarg {

std::string model_bits_str(std::uint32_t bits, int n_atoms) {
    std::string s(n_atoms, '0');
    for (int i = 0; i < n_atoms; ++i)
        if ((bits >> i) & 1u) s[i] = '1';
    return s;
}

std::uint32_t parse_model_bits(const std::string& s, int n_atoms) {
    if (static_cast<int>(s.size()) != n_atoms)
        throw std::invalid_argument("model_bits '" + s + "' does not have " +
                                    std::to_string(n_atoms) + " positions");
    std::uint32_t bits = 0;
    for (int i = 0; i < n_atoms; ++i) {
        if (s[i] == '1')
            bits |= 1u << i;
        else if (s[i] != '0')
            throw std::invalid_argument("model_bits may contain only '0' and '1'");
    }
    return bits;
}

ModelDistribution::ModelDistribution(AtomIndex atoms, std::map<std::uint32_t, Rational> masses)
    : atoms_(std::move(atoms)) {
    if (atoms_.size() > 20) throw std::invalid_argument("model space above the hard cap of 20 atoms");
    Rational sum = 0;
    const std::uint32_t limit =
        atoms_.size() >= 32 ? 0xffffffffu : (1u << atoms_.size());
    for (auto& [bits, m] : masses) {
        m.canonicalize();  // comparisons assume canonical form
        if (bits >= limit) throw std::invalid_argument("model bits out of range");
        if (m < 0) throw std::invalid_argument("negative model mass");
        if (m == 0) continue;
        sum += m;
        mass_.emplace(bits, m);
    }
    if (sum != 1) throw std::invalid_argument("model masses sum to " + rational_str(sum) + ", not 1");
}

Rational ModelDistribution::mass(std::uint32_t bits) const {
    auto it = mass_.find(bits);
    return it == mass_.end() ? Rational(0) : it->second;
}

Rational ModelDistribution::marginal(int atom) const {
    Rational p = 0;
    for (const auto& [bits, m] : mass_)
        if ((bits >> atom) & 1u) p += m;
    return p;
}

Rational ModelDistribution::prob_all_false(const std::vector<int>& atoms) const {
    Rational p = 0;
    for (const auto& [bits, m] : mass_) {
        bool all_false = true;
        for (int a : atoms)
            if ((bits >> a) & 1u) {
                all_false = false;
                break;
            }
        if (all_false) p += m;
    }
    return p;
}

Rational ModelDistribution::prob_any_true(const std::vector<int>& atoms) const {
    return 1 - prob_all_false(atoms);
}

bool ModelDistribution::operator==(const ModelDistribution& other) const {
    return atoms_ == other.atoms_ && mass_ == other.mass_;
}

Rational prob_of_formula(const ModelDistribution& d, const Formula& f) {
    Rational p = 0;
    for (const auto& [bits, m] : d.masses())
        if (classical_eval(f, d.atoms(), bits)) p += m;
    return p;
}

}  // namespace eqarg
