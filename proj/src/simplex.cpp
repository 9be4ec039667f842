#include "eqarg/simplex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "eqarg/errors.hpp"

namespace eqarg {

namespace {

// Phase-1 tableau in standard form: rows are equalities with rhs >= 0 (rows
// arriving with negative rhs are negated), one artificial variable per row,
// objective = sum of artificials. Row 0 holds the reduced costs; the last
// column holds the right-hand sides.
class Tableau {
public:
    explicit Tableau(const ConstraintSystem& cs)
        : n_struct_(static_cast<int>(cs.n_models())), m_(static_cast<int>(cs.rows.size())) {
        const int cols = n_struct_ + m_ + 1;
        t_.assign(m_ + 1, std::vector<Rational>(cols, Rational(0)));
        basis_.resize(m_);
        sign_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            const auto& row = cs.rows[i];
            sign_[i] = row.rhs < 0 ? -1 : 1;
            for (int j = 0; j < n_struct_; ++j)
                if (row.coeff[j]) t_[i + 1][j] = Rational(sign_[i] * row.coeff[j]);
            t_[i + 1][n_struct_ + i] = 1;
            t_[i + 1][cols - 1] = sign_[i] < 0 ? Rational(-row.rhs) : row.rhs;
            basis_[i] = n_struct_ + i;
        }
        // Reduced costs of the phase-1 objective priced out over the basis.
        for (int j = 0; j < cols; ++j) {
            if (j >= n_struct_ && j < n_struct_ + m_) continue;
            Rational s = 0;
            for (int i = 0; i < m_; ++i) s += t_[i + 1][j];
            t_[0][j] = -s;
        }
    }

    int n_struct() const { return n_struct_; }
    int rows() const { return m_; }
    const std::vector<int>& basis() const { return basis_; }
    int sign(int i) const { return sign_[i]; }
    const Rational& rhs(int i) const { return t_[i + 1].back(); }
    const Rational& reduced_cost(int j) const { return t_[0][j]; }
    Rational objective() const { return -t_[0].back(); }

    void pivot(int row, int col) {
        auto& pr = t_[row + 1];
        Rational inv = pr[col];
        for (auto& v : pr) v /= inv;
        for (int i = 0; i <= m_; ++i) {
            if (i == row + 1) continue;
            Rational f = t_[i][col];
            if (f == 0) continue;
            auto& ti = t_[i];
            for (std::size_t j = 0; j < ti.size(); ++j)
                if (pr[j] != 0) ti[j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering = lowest-index column with a negative reduced
    // cost, leaving = lowest basis index among the minimum-ratio rows.
    void run_phase1() {
        const int total_cols = n_struct_ + m_;
        while (true) {
            int enter = -1;
            for (int j = 0; j < total_cols; ++j)
                if (t_[0][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < m_; ++i) {
                const Rational& a = t_[i + 1][enter];
                if (a <= 0) continue;
                Rational ratio = rhs(i) / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("phase-1 objective unbounded");
            pivot(leave, enter);
        }
    }

    // Degenerate pivots that replace basic artificials by structural columns
    // where possible. Rows that cannot be cleared are redundant (all-zero on
    // structural columns) and stay parked on their artificial at value 0.
    void clear_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_struct_) continue;
            for (int j = 0; j < n_struct_; ++j) {
                if (t_[i + 1][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::map<std::uint32_t, Rational> solution() const {
        std::map<std::uint32_t, Rational> x;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_struct_ && rhs(i) != 0)
                x[static_cast<std::uint32_t>(basis_[i])] = rhs(i);
        return x;
    }

    std::vector<int> sorted_basis() const {
        std::vector<int> b = basis_;
        std::sort(b.begin(), b.end());
        return b;
    }

    bool column_basic(int col) const {
        return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
    }

    // Ratio-test leaving row for an entering column, or -1 for a ray.
    int leaving_row(int enter) const {
        int leave = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m_; ++i) {
            const Rational& a = t_[i + 1][enter];
            if (a <= 0) continue;
            Rational ratio = rhs(i) / a;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        return leave;
    }

private:
    int n_struct_;
    int m_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
    std::vector<int> sign_;
};

InfeasibilityCertificate extract_certificate(const ConstraintSystem& cs, const Tableau& tab) {
    InfeasibilityCertificate cert;
    const int m = tab.rows();
    std::vector<Rational> y(m);
    for (int i = 0; i < m; ++i) {
        y[i] = (1 - tab.reduced_cost(tab.n_struct() + i)) * tab.sign(i);
        cert.multipliers.push_back({cs.rows[i].label, y[i]});
    }
    // The certificate is only reported after verifying it really is one.
    Rational yb = 0;
    for (int i = 0; i < m; ++i) yb += y[i] * cs.rows[i].rhs;
    if (yb <= 0) throw std::logic_error("infeasibility certificate fails y'b > 0");
    for (std::size_t j = 0; j < cs.n_models(); ++j) {
        Rational col = 0;
        for (int i = 0; i < m; ++i)
            if (cs.rows[i].coeff[j]) col += y[i] * cs.rows[i].coeff[j];
        if (col > 0) throw std::logic_error("infeasibility certificate fails y'A <= 0");
    }
    return cert;
}

ModelDistribution to_distribution(const ConstraintSystem& cs,
                                  std::map<std::uint32_t, Rational> masses) {
    return ModelDistribution(cs.atoms, std::move(masses));
}

}  // namespace

FeasibilityResult solve_feasibility(const ConstraintSystem& cs) {
    Tableau tab(cs);
    tab.run_phase1();
    FeasibilityResult result;
    if (tab.objective() > 0) {
        result.certificate = extract_certificate(cs, tab);
        return result;
    }
    result.distribution = to_distribution(cs, tab.solution());
    return result;
}

FeasibilityResult find_distribution(const ArgumentationFramework& af,
                                    const std::vector<FormulaPin>& pins, int cap) {
    ConstraintSystem cs = build_constraints(af, cap);
    for (const auto& pin : pins) {
        ConstraintRow row;
        row.label = "pin:" + pin.formula.str();
        row.rhs = pin.target;
        row.coeff.assign(cs.n_models(), 0);
        for (std::uint32_t m = 0; m < cs.n_models(); ++m)
            if (classical_eval(pin.formula, cs.atoms, m)) row.coeff[m] = 1;
        cs.rows.push_back(std::move(row));
    }
    return solve_feasibility(cs);
}

std::vector<ModelDistribution> enumerate_feasible_vertices(const ConstraintSystem& cs,
                                                           std::size_t max_count) {
    std::vector<ModelDistribution> out;
    Tableau start(cs);
    start.run_phase1();
    if (start.objective() > 0) return out;
    start.clear_artificials();

    std::set<std::vector<int>> visited;
    std::set<std::map<std::uint32_t, Rational>> seen_solutions;
    std::deque<Tableau> queue;
    visited.insert(start.sorted_basis());
    queue.push_back(std::move(start));

    std::size_t budget = 4000;  // pivot budget; exploration is best-effort
    while (!queue.empty() && out.size() < max_count && budget > 0) {
        Tableau tab = std::move(queue.front());
        queue.pop_front();
        auto sol = tab.solution();
        if (seen_solutions.insert(sol).second) out.push_back(to_distribution(cs, std::move(sol)));
        if (out.size() >= max_count) break;
        for (int j = 0; j < tab.n_struct() && budget > 0; ++j) {
            if (tab.column_basic(j)) continue;
            int leave = tab.leaving_row(j);
            if (leave < 0) continue;
            Tableau child = tab;
            child.pivot(leave, j);
            --budget;
            if (visited.insert(child.sorted_basis()).second) queue.push_back(std::move(child));
        }
    }
    return out;
}

std::vector<ModelDistribution> enumerate_vertices(const ArgumentationFramework& af,
                                                  std::size_t max_count) {
    if (af.size() > 8)
        throw SizeCapError("vertex enumeration is limited to 8 arguments, got " +
                           std::to_string(af.size()));
    return enumerate_feasible_vertices(build_constraints(af), max_count);
}

}  // namespace eqarg
