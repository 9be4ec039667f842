#include "eqarg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqarg {

AtomIndex::AtomIndex(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    for (int i = 0; i < size(); ++i) {
        if (!pos_.emplace(atoms_[i], i).second)
            throw std::invalid_argument("duplicate atom '" + atoms_[i] + "'");
    }
}

AtomIndex AtomIndex::of(const ArgumentationFramework& af) { return AtomIndex(af.arguments()); }

int AtomIndex::index(const std::string& atom) const {
    auto it = pos_.find(atom);
    if (it == pos_.end()) throw std::invalid_argument("unknown atom '" + atom + "'");
    return it->second;
}

struct Formula::Node {
    Kind kind;
    std::string atom;
    std::shared_ptr<const Node> a, b;
};

Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}
Formula Formula::top() {
    return Formula(std::make_shared<Node>(Node{Kind::Top, {}, nullptr, nullptr}));
}
Formula Formula::bottom() {
    return Formula(std::make_shared<Node>(Node{Kind::Bottom, {}, nullptr, nullptr}));
}
Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Not, {}, f.node_, nullptr}));
}
Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::And, {}, a.node_, b.node_}));
}
Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, {}, a.node_, b.node_}));
}
Formula Formula::implies(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Implies, {}, a.node_, b.node_}));
}
Formula Formula::iff(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Iff, {}, a.node_, b.node_}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->atom; }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out, std::set<std::string>& seen) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            if (seen.insert(f.atom_name()).second) out.push_back(f.atom_name());
            break;
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            break;
        case Formula::Kind::Not:
            collect_atoms(f.lhs(), out, seen);
            break;
        default:
            collect_atoms(f.lhs(), out, seen);
            collect_atoms(f.rhs(), out, seen);
    }
}

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        default: return 5;
    }
}

void print(const Formula& f, std::ostringstream& out, int parent_prec) {
    int prec = precedence(f.kind());
    bool parens = prec < parent_prec;
    if (parens) out << "(";
    switch (f.kind()) {
        case Formula::Kind::Atom: out << f.atom_name(); break;
        case Formula::Kind::Top: out << "true"; break;
        case Formula::Kind::Bottom: out << "false"; break;
        case Formula::Kind::Not:
            out << "!";
            print(f.lhs(), out, 5);
            break;
        case Formula::Kind::And:
            print(f.lhs(), out, 4);
            out << " & ";
            print(f.rhs(), out, 5);
            break;
        case Formula::Kind::Or:
            print(f.lhs(), out, 3);
            out << " | ";
            print(f.rhs(), out, 4);
            break;
        case Formula::Kind::Implies:
            print(f.lhs(), out, 3);
            out << " -> ";
            print(f.rhs(), out, 2);
            break;
        case Formula::Kind::Iff:
            print(f.lhs(), out, 2);
            out << " <-> ";
            print(f.rhs(), out, 2);
            break;
    }
    if (parens) out << ")";
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_atoms(*this, out, seen);
    return out;
}

std::string Formula::str() const {
    std::ostringstream out;
    print(*this, out, 0);
    return out.str();
}

namespace {

struct Parser {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("formula parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    Formula parse_iff() {
        Formula f = parse_implies();
        while (true) {
            skip_ws();
            if (text.compare(pos, 3, "<->") == 0) {
                pos += 3;
                f = Formula::iff(f, parse_implies());
            } else {
                return f;
            }
        }
    }

    Formula parse_implies() {
        Formula f = parse_or();
        skip_ws();
        if (text.compare(pos, 2, "->") == 0) {
            pos += 2;
            return Formula::implies(f, parse_implies());  // right-assoc
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '|') {
                ++pos;
                f = Formula::disj(f, parse_and());
            } else {
                return f;
            }
        }
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '&') {
                ++pos;
                f = Formula::conj(f, parse_unary());
            } else {
                return f;
            }
        }
    }

    Formula parse_unary() {
        skip_ws();
        if (pos < text.size() && text[pos] == '!') {
            ++pos;
            return Formula::negation(parse_unary());
        }
        return parse_primary();
    }

    Formula parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            Formula f = parse_iff();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            return f;
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an atom, 'true', 'false', '!' or '('");
        std::string name = text.substr(start, pos - start);
        if (name == "true") return Formula::top();
        if (name == "false") return Formula::bottom();
        return Formula::atom(name);
    }
};

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser p{text};
    Formula f = p.parse_iff();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

bool classical_eval(const Formula& f, const AtomIndex& idx, std::uint32_t model_bits) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return (model_bits >> idx.index(f.atom_name())) & 1u;
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Not: return !classical_eval(f.lhs(), idx, model_bits);
        case Formula::Kind::And:
            return classical_eval(f.lhs(), idx, model_bits) &&
                   classical_eval(f.rhs(), idx, model_bits);
        case Formula::Kind::Or:
            return classical_eval(f.lhs(), idx, model_bits) ||
                   classical_eval(f.rhs(), idx, model_bits);
        case Formula::Kind::Implies:
            return !classical_eval(f.lhs(), idx, model_bits) ||
                   classical_eval(f.rhs(), idx, model_bits);
        case Formula::Kind::Iff:
            return classical_eval(f.lhs(), idx, model_bits) ==
                   classical_eval(f.rhs(), idx, model_bits);
    }
    throw std::logic_error("unreachable formula kind");
}

KleeneValue kleene_eval(const Formula& f, const AtomIndex& idx,
                        const std::vector<KleeneValue>& values) {
    auto as_int = [&](const Formula& g) { return static_cast<int>(kleene_eval(g, idx, values)); };
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            int i = idx.index(f.atom_name());
            if (i >= static_cast<int>(values.size()))
                throw std::invalid_argument("kleene valuation is not total");
            return values[i];
        }
        case Formula::Kind::Top: return KleeneValue::True;
        case Formula::Kind::Bottom: return KleeneValue::False;
        case Formula::Kind::Not: return kleene_not(kleene_eval(f.lhs(), idx, values));
        case Formula::Kind::And:
            return static_cast<KleeneValue>(std::min(as_int(f.lhs()), as_int(f.rhs())));
        case Formula::Kind::Or:
            return static_cast<KleeneValue>(std::max(as_int(f.lhs()), as_int(f.rhs())));
        case Formula::Kind::Implies:
            return static_cast<KleeneValue>(std::max(2 - as_int(f.lhs()), as_int(f.rhs())));
        case Formula::Kind::Iff: {
            int a = as_int(f.lhs()), b = as_int(f.rhs());
            return static_cast<KleeneValue>(std::min(std::max(2 - a, b), std::max(2 - b, a)));
        }
    }
    throw std::logic_error("unreachable formula kind");
}

namespace {

bool iff_sides_equal(const Formula& f, const AtomIndex& idx,
                     const std::vector<KleeneValue>& values) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            return true;
        case Formula::Kind::Not:
            return iff_sides_equal(f.lhs(), idx, values);
        case Formula::Kind::Iff:
            if (kleene_eval(f.lhs(), idx, values) != kleene_eval(f.rhs(), idx, values))
                return false;
            [[fallthrough]];
        default:
            return iff_sides_equal(f.lhs(), idx, values) && iff_sides_equal(f.rhs(), idx, values);
    }
}

}  // namespace

bool kleene_satisfies(const Formula& f, const AtomIndex& idx,
                      const std::vector<KleeneValue>& values) {
    return kleene_eval(f, idx, values) >= KleeneValue::Half && iff_sides_equal(f, idx, values);
}

std::vector<Formula> translate_theory(const ArgumentationFramework& af) {
    std::vector<Formula> theory;
    theory.reserve(af.size());
    for (int x = 0; x < af.size(); ++x) {
        const auto& att = af.attackers(x);
        Formula body = Formula::top();
        for (std::size_t k = 0; k < att.size(); ++k) {
            Formula lit = Formula::negation(Formula::atom(af.name(att[k])));
            body = k == 0 ? lit : Formula::conj(body, lit);
        }
        theory.push_back(Formula::iff(Formula::atom(af.name(x)), body));
    }
    return theory;
}

}  // namespace eqarg
