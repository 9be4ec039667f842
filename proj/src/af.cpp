#include "eqarg/af.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eqarg/errors.hpp"

namespace eqarg {

namespace {

bool valid_identifier(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
    }
    return true;
}

}  // namespace

int ArgumentationFramework::add_argument(const std::string& id) {
    if (!valid_identifier(id))
        throw std::invalid_argument("invalid argument identifier '" + id + "'");
    if (find(id)) throw std::invalid_argument("duplicate argument '" + id + "'");
    arguments_.push_back(id);
    attackers_.emplace_back();
    return size() - 1;
}

void ArgumentationFramework::add_attack(const std::string& source, const std::string& target) {
    add_attack(index(source), index(target));
}

void ArgumentationFramework::add_attack(int source, int target) {
    if (source < 0 || source >= size() || target < 0 || target >= size())
        throw std::invalid_argument("attack endpoint out of range");
    if (!attack_set_.insert({source, target}).second)
        throw std::invalid_argument("duplicate attack " + name(source) + " -> " + name(target));
    attacks_.push_back({source, target});
    auto& in = attackers_[target];
    in.insert(std::upper_bound(in.begin(), in.end(), source), source);
}

std::optional<int> ArgumentationFramework::find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (arguments_[i] == id) return i;
    return std::nullopt;
}

int ArgumentationFramework::index(const std::string& id) const {
    if (auto i = find(id)) return *i;
    throw std::invalid_argument("unknown argument '" + id + "'");
}

bool ArgumentationFramework::has_attack(int source, int target) const {
    return attack_set_.count({source, target}) > 0;
}

std::vector<std::string> ArgumentationFramework::attacker_names(const std::string& target) const {
    std::vector<std::string> out;
    for (int i : attackers(index(target))) out.push_back(name(i));
    return out;
}

bool ArgumentationFramework::operator==(const ArgumentationFramework& other) const {
    return arguments_ == other.arguments_ && attack_set_ == other.attack_set_;
}

ArgumentationFramework parse_af(const std::string& text) {
    ArgumentationFramework af;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);

        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank

        std::string a, b, extra;
        if (head == "arg") {
            if (!(ls >> a) || (ls >> extra))
                throw ParseError("expected 'arg <id>'", lineno);
            if (af.find(a)) throw ParseError("duplicate argument '" + a + "'", lineno);
            af.add_argument(a);
        } else if (head == "att") {
            if (!(ls >> a >> b) || (ls >> extra))
                throw ParseError("expected 'att <source> <target>'", lineno);
            auto src = af.find(a);
            auto dst = af.find(b);
            if (!src) throw ParseError("attack references undeclared argument '" + a + "'", lineno);
            if (!dst) throw ParseError("attack references undeclared argument '" + b + "'", lineno);
            if (af.has_attack(*src, *dst))
                throw ParseError("duplicate attack '" + a + " " + b + "'", lineno);
            af.add_attack(*src, *dst);
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno);
        }
    }
    return af;
}

ArgumentationFramework load_af(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_af(buf.str());
}

std::string serialize_af(const ArgumentationFramework& af) {
    std::ostringstream out;
    for (const auto& a : af.arguments()) out << "arg " << a << "\n";
    auto atts = af.attacks();
    std::sort(atts.begin(), atts.end());
    for (const auto& [s, t] : atts) out << "att " << af.name(s) << " " << af.name(t) << "\n";
    return out.str();
}

std::string to_dot(const ArgumentationFramework& af, const std::vector<double>* values) {
    std::ostringstream out;
    out << "digraph af {\n";
    for (int i = 0; i < af.size(); ++i) {
        out << "  \"" << af.name(i) << "\" [label=\"" << af.name(i);
        if (values && i < static_cast<int>(values->size())) {
            std::ostringstream v;
            v.precision(6);
            v << (*values)[i];
            out << "\\n[" << v.str() << "]";
        }
        out << "\"];\n";
    }
    auto atts = af.attacks();
    std::sort(atts.begin(), atts.end());
    for (const auto& [s, t] : atts)
        out << "  \"" << af.name(s) << "\" -> \"" << af.name(t) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace eqarg
