#include "eqarg/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eqarg {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
        mpz_class n(num), d(den);
        if (d == 0) return std::nullopt;
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!is_integer_token(head)) return std::nullopt;
        if (frac.empty()) frac = "0";
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        bool neg = s[0] == '-';
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class whole(head);
        mpz_class digits(frac);
        mpz_class num = abs(whole) * scale + digits;
        if (neg) num = -num;
        Rational q(num, scale);
        q.canonicalize();
        return q;
    }

    if (!is_integer_token(s)) return std::nullopt;
    return Rational(mpz_class(s));
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
    return Rational(x);
}

Rational rational_from_double_bounded(double x, std::uint64_t max_den) {
    Rational exact = rational_from_double(x);
    if (exact.get_den() <= max_den) return exact;

    // Continued-fraction convergents of the exact value, stopping before the
    // denominator exceeds the bound; the last admissible semiconvergent is
    // checked as well.
    Rational target = abs(exact);
    bool neg = exact < 0;
    mpz_class bound(static_cast<unsigned long>(max_den));
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class num = target.get_num(), den = target.get_den();

    while (den != 0) {
        mpz_class a = num / den;
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        mpz_class r = num % den;
        num = den;
        den = r;
    }

    Rational best(p1, q1);
    best.canonicalize();
    if (den != 0 && q1 != 0) {
        // Semiconvergent between the last two convergents.
        mpz_class k = (bound - q0) / q1;
        if (k > 0) {
            Rational semi(k * p1 + p0, k * q1 + q0);
            semi.canonicalize();
            if (abs(semi - target) < abs(best - target)) best = semi;
        }
    }
    if (neg) best = -best;
    return best;
}

}  // namespace eqarg
