#ifndef GALOIS_EQUIV_RATIONAL_HPP
#define GALOIS_EQUIV_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "galois_equiv/error.hpp"

namespace galois_equiv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (no spaces, q != 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("", "not a rational number: \"" + std::string(text) + "\"");
    auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    Integer n(strip(num)), d(strip(den));
    if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// n / d in lowest terms (gmpxx's two-argument constructor does not reduce).
inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer lcm_of_denominators(const Rational* begin, const Rational* end) {
    Integer l = 1;
    for (auto it = begin; it != end; ++it) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->get_den_mpz_t());
    return l;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_RATIONAL_HPP
