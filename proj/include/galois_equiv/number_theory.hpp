#ifndef GALOIS_EQUIV_NUMBER_THEORY_HPP
#define GALOIS_EQUIV_NUMBER_THEORY_HPP

// Local symbols and norm equations for quadratic extensions of Q.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/rational.hpp"

namespace galois_equiv {

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;  // increasing primes
};

/// Deterministic Miller-Rabin; exact below 3.3e24 (bases 2..41).  Above that
/// a compositeness witness is still conclusive, but passing every base is not.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const Integer limit("3317044064679887385961981");
    static constexpr std::array<unsigned, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : bases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    const Integer n1 = n - 1;
    for (unsigned a : bases) {
        Integer x;
        const Integer base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s && witness; ++i) {
            x = x * x % n;
            if (x == n1) witness = false;
        }
        if (witness) return false;
    }
    if (n >= limit) throw FactorizationIncomplete("primality of " + n.get_str() + " is beyond the deterministic range");
    return true;
}

namespace detail {

/// A nontrivial factor of an odd composite n by Brent's variant of Pollard rho.
inline std::optional<Integer> pollard_brent(const Integer& n, unsigned long max_steps = 1ul << 24) {
    for (unsigned long c = 1; c <= 20; ++c) {
        auto f = [&](const Integer& x) {
            Integer y = x * x + c;
            mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
            return y;
        };
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1, steps = 0;
        constexpr unsigned long batch = 128;
        while (g == 1 && steps < max_steps) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                steps += batch;
            }
            r *= 2;
        }
        if (g == n) {  // the batch overshot; step back one at a time
            do {
                ys = f(ys);
                const Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Factors n by trial division up to `bound`, then splits any composite
 * cofactor with Pollard rho.  FactorizationIncomplete is thrown when a
 * cofactor resists rho or lies beyond the deterministic primality range.
 */
inline Factorization factor(const Integer& n, unsigned long bound = kDefaultTrialBound) {
    if (n == 0) throw InvalidArgument("cannot factor zero");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out.factors.emplace_back(Integer(p), e);
    };
    strip(2);
    unsigned long p = 3;
    for (; p <= bound; p += 2) {
        if (Integer(p) * p > m) break;
        strip(p);
    }
    if (m > 1 && Integer(p) * p > m) {
        out.factors.emplace_back(m, 1);
        return out;
    }
    std::vector<Integer> pending{m}, primes;
    while (!pending.empty()) {
        Integer c = std::move(pending.back());
        pending.pop_back();
        if (c == 1) continue;
        if (is_prime(c)) {
            primes.push_back(std::move(c));
            continue;
        }
        const auto f = detail::pollard_brent(c);
        if (!f) throw FactorizationIncomplete("could not split the composite cofactor " + c.get_str());
        pending.push_back(*f);
        pending.push_back(c / *f);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

/// A place of Q: a prime p, or the real place (stored as prime 0).
struct Place {
    Integer prime;

    static Place real() { return Place{Integer(0)}; }
    static Place at(const Integer& p) { return Place{p}; }
    bool is_real() const { return prime == 0; }

    friend bool operator<(const Place& a, const Place& b) { return a.prime < b.prime; }
    friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
    std::string name() const { return is_real() ? std::string("inf") : prime.get_str(); }
};

/// Integer in the same square class as a nonzero rational.
inline Integer square_class_integer(const Rational& q) {
    if (q == 0) throw InvalidArgument("zero has no square class");
    return q.get_num() * q.get_den();
}

/// Squarefree integer in the square class of q (sign kept).
inline Integer squarefree_part(const Rational& q, unsigned long bound = kDefaultTrialBound) {
    const auto f = factor(square_class_integer(q), bound);
    Integer out = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2) out *= p;
    return out;
}

inline int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

/**
 * Hilbert symbol (a, b)_v at a place v of Q.  At odd p it is
 * (-1)^{alpha beta eps(p)} (u/p)^beta (v/p)^alpha; at 2 it is
 * (-1)^{eps(u)eps(v) + alpha omega(v) + beta omega(u)}, where a = p^alpha u
 * and b = p^beta v with u, v units.
 */
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    const Integer x = square_class_integer(a);
    const Integer y = square_class_integer(b);
    if (place.is_real()) return (x < 0 && y < 0) ? -1 : 1;
    const Integer& p = place.prime;
    if (p < 2 || !is_prime(p))
        throw InvalidArgument("not a prime: " + p.get_str());

    auto split = [&](Integer n) {
        unsigned long v = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        return std::pair<unsigned long, Integer>{v, n};
    };
    const auto [alpha, u] = split(x);
    const auto [beta, v] = split(y);

    if (p == 2) {
        auto mod8 = [](const Integer& n) {
            Integer r = n % 8;
            if (r < 0) r += 8;
            return static_cast<int>(r.get_si());
        };
        auto eps = [&](const Integer& n) { return ((mod8(n) - 1) / 2) % 2; };
        auto omega = [&](const Integer& n) {
            const int r = mod8(n);
            return ((r * r - 1) / 8) % 2;
        };
        const int e = eps(u) * eps(v) + static_cast<int>(alpha % 2) * omega(v) + static_cast<int>(beta % 2) * omega(u);
        return e % 2 ? -1 : 1;
    }

    int s = 1;
    const Integer half = (p - 1) / 2;
    if ((alpha % 2) && (beta % 2) && mpz_odd_p(half.get_mpz_t())) s = -s;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(v, p);
    return s;
}

/// Places where (a, b) can be nontrivial: inf, 2 and the primes of a and b.
inline std::vector<Place> relevant_places(const Rational& a, const Rational& b,
                                          unsigned long bound = kDefaultTrialBound) {
    std::set<Place> places{Place::real(), Place::at(2)};
    for (const auto* q : {&a, &b})
        for (const auto& [p, e] : factor(square_class_integer(*q), bound).factors) places.insert(Place::at(p));
    return {places.begin(), places.end()};
}

namespace detail {

inline const Integer& quadratic_core(const CyclicExtension& ext) {
    if (ext.degree() != 2 || !ext.disc_core())
        throw Unsupported("norm decisions are implemented for quadratic extensions only (degree " +
                          std::to_string(ext.degree()) + ")");
    return *ext.disc_core();
}

}  // namespace detail

/// True iff lam = N(x) for some x in L.  Quadratic L only; decided by local symbols.
inline bool is_norm(const Rational& lam, const CyclicExtension& ext, unsigned long bound = kDefaultTrialBound) {
    const Integer& d = detail::quadratic_core(ext);
    if (lam == 0) throw InvalidArgument("zero is not in the multiplicative group");
    const Rational dq(d);
    for (const auto& place : relevant_places(lam, dq, bound))
        if (hilbert_symbol(lam, dq, place) != 1) return false;
    return true;
}

/// sqrt(d) as an element of L, d = disc_core.
inline FieldElement sqrt_disc_core(const ExtensionPtr& ext) {
    const Integer& d = detail::quadratic_core(*ext);
    const auto& m = ext->min_poly();
    // (2t + m1)^2 = m1^2 - 4 m0 = d f^2
    const Rational disc = m[1] * m[1] - 4 * m[0];
    Rational f2 = disc / Rational(d);
    Integer f;
    mpz_sqrt(f.get_mpz_t(), f2.get_num_mpz_t());
    FieldElement root(ext, Coefficients{m[1], Rational(2)});
    return root * make_rational(1, f);
}

/// Fundamental unit candidate of Z[sqrt d] (d > 0) from the continued
/// fraction of sqrt d; nullopt when the period is not closed within `max_steps`.
inline std::optional<std::pair<Integer, Integer>> fundamental_unit(const Integer& d, unsigned max_steps = 10000) {
    if (d <= 1) return std::nullopt;
    Integer a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    if (a0 * a0 == d) return std::nullopt;
    Integer m = 0, q = 1, a = a0;
    Integer p_prev = 1, p = a0, r_prev = 0, r = 1;
    for (unsigned step = 0; step < max_steps; ++step) {
        const Integer n = p * p - d * r * r;
        if (n == 1 || n == -1) return std::pair{p, r};
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        Integer p_next = a * p + p_prev;
        Integer r_next = a * r + r_prev;
        p_prev = p;
        p = p_next;
        r_prev = r;
        r = r_next;
    }
    return std::nullopt;
}

struct WitnessSearch {
    long numerator_bound = 10000;
};

/**
 * Finds mu in L with N(mu) = lam.  Writes lam = m s^2 with m squarefree and
 * searches x^2 - d y^2 = m z^2 over integers with max(|y|, z) increasing up
 * to the bound.  For d > 0 with a unit of norm -1 the equation for -m is
 * searched as well and corrected by that unit.
 */
inline FieldElement norm_witness(const Rational& lam, const ExtensionPtr& ext, const WitnessSearch& search = {},
                                 unsigned long bound = kDefaultTrialBound) {
    const Integer& d = detail::quadratic_core(*ext);
    if (lam == 1) return FieldElement::one(ext);
    if (!is_norm(lam, *ext, bound)) throw InvalidArgument(lam.get_str() + " is not a norm");

    const auto f = factor(square_class_integer(lam), bound);
    Integer m = f.sign, s = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2) m *= p;
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
    }
    // lam = m * (s / den)^2
    const Rational scale = make_rational(s, lam.get_den());
    const FieldElement root = sqrt_disc_core(ext);

    std::optional<FieldElement> unit;
    if (d > 0) {
        if (auto u = fundamental_unit(d); u && u->first * u->first - d * u->second * u->second == -1)
            unit = FieldElement(ext, Rational(u->first)) + root * Rational(u->second);
    }

    auto try_pair = [&](const Integer& y, const Integer& z, const Integer& target) -> std::optional<FieldElement> {
        const Integer xx = target * z * z + d * y * y;
        if (xx < 0 || !mpz_perfect_square_p(xx.get_mpz_t())) return std::nullopt;
        Integer x;
        mpz_sqrt(x.get_mpz_t(), xx.get_mpz_t());
        FieldElement mu = FieldElement(ext, Rational(x)) + root * Rational(y);
        return mu * make_rational(1, z);
    };

    for (long h = 1; h <= search.numerator_bound; ++h) {
        // pairs (y, z) with max(|y|, z) == h, z >= 1
        for (long k = 0; k <= h; ++k) {
            const std::array<std::pair<long, long>, 2> cand{{{k, h}, {h, std::max(k, 1L)}}};
            for (const auto& [y, z] : cand) {
                if (auto mu = try_pair(y, z, m)) return *mu * scale;
                if (unit)
                    if (auto mu = try_pair(y, z, -m)) return *mu * *unit * scale;
            }
        }
    }
    throw NoWitnessFound("no x, y with numerators up to " + std::to_string(search.numerator_bound) +
                         " solve N(x + y sqrt(" + d.get_str() + ")) = " + lam.get_str());
}

/**
 * Small representative of the class of lam in Q^x / N(L^x): 1 for the
 * trivial class, otherwise the squarefree integer c with |c| > 1 of least
 * absolute value (positive first) such that lam * c is a norm.
 */
inline Integer canonical_lambda(const Rational& lam, const CyclicExtension& ext,
                                unsigned long bound = kDefaultTrialBound) {
    detail::quadratic_core(ext);
    if (is_norm(lam, ext, bound)) return 1;
    for (long k = 2; k < 10'000'000; ++k) {
        if (detail::squarefree_kernel(Integer(k)) != k) continue;
        for (long c : {k, -k})
            if (is_norm(lam * Rational(c), ext, bound)) return c;
    }
    throw InternalInvariantViolation("no small representative found for " + lam.get_str());
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_NUMBER_THEORY_HPP
