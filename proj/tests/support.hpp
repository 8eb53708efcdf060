#ifndef GALOIS_EQUIV_TESTS_SUPPORT_HPP
#define GALOIS_EQUIV_TESTS_SUPPORT_HPP

// Fixture access and seeded generators shared by the test programs.

#include <cstdint>
#include <random>
#include <string>

#include "galois_equiv/galois_equiv.hpp"
#include "galois_equiv/io.hpp"

namespace test_support {

namespace ge = galois_equiv;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline ge::io::Problem fixture(const std::string& name) { return ge::io::load_problem(fixture_path(name + ".json")); }

/// Q(zeta_7)^+: t = 2 cos(2 pi / 7), sigma(t) = t^2 - 2.
inline ge::ExtensionPtr cubic_field() { return ge::CyclicExtension::create({-1, -2, 1, 1}, {-2, 0, 1}); }

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    ge::Rational rational(long num = 9, long den = 5) {
        ge::Rational q(ge::Integer(integer(-num, num)), ge::Integer(integer(1, den)));
        q.canonicalize();
        return q;
    }

    ge::Rational nonzero_rational(long num = 9, long den = 5) {
        for (;;)
            if (auto q = rational(num, den); q != 0) return q;
    }

    ge::FieldElement element(const ge::ExtensionPtr& ext, long num = 9, long den = 5) {
        ge::Coefficients c(static_cast<std::size_t>(ext->degree()));
        for (auto& x : c) x = rational(num, den);
        return ge::FieldElement(ext, std::move(c));
    }

    ge::FieldElement nonzero_element(const ge::ExtensionPtr& ext) {
        for (;;)
            if (auto x = element(ext); !x.is_zero()) return x;
    }

    ge::Mat matrix(const ge::ExtensionPtr& ext, std::size_t rows, std::size_t cols, long num = 4, long den = 1) {
        ge::Mat m(ext, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(ext, num, den);
        return m;
    }

    ge::Mat invertible(const ge::ExtensionPtr& ext, std::size_t n) {
        for (;;) {
            ge::Mat m = matrix(ext, n, n);
            if (ge::rank(m) == n) return m;
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace test_support

#endif  // GALOIS_EQUIV_TESTS_SUPPORT_HPP
