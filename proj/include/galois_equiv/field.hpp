#ifndef GALOIS_EQUIV_FIELD_HPP
#define GALOIS_EQUIV_FIELD_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/rational.hpp"

namespace galois_equiv {

class CyclicExtension;
using ExtensionPtr = std::shared_ptr<const CyclicExtension>;
using Coefficients = std::vector<Rational>;

namespace detail {

/// Squarefree kernel of a nonzero integer, keeping the sign.
inline Integer squarefree_kernel(Integer n) {
    Integer sign = n < 0 ? -1 : 1;
    n = abs(n);
    Integer out = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return sign * out * n;
}

}  // namespace detail

/**
 * A cyclic Galois extension L = Q[t]/(m(t)) with a chosen generator sigma of
 * Gal(L/Q), given by the image s(t) of the class of t.
 *
 * Construction checks that m is monic with integer coefficients, that
 * m(s(t)) = 0 in L and that sigma has order exactly deg m.  Irreducibility of
 * m is checked for quadratic m only (discriminant not a square); for larger
 * degree it is trusted as declared.
 *
 * Instances are immutable and always held by shared_ptr so that field
 * elements can refer to their field cheaply.
 */
class CyclicExtension {
public:
    static ExtensionPtr create(Coefficients min_poly, Coefficients sigma_image) {
        auto ext = std::shared_ptr<CyclicExtension>(new CyclicExtension());
        ext->init(std::move(min_poly), std::move(sigma_image));
        return ext;
    }

    /// Q(sqrt d) presented as Q[t]/(t^2 - d) with sigma(t) = -t.
    static ExtensionPtr quadratic(const Integer& d) {
        return create({Rational(-d), Rational(0), Rational(1)}, {Rational(0), Rational(-1)});
    }

    int degree() const noexcept { return degree_; }
    const Coefficients& min_poly() const noexcept { return min_poly_; }
    const Coefficients& sigma_image() const noexcept { return sigma_image_; }

    /// Squarefree part d of the discriminant, so that L = Q(sqrt d). Quadratic only.
    const std::optional<Integer>& disc_core() const noexcept { return disc_core_; }

    bool same_as(const CyclicExtension& other) const {
        return this == &other || (min_poly_ == other.min_poly_ && sigma_image_ == other.sigma_image_);
    }

    /// Product of two reduced coefficient vectors, reduced mod m.
    Coefficients multiply(const Coefficients& a, const Coefficients& b) const {
        const auto r = static_cast<std::size_t>(degree_);
        Coefficients full(2 * r - 1, Rational(0));
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
                if (b[j] != 0) full[i + j] += a[i] * b[j];
        }
        Coefficients out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(r));
        for (std::size_t k = r; k < full.size(); ++k) {
            if (full[k] == 0) continue;
            const auto& red = high_powers_[k - r];
            for (std::size_t i = 0; i < r; ++i) out[i] += full[k] * red[i];
        }
        return out;
    }

    /// sigma applied once to a reduced coefficient vector.
    Coefficients apply_sigma(const Coefficients& a) const {
        const auto r = static_cast<std::size_t>(degree_);
        Coefficients out(r, Rational(0));
        for (std::size_t k = 0; k < r; ++k) {
            if (a[k] == 0) continue;
            for (std::size_t i = 0; i < r; ++i) out[i] += a[k] * sigma_powers_[k][i];
        }
        return out;
    }

private:
    CyclicExtension() = default;

    void init(Coefficients min_poly, Coefficients sigma_image) {
        while (!min_poly.empty() && min_poly.back() == 0) min_poly.pop_back();
        if (min_poly.size() < 3) throw InvalidExtension("minimal polynomial must have degree at least 2");
        if (min_poly.back() != 1) throw InvalidExtension("minimal polynomial must be monic");
        for (const auto& c : min_poly)
            if (c.get_den() != 1) throw InvalidExtension("minimal polynomial must have integer coefficients");
        degree_ = static_cast<int>(min_poly.size()) - 1;
        const auto r = static_cast<std::size_t>(degree_);
        while (sigma_image.size() > r && sigma_image.back() == 0) sigma_image.pop_back();
        if (sigma_image.size() > r) throw InvalidExtension("sigma image must have degree below the field degree");
        sigma_image.resize(r, Rational(0));
        min_poly_ = std::move(min_poly);
        sigma_image_ = std::move(sigma_image);

        // t^r = -(m_0 + ... + m_{r-1} t^{r-1}); higher powers by shifting.
        high_powers_.assign(r - 1, Coefficients(r, Rational(0)));
        if (r >= 2) {
            for (std::size_t i = 0; i < r; ++i) high_powers_[0][i] = -min_poly_[i];
            for (std::size_t k = 1; k + 1 < r; ++k) {
                const auto& prev = high_powers_[k - 1];
                auto& cur = high_powers_[k];
                for (std::size_t i = 1; i < r; ++i) cur[i] = prev[i - 1];
                cur[0] = 0;
                const Rational top = prev[r - 1];
                for (std::size_t i = 0; i < r; ++i) cur[i] += top * high_powers_[0][i];
            }
        }

        // sigma(t^k) = s(t)^k.
        sigma_powers_.assign(r, Coefficients(r, Rational(0)));
        sigma_powers_[0][0] = 1;
        for (std::size_t k = 1; k < r; ++k) sigma_powers_[k] = multiply(sigma_powers_[k - 1], sigma_image_);

        // m(s(t)) must vanish in L.
        Coefficients value(r, Rational(0));
        Coefficients power(r, Rational(0));
        power[0] = 1;
        for (std::size_t k = 0; k <= r; ++k) {
            for (std::size_t i = 0; i < r; ++i) value[i] += min_poly_[k] * power[i];
            power = multiply(power, sigma_image_);
        }
        for (const auto& c : value)
            if (c != 0) throw InvalidExtension("sigma does not map t to a root of the minimal polynomial");

        // sigma must have order exactly r.
        Coefficients t(r, Rational(0));
        t[1] = 1;
        Coefficients image = t;
        for (int k = 1; k <= degree_; ++k) {
            image = apply_sigma(image);
            if ((image == t) != (k == degree_))
                throw InvalidExtension("sigma must have order exactly " + std::to_string(degree_));
        }

        if (degree_ == 2) {
            const Rational disc = min_poly_[1] * min_poly_[1] - 4 * min_poly_[0];
            const Integer d = disc.get_num();
            if (d >= 0 && mpz_perfect_square_p(d.get_mpz_t()))
                throw InvalidExtension("quadratic minimal polynomial is reducible");
            disc_core_ = detail::squarefree_kernel(d);
        }
    }

    int degree_ = 0;
    Coefficients min_poly_;
    Coefficients sigma_image_;
    std::vector<Coefficients> high_powers_;
    std::vector<Coefficients> sigma_powers_;
    std::optional<Integer> disc_core_;
};

/// An element of L, stored as reduced coordinates in the basis 1, t, ..., t^{r-1}.
class FieldElement {
public:
    FieldElement() = default;

    FieldElement(ExtensionPtr ext, Coefficients coeffs) : ext_(std::move(ext)), coeffs_(std::move(coeffs)) {
        const auto r = static_cast<std::size_t>(ext_->degree());
        while (coeffs_.size() > r && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.size() > r) coeffs_ = reduce_long(coeffs_);
        coeffs_.resize(r, Rational(0));
    }

    FieldElement(ExtensionPtr ext, const Rational& value)
        : FieldElement(std::move(ext), Coefficients{value}) {}

    static FieldElement zero(ExtensionPtr ext) { return FieldElement(std::move(ext), Rational(0)); }
    static FieldElement one(ExtensionPtr ext) { return FieldElement(std::move(ext), Rational(1)); }
    static FieldElement generator(ExtensionPtr ext) {
        return FieldElement(std::move(ext), Coefficients{Rational(0), Rational(1)});
    }

    const ExtensionPtr& ext() const noexcept { return ext_; }
    const Coefficients& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// The rational value; throws unless is_rational().
    Rational rational_value() const {
        if (!is_rational()) throw InternalInvariantViolation("field element is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    FieldElement operator-() const {
        Coefficients c = coeffs_;
        for (auto& x : c) x = -x;
        return {ext_, std::move(c)};
    }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        check_same(o);
        coeffs_ = ext_->multiply(coeffs_, o.coeffs_);
        return *this;
    }
    FieldElement& operator*=(const Rational& q) {
        for (auto& c : coeffs_) c *= q;
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
    friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.ext_->same_as(*b.ext_) && a.coeffs_ == b.coeffs_;
    }

    /// sigma^i(x); i is reduced mod r.
    FieldElement sigma(long i = 1) const {
        const long r = ext_->degree();
        long k = ((i % r) + r) % r;
        Coefficients c = coeffs_;
        for (; k > 0; --k) c = ext_->apply_sigma(c);
        return {ext_, std::move(c)};
    }

    /// Product of the Galois conjugates other than x itself.
    FieldElement conjugate_product() const {
        FieldElement out = one(ext_);
        for (long i = 1; i < ext_->degree(); ++i) out *= sigma(i);
        return out;
    }

    FieldElement inverse() const {
        if (is_zero()) throw Singular("division by zero in field");
        FieldElement adj = conjugate_product();
        const Rational n = (adj * *this).rational_value();
        return adj * Rational(1 / n);
    }

private:
    void check_same(const FieldElement& o) const {
        if (ext_ != o.ext_ && !ext_->same_as(*o.ext_))
            throw DimensionMismatch("field elements belong to different extensions");
    }

    Coefficients reduce_long(const Coefficients& c) const {
        const auto r = static_cast<std::size_t>(ext_->degree());
        Coefficients out(r, Rational(0));
        Coefficients power(r, Rational(0));
        power[0] = 1;
        Coefficients t(r, Rational(0));
        t[1] = 1;
        for (const auto& x : c) {
            for (std::size_t i = 0; i < r; ++i) out[i] += x * power[i];
            power = ext_->multiply(power, t);
        }
        return out;
    }

    ExtensionPtr ext_;
    Coefficients coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    os << '[';
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) os << (i ? ", " : "") << x[i];
    return os << ']';
}

/// sigma^i(x).
inline FieldElement apply_sigma(const FieldElement& x, long i) { return x.sigma(i); }

/// N_{L/Q}(x) = sigma^{r-1}(x) ... sigma(x) x.
inline Rational norm(const FieldElement& x) {
    FieldElement prod = x;
    for (long i = 1; i < x.ext()->degree(); ++i) prod = x.sigma(i) * prod;
    if (!prod.is_rational())
        throw InternalInvariantViolation("norm is not rational; the extension data is inconsistent");
    return prod.rational_value();
}

/// Tr_{L/Q}(x), the sum of the Galois conjugates.
inline Rational trace(const FieldElement& x) {
    FieldElement sum = x;
    for (long i = 1; i < x.ext()->degree(); ++i) sum += x.sigma(i);
    if (!sum.is_rational()) throw InternalInvariantViolation("trace is not rational");
    return sum.rational_value();
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_FIELD_HPP
