#ifndef GALOIS_EQUIV_MATRIX_HPP
#define GALOIS_EQUIV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"

namespace galois_equiv {

/// Dense row-major matrix over a cyclic extension L.
class Mat {
public:
    Mat() = default;

    Mat(ExtensionPtr ext, std::size_t rows, std::size_t cols)
        : ext_(std::move(ext)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(ext_)) {}

    static Mat identity(const ExtensionPtr& ext, std::size_t n) { return scalar(FieldElement::one(ext), n); }

    static Mat scalar(const FieldElement& x, std::size_t n) {
        Mat m(x.ext(), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = x;
        return m;
    }

    static Mat from_rows(const ExtensionPtr& ext, const std::vector<std::vector<FieldElement>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Mat m(ext, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const ExtensionPtr& ext() const noexcept { return ext_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<FieldElement>& entries() const noexcept { return data_; }

    Mat& operator+=(const Mat& o) {
        check_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Mat& operator*=(const FieldElement& x) {
        for (auto& e : data_) e *= x;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const FieldElement& x, Mat a) { return a *= x; }
    friend Mat operator*(Mat a, const FieldElement& x) { return a *= x; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product of incompatible shapes");
        Mat out(a.ext_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const FieldElement& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// The scalar x when this is x * I.
    std::optional<FieldElement> scalar_value() const {
        if (!is_square() || rows_ == 0) return std::nullopt;
        const FieldElement& x = (*this)(0, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i == j ? !((*this)(i, j) == x) : !(*this)(i, j).is_zero()) return std::nullopt;
        return x;
    }

    bool is_identity() const {
        auto s = scalar_value();
        return s && *s == FieldElement::one(ext_);
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat out(ext_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

private:
    void check_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    ExtensionPtr ext_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "\n " : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
}

/// Entrywise sigma^i.
inline Mat apply_sigma_mat(const Mat& a, long i) {
    Mat out(a.ext(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).sigma(i);
    return out;
}

/// N(A) = sigma^{r-1}(A) ... sigma(A) A.
inline Mat matrix_norm(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("norm of a non-square matrix");
    Mat out = a;
    for (long i = 1; i < a.ext()->degree(); ++i) out = apply_sigma_mat(a, i) * out;
    return out;
}

inline FieldElement trace(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("trace of a non-square matrix");
    FieldElement t = FieldElement::zero(a.ext());
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

/// Exact inverse by Gauss-Jordan elimination over L.
inline Mat inverse(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Mat work = a;
    Mat inv = Mat::identity(a.ext(), n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && work(piv, c).is_zero()) ++piv;
        if (piv == n) throw Singular("matrix is not invertible");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(piv, j), work(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        const FieldElement p = work(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work(c, j) *= p;
            inv(c, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work(i, c).is_zero()) continue;
            const FieldElement f = work(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!work(c, j).is_zero()) work(i, j) -= f * work(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_MATRIX_HPP
