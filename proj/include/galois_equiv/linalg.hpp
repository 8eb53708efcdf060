#ifndef GALOIS_EQUIV_LINALG_HPP
#define GALOIS_EQUIV_LINALG_HPP

// Exact linear algebra.  Everything that needs elimination goes through one
// fraction-free (Bareiss) echelon routine over Q; statements over L are
// reduced to it by restriction of scalars.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/matrix.hpp"
#include "galois_equiv/rational.hpp"

namespace galois_equiv {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Appends a row; the first row fixes the column count.
    void append_row(std::span<const Rational> row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw DimensionMismatch("row length differs from column count");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Fraction-free row echelon form of a rational matrix (rows scaled to integers first).
struct Echelon {
    std::vector<std::vector<Integer>> rows;  // the first pivots.size() rows are the nonzero ones
    std::vector<std::size_t> pivots;         // pivot column of each nonzero row
    std::size_t cols = 0;
};

inline Echelon echelon(const RationalMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    e.rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        const Integer l = lcm_of_denominators(row.data(), row.data() + row.size());
        std::vector<Integer> ints(row.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const Rational scaled = row[j] * l;
            ints[j] = scaled.get_num();
            nonzero = nonzero || ints[j] != 0;
        }
        if (nonzero) e.rows.push_back(std::move(ints));
    }

    auto& a = e.rows;
    const std::size_t nrows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < e.cols && r < nrows; ++c) {
        // pivot of least height in this column
        std::size_t piv = nrows;
        std::size_t best = 0;
        for (std::size_t i = r; i < nrows; ++i) {
            if (a[i][c] == 0) continue;
            const std::size_t h = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
            if (piv == nrows || h < best) {
                piv = i;
                best = h;
            }
        }
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        const Integer& p = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            auto& row = a[i];
            const Integer f = row[c];
            for (std::size_t j = c + 1; j < e.cols; ++j) {
                Integer v = p * row[j];
                if (f != 0) v -= f * a[r][j];
                mpz_divexact(row[j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = p;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

inline std::size_t rank(const RationalMatrix& m) { return echelon(m).pivots.size(); }

/// Basis of {x : m x = 0}, each vector scaled to coprime integers.
inline std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
    const Echelon e = echelon(m);
    const std::size_t n = e.cols;
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[f] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const std::size_t pc = e.pivots[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0 && e.rows[k][j] != 0) s += Rational(e.rows[k][j]) * x[j];
            x[pc] = -s / Rational(e.rows[k][pc]);
        }
        Integer l = lcm_of_denominators(x.data(), x.data() + x.size());
        Integer g = 0;
        for (auto& v : x) {
            v *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        }
        if (g > 1)
            for (auto& v : x) v /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---- restriction of scalars ------------------------------------------------

/// Rational coordinates of a matrix: entries in row-major order, each as its r coefficients.
inline std::vector<Rational> coordinates(const Mat& a) {
    const auto r = static_cast<std::size_t>(a.ext()->degree());
    std::vector<Rational> out;
    out.reserve(a.rows() * a.cols() * r);
    for (const auto& e : a.entries()) out.insert(out.end(), e.coeffs().begin(), e.coeffs().end());
    return out;
}

inline Mat from_coordinates(const ExtensionPtr& ext, std::size_t rows, std::size_t cols,
                            std::span<const Rational> coords) {
    const auto r = static_cast<std::size_t>(ext->degree());
    if (coords.size() != rows * cols * r) throw DimensionMismatch("coordinate vector has the wrong length");
    Mat m(ext, rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
        m(k / cols, k % cols) = FieldElement(ext, Coefficients(coords.begin() + static_cast<std::ptrdiff_t>(k * r),
                                                               coords.begin() + static_cast<std::ptrdiff_t>((k + 1) * r)));
    return m;
}

/// The i-th unit of the rational coordinate basis of rows x cols matrices over L.
inline Mat coordinate_unit(const ExtensionPtr& ext, std::size_t rows, std::size_t cols, std::size_t i) {
    const auto r = static_cast<std::size_t>(ext->degree());
    Mat m(ext, rows, cols);
    Coefficients c(r, Rational(0));
    c[i % r] = 1;
    m((i / r) / cols, (i / r) % cols) = FieldElement(ext, std::move(c));
    return m;
}

/**
 * Matrix of a Q-linear map on rows x cols matrices over L, given as a
 * function returning the images (any number of matrices, concatenated).
 */
template <class F>
RationalMatrix linear_map_matrix(const ExtensionPtr& ext, std::size_t rows, std::size_t cols, F&& map) {
    const std::size_t dim = rows * cols * static_cast<std::size_t>(ext->degree());
    std::vector<std::vector<Rational>> columns;
    columns.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Rational> col;
        for (const Mat& img : map(coordinate_unit(ext, rows, cols, i))) {
            auto c = coordinates(img);
            col.insert(col.end(), c.begin(), c.end());
        }
        columns.push_back(std::move(col));
    }
    const std::size_t out_dim = columns.empty() ? 0 : columns[0].size();
    RationalMatrix m(out_dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < out_dim; ++i) m(i, j) = columns[j][i];
    return m;
}

/// Rational matrix of v -> A v on L^cols, in the coordinates used by coordinates().
inline RationalMatrix realize(const Mat& a) {
    return linear_map_matrix(a.ext(), a.cols(), 1, [&](const Mat& v) { return std::vector<Mat>{a * v}; });
}

/// Rank over L (rank over Q of the realization, divided by r).
inline std::size_t rank(const Mat& a) {
    return rank(realize(a)) / static_cast<std::size_t>(a.ext()->degree());
}

/**
 * Selects an L-basis from a list of matrices spanning an L-subspace over Q:
 * a matrix is kept when it is L-independent of those kept so far, tested by
 * the Q-rank of {M, tM, ..., t^{r-1}M}.
 */
inline std::vector<Mat> l_basis(const std::vector<Mat>& spanning) {
    std::vector<Mat> out;
    if (spanning.empty()) return out;
    const auto& ext = spanning.front().ext();
    const FieldElement t = FieldElement::generator(ext);
    RationalMatrix acc;
    for (const Mat& m : spanning) {
        RationalMatrix trial = acc;
        Mat power = m;
        for (int k = 0; k < ext->degree(); ++k) {
            trial.append_row(coordinates(power));
            power = t * power;
        }
        if (rank(trial) > rank(acc)) {
            out.push_back(m);
            acc = std::move(trial);
        }
    }
    return out;
}

/// Kernel over L of a matrix, as column vectors.
inline std::vector<Mat> kernel(const Mat& a) {
    std::vector<Mat> q_basis;
    for (const auto& v : kernel(realize(a))) q_basis.push_back(from_coordinates(a.ext(), a.cols(), 1, v));
    return l_basis(q_basis);
}

struct SylvesterSpace {
    std::vector<Mat> basis;   // basis over Q
    bool l_closed = false;    // closed under multiplication by t
    int degree = 1;

    std::size_t q_dimension() const { return basis.size(); }
    std::size_t l_dimension() const { return basis.size() / static_cast<std::size_t>(degree); }
};

/// {X : X A_k = B_k X for all k}, solved over Q on the r n^2 coordinates of X.
inline SylvesterSpace solve_sylvester_space(std::span<const std::pair<Mat, Mat>> pairs) {
    if (pairs.empty()) throw InvalidArgument("empty Sylvester system");
    const auto& ext = pairs.front().first.ext();
    const std::size_t n = pairs.front().first.rows();
    for (const auto& [a, b] : pairs)
        if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != n)
            throw DimensionMismatch("Sylvester system needs square matrices of one size");

    const RationalMatrix system = linear_map_matrix(ext, n, n, [&](const Mat& x) {
        std::vector<Mat> out;
        out.reserve(pairs.size());
        for (const auto& [a, b] : pairs) out.push_back(x * a - b * x);
        return out;
    });

    SylvesterSpace space;
    space.degree = ext->degree();
    for (const auto& v : kernel(system)) space.basis.push_back(from_coordinates(ext, n, n, v));

    // closure under t
    space.l_closed = true;
    if (!space.basis.empty()) {
        RationalMatrix span;
        for (const auto& b : space.basis) span.append_row(coordinates(b));
        const std::size_t dim = space.basis.size();
        const FieldElement t = FieldElement::generator(ext);
        for (const auto& b : space.basis) {
            RationalMatrix probe = span;
            probe.append_row(coordinates(t * b));
            if (rank(probe) != dim) {
                space.l_closed = false;
                break;
            }
        }
    }
    return space;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_LINALG_HPP
