#include <gtest/gtest.h>

#include <array>

#include "support.hpp"

using namespace galois_equiv;
using test_support::Gen;

namespace {

// Plain Gaussian elimination over Q, the oracle for Bareiss.
std::size_t naive_rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

RationalMatrix random_low_rank(Gen& gen, std::size_t rows, std::size_t cols, std::size_t k) {
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k)), b(k, std::vector<Rational>(cols));
    for (auto& row : a)
        for (auto& x : row) x = gen.rational(30, 7);
    for (auto& row : b)
        for (auto& x : row) x = gen.rational(30, 7);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = 0; l < k; ++l) m(i, j) += a[i][l] * b[l][j];
    return m;
}

std::vector<std::vector<Rational>> as_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

// S3 on the sum-zero plane: s = (12), c = (123).
std::pair<Mat, Mat> s3_standard(const ExtensionPtr& ext) {
    const auto q = [&](long v) { return FieldElement(ext, Rational(v)); };
    return {Mat::from_rows(ext, {{q(0), q(1)}, {q(1), q(0)}}), Mat::from_rows(ext, {{q(0), q(-1)}, {q(1), q(-1)}})};
}

}  // namespace

TEST(Bareiss, RankAgreesWithGaussianElimination) {
    Gen gen(301);
    for (int i = 0; i < 60; ++i) {
        const auto rows = static_cast<std::size_t>(gen.integer(1, 8));
        const auto cols = static_cast<std::size_t>(gen.integer(1, 8));
        const auto k = static_cast<std::size_t>(gen.integer(0, 6));
        const RationalMatrix m = random_low_rank(gen, rows, cols, k);
        const std::size_t r = rank(m);
        EXPECT_EQ(r, naive_rank(as_rows(m)));
        EXPECT_LE(r, std::min({rows, cols, k}));
    }
}

TEST(Bareiss, HilbertMatrixHasFullRank) {
    for (std::size_t n : {4u, 8u, 12u}) {
        RationalMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = make_rational(1, static_cast<long>(i + j + 1));
        EXPECT_EQ(rank(h), n);
    }
}

TEST(Bareiss, KernelIsPrimitiveAndComplete) {
    Gen gen(302);
    for (int i = 0; i < 40; ++i) {
        const auto rows = static_cast<std::size_t>(gen.integer(1, 6));
        const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
        const RationalMatrix m = random_low_rank(gen, rows, cols, static_cast<std::size_t>(gen.integer(0, 5)));
        const auto ker = kernel(m);
        EXPECT_EQ(ker.size(), cols - rank(m));
        RationalMatrix stacked(0, cols);
        for (const auto& v : ker) {
            Integer g = 0;
            for (const auto& x : v) {
                EXPECT_EQ(x.get_den(), 1);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
            }
            EXPECT_EQ(g, 1);
            for (std::size_t r = 0; r < rows; ++r) {
                Rational dot = 0;
                for (std::size_t c = 0; c < cols; ++c) dot += m(r, c) * v[c];
                EXPECT_EQ(dot, 0);
            }
            stacked.append_row(v);
        }
        EXPECT_EQ(rank(stacked), ker.size());
    }
}

TEST(LinalgOverL, RankAndKernelByRestrictionOfScalars) {
    Gen gen(303);
    for (const auto& ext : {CyclicExtension::quadratic(5), CyclicExtension::quadratic(-7), test_support::cubic_field()}) {
        for (int i = 0; i < 10; ++i) {
            const auto n = static_cast<std::size_t>(gen.integer(1, 4));
            const auto k = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n)));
            const Mat a = gen.matrix(ext, n, k) * gen.matrix(ext, k, n);
            const std::size_t r = rank(a);
            EXPECT_LE(r, k);
            const auto ker = kernel(a);
            EXPECT_EQ(ker.size(), n - r);
            for (const auto& v : ker) EXPECT_TRUE((a * v).is_zero());
        }
    }
}

TEST(LinalgOverL, InverseAndSingularity) {
    Gen gen(304);
    for (const auto& ext : {CyclicExtension::quadratic(5), test_support::cubic_field()}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const Mat a = gen.invertible(ext, n);
            EXPECT_TRUE((a * inverse(a)).is_identity());
            EXPECT_TRUE((inverse(a) * a).is_identity());
        }
        const Mat v = gen.matrix(ext, 3, 1);
        EXPECT_THROW(inverse(v * gen.matrix(ext, 1, 3)), Singular);
    }
}

TEST(MatrixNorm, IsRotationInvariantWhenScalar) {
    Gen gen(305);
    const auto ext = test_support::cubic_field();
    // X = sigma(Z)^-1 Z has N(X) = I.
    for (int i = 0; i < 5; ++i) {
        const Mat z = gen.invertible(ext, 2);
        const Mat x = inverse(apply_sigma_mat(z, 1)) * z;
        EXPECT_TRUE(matrix_norm(x).is_identity());
        EXPECT_TRUE(matrix_norm(apply_sigma_mat(x, 1)).is_identity());
    }
}

TEST(Sylvester, SchurLemmaOnS3) {
    const auto ext = CyclicExtension::quadratic(5);
    const auto [s, c] = s3_standard(ext);
    const std::array<std::pair<Mat, Mat>, 2> same{{{s, s}, {c, c}}};
    const auto space = solve_sylvester_space(same);
    EXPECT_EQ(space.l_dimension(), 1u);
    EXPECT_TRUE(space.l_closed);

    // Conjugating by Y gives an equivalent representation; the intertwiner is Y up to scalars.
    Gen gen(306);
    const Mat y = gen.invertible(ext, 2);
    const Mat yi = inverse(y);
    const std::array<std::pair<Mat, Mat>, 2> conj{{{s, y * s * yi}, {c, y * c * yi}}};
    const auto cs = solve_sylvester_space(conj);
    ASSERT_EQ(cs.l_dimension(), 1u);
    const Mat x = cs.basis.front();
    const auto ratio = x(0, 0).is_zero() ? x(0, 1) / y(0, 1) : x(0, 0) / y(0, 0);
    EXPECT_EQ(x, ratio * y);

    // The trivial and sign representations are inequivalent.
    const Mat one = Mat::identity(ext, 1), minus = Mat::scalar(FieldElement(ext, Rational(-1)), 1);
    const std::array<std::pair<Mat, Mat>, 2> triv_sign{{{one, minus}, {one, one}}};
    EXPECT_EQ(solve_sylvester_space(triv_sign).q_dimension(), 0u);
}

TEST(Sylvester, RejectsBadShapes) {
    const auto ext = CyclicExtension::quadratic(5);
    const std::vector<std::pair<Mat, Mat>> none;
    EXPECT_THROW(solve_sylvester_space(none), InvalidArgument);
    const std::array<std::pair<Mat, Mat>, 1> bad{{{Mat::identity(ext, 2), Mat::identity(ext, 3)}}};
    EXPECT_THROW(solve_sylvester_space(bad), DimensionMismatch);
}
