#include <gtest/gtest.h>

#include <array>

#include "support.hpp"

using namespace galois_equiv;
using test_support::Gen;

namespace {

using Pair = std::array<long, 2>;  // a + b sqrt5

Mat over40(const ExtensionPtr& ext, const std::vector<std::vector<Pair>>& rows) {
    Mat m(ext, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = FieldElement(ext, Coefficients{make_rational(rows[i][j][0], 40), make_rational(rows[i][j][1], 40)});
    return m;
}

Mat paper_X(const ExtensionPtr& ext) {
    const FieldElement one = FieldElement::one(ext);
    const FieldElement abar(ext, Coefficients{Rational(1, 2), Rational(-1, 2)});  // (1 - sqrt5) / 2
    return Mat::from_rows(ext, {{one, -abar, abar}, {-abar, one, -abar}, {abar, -abar, one}});
}

Mat paper_Y(const ExtensionPtr& ext) {
    const auto e = [&](long a, long b) { return FieldElement(ext, Coefficients{a, b}); };
    return Mat::from_rows(ext, {{e(1, -2), e(3, -2), e(-3, 2)}, {e(3, -2), e(1, -2), e(3, -2)}, {e(-3, 2), e(3, -2), e(1, -2)}});
}

Representation conjugated(const Representation& rep, const Mat& a) {
    const Mat ai = inverse(a);
    std::vector<Mat> images;
    for (const auto& m : rep.images()) images.push_back(a * m * ai);
    return Representation(rep.group(), rep.ext(), std::move(images));
}

}  // namespace

TEST(A5, IntertwinerIsThePapersX) {
    const auto p = test_support::fixture("a5_3dim");
    const Mat x = compute_X(p.rep);
    EXPECT_EQ(x, paper_X(p.ext));
    EXPECT_EQ(matrix_norm(x), Mat::scalar(FieldElement(p.ext, Rational(-1)), 3));
    EXPECT_EQ(lambda_of(x), -1);
    const auto inv = lambda_invariant(p.rep);
    EXPECT_TRUE(inv.is_trivial);
    EXPECT_EQ(inv.lambda_canonical, 1);
}

TEST(A5, ReplayingThePapersYGivesTheDisplayedMatrices) {
    const auto p = test_support::fixture("a5_3dim");
    EquivarianceOptions opts;
    opts.replay_Y = paper_Y(p.ext);
    const auto cert = equivariant_form(p.rep, opts);
    ASSERT_EQ(cert.outcome, EquivarianceCertificate::Outcome::Constructed);
    // The paper rescales X by 2 - sqrt5.
    EXPECT_EQ(*cert.witness, FieldElement(p.ext, Coefficients{2, -1}));
    EXPECT_TRUE(matrix_norm(*cert.witness * cert.X).is_identity());
    EXPECT_EQ(inverse(apply_sigma_mat(*cert.Y, 1)) * *cert.Y, *cert.witness * cert.X);

    const auto& rp = *cert.rho_prime;
    const Mat a = Mat::from_rows(p.ext, {{FieldElement(p.ext, Rational(-1)), FieldElement::zero(p.ext), FieldElement::zero(p.ext)},
                                         {FieldElement::zero(p.ext), FieldElement::zero(p.ext), FieldElement::one(p.ext)},
                                         {FieldElement::zero(p.ext), FieldElement::one(p.ext), FieldElement::zero(p.ext)}});
    // The paper's (153) and (253), entries a + b sqrt5 over 40.
    const Mat b = over40(p.ext, {{Pair{10, -4}, Pair{-5, 19}, Pair{25, -9}},
                                 {Pair{-10, -4}, Pair{25, 9}, Pair{-5, -19}},
                                 {Pair{-50, 0}, Pair{35, -5}, Pair{-35, -5}}});
    const Mat c = over40(p.ext, {{Pair{10, 4}, Pair{-5, -19}, Pair{25, 9}},
                                 {Pair{-10, 4}, Pair{25, -9}, Pair{-5, 19}},
                                 {Pair{-50, 0}, Pair{35, 5}, Pair{-35, 5}}});
    EXPECT_EQ(rp.images()[0], a);
    EXPECT_EQ(rp.images()[1], b);
    const auto& names = p.rep.group().gen_names();
    EXPECT_EQ(evaluate_word(rp, parse_word("a b b a b a b b", names)), c);
    EXPECT_EQ(apply_sigma_mat(b, 1), c);

    const auto expected = io::load_json(test_support::fixture_path("a5_expected_rho_prime.json"));
    EXPECT_EQ(io::matrix_from_json(expected["b"], p.ext, "/b"), b);
    EXPECT_EQ(io::matrix_from_json(expected["c"], p.ext, "/c"), c);
}

TEST(A5, RelationsOnTheEquivariantForm) {
    const auto p = test_support::fixture("a5_3dim");
    const auto cert = equivariant_form(p.rep);
    ASSERT_EQ(cert.outcome, EquivarianceCertificate::Outcome::Constructed);
    const auto& rp = *cert.rho_prime;
    const auto& names = p.rep.group().gen_names();
    for (const char* w : {"a a", "b b b", "a b a b a b a b a b"})
        EXPECT_TRUE(evaluate_word(rp, parse_word(w, names)).is_identity()) << w;
    const Mat c = evaluate_word(rp, parse_word("a b b a b a b b", names));
    const Mat a = rp.images()[0];
    EXPECT_TRUE((c * c * c).is_identity());
    Mat ac5 = Mat::identity(p.ext, 3);
    for (int i = 0; i < 5; ++i) ac5 = ac5 * a * c;
    EXPECT_TRUE(ac5.is_identity());
    EXPECT_EQ(c, apply_sigma_mat(rp.images()[1], 1));
    EXPECT_TRUE(verify_certificate(cert, p.rep).passed());
}

TEST(A5, CertificateIsDeterministicInTheSeed) {
    const auto p = test_support::fixture("a5_3dim");
    EquivarianceOptions o1, o2;
    o1.seed = o2.seed = 12345;
    EXPECT_EQ(*equivariant_form(p.rep, o1).Y, *equivariant_form(p.rep, o2).Y);
}

TEST(A5, TamperedCertificatesFailVerification) {
    const auto p = test_support::fixture("a5_3dim");
    const auto cert = equivariant_form(p.rep);

    auto bad_y = cert;
    bad_y.Y = *cert.Y * FieldElement(p.ext, Coefficients{0, 1});
    EXPECT_FALSE(verify_certificate(bad_y, p.rep).passed());

    auto bad_lambda = cert;
    bad_lambda.lambda_rep = 2;
    EXPECT_FALSE(verify_certificate(bad_lambda, p.rep).passed());

    auto bad_rho = cert;
    auto images = cert.rho_prime->images();
    images[0] = images[0] * FieldElement(p.ext, Rational(-1));
    bad_rho.rho_prime = Representation(p.rep.group(), p.ext, images);
    EXPECT_FALSE(verify_certificate(bad_rho, p.rep).passed());

    auto bad_x = cert;
    bad_x.X = cert.X * FieldElement(p.ext, Rational(2));
    EXPECT_FALSE(verify_certificate(bad_x, p.rep).passed());
}

TEST(Obstruction, TwoA7) {
    const auto p = test_support::fixture("2a7_4dim");
    const Mat x = compute_X(p.rep);
    EXPECT_EQ(lambda_of(x), Rational(-1, 4));
    const auto inv = lambda_invariant(p.rep);
    EXPECT_FALSE(inv.is_trivial);
    EXPECT_EQ(inv.lambda_canonical, -2);
    EXPECT_FALSE(is_norm(-2, *p.ext));
    const auto cert = equivariant_form(p.rep);
    EXPECT_EQ(cert.outcome, EquivarianceCertificate::Outcome::Obstructed);
    EXPECT_FALSE(cert.Y);
    EXPECT_TRUE(verify_certificate(cert, p.rep).passed());
    // No witness can exist: a claimed one is rejected.
    EXPECT_THROW(classify_lambda(Rational(-1, 4), *p.ext, FieldElement(p.ext, Coefficients{0, 1})), BadWitness);
}

TEST(Trivial, C3Inversion) {
    const auto p = test_support::fixture("c3_inversion");
    EXPECT_EQ(lambda_of(compute_X(p.rep)), 1);
    const auto cert = equivariant_form(p.rep);
    ASSERT_EQ(cert.outcome, EquivarianceCertificate::Outcome::Constructed);
    EXPECT_EQ(cert.Y->rows(), 1u);
    // sigma(rho'(g)) = rho'(g^-1) since tau inverts g.
    const auto& rp = *cert.rho_prime;
    EXPECT_EQ(apply_sigma_mat(rp.images()[0], 1), rp.image(0, -1));
}

TEST(Equivariance, NotEquivalentIsReported) {
    // g -> omega over Q(sqrt-3) with tau = id: sigma rho is the conjugate character.
    const auto ext = CyclicExtension::quadratic(-3);
    auto g = GroupData::parse({"g"}, {"g g g"}, {{"g", "g"}}, 2);
    const FieldElement omega(ext, Coefficients{Rational(-1, 2), Rational(1, 2)});
    const Representation rep(g, ext, {Mat::scalar(omega, 1)});
    EXPECT_TRUE(check_relations(rep).all_hold());
    EXPECT_THROW(compute_X(rep), NotEquivalent);
}

TEST(Equivariance, ReducibleInputIsReported) {
    const auto ext = CyclicExtension::quadratic(5);
    auto g = GroupData::parse({"g"}, {"g g"}, {{"g", "g"}}, 2);
    const Representation rep(g, ext, {Mat::from_rows(ext, {{FieldElement::one(ext), FieldElement::zero(ext)},
                                                           {FieldElement::zero(ext), FieldElement(ext, Rational(-1))}})});
    EXPECT_THROW(compute_X(rep), NotIrreducible);
}

TEST(Equivariance, HigherDegreeNeedsAWitness) {
    const auto ext = test_support::cubic_field();
    auto g = GroupData::parse({"g"}, {"g"}, {{"g", "g"}}, 3);
    const Representation rep(g, ext, {Mat::identity(ext, 1)});
    EXPECT_THROW(lambda_invariant(rep), Unsupported);
    const auto inv = lambda_invariant(rep, FieldElement::one(ext));
    EXPECT_TRUE(inv.is_trivial);
    EquivarianceOptions opts;
    opts.witness = FieldElement::one(ext);
    const auto cert = equivariant_form(rep, opts);
    EXPECT_EQ(cert.outcome, EquivarianceCertificate::Outcome::Constructed);
}

TEST(Hilbert90Property, RandomCocycles) {
    Gen gen(501);
    for (const auto& ext : {CyclicExtension::quadratic(5), CyclicExtension::quadratic(-7), test_support::cubic_field()}) {
        for (int i = 0; i < 8; ++i) {
            const auto n = static_cast<std::size_t>(gen.integer(1, 4));
            const Mat z = gen.invertible(ext, n);
            const Mat x = inverse(apply_sigma_mat(z, 1)) * z;
            ASSERT_TRUE(matrix_norm(x).is_identity());
            const auto result = hilbert90(x, static_cast<std::uint64_t>(gen.integer(1, 1'000'000)));
            EXPECT_EQ(inverse(apply_sigma_mat(result.Y, 1)) * result.Y, x);
            EXPECT_GE(result.attempts, 1);
            EXPECT_LE(result.attempts, 64);
        }
    }
}

TEST(Hilbert90, MinusIdentityNeedsFieldCoefficients) {
    // X = -I has N(X) = I over Q(sqrt5); Y = sqrt5 I solves it.
    const auto ext = CyclicExtension::quadratic(5);
    const Mat x = Mat::scalar(FieldElement(ext, Rational(-1)), 2);
    const auto result = hilbert90(x, 1);
    EXPECT_EQ(inverse(apply_sigma_mat(result.Y, 1)) * result.Y, x);
}

TEST(Hilbert90, RejectsNonCocycles) {
    const auto ext = CyclicExtension::quadratic(5);
    EXPECT_THROW(hilbert90(Mat::scalar(FieldElement(ext, Rational(2)), 2), 1), InvalidArgument);
    EXPECT_THROW(hilbert90(Mat::identity(ext, 2), 1, 0), BudgetExhausted);
}

TEST(TheoremOneProperty, ConjugationAndTwistPreserveTheClass) {
    Gen gen(502);
    for (const char* name : {"a5_3dim", "c3_inversion", "2a7_4dim"}) {
        const auto p = test_support::fixture(name);
        const auto base = lambda_invariant(p.rep);
        for (int i = 0; i < 3; ++i) {
            const auto rep = conjugated(p.rep, gen.invertible(p.ext, p.rep.dim()));
            const FieldElement mu = gen.nonzero_element(p.ext);
            const Mat x = mu * compute_X(rep);
            const auto cls = classify_lambda(lambda_of(x), *p.ext);
            EXPECT_EQ(lambda_of(x), norm(mu) * lambda_of(compute_X(rep)));
            EXPECT_EQ(cls.lambda_canonical, base.lambda_canonical) << name;
            EXPECT_EQ(cls.is_trivial, base.is_trivial) << name;
            EXPECT_EQ(cls.is_trivial, schur_index(rep).index == 1) << name;
        }
    }
}
