#ifndef GALOIS_EQUIV_EQUIVARIANCE_HPP
#define GALOIS_EQUIV_EQUIVARIANCE_HPP

// Conjugating rho into Galois-equivariant form: X, lambda, Y and rho'.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/linalg.hpp"
#include "galois_equiv/matrix.hpp"
#include "galois_equiv/number_theory.hpp"
#include "galois_equiv/rep.hpp"

namespace galois_equiv {

/// Images of the generators under sigma o rho o tau^{-1}.
inline std::vector<Mat> twisted_images(const Representation& rep) {
    std::vector<Mat> out;
    const auto& g = rep.group();
    for (std::size_t i = 0; i < g.generator_count(); ++i)
        out.push_back(apply_sigma_mat(evaluate_word(rep, g.apply_tau_inverse(g.generator_word(i))), 1));
    return out;
}

/// Scales a nonzero matrix so that its first nonzero entry (row-major) is 1.
inline Mat normalize_first_nonzero(const Mat& m) {
    for (const auto& e : m.entries())
        if (!e.is_zero()) return e.inverse() * m;
    throw InvalidArgument("cannot normalize the zero matrix");
}

/**
 * The intertwiner X with X rho(g) X^{-1} = sigma(rho(tau^{-1} g)) for all
 * generators, normalized so that its first nonzero entry is 1.  The solution
 * space must be one-dimensional over L.
 */
inline Mat compute_X(const Representation& rep) {
    const auto twisted = twisted_images(rep);
    std::vector<std::pair<Mat, Mat>> pairs;
    for (std::size_t i = 0; i < twisted.size(); ++i) pairs.emplace_back(rep.images()[i], twisted[i]);
    const SylvesterSpace space = solve_sylvester_space(pairs);
    if (space.basis.empty())
        throw NotEquivalent("sigma o rho o tau^-1 is not equivalent to rho (tau and sigma act differently on the character)");
    if (!space.l_closed) throw InternalInvariantViolation("intertwiner space is not an L-subspace");
    if (space.l_dimension() >= 2)
        throw NotIrreducible("intertwiner space has L-dimension " + std::to_string(space.l_dimension()) +
                             "; rho is not absolutely irreducible");
    return normalize_first_nonzero(space.basis.front());
}

/// The rational scalar lambda with N(X) = lambda I.
inline Rational lambda_of(const Mat& X) {
    const auto s = matrix_norm(X).scalar_value();
    if (!s) throw InternalInvariantViolation("N(X) is not a scalar matrix");
    if (!s->is_rational()) throw InternalInvariantViolation("N(X) = lambda I with lambda not fixed by sigma");
    const Rational lam = s->rational_value();
    if (lam == 0) throw InternalInvariantViolation("N(X) is zero; X is singular");
    return lam;
}

struct LambdaInvariant {
    Rational lambda_rep;
    Integer lambda_canonical;
    bool is_trivial = false;
};

/**
 * Classifies lambda in Q^x / N(L^x).  Quadratic fields are decided by local
 * symbols; for larger degree only a supplied witness mu with
 * N(mu) lambda = 1 can certify triviality.
 */
inline LambdaInvariant classify_lambda(const Rational& lam, const CyclicExtension& ext,
                                       const std::optional<FieldElement>& witness = std::nullopt) {
    LambdaInvariant out{lam, 0, false};
    if (witness) {
        if (norm(*witness) * lam != 1)
            throw BadWitness("N(mu) * lambda = " + Rational(norm(*witness) * lam).get_str() + ", expected 1");
        out.is_trivial = true;
        out.lambda_canonical = 1;
        return out;
    }
    if (ext.degree() != 2)
        throw Unsupported("lambda classification for degree " + std::to_string(ext.degree()) +
                          " needs a user-supplied witness");
    out.is_trivial = is_norm(lam, ext);
    out.lambda_canonical = canonical_lambda(lam, ext);
    return out;
}

inline LambdaInvariant lambda_invariant(const Representation& rep,
                                        const std::optional<FieldElement>& witness = std::nullopt) {
    return classify_lambda(lambda_of(compute_X(rep)), *rep.ext(), witness);
}

/// mu X, required to satisfy N(mu X) = I.
inline Mat rescale_X(const Mat& X, const FieldElement& mu) {
    Mat out = mu * X;
    if (!matrix_norm(out).is_identity()) throw BadWitness("N(mu X) is not the identity");
    return out;
}

/// Deterministic source of candidate entries in [-3, 3].
class CandidateStream {
public:
    explicit CandidateStream(std::uint64_t seed) : engine_(static_cast<std::uint_fast32_t>(seed % 2147483646u) + 1u) {}

    long next() { return static_cast<long>(engine_() % 7) - 3; }

    Mat matrix(const ExtensionPtr& ext, std::size_t n) {
        Mat m(ext, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Coefficients c(static_cast<std::size_t>(ext->degree()));
                for (auto& x : c) x = next();
                m(i, j) = FieldElement(ext, std::move(c));
            }
        return m;
    }

private:
    std::minstd_rand engine_;
};

struct Hilbert90Result {
    Mat Y;
    int attempts = 0;
};

/// B_0 = I, B_{i+1} = sigma(B_i) X, for i = 0 .. r.
inline std::vector<Mat> cocycle_products(const Mat& X) {
    std::vector<Mat> b{Mat::identity(X.ext(), X.rows())};
    for (int i = 0; i < X.ext()->degree(); ++i) b.push_back(apply_sigma_mat(b.back(), 1) * X);
    return b;
}

/**
 * Solves sigma(Y)^{-1} Y = X for X with N(X) = I.  Each attempt draws C and
 * forms Y = sum_i sigma^i(C) B_i; then sigma(Y) X = Y because B_r = N(X) = I.
 * The first invertible Y is returned.
 */
inline Hilbert90Result hilbert90(const Mat& X, std::uint64_t seed, int budget = 64) {
    if (!matrix_norm(X).is_identity()) throw InvalidArgument("hilbert90 needs N(X) = I");
    const auto& ext = X.ext();
    const std::size_t n = X.rows();
    const auto b = cocycle_products(X);
    CandidateStream stream(seed);
    for (int attempt = 1; attempt <= budget; ++attempt) {
        const Mat c = stream.matrix(ext, n);
        Mat y(ext, n, n);
        for (int i = 0; i < ext->degree(); ++i) y += apply_sigma_mat(c, i) * b[static_cast<std::size_t>(i)];
        try {
            const Mat check = inverse(apply_sigma_mat(y, 1)) * y;
            if (!(check == X)) throw InternalInvariantViolation("constructed Y does not satisfy sigma(Y)^-1 Y = X");
            return {std::move(y), attempt};
        } catch (const Singular&) {
        }
    }
    throw BudgetExhausted("no invertible Y within " + std::to_string(budget) + " draws");
}

struct EquivarianceOptions {
    std::uint64_t seed = 1;
    int budget = 64;
    WitnessSearch witness_search;
    std::optional<FieldElement> witness;  // user-supplied mu with N(mu) lambda = 1
    std::optional<Mat> replay_Y;          // use this Y instead of hilbert90
};

struct EquivarianceCertificate {
    enum class Outcome { Constructed, Obstructed, Unconstructed };

    Outcome outcome = Outcome::Unconstructed;
    Mat X;
    Rational lambda_rep;
    Integer lambda_canonical;
    bool is_trivial = false;
    std::optional<FieldElement> witness;
    std::optional<Mat> Y;
    std::optional<Representation> rho_prime;
    int hilbert90_attempts = 0;
    std::string note;
};

inline const char* to_string(EquivarianceCertificate::Outcome o) {
    switch (o) {
        case EquivarianceCertificate::Outcome::Constructed: return "constructed";
        case EquivarianceCertificate::Outcome::Obstructed: return "obstructed";
        case EquivarianceCertificate::Outcome::Unconstructed: return "unconstructed";
    }
    return "?";
}

/// Y rho Y^{-1} on the generators.
inline Representation conjugate(const Representation& rep, const Mat& Y) {
    const Mat y_inv = inverse(Y);
    std::vector<Mat> images;
    for (const auto& m : rep.images()) images.push_back(Y * m * y_inv);
    return Representation(rep.group(), rep.ext(), std::move(images));
}

struct VerificationReport {
    std::vector<CheckItem> items;
    bool passed() const {
        for (const auto& i : items)
            if (!i.holds) return false;
        return true;
    }
};

/**
 * Re-checks every claim of a certificate by direct multiplication, without
 * reference to how it was produced.
 */
inline VerificationReport verify_certificate(const EquivarianceCertificate& cert, const Representation& rep) {
    VerificationReport report;
    const auto& g = rep.group();
    const auto twisted = twisted_images(rep);

    bool intertwines = cert.X.rows() == rep.dim() && cert.X.is_square();
    for (std::size_t i = 0; intertwines && i < twisted.size(); ++i)
        intertwines = cert.X * rep.images()[i] == twisted[i] * cert.X;
    report.items.push_back({"X rho(g) = sigma(rho(tau^-1 g)) X on every generator", intertwines});
    if (!intertwines) return report;

    const auto norm_x = matrix_norm(cert.X).scalar_value();
    report.items.push_back(
        {"N(X) = lambda_rep I", norm_x && norm_x->is_rational() && norm_x->rational_value() == cert.lambda_rep});

    if (rep.ext()->degree() == 2 && cert.lambda_rep != 0) {
        report.items.push_back({"is_trivial agrees with the norm decision", cert.is_trivial == is_norm(cert.lambda_rep, *rep.ext())});
        report.items.push_back({"lambda_canonical represents the class of lambda_rep",
                                cert.lambda_canonical == canonical_lambda(cert.lambda_rep, *rep.ext())});
    }

    std::optional<Mat> rescaled;
    if (cert.witness) {
        rescaled = *cert.witness * cert.X;
        report.items.push_back({"N(mu X) = I", matrix_norm(*rescaled).is_identity()});
    }
    if (cert.Y) {
        bool ok = rescaled.has_value();
        if (ok) {
            try {
                ok = inverse(apply_sigma_mat(*cert.Y, 1)) * *cert.Y == *rescaled;
            } catch (const Singular&) {
                ok = false;
            }
        }
        report.items.push_back({"sigma(Y)^-1 Y = mu X", ok});
    }
    if (cert.rho_prime) {
        const auto& rp = *cert.rho_prime;
        bool conj = cert.Y.has_value() && rp.images().size() == rep.images().size();
        for (std::size_t i = 0; conj && i < rep.images().size(); ++i)
            conj = rp.images()[i] * *cert.Y == *cert.Y * rep.images()[i];
        report.items.push_back({"rho' = Y rho Y^-1", conj});

        bool diagram = true;
        for (std::size_t i = 0; diagram && i < g.generator_count(); ++i)
            diagram = apply_sigma_mat(evaluate_word(rp, g.apply_tau_inverse(g.generator_word(i))), 1) == rp.images()[i];
        report.items.push_back({"sigma o rho' o tau^-1 = rho' on every generator", diagram});
        report.items.push_back({"relations hold on rho'", check_relations(rp).all_hold()});
    }
    return report;
}

/**
 * Full pipeline X -> lambda -> mu -> Y -> rho'.  A nontrivial lambda gives an
 * Obstructed certificate; a trivial lambda without a witness found in budget
 * gives Unconstructed.  The certificate is verified before it is returned.
 */
inline EquivarianceCertificate equivariant_form(const Representation& rep, const EquivarianceOptions& opts = {}) {
    EquivarianceCertificate cert;
    cert.X = compute_X(rep);
    cert.lambda_rep = lambda_of(cert.X);

    std::optional<FieldElement> mu = opts.witness;
    if (opts.replay_Y) {
        const Mat& y = *opts.replay_Y;
        if (y.rows() != rep.dim() || !y.is_square()) throw DimensionMismatch("replayed Y has the wrong size");
        const Mat z = inverse(apply_sigma_mat(y, 1)) * y;
        std::optional<FieldElement> nu;
        for (std::size_t k = 0; k < z.entries().size(); ++k)
            if (!cert.X.entries()[k].is_zero()) {
                nu = z.entries()[k] / cert.X.entries()[k];
                break;
            }
        if (!nu || !(*nu * cert.X == z)) throw BadWitness("sigma(Y)^-1 Y is not a multiple of X");
        mu = nu;
    }

    const auto cls = classify_lambda(cert.lambda_rep, *rep.ext(), mu);
    cert.lambda_canonical = cls.lambda_canonical;
    cert.is_trivial = cls.is_trivial;
    if (!cert.is_trivial) {
        cert.outcome = EquivarianceCertificate::Outcome::Obstructed;
        cert.note = "lambda is not a norm; no equivariant conjugate exists";
        return cert;
    }

    if (!mu) {
        try {
            mu = norm_witness(1 / cert.lambda_rep, rep.ext(), opts.witness_search);
        } catch (const NoWitnessFound& e) {
            cert.outcome = EquivarianceCertificate::Outcome::Unconstructed;
            cert.note = e.what();
            return cert;
        }
    }
    cert.witness = mu;
    const Mat rescaled = rescale_X(cert.X, *mu);

    if (opts.replay_Y) {
        cert.Y = *opts.replay_Y;
    } else {
        auto h90 = hilbert90(rescaled, opts.seed, opts.budget);
        cert.Y = std::move(h90.Y);
        cert.hilbert90_attempts = h90.attempts;
    }
    cert.rho_prime = conjugate(rep, *cert.Y);
    cert.outcome = EquivarianceCertificate::Outcome::Constructed;

    const auto check = verify_certificate(cert, rep);
    for (const auto& item : check.items)
        if (!item.holds) throw InternalInvariantViolation("certificate check failed: " + item.label);
    return cert;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_EQUIVARIANCE_HPP
