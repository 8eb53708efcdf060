#ifndef GALOIS_EQUIV_INDUCED_HPP
#define GALOIS_EQUIV_INDUCED_HPP

// ind_{H,G}(rho) for G = H x| <tau>, its endomorphism algebra and the Schur index.
//
// tau acts semilinearly: v -> P sigma(v) with P the block cyclic shift.  An
// element of the image is therefore a pair (A, i) acting as v -> A sigma^i(v),
// multiplied by (A, i)(B, j) = (A sigma^i(B), i + j mod r).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois_equiv/equivariance.hpp"
#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/linalg.hpp"
#include "galois_equiv/matrix.hpp"
#include "galois_equiv/number_theory.hpp"
#include "galois_equiv/rep.hpp"

namespace galois_equiv {

struct TwistedElement {
    Mat matrix;
    long sigma_power = 0;

    friend TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
        const long r = a.matrix.ext()->degree();
        return {a.matrix * apply_sigma_mat(b.matrix, a.sigma_power), (a.sigma_power + b.sigma_power) % r};
    }

    friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
        return a.sigma_power == b.sigma_power && a.matrix == b.matrix;
    }
};

inline TwistedElement inverse(const TwistedElement& e) {
    const long r = e.matrix.ext()->degree();
    const long back = (r - e.sigma_power) % r;
    return {apply_sigma_mat(inverse(e.matrix), back), back};
}

/// Trace of the underlying matrix; for elements outside H the matrix permutes blocks and this is 0.
inline FieldElement induced_trace(const TwistedElement& e) { return trace(e.matrix); }

struct InducedRep {
    Representation base;
    std::vector<Mat> blocks;  // per generator of H: diag(rho(g), sigma rho tau^-1(g), ...)
    TwistedElement tau;       // (P, 1)

    std::size_t dim() const { return blocks.empty() ? 0 : blocks.front().rows(); }
    /// Index used for tau in words over the generators of G.
    std::size_t tau_index() const { return base.group().generator_count(); }
};

/// Block diagonal image of a word of H.
inline Mat induced_block(const Representation& rep, const Word& w) {
    const auto& g = rep.group();
    const std::size_t n = rep.dim();
    const int r = rep.ext()->degree();
    Mat out(rep.ext(), n * static_cast<std::size_t>(r), n * static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        out.set_block(static_cast<std::size_t>(j) * n, static_cast<std::size_t>(j) * n,
                      apply_sigma_mat(evaluate_word(rep, g.apply_tau_inverse(w, j)), j));
    return out;
}

/// Block cyclic shift sending block j to block j + 1.
inline Mat block_shift(const ExtensionPtr& ext, std::size_t n, int r) {
    Mat p(ext, n * static_cast<std::size_t>(r), n * static_cast<std::size_t>(r));
    const Mat id = Mat::identity(ext, n);
    for (int j = 0; j < r; ++j)
        p.set_block(static_cast<std::size_t>((j + 1) % r) * n, static_cast<std::size_t>(j) * n, id);
    return p;
}

/// Evaluates a word over the generators of H followed by tau (index tau_index()).
inline TwistedElement evaluate_induced(const InducedRep& ind, const Word& w) {
    const auto& ext = ind.base.ext();
    TwistedElement out{Mat::identity(ext, ind.dim()), 0};
    const TwistedElement tau_inv = inverse(ind.tau);
    for (const auto& l : w) {
        if (l.gen == ind.tau_index())
            out = out * (l.exp > 0 ? ind.tau : tau_inv);
        else if (l.gen < ind.tau_index())
            out = out * TwistedElement{l.exp > 0 ? ind.blocks[l.gen] : inverse(ind.blocks[l.gen]), 0};
        else
            throw UnknownGenerator("letter outside the generators of G");
    }
    return out;
}

/// Relations of G = H x| <tau>: those of H, tau^r = 1, and tau g tau^-1 = tau(g).
inline RelationReport check_induced_relations(const InducedRep& ind) {
    RelationReport report;
    const auto& g = ind.base.group();
    const auto& ext = ind.base.ext();
    const TwistedElement one{Mat::identity(ext, ind.dim()), 0};
    for (const auto& rel : g.relations()) {
        const TwistedElement v = evaluate_induced(ind, rel);
        report.items.push_back({g.format(rel), v == one});
    }
    TwistedElement power = one;
    for (int k = 0; k < ext->degree(); ++k) power = power * ind.tau;
    report.items.push_back({"tau^" + std::to_string(ext->degree()), power == one});
    const TwistedElement tau_inv = inverse(ind.tau);
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
        const TwistedElement lhs = ind.tau * TwistedElement{ind.blocks[i], 0} * tau_inv;
        const TwistedElement rhs{induced_block(ind.base, g.apply_tau(g.generator_word(i))), 0};
        report.items.push_back({"tau " + g.gen_names()[i] + " tau^-1 = tau(" + g.gen_names()[i] + ")", lhs == rhs});
    }
    return report;
}

inline InducedRep build_induced(const Representation& rep) {
    InducedRep ind;
    ind.base = rep;
    const auto& g = rep.group();
    for (std::size_t i = 0; i < g.generator_count(); ++i) ind.blocks.push_back(induced_block(rep, g.generator_word(i)));
    ind.tau = {block_shift(rep.ext(), rep.dim(), rep.ext()->degree()), 1};
    const auto report = check_induced_relations(ind);
    for (const auto& item : report.items)
        if (!item.holds) throw InvalidGroupData("induced representation violates the relation " + item.label);
    return ind;
}

/// The class of a nonzero rational in Q^x / N(L^x).
struct RationalClass {
    Rational representative;
    ExtensionPtr ext;

    bool equivalent(const Rational& other) const { return is_norm(representative / other, *ext); }
};

/// End of the induced representation presented by m_lambda (lambda in L) and xi.
struct CrossedProduct {
    ExtensionPtr ext;
    std::size_t n = 0;
    Mat X;
    Rational lambda_rep;
    Mat xi;

    /// diag(lambda I, sigma(lambda) I, ..., sigma^{r-1}(lambda) I).
    Mat m(const FieldElement& lambda) const {
        const int r = ext->degree();
        Mat out(ext, n * static_cast<std::size_t>(r), n * static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            out.set_block(static_cast<std::size_t>(j) * n, static_cast<std::size_t>(j) * n,
                          Mat::scalar(lambda.sigma(j), n));
        return out;
    }

    Mat xi_power(int k) const {
        Mat out = Mat::identity(ext, xi.rows());
        for (int i = 0; i < k; ++i) out = out * xi;
        return out;
    }
};

/// E is an endomorphism of ind: it commutes with every block and with v -> P sigma(v).
inline bool is_endomorphism(const InducedRep& ind, const Mat& e) {
    for (const auto& b : ind.blocks)
        if (!(e * b == b * e)) return false;
    return ind.tau.matrix * apply_sigma_mat(e, 1) == e * ind.tau.matrix;
}

/**
 * xi has X, sigma(X), ..., sigma^{r-2}(X) on the block subdiagonal and
 * sigma^{-1}(X) in the top right corner.
 */
inline CrossedProduct build_crossed_product(const Representation& rep, const Mat& X) {
    CrossedProduct cp;
    cp.ext = rep.ext();
    cp.n = rep.dim();
    cp.X = X;
    cp.lambda_rep = lambda_of(X);
    const int r = cp.ext->degree();
    const std::size_t n = cp.n;
    cp.xi = Mat(cp.ext, n * static_cast<std::size_t>(r), n * static_cast<std::size_t>(r));
    for (int j = 1; j < r; ++j)
        cp.xi.set_block(static_cast<std::size_t>(j) * n, static_cast<std::size_t>(j - 1) * n, apply_sigma_mat(X, j - 1));
    cp.xi.set_block(0, static_cast<std::size_t>(r - 1) * n, apply_sigma_mat(X, -1));

    const InducedRep ind = build_induced(rep);
    if (!is_endomorphism(ind, cp.xi)) throw EndomorphismCheckFailed("xi is not an endomorphism of the induced representation");
    if (!is_endomorphism(ind, cp.m(FieldElement::generator(cp.ext))))
        throw EndomorphismCheckFailed("m_t is not an endomorphism of the induced representation");
    return cp;
}

/// The four defining relations for a pair lambda, lambda' in L.
inline RelationReport crossed_product_relations(const CrossedProduct& cp, const FieldElement& a, const FieldElement& b) {
    RelationReport report;
    report.items.push_back({"m_a + m_b = m_(a+b)", cp.m(a) + cp.m(b) == cp.m(a + b)});
    report.items.push_back({"m_a m_b = m_(ab)", cp.m(a) * cp.m(b) == cp.m(a * b)});
    report.items.push_back({"m_a xi = xi m_sigma(a)", cp.m(a) * cp.xi == cp.xi * cp.m(a.sigma(1))});
    report.items.push_back({"xi^r = m_lambda", cp.xi_power(cp.ext->degree()) == cp.m(FieldElement(cp.ext, cp.lambda_rep))});
    return report;
}

/**
 * Q-dimension of the L-linear endomorphisms E of ind with E B_g = B_g E for
 * every generator and P sigma(E) = E P, solved on the r (rn)^2 rational
 * coordinates of E.
 */
inline std::size_t endomorphism_dim(const Representation& rep) {
    const InducedRep ind = build_induced(rep);
    const std::size_t dim = ind.dim();
    const Mat& p = ind.tau.matrix;
    const RationalMatrix system = linear_map_matrix(rep.ext(), dim, dim, [&](const Mat& e) {
        std::vector<Mat> out;
        for (const auto& b : ind.blocks) out.push_back(e * b - b * e);
        out.push_back(p * apply_sigma_mat(e, 1) - e * p);
        return out;
    });
    return kernel(system).size();
}

struct SchurReport {
    int index = 1;
    std::optional<std::pair<Integer, Integer>> division_algebra;  // quaternion symbol (a, b)
    RationalClass lambda_class;
    Integer lambda_canonical;
};

/**
 * Schur index of ind_{H,G}(rho): the order of lambda in Q^x / N(L^x).  For
 * quadratic L this is 1 or 2, the division algebra being (lambda, d).  For
 * larger degree only a witness of triviality is accepted.
 */
inline SchurReport schur_index(const Representation& rep, const std::optional<FieldElement>& witness = std::nullopt) {
    const Mat X = compute_X(rep);
    const auto cls = classify_lambda(lambda_of(X), *rep.ext(), witness);
    SchurReport out;
    out.lambda_class = {cls.lambda_rep, rep.ext()};
    out.lambda_canonical = cls.lambda_canonical;
    out.index = cls.is_trivial ? 1 : 2;
    if (!cls.is_trivial) out.division_algebra = std::pair{cls.lambda_canonical, *rep.ext()->disc_core()};
    return out;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_INDUCED_HPP
