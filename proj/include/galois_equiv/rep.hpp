#ifndef GALOIS_EQUIV_REP_HPP
#define GALOIS_EQUIV_REP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/linalg.hpp"
#include "galois_equiv/matrix.hpp"

namespace galois_equiv {

/// One letter of a word: generator index and exponent +1 or -1.
struct Letter {
    std::size_t gen = 0;
    int exp = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent inverse pairs.
inline Word reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.exp = -l.exp;
    return out;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return reduce(a);
}

/// Whitespace-separated generator names, "g'" for the inverse of g.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int exp = 1;
        if (tok.size() > 1 && tok.back() == '\'') {
            exp = -1;
            tok.pop_back();
        }
        std::size_t idx = names.size();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == tok) idx = i;
        if (idx == names.size()) throw UnknownGenerator("unknown generator \"" + tok + "\"");
        w.push_back({idx, exp});
    }
    return w;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += names.at(l.gen);
        if (l.exp < 0) out += '\'';
    }
    return out;
}

/**
 * Generators, defining relations and an automorphism tau of order r given
 * by the images of the generators as words.
 */
class GroupData {
public:
    GroupData() = default;

    GroupData(std::vector<std::string> gen_names, std::vector<Word> relations, std::vector<Word> tau_images,
              int tau_order, std::optional<long> declared_order = std::nullopt)
        : names_(std::move(gen_names)),
          relations_(std::move(relations)),
          tau_(std::move(tau_images)),
          tau_order_(tau_order),
          declared_order_(declared_order) {
        if (tau_.size() != names_.size()) throw InvalidGroupData("tau must give an image for every generator");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw InvalidGroupData("duplicate generator \"" + names_[i] + "\"");
        auto check = [&](const Word& w) {
            for (const auto& l : w)
                if (l.gen >= names_.size() || (l.exp != 1 && l.exp != -1))
                    throw UnknownGenerator("word refers to a generator outside the group");
        };
        for (const auto& w : relations_) check(w);
        for (const auto& w : tau_) check(w);
    }

    /// Builds from textual words.
    static GroupData parse(std::vector<std::string> gen_names, const std::vector<std::string>& relations,
                           const std::map<std::string, std::string>& tau, int tau_order,
                           std::optional<long> declared_order = std::nullopt) {
        std::vector<Word> rels;
        for (const auto& r : relations) rels.push_back(parse_word(r, gen_names));
        std::vector<Word> images;
        for (const auto& g : gen_names) {
            auto it = tau.find(g);
            if (it == tau.end()) throw InvalidGroupData("tau has no image for generator \"" + g + "\"");
            images.push_back(parse_word(it->second, gen_names));
        }
        for (const auto& [g, w] : tau)
            parse_word(g, gen_names);  // rejects images of unknown generators
        return GroupData(std::move(gen_names), std::move(rels), std::move(images), tau_order, declared_order);
    }

    const std::vector<std::string>& gen_names() const noexcept { return names_; }
    std::size_t generator_count() const noexcept { return names_.size(); }
    const std::vector<Word>& relations() const noexcept { return relations_; }
    const std::vector<Word>& tau_images() const noexcept { return tau_; }
    int tau_order() const noexcept { return tau_order_; }
    const std::optional<long>& declared_order() const noexcept { return declared_order_; }

    /// tau^k(w) by substitution, k >= 0.
    Word apply_tau(const Word& w, long k = 1) const {
        Word cur = w;
        for (long step = 0; step < k; ++step) {
            Word next;
            for (const auto& l : cur) {
                const Word& img = tau_.at(l.gen);
                if (l.exp > 0)
                    next.insert(next.end(), img.begin(), img.end());
                else {
                    Word inv = inverse(img);
                    next.insert(next.end(), inv.begin(), inv.end());
                }
            }
            cur = reduce(next);
        }
        return cur;
    }

    /// tau^{-k}(w) = tau^{r-k}(w) (valid since tau^r = 1).
    Word apply_tau_inverse(const Word& w, long k = 1) const {
        const long r = tau_order_;
        return apply_tau(w, ((r - k) % r + r) % r);
    }

    Word generator_word(std::size_t i) const { return Word{{i, 1}}; }

    std::string format(const Word& w) const { return format_word(w, names_); }

private:
    std::vector<std::string> names_;
    std::vector<Word> relations_;
    std::vector<Word> tau_;
    int tau_order_ = 0;
    std::optional<long> declared_order_;
};

/// A representation H -> GL(n, L) given on generators.
class Representation {
public:
    Representation() = default;

    Representation(GroupData group, ExtensionPtr ext, std::vector<Mat> images)
        : group_(std::move(group)), ext_(std::move(ext)), images_(std::move(images)) {
        if (images_.size() != group_.generator_count())
            throw DimensionMismatch("representation needs one matrix per generator");
        dim_ = images_.empty() ? 0 : images_.front().rows();
        for (const auto& m : images_) {
            if (!m.is_square() || m.rows() != dim_) throw DimensionMismatch("generator images must be n x n");
            if (!m.ext()->same_as(*ext_)) throw DimensionMismatch("generator image over a different field");
            inverses_.push_back(inverse(m));
        }
    }

    const GroupData& group() const noexcept { return group_; }
    const ExtensionPtr& ext() const noexcept { return ext_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Mat>& images() const noexcept { return images_; }
    const Mat& image(std::size_t gen, int exp = 1) const { return exp > 0 ? images_.at(gen) : inverses_.at(gen); }

private:
    GroupData group_;
    ExtensionPtr ext_;
    std::size_t dim_ = 0;
    std::vector<Mat> images_;
    std::vector<Mat> inverses_;
};

inline Mat evaluate_word(const Representation& rep, const Word& w) {
    Mat out = Mat::identity(rep.ext(), rep.dim());
    for (const auto& l : w) {
        if (l.gen >= rep.group().generator_count()) throw UnknownGenerator("letter outside the generator set");
        out = out * rep.image(l.gen, l.exp);
    }
    return out;
}

struct CheckItem {
    std::string label;
    bool holds = false;
};

struct RelationReport {
    std::vector<CheckItem> items;
    bool all_hold() const {
        for (const auto& i : items)
            if (!i.holds) return false;
        return true;
    }
};

inline RelationReport check_relations(const Representation& rep) {
    RelationReport report;
    for (const auto& rel : rep.group().relations())
        report.items.push_back({rep.group().format(rel), evaluate_word(rep, rel).is_identity()});
    return report;
}

/**
 * L-dimension of the span of rho(w) over words w of length <= cap, once two
 * successive lengths give the same span.  rho is absolutely irreducible iff
 * the result is n^2.
 */
inline std::size_t burnside_dim(const Representation& rep, int cap) {
    const auto& ext = rep.ext();
    const auto r = static_cast<std::size_t>(ext->degree());
    const std::size_t full = rep.dim() * rep.dim();
    const FieldElement t = FieldElement::generator(ext);

    RationalMatrix span;
    std::size_t q_rank = 0;
    auto try_add = [&](const Mat& m) {
        RationalMatrix trial = span;
        Mat power = m;
        for (std::size_t k = 0; k < r; ++k) {
            trial.append_row(coordinates(power));
            power = t * power;
        }
        const std::size_t new_rank = rank(trial);
        if (new_rank == q_rank) return false;
        span = std::move(trial);
        q_rank = new_rank;
        return true;
    };

    std::vector<Mat> frontier{Mat::identity(ext, rep.dim())};
    try_add(frontier.front());
    for (int len = 1; len <= cap; ++len) {
        if (q_rank / r == full) return full;
        std::vector<Mat> next;
        for (const auto& m : frontier)
            for (std::size_t g = 0; g < rep.group().generator_count(); ++g)
                for (int e : {1, -1}) {
                    Mat prod = m * rep.image(g, e);
                    if (try_add(prod)) next.push_back(std::move(prod));
                }
        if (next.empty()) return q_rank / r;
        frontier = std::move(next);
    }
    if (q_rank / r == full) return full;
    throw CapExceeded("span still growing at word length " + std::to_string(cap));
}

struct AutomorphismReport {
    enum class Status { Passed, Failed, Unverifiable };
    Status status = Status::Unverifiable;
    bool order_ok = false;                 // r >= 2
    std::vector<CheckItem> relation_items; // tau(relation) == 1
    std::vector<CheckItem> power_items;    // tau^r(g) == g
    std::vector<std::string> messages;

    bool passed() const { return status == Status::Passed; }
};

/**
 * Checks that tau respects the relations and that tau^r fixes every
 * generator, by evaluating words in `faithful` (Unverifiable without one).
 * The checks are only as strong as the faithfulness of that representation.
 */
inline AutomorphismReport check_automorphism(const GroupData& g, const Representation* faithful) {
    AutomorphismReport rep;
    rep.order_ok = g.tau_order() >= 2;
    if (!rep.order_ok) {
        rep.status = AutomorphismReport::Status::Failed;
        rep.messages.push_back("tau must have order r >= 2, got " + std::to_string(g.tau_order()));
        return rep;
    }
    if (faithful == nullptr) {
        rep.messages.push_back("no representation supplied; tau checks not evaluated");
        return rep;
    }
    bool ok = true;
    for (const auto& rel : g.relations()) {
        const bool holds = evaluate_word(*faithful, g.apply_tau(rel)).is_identity();
        rep.relation_items.push_back({"tau(" + g.format(rel) + ")", holds});
        ok = ok && holds;
    }
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
        const Word w = g.generator_word(i);
        const bool holds = evaluate_word(*faithful, g.apply_tau(w, g.tau_order())) == faithful->image(i);
        rep.power_items.push_back({"tau^" + std::to_string(g.tau_order()) + "(" + g.gen_names()[i] + ")", holds});
        ok = ok && holds;
    }
    rep.status = ok ? AutomorphismReport::Status::Passed : AutomorphismReport::Status::Failed;
    return rep;
}

}  // namespace galois_equiv

#endif  // GALOIS_EQUIV_REP_HPP
