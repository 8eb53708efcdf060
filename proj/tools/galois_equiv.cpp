// galois-equiv: batch front end over the galois_equiv headers.
//
// Exit codes: 0 success, 1 validation failure, 2 parse failure,
// 3 obstruction (lambda is not a norm), 4 unsupported or out of budget.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "galois_equiv/galois_equiv.hpp"
#include "galois_equiv/io.hpp"

namespace ge = galois_equiv;
using ge::io::Json;

namespace {

enum Exit : int { kOk = 0, kInvalid = 1, kParse = 2, kObstructed = 3, kUnsupported = 4 };

struct Args {
    std::string file;
    std::optional<std::uint64_t> seed;
    std::optional<int> budget;
    std::string witness;
    std::string replay_y;
    std::string out;
    std::string certificate;
};

void emit(const Json& j, const std::string& out) {
    const std::string text = ge::io::dump(j);
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

Json items_json(const std::vector<ge::CheckItem>& items) {
    Json out = Json::array();
    for (const auto& i : items) out.push_back({{"check", i.label}, {"holds", i.holds}});
    return out;
}

std::optional<ge::FieldElement> witness_of(const Args& a, const ge::io::Problem& p) {
    std::optional<ge::Coefficients> c = p.options.witness;
    if (!a.witness.empty()) {
        try {
            c = ge::io::parse_coefficient_list(a.witness);
        } catch (const ge::ParseError& e) {
            throw ge::ParseError("--witness", e.what());
        }
    }
    if (!c) return std::nullopt;
    if (c->size() > static_cast<std::size_t>(p.ext->degree()))
        throw ge::ParseError("--witness", "more coordinates than the field degree");
    return ge::FieldElement(p.ext, *c);
}

Json symbol_json(const ge::Integer& a, const ge::CyclicExtension& ext) {
    if (!ext.disc_core()) return nullptr;
    return Json::array({a.get_str(), ext.disc_core()->get_str()});
}

// Primes of lambda_canonical should divide |G| = r |H|; only checkable when
// the file declares |H|.
void order_check(Json& report, const ge::io::Problem& p, const ge::Integer& canonical) {
    const auto& order = p.rep.group().declared_order();
    if (!order) return;
    const ge::Integer g_order = ge::Integer(*order) * p.ext->degree();
    bool divides = true;
    for (const auto& [prime, e] : ge::factor(canonical).factors)
        divides = divides && mpz_divisible_p(g_order.get_mpz_t(), prime.get_mpz_t());
    report["lambda_primes_divide_group_order"] = divides;
}

int cmd_validate(const Args& a) {
    const auto p = ge::io::load_problem(a.file);
    const auto rel = ge::check_relations(p.rep);
    const auto aut = ge::check_automorphism(p.rep.group(), &p.rep);
    Json report;
    report["command"] = "validate";
    report["relations"] = items_json(rel.items);
    report["tau_relations"] = items_json(aut.relation_items);
    report["tau_order"] = items_json(aut.power_items);
    for (const auto& m : aut.messages) report["messages"].push_back(m);

    const std::size_t full = p.rep.dim() * p.rep.dim();
    bool irreducible = false;
    try {
        const std::size_t d = ge::burnside_dim(p.rep, p.options.burnside_cap);
        report["burnside_dim"] = d;
        irreducible = d == full;
    } catch (const ge::CapExceeded& e) {
        report["burnside_dim"] = nullptr;
        report["messages"].push_back(e.what());
    }
    report["burnside_expected"] = full;
    if (const auto& order = p.rep.group().declared_order(); order && *order % static_cast<long>(p.rep.dim()) != 0)
        report["messages"].push_back("dimension does not divide the declared group order");

    const bool ok = rel.all_hold() && aut.passed() && irreducible;
    report["valid"] = ok;
    emit(report, a.out);
    return ok ? kOk : kInvalid;
}

int cmd_lambda(const Args& a) {
    const auto p = ge::io::load_problem(a.file);
    const auto inv = ge::lambda_invariant(p.rep, witness_of(a, p));
    Json report;
    report["command"] = "lambda";
    report["lambda_rep"] = inv.lambda_rep.get_str();
    report["lambda_canonical"] = inv.lambda_canonical.get_str();
    report["is_trivial"] = inv.is_trivial;
    if (!inv.is_trivial) report["symbol"] = symbol_json(inv.lambda_canonical, *p.ext);
    order_check(report, p, inv.lambda_canonical);
    emit(report, a.out);
    return kOk;
}

int cmd_equivariant(const Args& a) {
    const auto p = ge::io::load_problem(a.file);
    ge::EquivarianceOptions opts;
    opts.seed = a.seed.value_or(p.options.seed);
    opts.budget = a.budget.value_or(p.options.budget);
    opts.witness_search.numerator_bound = p.options.witness_bound;
    opts.witness = witness_of(a, p);
    if (!a.replay_y.empty()) {
        const Json y = ge::io::load_json(a.replay_y);
        opts.replay_Y = ge::io::matrix_from_json(y.is_object() ? ge::io::detail::require(y, "Y", "/") : y, p.ext,
                                                 y.is_object() ? "/Y" : "");
    }
    const auto cert = ge::equivariant_form(p.rep, opts);
    Json j = ge::io::certificate_to_json(cert, p, opts.seed);
    using Outcome = ge::EquivarianceCertificate::Outcome;
    if (cert.outcome == Outcome::Obstructed) {
        j["obstruction"] = "lambda nontrivial";
        j["symbol"] = symbol_json(cert.lambda_canonical, *p.ext);
        std::cerr << "obstruction: lambda nontrivial";
        if (p.ext->disc_core())
            std::cerr << ", symbol (" << cert.lambda_canonical << ", " << *p.ext->disc_core() << ")";
        std::cerr << "\n";
    }
    emit(j, a.out);
    switch (cert.outcome) {
        case Outcome::Constructed: return kOk;
        case Outcome::Obstructed: return kObstructed;
        case Outcome::Unconstructed: return kUnsupported;
    }
    return kUnsupported;
}

int cmd_induce(const Args& a) {
    const auto p = ge::io::load_problem(a.file);
    const auto ind = ge::build_induced(p.rep);
    const auto cp = ge::build_crossed_product(p.rep, ge::compute_X(p.rep));
    const auto schur = ge::schur_index(p.rep, witness_of(a, p));
    const ge::FieldElement t = ge::FieldElement::generator(p.ext);
    const auto cp_rel = ge::crossed_product_relations(cp, t, t + ge::FieldElement::one(p.ext));

    Json report;
    report["command"] = "induce";
    report["dim"] = ind.dim();
    report["endo_dim"] = ge::endomorphism_dim(p.rep);
    report["relations_ok"] = ge::check_induced_relations(ind).all_hold() && cp_rel.all_hold();
    report["lambda_rep"] = cp.lambda_rep.get_str();
    report["schur_index"] = schur.index;
    report["symbol"] = schur.division_algebra
                           ? Json::array({schur.division_algebra->first.get_str(), schur.division_algebra->second.get_str()})
                           : Json(nullptr);
    order_check(report, p, schur.lambda_canonical);
    emit(report, a.out);
    return report["relations_ok"].get<bool>() ? kOk : kInvalid;
}

int cmd_verify(const Args& a) {
    const auto p = ge::io::load_problem(a.file);
    const auto cert = ge::io::certificate_from_json(ge::io::load_json(a.certificate), p);
    const auto check = ge::verify_certificate(cert, p.rep);
    Json report;
    report["command"] = "verify";
    report["outcome"] = ge::to_string(cert.outcome);
    report["checks"] = items_json(check.items);
    report["verified"] = check.passed();
    emit(report, a.out);
    return check.passed() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois-equivariant forms of group representations"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", args.file, "problem file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", args.out, "write the result here instead of stdout");
    };
    auto add_witness = [&](CLI::App* sub) {
        sub->add_option("--witness", args.witness, "norm witness mu as coordinates \"a/b,c/d\"");
    };

    auto* validate = app.add_subcommand("validate", "check relations, tau and absolute irreducibility");
    add_common(validate);
    auto* lambda = app.add_subcommand("lambda", "compute the lambda invariant");
    add_common(lambda);
    add_witness(lambda);
    auto* equivariant = app.add_subcommand("equivariant", "construct an equivariant conjugate and its certificate");
    add_common(equivariant);
    add_witness(equivariant);
    equivariant->add_option("--seed", args.seed, "seed for the Hilbert 90 search");
    equivariant->add_option("--budget", args.budget, "maximum Hilbert 90 draws");
    equivariant->add_option("--replay-Y", args.replay_y, "use this Y instead of searching")->check(CLI::ExistingFile);
    auto* induce = app.add_subcommand("induce", "induced representation, endomorphisms and Schur index");
    add_common(induce);
    add_witness(induce);
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its problem");
    add_common(verify);
    verify->add_option("--certificate", args.certificate, "certificate file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*validate) return cmd_validate(args);
        if (*lambda) return cmd_lambda(args);
        if (*equivariant) return cmd_equivariant(args);
        if (*induce) return cmd_induce(args);
        if (*verify) return cmd_verify(args);
    } catch (const ge::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ge::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const ge::FactorizationIncomplete& e) {
        std::cerr << "factorization incomplete: " << e.what() << "\n";
        return kUnsupported;
    } catch (const ge::NoWitnessFound& e) {
        std::cerr << "no witness: " << e.what() << "\n";
        return kUnsupported;
    } catch (const ge::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kUnsupported;
    } catch (const ge::Error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    }
    return kOk;
}
