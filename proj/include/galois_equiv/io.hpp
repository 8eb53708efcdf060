#ifndef GALOIS_EQUIV_IO_HPP
#define GALOIS_EQUIV_IO_HPP

// Problem and certificate files.  Rationals are integers or "p/q" strings,
// field elements are arrays of coordinates in the basis 1, t, ..., t^{r-1}
// (a bare rational is accepted for elements of Q), matrices are arrays of rows.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "galois_equiv/equivariance.hpp"
#include "galois_equiv/error.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/matrix.hpp"
#include "galois_equiv/rational.hpp"
#include "galois_equiv/rep.hpp"

namespace galois_equiv::io {

using Json = nlohmann::ordered_json;

struct ProblemOptions {
    std::uint64_t seed = 1;
    int budget = 64;
    long witness_bound = 10000;
    int burnside_cap = 20;
    std::optional<Coefficients> witness;
};

struct Problem {
    std::string name;
    ExtensionPtr ext;
    Representation rep;
    ProblemOptions options;
};

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path, "missing key \"" + key + "\"");
    return *it;
}

}  // namespace detail

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        throw ParseError(detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1), msg);
    }
}

inline Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.where(), e.message());
    }
}

inline Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path, e.message());
        }
    }
    throw ParseError(path, "expected an integer or a \"p/q\" string");
}

inline Coefficients coefficients_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) return {rational_from_json(j, path)};
    Coefficients out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline FieldElement element_from_json(const Json& j, const ExtensionPtr& ext, const std::string& path) {
    Coefficients c = coefficients_from_json(j, path);
    if (c.size() > static_cast<std::size_t>(ext->degree()))
        throw ParseError(path, "field element has more than " + std::to_string(ext->degree()) + " coordinates");
    return FieldElement(ext, std::move(c));
}

inline Mat matrix_from_json(const Json& j, const ExtensionPtr& ext, const std::string& path) {
    if (!j.is_array() || j.empty()) throw ParseError(path, "expected a nonempty array of rows");
    std::vector<std::vector<FieldElement>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string rp = path + "/" + std::to_string(i);
        if (!j[i].is_array()) throw ParseError(rp, "expected a row array");
        if (j[i].size() != j[0].size()) throw ParseError(rp, "row length differs from the first row");
        std::vector<FieldElement> row;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            row.push_back(element_from_json(j[i][k], ext, rp + "/" + std::to_string(k)));
        rows.push_back(std::move(row));
    }
    return Mat::from_rows(ext, rows);
}

namespace detail {

inline bool is_flat(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured() && !(x.is_array() && x.size() <= 4 && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                      return y.is_primitive();
                                  })))
            return false;
    return true;
}

inline void write_compact(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const bool small_record = j.is_object() && j.size() <= 3 &&
                              std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
    if (j.is_object() && !j.empty() && !small_record) {
        os << "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : j.items()) {
            os << pad << "  " << Json(key).dump() << ": ";
            write_compact(os, value, indent + 2);
            os << (++k < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            os << pad << "  ";
            write_compact(os, j[k], indent + 2);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else {
        os << j.dump(-1, ' ', false);
    }
}

}  // namespace detail

/// Pretty output that keeps field elements and matrix rows on one line.
inline std::string dump(const Json& j) {
    std::ostringstream os;
    detail::write_compact(os, j, 0);
    os << "\n";
    return os.str();
}

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const FieldElement& x) {
    Json out = Json::array();
    for (const auto& c : x.coeffs()) out.push_back(c.get_str());
    return out;
}

inline Json to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

inline ExtensionPtr extension_from_json(const Json& j, const std::string& path) {
    const Coefficients m = coefficients_from_json(detail::require(j, "min_poly", path), path + "/min_poly");
    const Coefficients s = coefficients_from_json(detail::require(j, "sigma_image", path), path + "/sigma_image");
    try {
        return CyclicExtension::create(m, s);
    } catch (const InvalidExtension& e) {
        throw ParseError(path, e.what());
    }
}

inline Json to_json(const CyclicExtension& ext) {
    Json out;
    out["min_poly"] = Json::array();
    for (const auto& c : ext.min_poly()) out["min_poly"].push_back(c.get_str());
    out["sigma_image"] = Json::array();
    for (const auto& c : ext.sigma_image()) out["sigma_image"].push_back(c.get_str());
    return out;
}

/// Generator -> matrix map, in the generator order of `group`.
inline std::vector<Mat> images_from_json(const Json& j, const GroupData& group, const ExtensionPtr& ext,
                                         const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object mapping generators to matrices");
    std::vector<Mat> images;
    for (const auto& g : group.gen_names())
        images.push_back(matrix_from_json(detail::require(j, g, path), ext, path + "/" + g));
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const auto& g : group.gen_names()) known = known || g == k;
        if (!known) throw ParseError(path + "/" + k, "matrix for unknown generator \"" + k + "\"");
    }
    return images;
}

inline Problem problem_from_json(const Json& j) {
    Problem p;
    if (!j.is_object()) throw ParseError("/", "expected an object");
    p.name = j.value("name", std::string{});
    p.ext = extension_from_json(detail::require(j, "field", "/"), "/field");

    const Json& g = detail::require(j, "group", "/");
    const Json& gens = detail::require(g, "generators", "/group");
    if (!gens.is_array()) throw ParseError("/group/generators", "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_string()) throw ParseError("/group/generators/" + std::to_string(i), "expected a string");
        names.push_back(gens[i].get<std::string>());
    }
    std::vector<std::string> relations;
    if (auto it = g.find("relations"); it != g.end()) {
        if (!it->is_array()) throw ParseError("/group/relations", "expected an array of words");
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_string()) throw ParseError("/group/relations/" + std::to_string(i), "expected a word");
            relations.push_back((*it)[i].get<std::string>());
        }
    }
    const Json& tau = detail::require(g, "tau", "/group");
    if (!tau.is_object()) throw ParseError("/group/tau", "expected an object mapping generators to words");
    std::map<std::string, std::string> tau_map;
    for (const auto& [k, v] : tau.items()) {
        if (!v.is_string()) throw ParseError("/group/tau/" + k, "expected a word");
        tau_map[k] = v.get<std::string>();
    }
    std::optional<long> order;
    if (auto it = g.find("order"); it != g.end()) {
        if (!it->is_number_integer()) throw ParseError("/group/order", "expected an integer");
        order = it->get<long>();
    }

    GroupData group;
    try {
        group = GroupData::parse(names, relations, tau_map, p.ext->degree(), order);
    } catch (const Error& e) {
        throw ParseError("/group", e.what());
    }

    auto images = images_from_json(detail::require(j, "representation", "/"), group, p.ext, "/representation");
    try {
        p.rep = Representation(std::move(group), p.ext, std::move(images));
    } catch (const Error& e) {
        throw ParseError("/representation", e.what());
    }

    if (auto it = j.find("options"); it != j.end()) {
        const Json& o = *it;
        if (!o.is_object()) throw ParseError("/options", "expected an object");
        auto integer = [&](const char* key, auto& dst) {
            if (auto f = o.find(key); f != o.end()) {
                if (!f->is_number_integer()) throw ParseError(std::string("/options/") + key, "expected an integer");
                dst = f->get<std::remove_reference_t<decltype(dst)>>();
            }
        };
        integer("seed", p.options.seed);
        integer("budget", p.options.budget);
        integer("witness_bound", p.options.witness_bound);
        integer("burnside_cap", p.options.burnside_cap);
        if (auto f = o.find("witness"); f != o.end()) p.options.witness = coefficients_from_json(*f, "/options/witness");
    }
    return p;
}

inline Problem parse_problem(std::string_view text) { return problem_from_json(parse_json(text)); }

inline Problem load_problem(const std::filesystem::path& path) {
    const Json j = load_json(path);
    try {
        return problem_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.where(), e.message());
    }
}

/// Parses "a/b,c/d" into coordinates.
inline Coefficients parse_coefficient_list(std::string_view text) {
    Coefficients out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline Json to_json(const Representation& rep) {
    Json out = Json::object();
    for (std::size_t i = 0; i < rep.group().generator_count(); ++i) out[rep.group().gen_names()[i]] = to_json(rep.images()[i]);
    return out;
}

inline Json certificate_to_json(const EquivarianceCertificate& cert, const Problem& problem, std::uint64_t seed) {
    Json out;
    out["problem"] = problem.name;
    out["field"] = to_json(*problem.ext);
    out["outcome"] = to_string(cert.outcome);
    out["seed"] = seed;
    out["X"] = to_json(cert.X);
    out["lambda_rep"] = to_json(cert.lambda_rep);
    out["lambda_canonical"] = cert.lambda_canonical.get_str();
    out["is_trivial"] = cert.is_trivial;
    out["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
    out["Y"] = cert.Y ? to_json(*cert.Y) : Json(nullptr);
    out["rho_prime"] = cert.rho_prime ? to_json(*cert.rho_prime) : Json(nullptr);
    out["hilbert90_attempts"] = cert.hilbert90_attempts;
    if (!cert.note.empty()) out["note"] = cert.note;
    return out;
}

inline EquivarianceCertificate certificate_from_json(const Json& j, const Problem& problem) {
    EquivarianceCertificate cert;
    const auto& ext = problem.ext;
    const std::string outcome = detail::require(j, "outcome", "/").get<std::string>();
    if (outcome == "constructed")
        cert.outcome = EquivarianceCertificate::Outcome::Constructed;
    else if (outcome == "obstructed")
        cert.outcome = EquivarianceCertificate::Outcome::Obstructed;
    else if (outcome == "unconstructed")
        cert.outcome = EquivarianceCertificate::Outcome::Unconstructed;
    else
        throw ParseError("/outcome", "unknown outcome \"" + outcome + "\"");
    cert.X = matrix_from_json(detail::require(j, "X", "/"), ext, "/X");
    cert.lambda_rep = rational_from_json(detail::require(j, "lambda_rep", "/"), "/lambda_rep");
    cert.lambda_canonical = rational_from_json(detail::require(j, "lambda_canonical", "/"), "/lambda_canonical").get_num();
    const Json& triv = detail::require(j, "is_trivial", "/");
    if (!triv.is_boolean()) throw ParseError("/is_trivial", "expected a boolean");
    cert.is_trivial = triv.get<bool>();
    if (const Json& w = detail::require(j, "witness", "/"); !w.is_null()) cert.witness = element_from_json(w, ext, "/witness");
    if (const Json& y = detail::require(j, "Y", "/"); !y.is_null()) cert.Y = matrix_from_json(y, ext, "/Y");
    if (const Json& rp = detail::require(j, "rho_prime", "/"); !rp.is_null()) {
        auto images = images_from_json(rp, problem.rep.group(), ext, "/rho_prime");
        try {
            cert.rho_prime = Representation(problem.rep.group(), ext, std::move(images));
        } catch (const Error& e) {
            throw ParseError("/rho_prime", e.what());
        }
    }
    if (auto it = j.find("hilbert90_attempts"); it != j.end() && it->is_number_integer())
        cert.hilbert90_attempts = it->get<int>();
    if (auto it = j.find("note"); it != j.end() && it->is_string()) cert.note = it->get<std::string>();
    return cert;
}

}  // namespace galois_equiv::io

#endif  // GALOIS_EQUIV_IO_HPP
