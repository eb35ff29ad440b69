#pragma once

// JSON category specs: grading group, cocycle, group, embedding, irreps.
//
//   {
//     "schema": "twistrep-spec/1",
//     "name": "z2-lattice-on-z4",
//     "grading": [2],
//     "cocycle": {"builder": "cyclic", "n": 2, "s": 3},
//     "group": {"builtin": "Z/4"},
//     "embedding": ["g^2"],
//     "irreps": "builtin",
//     "complete": true
//   }
//
// Table cocycles: {"F": [{"at": [1, 1, 1], "value": "1/2"}, ...],
// "Omega": [{"at": [1, 1], "value": "3/4"}], "validate": true}; omitted
// entries are 0. Multi-factor elements are arrays, e.g. [[1, 0], [0, 1]].
//
// Groups: {"builtin": "S3"}, {"table": [[...]], "generators": [...]} or
// {"permutations": [[...], ...]}. Explicit irreps give one matrix per
// generator: {"name": "W", "generators": [[["0", "1"], ["1", "0"]], ...]};
// entries are numbers or strings "a+bi", "-i", "e(p/q)".
//
// SU(2) mode replaces group/embedding/irreps with {"su2": {"max_spin": N}}
// and requires grading [2].

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistrep/catalog.hpp"
#include "twistrep/fusionring.hpp"
#include "twistrep/modcat.hpp"

namespace twistrep {

inline constexpr const char* kSpecSchema = "twistrep-spec/1";

inline std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw NumericalError("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

/// Parses "1", "-0.5", "i", "-2i", "0.5+0.5i", "1e-3-2i", "e(1/4)".
inline cd parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw ParseError("empty complex number");
    if (s.size() > 3 && s.rfind("e(", 0) == 0 && s.back() == ')')
        return UnitScalar(RationalMod1::parse(s.substr(2, s.size() - 3))).to_complex();
    auto real = [&](const std::string& t) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(t, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad number '" + t + "' in '" + raw + "'");
        }
        if (pos != t.size()) throw ParseError("bad number '" + t + "' in '" + raw + "'");
        return v;
    };
    auto coeff = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return real(t);
    };
    if (s.back() != 'i') return {real(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    if (split == std::string::npos) return {0.0, coeff(s)};
    return {real(s.substr(0, split)), coeff(s.substr(split))};
}

/// "re,im" as accepted on the command line.
inline cd parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return parse_complex(text);
    const cd re = parse_complex(text.substr(0, comma));
    const cd im = parse_complex(text.substr(comma + 1));
    if (re.imag() != 0.0 || im.imag() != 0.0) throw ParseError("point '" + text + "' must be 're,im'");
    return {re.real(), im.real()};
}

struct CategorySpec {
    std::string name;
    std::string digest;
    AbelianCocycle cocycle;
    bool cocycle_checked_on_load = true;
    std::optional<int> su2_max_spin;
    FiniteGroup group;
    std::vector<std::string> element_names;
    CentralEmbedding embedding;
    std::vector<TwistedCategory::IrrepInput> irreps;
    bool complete = false;
    Tolerances tol;

    [[nodiscard]] bool su2_mode() const { return su2_max_spin.has_value(); }

    /// Builds the category; irreps and grades are validated here.
    [[nodiscard]] TwistedCategory category(bool enforce_completeness) const {
        if (su2_mode()) throw StructuralError("spec '" + name + "' is an su2 spec without a finite group");
        return TwistedCategory(group, cocycle, embedding, irreps, enforce_completeness && complete, tol);
    }

    [[nodiscard]] std::vector<GradedObject> su2_objects() const {
        std::vector<GradedObject> out;
        for (int n = 0; n <= su2_max_spin.value_or(-1); ++n) out.push_back(su2_object(n));
        return out;
    }
};

namespace detail {

using nlohmann::json;

inline const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline GroupElt parse_grade(const FinAbGroup& A, const json& j, const std::string& where) {
    std::vector<std::int64_t> v;
    if (j.is_number_integer()) v = {j.get<std::int64_t>()};
    else v = get_as<std::vector<std::int64_t>>(j, where);
    if (v.size() != A.rank()) throw ParseError(where + ": element " + j.dump() + " has the wrong number of components");
    return A.elt(v);
}

inline AbelianCocycle parse_cocycle(const FinAbGroup& A, const json& j, bool& checked) {
    const std::string where = "cocycle";
    checked = true;
    if (j.contains("builder")) {
        const auto builder = get_as<std::string>(j.at("builder"), where + ".builder");
        if (builder != "cyclic") throw ParseError("unknown cocycle builder '" + builder + "'");
        const auto n = get_as<std::int64_t>(need(j, "n", where), where + ".n");
        const auto s = get_as<std::int64_t>(need(j, "s", where), where + ".s");
        if (A.factors() != std::vector<std::int64_t>{n})
            throw ParseError("cocycle builder cyclic(" + std::to_string(n) + ") does not match grading " + A.str());
        return AbelianCocycle::build_cyclic(n, s);
    }
    const auto n = static_cast<std::size_t>(A.order());
    std::vector<RationalMod1> f(n * n * n), w(n * n);
    auto fill = [&](const char* key, std::size_t arity, std::vector<RationalMod1>& table) {
        if (!j.contains(key)) return;
        for (const auto& entry : get_as<json::array_t>(j.at(key), where + "." + key)) {
            const std::string at = where + "." + key + " entry " + entry.dump();
            const auto args = get_as<json::array_t>(need(entry, "at", at), at);
            if (args.size() != arity) throw ParseError(at + ": expected " + std::to_string(arity) + " arguments");
            std::size_t idx = 0;
            for (const auto& a : args) idx = idx * n + A.index(parse_grade(A, a, at));
            table[idx] = RationalMod1::parse(get_as<std::string>(need(entry, "value", at), at));
        }
    };
    fill("F", 3, f);
    fill("Omega", 2, w);
    checked = j.value("validate", true);
    if (checked) return AbelianCocycle::from_tables(A, std::move(f), std::move(w));
    return AbelianCocycle::unchecked(A, std::move(f), std::move(w));
}

inline Matrix parse_matrix(const json& j, const std::string& where) {
    const auto rows = get_as<json::array_t>(j, where);
    if (rows.empty()) throw ParseError(where + ": empty matrix");
    const auto d = static_cast<Eigen::Index>(rows.size());
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const auto row = get_as<json::array_t>(rows[static_cast<std::size_t>(r)], where);
        if (static_cast<Eigen::Index>(row.size()) != d) throw ParseError(where + ": matrix is not square");
        for (Eigen::Index c = 0; c < d; ++c) {
            const auto& e = row[static_cast<std::size_t>(c)];
            m(r, c) = e.is_number() ? cd{e.get<double>(), 0.0} : parse_complex(get_as<std::string>(e, where));
        }
    }
    return m;
}

}  // namespace detail

inline CategorySpec parse_spec(const std::string& text, Tolerances tol = {}) {
    using detail::get_as;
    using detail::need;
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec must be a JSON object");
    const auto schema = get_as<std::string>(need(j, "schema", "spec"), "schema");
    if (schema != kSpecSchema) throw ParseError("unsupported spec schema '" + schema + "', expected " + kSpecSchema);

    const FinAbGroup A(get_as<std::vector<std::int64_t>>(need(j, "grading", "spec"), "grading"));
    bool checked = true;
    CategorySpec spec{.name = j.value("name", std::string("unnamed")),
                      .digest = sha256_hex(text),
                      .cocycle = detail::parse_cocycle(A, need(j, "cocycle", "spec"), checked),
                      .tol = tol};
    spec.cocycle_checked_on_load = checked;

    if (j.contains("su2")) {
        if (A.factors() != std::vector<std::int64_t>{2}) throw ParseError("su2 specs need grading [2]");
        const int n = get_as<int>(need(j.at("su2"), "max_spin", "su2"), "su2.max_spin");
        if (n < 0 || n > kSu2MaxSpin) throw ParseError("su2.max_spin out of range");
        spec.su2_max_spin = n;
        return spec;
    }

    const json& g = need(j, "group", "spec");
    std::optional<catalog::BuiltinGroup> builtin;
    if (g.contains("builtin")) {
        builtin = catalog::by_name(get_as<std::string>(g.at("builtin"), "group.builtin"));
        spec.group = builtin->group;
        spec.element_names = builtin->element_names;
    } else if (g.contains("permutations")) {
        const auto perms = get_as<std::vector<FiniteGroup::Perm>>(g.at("permutations"), "group.permutations");
        if (perms.empty()) throw ParseError("group.permutations must list at least one generator");
        spec.group = FiniteGroup::from_permutations(static_cast<int>(perms.front().size()), perms);
    } else if (g.contains("table")) {
        spec.group = FiniteGroup::from_table(get_as<FiniteGroup::Table>(g.at("table"), "group.table"),
                                             get_as<std::vector<int>>(need(g, "generators", "group"), "group.generators"));
    } else {
        throw ParseError("group needs one of 'builtin', 'permutations', 'table'");
    }

    auto element = [&](const json& e) -> int {
        if (e.is_number_integer()) return e.get<int>();
        if (e.is_string()) {
            if (!builtin) throw ParseError("element names need a builtin group");
            return builtin->element(e.get<std::string>());
        }
        if (e.is_array()) return spec.group.index_of_permutation(get_as<FiniteGroup::Perm>(e, "embedding"));
        throw ParseError("cannot read group element " + e.dump());
    };
    for (const auto& e : get_as<json::array_t>(need(j, "embedding", "spec"), "embedding"))
        spec.embedding.images.push_back(element(e));

    const json& irreps = need(j, "irreps", "spec");
    if (irreps.is_string()) {
        if (irreps.get<std::string>() != "builtin" || !builtin)
            throw ParseError("irreps: \"builtin\" needs a builtin group");
        for (const auto& r : builtin->irreps) spec.irreps.push_back({r.name, r.rep});
    } else {
        const auto& gens = spec.group.generators();
        for (const auto& r : get_as<json::array_t>(irreps, "irreps")) {
            const auto name = get_as<std::string>(need(r, "name", "irrep"), "irrep.name");
            const auto images = get_as<json::array_t>(need(r, "generators", "irrep " + name), "irrep " + name);
            if (images.size() != gens.size())
                throw ParseError("irrep " + name + ": expected " + std::to_string(gens.size()) + " generator images");
            std::vector<Matrix> mats;
            for (const auto& m : images) mats.push_back(detail::parse_matrix(m, "irrep " + name));
            spec.irreps.push_back({name, rep_from_generators(spec.group, gens, mats)});
        }
    }
    spec.complete = j.value("complete", false);
    return spec;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline CategorySpec load_spec(const std::string& path, Tolerances tol = {}) { return parse_spec(read_file(path), tol); }

}  // namespace twistrep
