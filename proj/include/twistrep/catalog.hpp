#pragma once

// Built-in groups with complete irrep catalogs: Z/n, S3, D4, Q8.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "twistrep/grouprep.hpp"

namespace twistrep::catalog {

struct NamedRep {
    std::string name;
    MatrixRep rep;
};

struct BuiltinGroup {
    std::string name;
    FiniteGroup group;
    std::vector<std::string> element_names;  // indexed like the group
    std::vector<NamedRep> irreps;            // complete

    [[nodiscard]] int element(const std::string& label) const {
        for (std::size_t i = 0; i < element_names.size(); ++i)
            if (element_names[i] == label) return static_cast<int>(i);
        throw StructuralError("group " + name + " has no element named '" + label + "'");
    }
};

namespace detail {
inline Matrix m1(cd v) { return Matrix::Constant(1, 1, v); }
inline Matrix m2(cd a, cd b, cd c, cd d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}
}  // namespace detail

/// Z/n with generator 1; irreps g -> e(k/n).
inline BuiltinGroup cyclic(int n) {
    if (n < 1) throw DomainError("cyclic group order must be >= 1");
    FiniteGroup::Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    BuiltinGroup out{"Z/" + std::to_string(n), FiniteGroup::from_table(std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{}), {}, {}};
    for (int a = 0; a < n; ++a) out.element_names.push_back("g^" + std::to_string(a));
    for (int k = 0; k < n; ++k) {
        std::vector<Matrix> gen;
        if (n > 1) gen.push_back(detail::m1(UnitScalar(k, n).to_complex()));
        out.irreps.push_back({"chi" + std::to_string(k), rep_from_generators(out.group, out.group.generators(), gen)});
    }
    return out;
}

/// S3 on {0,1,2}, generated by the transposition (0 1) and the 3-cycle (0 1 2).
inline BuiltinGroup s3() {
    BuiltinGroup out{"S3", FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}), {}, {}};
    for (const auto& p : out.group.permutations()) out.element_names.push_back("[" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]) + "]");
    const auto& gens = out.group.generators();
    const double c = -0.5, s = std::sqrt(3.0) / 2.0;
    out.irreps.push_back({"triv", rep_from_generators(out.group, gens, {detail::m1(1), detail::m1(1)})});
    out.irreps.push_back({"sign", rep_from_generators(out.group, gens, {detail::m1(-1), detail::m1(1)})});
    out.irreps.push_back({"W", rep_from_generators(out.group, gens, {detail::m2(1, 0, 0, -1), detail::m2(c, -s, s, c)})});
    return out;
}

/// D4 (order 8) on the square's vertices, generated by rotation r and a reflection s.
inline BuiltinGroup d4() {
    BuiltinGroup out{"D4", FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}), {}, {}};
    for (const auto& p : out.group.permutations()) {
        std::string label = "[";
        for (int x : p) label += std::to_string(x);
        out.element_names.push_back(label + "]");
    }
    const auto& gens = out.group.generators();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out.irreps.push_back({"chi" + std::to_string(a) + std::to_string(b),
                                  rep_from_generators(out.group, gens, {detail::m1(a ? -1 : 1), detail::m1(b ? -1 : 1)})});
    out.irreps.push_back({"E", rep_from_generators(out.group, gens, {detail::m2(0, -1, 1, 0), detail::m2(1, 0, 0, -1)})});
    return out;
}

/// Quaternion group; element 2u+s is (-1)^s times unit u of {1,i,j,k}.
inline BuiltinGroup q8() {
    // unit products: sign and unit of u*v
    static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    FiniteGroup::Table t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int u = a / 2, v = b / 2;
            const int sg = (a % 2 + b % 2 + sign[u][v]) % 2;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit[u][v] + sg;
        }
    BuiltinGroup out{"Q8", FiniteGroup::from_table(std::move(t), {2, 4}), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, {}};
    const auto& gens = out.group.generators();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out.irreps.push_back({"chi" + std::to_string(a) + std::to_string(b),
                                  rep_from_generators(out.group, gens, {detail::m1(a ? -1 : 1), detail::m1(b ? -1 : 1)})});
    const cd I{0, 1};
    out.irreps.push_back({"H", rep_from_generators(out.group, gens, {detail::m2(I, 0, 0, -I), detail::m2(0, 1, -1, 0)})});
    return out;
}

inline BuiltinGroup by_name(const std::string& name) {
    if (name == "S3" || name == "s3") return s3();
    if (name == "D4" || name == "d4") return d4();
    if (name == "Q8" || name == "q8") return q8();
    if (name.rfind("Z/", 0) == 0) return cyclic(std::stoi(name.substr(2)));
    throw StructuralError("unknown built-in group '" + name + "'");
}

}  // namespace twistrep::catalog
