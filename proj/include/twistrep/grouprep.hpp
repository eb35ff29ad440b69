#pragma once

/**
 * @file grouprep.hpp
 * @brief Finite groups, explicit matrix representations and character theory.
 *
 * Irreducible representations are supplied rather than computed; this header
 * verifies them (homomorphism, irreducibility), grades them by the central
 * copy of the dual of the grading group, and computes hom-space dimensions
 * both from characters and from explicit intertwiner bases.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "twistrep/abgroup.hpp"
#include "twistrep/coherence.hpp"
#include "twistrep/errors.hpp"

namespace twistrep {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Tolerances {
    double matrix = 1e-9;    // entrywise matrix identities
    double integer = 1e-6;   // rounding of character sums to integers
    double projector = 1e-8; // intertwiner and projector identities
};

/// Finite group given by its multiplication table. Element indices are the
/// table's row/column indices.
class FiniteGroup {
  public:
    using Table = std::vector<std::vector<int>>;
    using Perm = std::vector<int>;

    FiniteGroup() { init({{0}}); }

    static FiniteGroup from_table(Table table, std::vector<int> generators = {}) {
        FiniteGroup g;
        g.init(std::move(table));
        for (int s : generators)
            if (s < 0 || s >= g.order()) throw StructuralError("generator index out of range");
        g.generators_ = std::move(generators);
        return g;
    }

    /// Closure of the given permutations of {0..degree-1}. The identity gets
    /// index 0 and the generators are listed first after it (when distinct).
    /// Product convention: (g h)(x) = g(h(x)).
    static FiniteGroup from_permutations(int degree, const std::vector<Perm>& gens) {
        if (degree < 1) throw StructuralError("permutation degree must be >= 1");
        for (const auto& p : gens) check_perm(degree, p);
        Perm id(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;

        std::vector<Perm> elems{id};
        std::map<Perm, int> where{{id, 0}};
        auto intern = [&](const Perm& p) {
            auto [it, inserted] = where.emplace(p, static_cast<int>(elems.size()));
            if (inserted) elems.push_back(p);
            return it->second;
        };
        std::vector<int> gen_idx;
        for (const auto& p : gens) gen_idx.push_back(intern(p));
        for (std::size_t k = 0; k < elems.size(); ++k)
            for (const auto& p : gens) {
                intern(compose(elems[k], p));
                if (elems.size() > kMaxOrder) throw StructuralError("permutation group exceeds order limit");
            }
        const auto n = elems.size();
        Table table(n, std::vector<int>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) table[a][b] = where.at(compose(elems[a], elems[b]));
        FiniteGroup g = from_table(std::move(table), std::move(gen_idx));
        g.perms_ = std::move(elems);
        return g;
    }

    static constexpr std::size_t kMaxOrder = 1000;

    [[nodiscard]] int order() const { return static_cast<int>(table_.size()); }
    [[nodiscard]] int identity() const { return identity_; }
    [[nodiscard]] int mul(int a, int b) const { return table_[idx(a)][idx(b)]; }
    [[nodiscard]] int inv(int a) const { return inverse_[idx(a)]; }
    [[nodiscard]] const Table& table() const { return table_; }
    [[nodiscard]] const std::vector<int>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<std::vector<int>>& classes() const { return classes_; }
    [[nodiscard]] int class_of(int a) const { return class_of_[idx(a)]; }
    [[nodiscard]] const std::vector<int>& center() const { return center_; }
    [[nodiscard]] bool is_central(int a) const { return std::binary_search(center_.begin(), center_.end(), a); }

    /// Permutation images when the group was built from permutations.
    [[nodiscard]] const std::vector<Perm>& permutations() const { return perms_; }

    [[nodiscard]] int index_of_permutation(const Perm& p) const {
        for (std::size_t i = 0; i < perms_.size(); ++i)
            if (perms_[i] == p) return static_cast<int>(i);
        throw StructuralError("permutation is not an element of the group");
    }

    [[nodiscard]] int element_order(int a) const {
        int k = 1;
        for (int x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }

  private:
    static std::size_t idx(int a) { return static_cast<std::size_t>(a); }

    static void check_perm(int degree, const Perm& p) {
        if (static_cast<int>(p.size()) != degree) throw StructuralError("permutation has wrong degree");
        std::vector<bool> seen(p.size(), false);
        for (int x : p) {
            if (x < 0 || x >= degree || seen[idx(x)]) throw StructuralError("not a permutation");
            seen[idx(x)] = true;
        }
    }

    static Perm compose(const Perm& g, const Perm& h) {
        Perm out(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[idx(h[x])];
        return out;
    }

    void init(Table table) {
        const auto n = table.size();
        if (n == 0) throw StructuralError("group table is empty");
        if (n > kMaxOrder) throw StructuralError("group order exceeds " + std::to_string(kMaxOrder));
        for (const auto& row : table) {
            if (row.size() != n) throw StructuralError("group table is not square");
            for (int v : row)
                if (v < 0 || idx(v) >= n) throw StructuralError("group table entry out of range");
        }
        table_ = std::move(table);

        identity_ = -1;
        for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == static_cast<int>(a) && table_[a][e] == static_cast<int>(a);
            if (ok) identity_ = static_cast<int>(e);
        }
        if (identity_ < 0) throw StructuralError("group table has no identity");

        inverse_.assign(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                    inverse_[a] = static_cast<int>(b);
                    break;
                }
            if (inverse_[a] < 0) throw StructuralError("element " + std::to_string(a) + " has no inverse");
        }

        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[idx(table_[a][b])][c] != table_[a][idx(table_[b][c])])
                        throw StructuralError("group table is not associative at (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");

        class_of_.assign(n, -1);
        classes_.clear();
        for (std::size_t a = 0; a < n; ++a) {
            if (class_of_[a] >= 0) continue;
            const int cls = static_cast<int>(classes_.size());
            std::vector<int> members;
            for (std::size_t g = 0; g < n; ++g) {
                const int conj = table_[idx(table_[g][a])][idx(inverse_[g])];
                if (class_of_[idx(conj)] < 0) {
                    class_of_[idx(conj)] = cls;
                    members.push_back(conj);
                }
            }
            std::sort(members.begin(), members.end());
            classes_.push_back(std::move(members));
        }

        center_.clear();
        for (std::size_t a = 0; a < n; ++a)
            if (classes_[idx(class_of_[a])].size() == 1) center_.push_back(static_cast<int>(a));
    }

    Table table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::vector<int> generators_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<int> center_;
    std::vector<Perm> perms_;
};

/// One matrix per group element, indexed like the group.
struct MatrixRep {
    std::vector<Matrix> images;

    [[nodiscard]] int dim() const { return images.empty() ? 0 : static_cast<int>(images.front().rows()); }
    [[nodiscard]] const Matrix& operator()(int g) const { return images[static_cast<std::size_t>(g)]; }
};

/// Character values per group element.
using Character = Vector;

/// Extends generator images to the whole group along a BFS over words. The
/// result is exact at the identity; the homomorphism property is left to
/// validate_irrep / validate_rep.
inline MatrixRep rep_from_generators(const FiniteGroup& G, const std::vector<int>& gens,
                                     const std::vector<Matrix>& gen_images) {
    if (gens.size() != gen_images.size()) throw StructuralError("one matrix per generator required");
    if (gen_images.empty()) {
        if (G.order() != 1) throw StructuralError("no generators given for a nontrivial group");
        return MatrixRep{{Matrix::Identity(1, 1)}};
    }
    const auto d = gen_images.front().rows();
    for (const auto& m : gen_images)
        if (m.rows() != d || m.cols() != d) throw StructuralError("generator matrices must be square of equal size");
    std::vector<Matrix> images(static_cast<std::size_t>(G.order()));
    std::vector<bool> done(images.size(), false);
    images[static_cast<std::size_t>(G.identity())] = Matrix::Identity(d, d);
    done[static_cast<std::size_t>(G.identity())] = true;
    std::queue<int> todo;
    todo.push(G.identity());
    while (!todo.empty()) {
        const int g = todo.front();
        todo.pop();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const int h = G.mul(g, gens[k]);
            if (done[static_cast<std::size_t>(h)]) continue;
            images[static_cast<std::size_t>(h)] = images[static_cast<std::size_t>(g)] * gen_images[k];
            done[static_cast<std::size_t>(h)] = true;
            todo.push(h);
        }
    }
    if (std::find(done.begin(), done.end(), false) != done.end())
        throw StructuralError("declared generators do not generate the group");
    return MatrixRep{std::move(images)};
}

inline Character character_of(const MatrixRep& rho) {
    Character chi(static_cast<Eigen::Index>(rho.images.size()));
    for (std::size_t g = 0; g < rho.images.size(); ++g) chi(static_cast<Eigen::Index>(g)) = rho.images[g].trace();
    return chi;
}

/// (1/|G|) sum_g a(g) conj(b(g)).
inline cd char_inner(const Character& a, const Character& b) {
    return b.dot(a) / static_cast<double>(a.size());
}

/// Checks shape, exact identity and the homomorphism law on all pairs.
inline void validate_rep(const FiniteGroup& G, const MatrixRep& rho, const Tolerances& tol = {}) {
    if (static_cast<int>(rho.images.size()) != G.order())
        throw StructuralError("representation must give one matrix per group element");
    const auto d = rho.dim();
    if (d < 1) throw StructuralError("representation has dimension 0");
    for (const auto& m : rho.images)
        if (m.rows() != d || m.cols() != d) throw StructuralError("representation matrices have inconsistent shape");
    if (rho(G.identity()) != Matrix::Identity(d, d)) throw StructuralError("identity must map to the identity matrix");
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const double err = (rho(g) * rho(h) - rho(G.mul(g, h))).cwiseAbs().maxCoeff();
            if (err > tol.matrix)
                throw StructuralError("not a homomorphism at (" + std::to_string(g) + "," + std::to_string(h) +
                                      "), error " + std::to_string(err));
        }
}

/// Verifies rho is an irreducible representation and returns its character.
inline Character validate_irrep(const FiniteGroup& G, const MatrixRep& rho, const Tolerances& tol = {}) {
    validate_rep(G, rho, tol);
    Character chi = character_of(rho);
    for (const auto& cls : G.classes())
        for (int g : cls)
            if (std::abs(chi(g) - chi(cls.front())) > tol.matrix)
                throw NumericalError("character is not a class function");
    const cd norm = char_inner(chi, chi);
    if (std::abs(norm - cd{1.0, 0.0}) > tol.matrix)
        throw StructuralError("representation is reducible: <chi,chi> = " + std::to_string(norm.real()));
    return chi;
}

inline bool is_unitary(const MatrixRep& rho, double tol = 1e-9) {
    for (const auto& m : rho.images)
        if ((m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

inline std::int64_t round_to_count(cd value, double tol, const char* what) {
    const double r = std::round(value.real());
    if (std::abs(value - cd{r, 0.0}) > tol || r < 0)
        throw NumericalError(std::string(what) + " is not a nonnegative integer: " + std::to_string(value.real()) + "+" +
                             std::to_string(value.imag()) + "i");
    return static_cast<std::int64_t>(r);
}

/// dim hom_G(M1 (x) M2, M3) = (1/|G|) sum_g chi1(g) chi2(g) conj(chi3(g)).
inline std::int64_t hom_dim(const Character& c1, const Character& c2, const Character& c3, const Tolerances& tol = {}) {
    if (c1.size() != c2.size() || c2.size() != c3.size()) throw StructuralError("characters of different groups");
    cd sum{};
    for (Eigen::Index g = 0; g < c1.size(); ++g) sum += c1(g) * c2(g) * std::conj(c3(g));
    return round_to_count(sum / static_cast<double>(c1.size()), tol.integer, "character sum");
}

inline MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b) {
    if (a.images.size() != b.images.size()) throw StructuralError("tensor of representations of different groups");
    MatrixRep out;
    out.images.reserve(a.images.size());
    for (std::size_t g = 0; g < a.images.size(); ++g) {
        const auto& x = a.images[g];
        const auto& y = b.images[g];
        Matrix k(x.rows() * y.rows(), x.cols() * y.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        out.images.push_back(std::move(k));
    }
    return out;
}

/// Row-major Kronecker product, matching tensor_rep's coordinate order.
inline Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix k(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return k;
}

/// Contragredient: g -> rho(g)^{-T}, computed as rho(g^{-1})^T.
inline MatrixRep dual_rep(const FiniteGroup& G, const MatrixRep& rho) {
    MatrixRep out;
    out.images.reserve(rho.images.size());
    for (int g = 0; g < G.order(); ++g) out.images.push_back(rho(G.inv(g)).transpose());
    return out;
}

/// Maps each generator of the dual of A (the basis characters) to a central
/// element of G.
struct CentralEmbedding {
    std::vector<int> images;
};

inline void validate_embedding(const FiniteGroup& G, const FinAbGroup& A, const CentralEmbedding& iota) {
    if (iota.images.size() != A.rank())
        throw StructuralError("central embedding needs one image per invariant factor");
    for (std::size_t i = 0; i < A.rank(); ++i) {
        const int z = iota.images[i];
        if (z < 0 || z >= G.order()) throw StructuralError("embedding image out of range");
        if (!G.is_central(z)) throw StructuralError("embedding image " + std::to_string(z) + " is not central");
        if (A.factors()[i] % G.element_order(z) != 0)
            throw StructuralError("order of embedding image does not divide the invariant factor");
    }
}

/// The unique a in A with rho(iota(chi_i)) = chi_i(a) Id for every dual generator.
inline GroupElt grade_of(const FiniteGroup& G, const MatrixRep& rho, const CentralEmbedding& iota, const FinAbGroup& A,
                         const Tolerances& tol = {}) {
    if (iota.images.size() != A.rank()) throw StructuralError("central embedding needs one image per invariant factor");
    const auto d = rho.dim();
    const Matrix id = Matrix::Identity(d, d);
    GroupElt grade = A.zero();
    for (std::size_t i = 0; i < A.rank(); ++i) {
        const Matrix& z = rho(iota.images[i]);
        const DualChar chi = A.dual_generator(i);
        bool found = false;
        for (std::int64_t t = 0; t < A.factors()[i] && !found; ++t) {
            GroupElt probe = A.zero();
            probe.residues[i] = t;
            if ((z - A.char_eval(chi, probe).to_complex() * id).cwiseAbs().maxCoeff() <= tol.matrix) {
                grade.residues[i] = t;
                found = true;
            }
        }
        if (!found)
            throw GradingError("central element " + std::to_string(iota.images[i]) +
                               " does not act by a scalar of the expected order");
    }
    return grade;
}

struct GradedIrrep {
    std::string name;
    MatrixRep rep;
    GroupElt grade;
    Character character;

    [[nodiscard]] int dim() const { return rep.dim(); }
};

inline GradedIrrep make_graded_irrep(const FiniteGroup& G, const FinAbGroup& A, const CentralEmbedding& iota,
                                     std::string name, MatrixRep rep, const Tolerances& tol = {}) {
    Character chi = validate_irrep(G, rep, tol);
    GroupElt grade = grade_of(G, rep, iota, A, tol);
    return GradedIrrep{std::move(name), std::move(rep), std::move(grade), std::move(chi)};
}

/// P = (1/|G|) sum_g  X -> rho_out(g) X rho_in(g^{-1}), as a matrix on
/// column-major vec(X) for X of shape d_out x d_in.
inline Matrix averaging_projector(const FiniteGroup& G, const MatrixRep& rho_in, const MatrixRep& rho_out) {
    const auto din = rho_in.dim();
    const auto dout = rho_out.dim();
    Matrix P = Matrix::Zero(din * dout, din * dout);
    for (int g = 0; g < G.order(); ++g) {
        // vec(A X B) = (B^T (x) A) vec(X) with column-major vec; Eigen's
        // kroneckerProduct is not in core, so expand by blocks.
        const Matrix bt = rho_in(G.inv(g)).transpose();
        const Matrix& a = rho_out(g);
        for (Eigen::Index i = 0; i < din; ++i)
            for (Eigen::Index j = 0; j < din; ++j) P.block(i * dout, j * dout, dout, dout) += bt(i, j) * a;
    }
    return P / static_cast<double>(G.order());
}

struct IntertwinerSpace {
    std::vector<Matrix> basis;   // each d_out x d_in
    double idempotence_error = 0;
};

/// Basis of hom_G(in, out) as the fixed space of the averaging projector.
inline IntertwinerSpace intertwiners(const FiniteGroup& G, const MatrixRep& rho_in, const MatrixRep& rho_out,
                                     const Tolerances& tol = {}) {
    const Matrix P = averaging_projector(G, rho_in, rho_out);
    IntertwinerSpace out;
    out.idempotence_error = P.size() ? (P * P - P).cwiseAbs().maxCoeff() : 0.0;
    if (out.idempotence_error > tol.projector)
        throw NumericalError("averaging operator is not idempotent: " + std::to_string(out.idempotence_error));
    Eigen::JacobiSVD<Matrix> svd(P, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const auto dout = rho_out.dim();
    const auto din = rho_in.dim();
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) < 0.5) continue;  // projector eigenvalues are 0 or 1
        const Vector col = svd.matrixU().col(k);
        out.basis.push_back(Eigen::Map<const Matrix>(col.data(), dout, din));
    }
    for (const auto& T : out.basis)
        for (int g = 0; g < G.order(); ++g)
            if ((rho_out(g) * T - T * rho_in(g)).cwiseAbs().maxCoeff() > tol.projector)
                throw NumericalError("projector image is not an intertwiner");
    return out;
}

/// Basis of hom_G(M1 (x) M2, M3), each element d3 x (d1 d2). Its size is
/// checked against the character-theoretic hom_dim.
inline std::vector<Matrix> intertwiner_basis(const FiniteGroup& G, const GradedIrrep& m1, const GradedIrrep& m2,
                                             const GradedIrrep& m3, const Tolerances& tol = {}) {
    auto space = intertwiners(G, tensor_rep(m1.rep, m2.rep), m3.rep, tol);
    const auto expected = hom_dim(m1.character, m2.character, m3.character, tol);
    if (static_cast<std::int64_t>(space.basis.size()) != expected)
        throw NumericalError("intertwiner rank " + std::to_string(space.basis.size()) + " differs from hom_dim " +
                             std::to_string(expected) + " for (" + m1.name + "," + m2.name + "," + m3.name + ")");
    return std::move(space.basis);
}

/// Sum of squared dimensions must equal |G| for a complete irrep catalog.
inline void check_complete_catalog(const FiniteGroup& G, const std::vector<GradedIrrep>& catalog) {
    std::int64_t s = 0;
    for (const auto& m : catalog) s += static_cast<std::int64_t>(m.dim()) * m.dim();
    AxiomCheck check{"catalog-completeness"};
    check.record(s == G.order(), [&] { return "sum d^2 = " + std::to_string(s) + ", |G| = " + std::to_string(G.order()); });
    if (!check.passed()) throw ValidationError("incomplete irrep catalog: " + *check.witness, CoherenceReport{{check}});
}

}  // namespace twistrep
