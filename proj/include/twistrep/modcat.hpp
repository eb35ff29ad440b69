#pragma once

/**
 * @file modcat.hpp
 * @brief The twisted category of graded finite-group representations.
 *
 * Objects are tensor words of homogeneous graded spaces, flattened to one
 * coordinate space in row-major order, so re-bracketing is the identity and
 * every structure morphism is a cocycle scalar times a permutation matrix:
 *
 *   associator  A_{M1,M2,M3} : M1(M2M3) -> (M1M2)M3   = F(a1,a2,a3)^-1 Id
 *   braiding    R_{M1,M2}    : M1 M2 -> M2 M1          = Omega(a1,a2)^-1 flip
 *   coevaluation i_M : 1 -> M M*                       = sum_i m_i (x) m_i'
 *   evaluation   e_M : M* M -> 1                       = F(a,-a,a)^-1 <m', m>
 *   twist        theta_M                               = Omega(a,a)^-1
 *
 * Structure morphisms are stored as sparse matrices; they are monomial.
 */

#include <Eigen/Sparse>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twistrep/cocycle.hpp"
#include "twistrep/coherence.hpp"
#include "twistrep/grouprep.hpp"

namespace twistrep {

using SparseMatrix = Eigen::SparseMatrix<cd>;

/// A homogeneous object: only its dimension and grade enter the structure
/// morphisms.
struct GradedObject {
    std::string label;
    int dim = 1;
    GroupElt grade;
};

struct StructureMorphism {
    SparseMatrix matrix;
    std::string source;
    std::string target;

    [[nodiscard]] Matrix dense() const { return Matrix(matrix); }
};

namespace sparse {

inline SparseMatrix identity(Eigen::Index n) {
    SparseMatrix m(n, n);
    m.setIdentity();
    return m;
}

inline SparseMatrix scalar(cd value, Eigen::Index n) { return value * identity(n); }

/// (i, j) -> (j, i) on C^{d1} (x) C^{d2}.
inline SparseMatrix flip(Eigen::Index d1, Eigen::Index d2) {
    SparseMatrix m(d1 * d2, d1 * d2);
    std::vector<Eigen::Triplet<cd>> t;
    t.reserve(static_cast<std::size_t>(d1 * d2));
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d2; ++j) t.emplace_back(j * d1 + i, i * d2 + j, cd{1.0, 0.0});
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

/// Row-major Kronecker product.
inline SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cd>> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib)
                    t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

inline double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
    const SparseMatrix d = a - b;
    double m = 0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(d, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

}  // namespace sparse

inline GradedObject tensor(const FinAbGroup& A, const GradedObject& m, const GradedObject& n) {
    return {"(" + m.label + "*" + n.label + ")", m.dim * n.dim, A.add(m.grade, n.grade)};
}

inline GradedObject dual(const FinAbGroup& A, const GradedObject& m) { return {m.label + "'", m.dim, A.neg(m.grade)}; }

inline StructureMorphism associator(const AbelianCocycle& c, const GradedObject& m1, const GradedObject& m2,
                                    const GradedObject& m3) {
    const auto d = static_cast<Eigen::Index>(m1.dim) * m2.dim * m3.dim;
    return {sparse::scalar(c.F(m1.grade, m2.grade, m3.grade).inverse().to_complex(), d),
            m1.label + "*(" + m2.label + "*" + m3.label + ")", "(" + m1.label + "*" + m2.label + ")*" + m3.label};
}

/// A^-1_{M1,M2,M3} : (M1M2)M3 -> M1(M2M3) = F(a1,a2,a3) Id.
inline StructureMorphism associator_inverse(const AbelianCocycle& c, const GradedObject& m1, const GradedObject& m2,
                                            const GradedObject& m3) {
    const auto d = static_cast<Eigen::Index>(m1.dim) * m2.dim * m3.dim;
    return {sparse::scalar(c.F(m1.grade, m2.grade, m3.grade).to_complex(), d),
            "(" + m1.label + "*" + m2.label + ")*" + m3.label, m1.label + "*(" + m2.label + "*" + m3.label + ")"};
}

inline StructureMorphism braiding(const AbelianCocycle& c, const GradedObject& m1, const GradedObject& m2) {
    const cd s = c.Omega(m1.grade, m2.grade).inverse().to_complex();
    return {s * sparse::flip(m1.dim, m2.dim), m1.label + "*" + m2.label, m2.label + "*" + m1.label};
}

/// i_M as a d^2 x 1 column on M (x) M*.
inline StructureMorphism coevaluation(const AbelianCocycle&, const GradedObject& m) {
    const Eigen::Index d = m.dim;
    SparseMatrix v(d * d, 1);
    std::vector<Eigen::Triplet<cd>> t;
    for (Eigen::Index i = 0; i < d; ++i) t.emplace_back(i * d + i, 0, cd{1.0, 0.0});
    v.setFromTriplets(t.begin(), t.end());
    return {v, "1", m.label + "*" + m.label + "'"};
}

/// e_M as a 1 x d^2 row on M* (x) M, including the F(a,-a,a)^-1 correction.
inline StructureMorphism evaluation(const AbelianCocycle& c, const GradedObject& m) {
    const auto& A = c.group();
    const cd s = c.F(m.grade, A.neg(m.grade), m.grade).inverse().to_complex();
    const Eigen::Index d = m.dim;
    SparseMatrix v(1, d * d);
    std::vector<Eigen::Triplet<cd>> t;
    for (Eigen::Index i = 0; i < d; ++i) t.emplace_back(0, i * d + i, s);
    v.setFromTriplets(t.begin(), t.end());
    return {v, m.label + "'*" + m.label, "1"};
}

inline UnitScalar twist(const AbelianCocycle& c, const GradedObject& m) {
    return c.Omega(m.grade, m.grade).inverse();
}

/// Tr f = e_M o R_{M,M*} o ((theta_M f) (x) 1) o i_M.
inline cd cat_trace(const AbelianCocycle& c, const GradedObject& m, const SparseMatrix& f) {
    if (f.rows() != m.dim || f.cols() != m.dim) throw StructuralError("cat_trace: endomorphism has wrong shape");
    const auto& A = c.group();
    const GradedObject md = dual(A, m);
    const SparseMatrix theta_f = twist(c, m).to_complex() * f;
    const SparseMatrix step1 = coevaluation(c, m).matrix;
    const SparseMatrix step2 = sparse::kron(theta_f, sparse::identity(m.dim)) * step1;
    const SparseMatrix step3 = braiding(c, m, md).matrix * step2;
    const SparseMatrix out = evaluation(c, m).matrix * step3;
    return SparseMatrix(out).coeff(0, 0);
}

inline cd cat_trace(const AbelianCocycle& c, const GradedObject& m, const Matrix& f) {
    return cat_trace(c, m, SparseMatrix(f.sparseView(0.0, 0.0)));
}

inline cd cat_dim(const AbelianCocycle& c, const GradedObject& m) {
    return cat_trace(c, m, sparse::identity(m.dim));
}

/// Exact scalar by which the categorical trace of the identity differs from
/// the ordinary dimension: (Omega(a,a) Omega(a,-a) F(a,-a,a))^-1. Equal to 1
/// for every valid cocycle.
inline UnitScalar cat_dim_factor(const AbelianCocycle& c, const GroupElt& a) {
    const auto na = c.group().neg(a);
    return (c.Omega(a, a) * c.Omega(a, na) * c.F(a, na, a)).inverse();
}

/// Categorical trace of R_{N,M} o R_{M,N} on M (x) N.
inline cd s_entry(const AbelianCocycle& c, const GradedObject& m, const GradedObject& n) {
    const auto& A = c.group();
    const SparseMatrix dbl = braiding(c, n, m).matrix * braiding(c, m, n).matrix;
    return cat_trace(c, tensor(A, m, n), dbl);
}

/// Exact double-braiding scalar (Omega(a,b) Omega(b,a))^-1 = e(-b(a,b)).
inline UnitScalar double_braiding_scalar(const AbelianCocycle& c, const GroupElt& a, const GroupElt& b) {
    return UnitScalar(c.bform(a, b)).inverse();
}

struct SuiteOptions {
    Tolerances tol{};
    std::int64_t max_product_dim = 4096;
};

/// Matrix-level coherence checks over all tuples of the given objects, plus
/// exact scalar versions of the same identities. objects[unit] must be the
/// unit (dimension 1, grade 0).
inline CoherenceReport coherence_suite(const AbelianCocycle& c, const std::vector<GradedObject>& objects,
                                       std::size_t unit, const SuiteOptions& opt = {}) {
    using sparse::identity;
    using sparse::kron;
    const auto& A = c.group();
    const double tol = opt.tol.matrix;
    auto close = [tol](const SparseMatrix& x, const SparseMatrix& y) { return sparse::max_abs_diff(x, y) <= tol; };
    auto names = [](std::initializer_list<const GradedObject*> objs) {
        std::string s = "(";
        bool first = true;
        for (const auto* o : objs) {
            s += (first ? "" : ", ") + o->label;
            first = false;
        }
        return s + ")";
    };
    auto within_cap = [&](std::initializer_list<const GradedObject*> objs) {
        std::int64_t d = 1;
        for (const auto* o : objs) d *= o->dim;
        return d <= opt.max_product_dim;
    };

    AxiomCheck pent{"pentagon"}, tri{"triangle"}, hex1{"hexagon1"}, hex2{"hexagon2"}, snake_l{"snake-left"},
        snake_r{"snake-right"}, bal{"balancing"}, tdual{"twist-dual"}, tunit{"twist-unit"}, dbl{"double-braiding"},
        bal_x{"balancing-exact"}, tdual_x{"twist-dual-exact"}, rig_x{"rigidity-exact"}, dim_x{"dimension-exact"};

    if (unit >= objects.size() || objects[unit].dim != 1 || !objects[unit].grade.is_zero())
        throw StructuralError("coherence_suite: unit object must have dimension 1 and grade 0");
    const GradedObject& one = objects[unit];
    tunit.record(twist(c, one).is_one(), [&] { return one.label; });

    for (const auto& x : objects) {
        const GradedObject xd = dual(A, x);
        const Eigen::Index d = x.dim;
        // (1 (x) e) A^-1 (i (x) 1) = 1_M
        const SparseMatrix left = kron(identity(d), evaluation(c, x).matrix) *
                                  (associator_inverse(c, x, xd, x).matrix *
                                   kron(coevaluation(c, x).matrix, identity(d)));
        snake_l.record(close(left, identity(d)), [&] { return names({&x}); });
        // (e (x) 1) A (1 (x) i) = 1_{M*}
        const SparseMatrix right = kron(evaluation(c, x).matrix, identity(d)) *
                                   (associator(c, xd, x, xd).matrix * kron(identity(d), coevaluation(c, x).matrix));
        snake_r.record(close(right, identity(d)), [&] { return names({&x}); });
        // theta_{M*} = (theta_M)^*
        const SparseMatrix th = twist(c, x).to_complex() * identity(d);
        const SparseMatrix thd = twist(c, xd).to_complex() * identity(d);
        tdual.record(close(thd, SparseMatrix(th.transpose())), [&] { return names({&x}); });
        tdual_x.record(twist(c, xd) == twist(c, x), [&] { return names({&x}); });
        rig_x.record((c.F(xd.grade, x.grade, xd.grade) * c.F(x.grade, xd.grade, x.grade)).is_one(),
                     [&] { return names({&x}); });
        dim_x.record(cat_dim_factor(c, x.grade).is_one(), [&] { return names({&x}); });
    }

    for (const auto& x : objects)
        for (const auto& y : objects) {
            const Eigen::Index dx = x.dim, dy = y.dim;
            // (rho (x) 1) A_{X,1,Y} = 1 (x) lambda; unitors are identities on flattened coordinates
            tri.record(close(associator(c, x, one, y).matrix, identity(dx * dy)), [&] { return names({&x, &y}); });

            const SparseMatrix rr = braiding(c, y, x).matrix * braiding(c, x, y).matrix;
            const cd expected = double_braiding_scalar(c, x.grade, y.grade).to_complex();
            dbl.record(close(rr, expected * identity(dx * dy)), [&] { return names({&x, &y}); });

            const GradedObject xy = tensor(A, x, y);
            const SparseMatrix lhs = twist(c, xy).to_complex() * identity(dx * dy);
            const SparseMatrix rhs =
                rr * kron(twist(c, x).to_complex() * identity(dx), twist(c, y).to_complex() * identity(dy));
            bal.record(close(lhs, rhs), [&] { return names({&x, &y}); });
            bal_x.record(twist(c, xy) == double_braiding_scalar(c, x.grade, y.grade) * twist(c, x) * twist(c, y),
                         [&] { return names({&x, &y}); });
        }

    for (const auto& x : objects)
        for (const auto& y : objects)
            for (const auto& z : objects) {
                if (!within_cap({&x, &y, &z})) continue;
                const Eigen::Index dx = x.dim, dy = y.dim, dz = z.dim;
                const GradedObject yz = tensor(A, y, z), xy = tensor(A, x, y);
                // braid X past Y(x)Z
                const SparseMatrix h2_lhs = associator_inverse(c, y, z, x).matrix *
                                            braiding(c, x, yz).matrix *
                                            associator_inverse(c, x, y, z).matrix;
                const SparseMatrix h2_rhs = kron(identity(dy), braiding(c, x, z).matrix) *
                                            associator_inverse(c, y, x, z).matrix *
                                            kron(braiding(c, x, y).matrix, identity(dz));
                hex2.record(close(h2_lhs, h2_rhs), [&] { return names({&x, &y, &z}); });
                // braid X(x)Y past Z
                const SparseMatrix h1_lhs =
                    associator(c, z, x, y).matrix * braiding(c, xy, z).matrix * associator(c, x, y, z).matrix;
                const SparseMatrix h1_rhs = kron(braiding(c, x, z).matrix, identity(dy)) * associator(c, x, z, y).matrix *
                                            kron(identity(dx), braiding(c, y, z).matrix);
                hex1.record(close(h1_lhs, h1_rhs), [&] { return names({&x, &y, &z}); });

                for (const auto& w : objects) {
                    if (!within_cap({&x, &y, &z, &w})) continue;
                    const GradedObject zw = tensor(A, z, w);
                    const Eigen::Index dw = w.dim;
                    // A_{XY,Z,W} A_{X,Y,ZW} = (A_{X,Y,Z} (x) 1) A_{X,YZ,W} (1 (x) A_{Y,Z,W})
                    const SparseMatrix p_lhs = associator(c, xy, z, w).matrix * associator(c, x, y, zw).matrix;
                    const SparseMatrix p_rhs = kron(associator(c, x, y, z).matrix, identity(dw)) *
                                               associator(c, x, yz, w).matrix *
                                               kron(identity(dx), associator(c, y, z, w).matrix);
                    pent.record(close(p_lhs, p_rhs), [&] { return names({&x, &y, &z, &w}); });
                }
            }

    return CoherenceReport{{pent, tri, hex1, hex2, snake_l, snake_r, bal, tdual, tunit, dbl, bal_x, tdual_x, rig_x, dim_x}};
}

/// Rep_{A,F,Omega}(G) with a catalog of graded irreducibles.
class TwistedCategory {
  public:
    struct IrrepInput {
        std::string name;
        MatrixRep rep;
    };

    TwistedCategory(FiniteGroup group, AbelianCocycle cocycle, CentralEmbedding embedding,
                    const std::vector<IrrepInput>& irreps, bool complete, Tolerances tol = {})
        : group_(std::move(group)), cocycle_(std::move(cocycle)), embedding_(std::move(embedding)), complete_(complete),
          tol_(tol) {
        validate_embedding(group_, cocycle_.group(), embedding_);
        for (const auto& in : irreps)
            catalog_.push_back(make_graded_irrep(group_, cocycle_.group(), embedding_, in.name, in.rep, tol_));
        if (complete_) check_complete_catalog(group_, catalog_);
    }

    [[nodiscard]] const FiniteGroup& group() const { return group_; }
    [[nodiscard]] const AbelianCocycle& cocycle() const { return cocycle_; }
    [[nodiscard]] const FinAbGroup& grading() const { return cocycle_.group(); }
    [[nodiscard]] const CentralEmbedding& embedding() const { return embedding_; }
    [[nodiscard]] const std::vector<GradedIrrep>& catalog() const { return catalog_; }
    [[nodiscard]] bool complete() const { return complete_; }
    [[nodiscard]] const Tolerances& tolerances() const { return tol_; }

    [[nodiscard]] GradedObject object(std::size_t i) const {
        const auto& m = catalog_.at(i);
        return {m.name, m.dim(), m.grade};
    }

    [[nodiscard]] std::vector<GradedObject> objects() const {
        std::vector<GradedObject> out;
        for (std::size_t i = 0; i < catalog_.size(); ++i) out.push_back(object(i));
        return out;
    }

    /// Index of the trivial representation in the catalog.
    [[nodiscard]] std::size_t unit_index() const {
        for (std::size_t i = 0; i < catalog_.size(); ++i) {
            const auto& m = catalog_[i];
            if (m.dim() != 1) continue;
            bool trivial = true;
            for (Eigen::Index g = 0; g < m.character.size() && trivial; ++g)
                trivial = std::abs(m.character(g) - cd{1.0, 0.0}) <= tol_.matrix;
            if (trivial) return i;
        }
        throw StructuralError("catalog does not contain the trivial representation");
    }

    [[nodiscard]] CoherenceReport coherence_suite(std::int64_t max_product_dim = 4096) const {
        return twistrep::coherence_suite(cocycle_, objects(), unit_index(), SuiteOptions{tol_, max_product_dim});
    }

    /// Random intertwiners f: M_a (x) M_b -> M_c commute with braiding,
    /// associator and twist.
    [[nodiscard]] AxiomCheck naturality_spotcheck(std::uint64_t seed, int samples = 32) const {
        AxiomCheck check{"naturality"};
        if (catalog_.empty()) return check;
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const auto n = catalog_.size();
        const auto& A = grading();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const auto objs = objects();
        for (int s = 0; s < samples; ++s) {
            const std::size_t a = pick(rng), b = pick(rng), cidx = pick(rng), k = pick(rng), l = pick(rng);
            const auto basis = intertwiner_basis(group_, catalog_[a], catalog_[b], catalog_[cidx], tol_);
            if (basis.empty()) continue;
            Matrix f = Matrix::Zero(basis.front().rows(), basis.front().cols());
            for (const auto& t : basis) f += cd{gauss(rng), gauss(rng)} * t;
            const SparseMatrix fs = f.sparseView(0.0, 0.0);
            const GradedObject ab = tensor(A, objs[a], objs[b]);
            const GradedObject& mc = objs[cidx];
            const GradedObject& nk = objs[k];
            const GradedObject& pl = objs[l];
            const auto dn = nk.dim, dp = pl.dim;
            using sparse::identity;
            using sparse::kron;
            const double tol = tol_.projector * (1.0 + f.cwiseAbs().maxCoeff());
            const SparseMatrix br_l = braiding(cocycle_, mc, nk).matrix * kron(fs, identity(dn));
            const SparseMatrix br_r = kron(identity(dn), fs) * braiding(cocycle_, ab, nk).matrix;
            const SparseMatrix as_l = associator(cocycle_, mc, nk, pl).matrix * kron(fs, identity(dn * dp));
            const SparseMatrix as_r = kron(fs, identity(dn * dp)) * associator(cocycle_, ab, nk, pl).matrix;
            const SparseMatrix tw_l = twist(cocycle_, mc).to_complex() * fs;
            const SparseMatrix tw_r = fs * (twist(cocycle_, ab).to_complex() * identity(ab.dim));
            const bool ok = sparse::max_abs_diff(br_l, br_r) <= tol && sparse::max_abs_diff(as_l, as_r) <= tol &&
                            sparse::max_abs_diff(tw_l, tw_r) <= tol;
            check.record(ok, [&] {
                return "(" + objs[a].label + "*" + objs[b].label + " -> " + mc.label + "; " + nk.label + ", " +
                       pl.label + ")";
            });
        }
        return check;
    }

  private:
    FiniteGroup group_;
    AbelianCocycle cocycle_;
    CentralEmbedding embedding_;
    std::vector<GradedIrrep> catalog_;
    bool complete_ = false;
    Tolerances tol_;
};

}  // namespace twistrep
