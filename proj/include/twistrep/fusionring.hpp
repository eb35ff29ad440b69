#pragma once

// Fusion coefficients N^c_{ab} = dim hom_G(M_a (x) M_b, M_c) for finite-group
// catalogs, and the Z/2-graded SU(2) fusion ring at the level of labels.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "twistrep/errors.hpp"
#include "twistrep/modcat.hpp"

namespace twistrep {

class FusionTable {
  public:
    FusionTable(std::vector<std::string> labels, std::vector<int> dims, std::size_t unit)
        : labels_(std::move(labels)), dims_(std::move(dims)), unit_(unit), n_(labels_.size()),
          coeff_(n_ * n_ * n_, 0) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
    [[nodiscard]] std::size_t unit() const { return unit_; }

    [[nodiscard]] std::int64_t operator()(std::size_t a, std::size_t b, std::size_t c) const { return coeff_[(a * n_ + b) * n_ + c]; }
    std::int64_t& at(std::size_t a, std::size_t b, std::size_t c) { return coeff_[(a * n_ + b) * n_ + c]; }

    /// Symmetry, unit row and the dimension rule sum_c N^c_ab d_c = d_a d_b.
    [[nodiscard]] CoherenceReport check_invariants() const {
        AxiomCheck sym{"fusion-symmetry"}, unit{"fusion-unit"}, dimrule{"fusion-dimension-rule"};
        auto tup = [&](std::size_t a, std::size_t b) { return "(" + labels_[a] + ", " + labels_[b] + ")"; };
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                bool s = true;
                std::int64_t total = 0;
                for (std::size_t c = 0; c < n_; ++c) {
                    s = s && (*this)(a, b, c) == (*this)(b, a, c);
                    total += (*this)(a, b, c) * dims_[c];
                }
                sym.record(s, [&] { return tup(a, b); });
                dimrule.record(total == static_cast<std::int64_t>(dims_[a]) * dims_[b], [&] { return tup(a, b); });
            }
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c)
                unit.record((*this)(unit_, b, c) == (b == c ? 1 : 0), [&] { return tup(b, c); });
        return CoherenceReport{{sym, unit, dimrule}};
    }

    /// sum_e N^e_ab N^d_ec = sum_f N^d_af N^f_bc for all (a,b,c,d).
    [[nodiscard]] AxiomCheck check_associativity() const {
        AxiomCheck check{"fusion-associativity"};
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c)
                    for (std::size_t d = 0; d < n_; ++d) {
                        std::int64_t lhs = 0, rhs = 0;
                        for (std::size_t e = 0; e < n_; ++e) {
                            lhs += (*this)(a, b, e) * (*this)(e, c, d);
                            rhs += (*this)(a, e, d) * (*this)(b, c, e);
                        }
                        check.record(lhs == rhs, [&] {
                            return "(" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ", " + labels_[d] + ")";
                        });
                    }
        return check;
    }

    friend bool operator==(const FusionTable&, const FusionTable&) = default;

  private:
    std::vector<std::string> labels_;
    std::vector<int> dims_;
    std::size_t unit_;
    std::size_t n_;
    std::vector<std::int64_t> coeff_;
};

namespace detail {
inline FusionTable empty_table(const TwistedCategory& C) {
    std::vector<std::string> labels;
    std::vector<int> dims;
    for (const auto& m : C.catalog()) {
        labels.push_back(m.name);
        dims.push_back(m.dim());
    }
    return FusionTable(std::move(labels), std::move(dims), C.unit_index());
}
}  // namespace detail

/// Character-sum fusion table; throws ConsistencyError if the invariants fail.
inline FusionTable fusion_table(const TwistedCategory& C) {
    FusionTable t = detail::empty_table(C);
    const auto& cat = C.catalog();
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = 0; b < cat.size(); ++b)
            for (std::size_t c = 0; c < cat.size(); ++c)
                t.at(a, b, c) = hom_dim(cat[a].character, cat[b].character, cat[c].character, C.tolerances());
    const auto report = t.check_invariants();
    if (const auto* bad = report.first_failure())
        throw ConsistencyError("fusion table violates " + bad->axiom + " at " + *bad->witness +
                               " (incomplete irrep catalog?)");
    return t;
}

/// The same table from ranks of the averaging projector.
inline FusionTable fusion_table_by_projector(const TwistedCategory& C) {
    FusionTable t = detail::empty_table(C);
    const auto& cat = C.catalog();
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = 0; b < cat.size(); ++b) {
            const MatrixRep ab = tensor_rep(cat[a].rep, cat[b].rep);
            for (std::size_t c = 0; c < cat.size(); ++c)
                t.at(a, b, c) =
                    static_cast<std::int64_t>(intertwiners(C.group(), ab, cat[c].rep, C.tolerances()).basis.size());
        }
    return t;
}

/// sum over the catalog of cat_dim(M) cat_dim(M*), which must be |G|.
inline std::int64_t group_order_identity(const TwistedCategory& C) {
    if (!C.complete()) throw ConsistencyError("group_order_identity needs a complete irrep catalog");
    cd total{};
    for (const auto& m : C.objects()) total += cat_dim(C.cocycle(), m) * cat_dim(C.cocycle(), dual(C.grading(), m));
    const double r = std::round(total.real());
    if (std::abs(total - cd{r, 0.0}) > C.tolerances().integer || static_cast<std::int64_t>(r) != C.group().order())
        throw ConsistencyError("sum of categorical dimension products is " + std::to_string(total.real()) +
                               ", group order is " + std::to_string(C.group().order()));
    return static_cast<std::int64_t>(r);
}

// ---------------------------------------------------------------------------
// SU(2), Grothendieck-ring level.

/// Formal sum of V(n), stored as a sorted list of spins (with repeats).
struct SU2Object {
    std::vector<int> spins;

    [[nodiscard]] std::int64_t dim() const {
        std::int64_t d = 0;
        for (int n : spins) d += n + 1;
        return d;
    }
    friend bool operator==(const SU2Object&, const SU2Object&) = default;
};

inline constexpr int kSu2MaxSpin = 64;

/// Clebsch-Gordan: V(m) (x) V(n) = V(|m-n|) + V(|m-n|+2) + ... + V(m+n).
inline SU2Object su2_tensor(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("su2_tensor: spins must be nonnegative");
    SU2Object out;
    for (int k = std::abs(m - n); k <= m + n; k += 2) out.spins.push_back(k);
    return out;
}

inline std::int64_t su2_fusion_coefficient(int m, int n, int k) {
    if (m < 0 || n < 0 || k < 0) throw DomainError("su2 spins must be nonnegative");
    return (k >= std::abs(m - n) && k <= m + n && (m + n - k) % 2 == 0) ? 1 : 0;
}

/// V(n) as a graded object of the twisted category on Z/2.
inline GradedObject su2_object(int n) { return {"V(" + std::to_string(n) + ")", n + 1, GroupElt{{n % 2}}}; }

/// Unnormalized S_{m,n} = e(-b(m mod 2, n mod 2)) (m+1)(n+1), exact.
inline std::int64_t su2_smatrix(int m, int n, const AbelianCocycle& c) {
    if (m < 0 || n < 0) throw DomainError("su2_smatrix: spins must be nonnegative");
    if (c.group() != FinAbGroup::cyclic(2)) throw StructuralError("su2_smatrix needs a cocycle on Z/2");
    const UnitScalar s = double_braiding_scalar(c, GroupElt{{m % 2}}, GroupElt{{n % 2}});
    const std::int64_t mag = static_cast<std::int64_t>(m + 1) * (n + 1);
    if (s.is_one()) return mag;
    if (s == UnitScalar(1, 2)) return -mag;
    throw ConsistencyError("double braiding on Z/2 is not a sign: " + s.str());
}

}  // namespace twistrep
