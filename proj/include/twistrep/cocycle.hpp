#pragma once

/**
 * @file cocycle.hpp
 * @brief Normalized abelian 3-cocycles (F, Omega) on a finite abelian group.
 *
 * Tables are dense and indexed by the enumeration of FinAbGroup. All values
 * are exact roots of unity, so the pentagon, hexagon and normalization
 * identities are checked with zero tolerance.
 *
 * Axioms (all exponents mod 1):
 *   pentagon   F(a1,a2,a3) F(a1,a2+a3,a4) F(a2,a3,a4) = F(a1,a2,a3+a4) F(a1+a2,a3,a4)
 *   hexagon 1  F(a1,a2,a3) W(a1+a2,a3) F(a3,a1,a2) = W(a2,a3) F(a1,a3,a2) W(a1,a3)
 *   hexagon 2  F(a1,a2,a3)^-1 W(a1,a2+a3) F(a2,a3,a1)^-1 = W(a1,a2) F(a2,a1,a3)^-1 W(a1,a3)
 * with W = Omega.
 */

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "twistrep/abgroup.hpp"
#include "twistrep/coherence.hpp"
#include "twistrep/errors.hpp"
#include "twistrep/unitscalar.hpp"

namespace twistrep {

class AbelianCocycle {
  public:
    static constexpr std::int64_t kMaxOrder = 256;

    AbelianCocycle() : AbelianCocycle(FinAbGroup{}, {RationalMod1{}}, {RationalMod1{}}) {}

    /// Builds and validates. Throws StructuralError on wrong table sizes and
    /// ValidationError (with report) when an axiom fails.
    static AbelianCocycle from_tables(FinAbGroup A, std::vector<RationalMod1> f_table,
                                      std::vector<RationalMod1> omega_table) {
        AbelianCocycle c(std::move(A), std::move(f_table), std::move(omega_table));
        auto report = c.validate();
        if (!report.passed()) {
            const auto* bad = report.first_failure();
            throw ValidationError("abelian 3-cocycle fails " + bad->axiom + " at " + *bad->witness, std::move(report));
        }
        return c;
    }

    /// No axiom check. For feeding deliberately broken data to diagnostics.
    static AbelianCocycle unchecked(FinAbGroup A, std::vector<RationalMod1> f_table,
                                    std::vector<RationalMod1> omega_table) {
        return AbelianCocycle(std::move(A), std::move(f_table), std::move(omega_table));
    }

    static AbelianCocycle trivial(const FinAbGroup& A) {
        const auto n = static_cast<std::size_t>(A.order());
        return from_tables(A, std::vector<RationalMod1>(n * n * n), std::vector<RationalMod1>(n * n));
    }

    /// Eilenberg-MacLane style representative on Z/n:
    ///   F(a,b,c) = e(s a (b + c - [b+c]) / n^2),  Omega(a,b) = e(s a b / n^2)
    /// with representatives in [0, n). This is a cocycle exactly when n | 2s;
    /// otherwise the eager validation throws.
    static AbelianCocycle build_cyclic(std::int64_t n, std::int64_t s) {
        if (n < 1) throw DomainError("build_cyclic: n must be >= 1");
        const std::int64_t n2 = n * n;
        std::vector<RationalMod1> f(static_cast<std::size_t>(n * n * n));
        std::vector<RationalMod1> w(static_cast<std::size_t>(n * n));
        const std::int64_t sr = ((s % n2) + n2) % n2;
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                w[static_cast<std::size_t>(a * n + b)] = RationalMod1(sr * a * b, n2);
                for (std::int64_t c = 0; c < n; ++c) {
                    const std::int64_t carry = b + c - (b + c) % n;
                    f[static_cast<std::size_t>((a * n + b) * n + c)] = RationalMod1(sr * a * carry, n2);
                }
            }
        return from_tables(FinAbGroup::cyclic(n), std::move(f), std::move(w));
    }

    [[nodiscard]] const FinAbGroup& group() const { return group_; }
    [[nodiscard]] std::int64_t order() const { return group_.order(); }

    // Index-based accessors (indices from FinAbGroup enumeration).
    [[nodiscard]] UnitScalar F(std::int64_t i, std::int64_t j, std::int64_t k) const {
        return UnitScalar(f_[static_cast<std::size_t>((i * order() + j) * order() + k)]);
    }
    [[nodiscard]] UnitScalar Omega(std::int64_t i, std::int64_t j) const {
        return UnitScalar(w_[static_cast<std::size_t>(i * order() + j)]);
    }

    [[nodiscard]] UnitScalar F(const GroupElt& a, const GroupElt& b, const GroupElt& c) const {
        return F(group_.index(a), group_.index(b), group_.index(c));
    }
    [[nodiscard]] UnitScalar Omega(const GroupElt& a, const GroupElt& b) const {
        return Omega(group_.index(a), group_.index(b));
    }

    /// q(a): exponent of Omega(a,a).
    [[nodiscard]] RationalMod1 qform(const GroupElt& a) const { return Omega(a, a).exponent(); }

    /// b(a1,a2): exponent of Omega(a1,a2) Omega(a2,a1).
    [[nodiscard]] RationalMod1 bform(const GroupElt& a1, const GroupElt& a2) const {
        return (Omega(a1, a2) * Omega(a2, a1)).exponent();
    }

    /// Fixed lift of b to [0,1) as a real number.
    [[nodiscard]] double blift(const GroupElt& a1, const GroupElt& a2) const { return bform(a1, a2).to_double(); }

    /// B(a1,a2,a3) = F(a1,a2,a3) Omega(a1,a2) F(a2,a1,a3)^-1.
    [[nodiscard]] UnitScalar bigB(const GroupElt& a1, const GroupElt& a2, const GroupElt& a3) const {
        return F(a1, a2, a3) * Omega(a1, a2) / F(a2, a1, a3);
    }

    /// Exhaustive check of pentagon (A^4), both hexagons (A^3) and
    /// normalization. Failures are reported, never thrown.
    [[nodiscard]] CoherenceReport validate() const {
        const std::int64_t n = order();
        // Work with integer numerators over a common denominator.
        std::int64_t den = 1;
        for (const auto& r : f_) den = lcm_checked(den, r.den());
        for (const auto& r : w_) den = lcm_checked(den, r.den());
        std::vector<std::int64_t> f(f_.size()), w(w_.size());
        for (std::size_t i = 0; i < f_.size(); ++i) f[i] = f_[i].num() * (den / f_[i].den());
        for (std::size_t i = 0; i < w_.size(); ++i) w[i] = w_[i].num() * (den / w_[i].den());

        std::vector<std::int64_t> add(static_cast<std::size_t>(n * n));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                add[static_cast<std::size_t>(i * n + j)] = group_.index(group_.add(group_.at(i), group_.at(j)));

        auto S = [&](std::int64_t i, std::int64_t j) { return add[static_cast<std::size_t>(i * n + j)]; };
        auto Fv = [&](std::int64_t i, std::int64_t j, std::int64_t k) { return f[static_cast<std::size_t>((i * n + j) * n + k)]; };
        auto Wv = [&](std::int64_t i, std::int64_t j) { return w[static_cast<std::size_t>(i * n + j)]; };
        auto zero_mod = [den](std::int64_t x) { return x % den == 0; };
        auto tuple = [&](std::initializer_list<std::int64_t> idx) {
            std::string s = "(";
            bool first = true;
            for (auto i : idx) {
                s += (first ? "" : ", ") + group_.at(i).str();
                first = false;
            }
            return s + ")";
        };

        AxiomCheck norm{"normalization"}, pent{"pentagon"}, hex1{"hexagon1"}, hex2{"hexagon2"};
        const std::int64_t z = 0;  // index of the identity
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                const bool ok = zero_mod(Fv(a, b, z)) && zero_mod(Fv(a, z, b)) && zero_mod(Fv(z, a, b)) &&
                                zero_mod(Wv(a, z)) && zero_mod(Wv(z, a));
                norm.record(ok, [&] { return tuple({a, b}); });
            }
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                for (std::int64_t c = 0; c < n; ++c) {
                    const std::int64_t h1 = Fv(a, b, c) + Wv(S(a, b), c) + Fv(c, a, b) - Wv(b, c) - Fv(a, c, b) - Wv(a, c);
                    hex1.record(zero_mod(h1), [&] { return tuple({a, b, c}); });
                    const std::int64_t h2 = -Fv(a, b, c) + Wv(a, S(b, c)) - Fv(b, c, a) - Wv(a, b) + Fv(b, a, c) - Wv(a, c);
                    hex2.record(zero_mod(h2), [&] { return tuple({a, b, c}); });
                    for (std::int64_t d = 0; d < n; ++d) {
                        const std::int64_t p =
                            Fv(a, b, c) + Fv(a, S(b, c), d) + Fv(b, c, d) - Fv(a, b, S(c, d)) - Fv(S(a, b), c, d);
                        pent.record(zero_mod(p), [&] { return tuple({a, b, c, d}); });
                    }
                }
        return CoherenceReport{{pent, hex1, hex2, norm}};
    }

  private:
    AbelianCocycle(FinAbGroup A, std::vector<RationalMod1> f_table, std::vector<RationalMod1> omega_table)
        : group_(std::move(A)), f_(std::move(f_table)), w_(std::move(omega_table)) {
        const auto n = static_cast<std::size_t>(group_.order());
        if (group_.order() > kMaxOrder)
            throw StructuralError("cocycle tables limited to |A| <= " + std::to_string(kMaxOrder));
        if (f_.size() != n * n * n)
            throw StructuralError("F table has " + std::to_string(f_.size()) + " entries, expected " +
                                  std::to_string(n * n * n));
        if (w_.size() != n * n)
            throw StructuralError("Omega table has " + std::to_string(w_.size()) + " entries, expected " +
                                  std::to_string(n * n));
    }

    static std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
        const std::int64_t l = std::lcm(a, b);
        if (l > (std::int64_t{1} << 40)) throw StructuralError("cocycle exponent denominators too large");
        return l;
    }

    FinAbGroup group_;
    std::vector<RationalMod1> f_;
    std::vector<RationalMod1> w_;
};

inline CoherenceReport validate_cocycle(const AbelianCocycle& c) { return c.validate(); }

}  // namespace twistrep
