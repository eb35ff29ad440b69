#pragma once

// Finite abelian groups Z/n_1 x ... x Z/n_k in invariant-factor form.
// Dual characters reuse the residue tuples of the group itself: the tuple t
// pairs with a by sum_i t_i a_i / n_i mod 1.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "twistrep/errors.hpp"
#include "twistrep/unitscalar.hpp"

namespace twistrep {

struct GroupElt {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElt&, const GroupElt&) = default;
    friend auto operator<=>(const GroupElt&, const GroupElt&) = default;

    [[nodiscard]] bool is_zero() const {
        for (auto r : residues)
            if (r != 0) return false;
        return true;
    }

    /// "1" for one factor, "(1,2)" otherwise, "()" for the trivial group.
    [[nodiscard]] std::string str() const {
        if (residues.size() == 1) return std::to_string(residues[0]);
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
        os << ')';
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const GroupElt& a) { return os << a.str(); }

/// Characters of A are labelled by elements of A through the canonical pairing.
using DualChar = GroupElt;

class FinAbGroup {
  public:
    FinAbGroup() = default;

    explicit FinAbGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
        order_ = 1;
        for (auto n : factors_) {
            if (n < 1) throw StructuralError("invariant factors must be >= 1");
            order_ *= n;
        }
    }

    static FinAbGroup cyclic(std::int64_t n) { return FinAbGroup(std::vector<std::int64_t>{n}); }
    static FinAbGroup trivial() { return FinAbGroup(std::vector<std::int64_t>{}); }

    [[nodiscard]] const std::vector<std::int64_t>& factors() const { return factors_; }
    [[nodiscard]] std::size_t rank() const { return factors_.size(); }
    [[nodiscard]] std::int64_t order() const { return order_; }

    /// Least common multiple of the invariant factors.
    [[nodiscard]] std::int64_t exponent() const {
        std::int64_t e = 1;
        for (auto n : factors_) e = std::lcm(e, n);
        return e;
    }

    [[nodiscard]] GroupElt zero() const { return GroupElt{std::vector<std::int64_t>(factors_.size(), 0)}; }

    /// Reduces arbitrary integers into canonical residues.
    [[nodiscard]] GroupElt elt(std::vector<std::int64_t> values) const {
        if (values.size() != factors_.size())
            throw StructuralError("element has " + std::to_string(values.size()) + " residues, group has " +
                                  std::to_string(factors_.size()) + " factors");
        for (std::size_t i = 0; i < values.size(); ++i) {
            values[i] %= factors_[i];
            if (values[i] < 0) values[i] += factors_[i];
        }
        return GroupElt{std::move(values)};
    }

    [[nodiscard]] bool contains(const GroupElt& a) const {
        if (a.residues.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (a.residues[i] < 0 || a.residues[i] >= factors_[i]) return false;
        return true;
    }

    // Enumeration is mixed-radix with the last factor varying fastest.
    [[nodiscard]] std::int64_t index(const GroupElt& a) const {
        check(a);
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a.residues[i];
        return idx;
    }

    [[nodiscard]] GroupElt at(std::int64_t idx) const {
        if (idx < 0 || idx >= order_) throw StructuralError("element index out of range");
        GroupElt a = zero();
        for (std::size_t i = factors_.size(); i-- > 0;) {
            a.residues[i] = idx % factors_[i];
            idx /= factors_[i];
        }
        return a;
    }

    [[nodiscard]] std::vector<GroupElt> elements() const {
        std::vector<GroupElt> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t i = 0; i < order_; ++i) out.push_back(at(i));
        return out;
    }

    [[nodiscard]] GroupElt add(const GroupElt& a, const GroupElt& b) const {
        check(a);
        check(b);
        GroupElt c = a;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            c.residues[i] += b.residues[i];
            if (c.residues[i] >= factors_[i]) c.residues[i] -= factors_[i];
        }
        return c;
    }

    [[nodiscard]] GroupElt neg(const GroupElt& a) const {
        check(a);
        GroupElt c = a;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (c.residues[i] != 0) c.residues[i] = factors_[i] - c.residues[i];
        return c;
    }

    [[nodiscard]] GroupElt scale(std::int64_t k, const GroupElt& a) const {
        check(a);
        std::vector<std::int64_t> v(a.residues);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (k % factors_[i]) * v[i];
        return elt(std::move(v));
    }

    /// Value of the character chi on a: exponent sum_i t_i a_i / n_i mod 1.
    [[nodiscard]] UnitScalar char_eval(const DualChar& chi, const GroupElt& a) const {
        check(chi);
        check(a);
        RationalMod1 e;
        for (std::size_t i = 0; i < factors_.size(); ++i) e = e + RationalMod1(chi.residues[i] * a.residues[i], factors_[i]);
        return UnitScalar(e);
    }

    /// The i-th basis character (1 in slot i), i.e. the i-th generator of the dual.
    [[nodiscard]] DualChar dual_generator(std::size_t i) const {
        if (i >= factors_.size()) throw StructuralError("dual generator index out of range");
        DualChar chi = zero();
        chi.residues[i] = 1;
        return chi;
    }

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

    [[nodiscard]] std::string str() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z/" << factors_[i];
        return os.str();
    }

  private:
    void check(const GroupElt& a) const {
        if (!contains(a)) throw StructuralError("element " + a.str() + " does not belong to " + str());
    }

    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

inline GroupElt elt_add(const FinAbGroup& A, const GroupElt& a, const GroupElt& b) { return A.add(a, b); }
inline UnitScalar char_eval(const FinAbGroup& A, const DualChar& chi, const GroupElt& a) { return A.char_eval(chi, a); }

}  // namespace twistrep
