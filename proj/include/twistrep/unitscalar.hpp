#pragma once

/**
 * @file unitscalar.hpp
 * @brief Exact roots of unity.
 *
 * A root of unity e^{2 pi i r} is stored by its exponent r, a reduced
 * rational in [0, 1). Multiplication of roots is addition of exponents mod 1,
 * so every cocycle identity becomes exact integer arithmetic.
 */

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "twistrep/errors.hpp"

namespace twistrep {

/// Reduced rational number in [0, 1). Used for q, b and the exponents of
/// unit scalars.
class RationalMod1 {
  public:
    constexpr RationalMod1() = default;

    constexpr RationalMod1(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den == 0) throw DomainError("RationalMod1: zero denominator");
        canonicalize();
    }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }
    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend constexpr RationalMod1 operator+(RationalMod1 a, RationalMod1 b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t den = a.den_ / g * b.den_;
        const std::int64_t num = a.num_ * (den / a.den_) + b.num_ * (den / b.den_);
        return {num, den};
    }

    friend constexpr RationalMod1 operator-(RationalMod1 a) { return {-a.num_, a.den_}; }
    friend constexpr RationalMod1 operator-(RationalMod1 a, RationalMod1 b) { return a + (-b); }

    /// k * r mod 1; negative k allowed.
    friend constexpr RationalMod1 operator*(std::int64_t k, RationalMod1 a) {
        // reduce k first so the product cannot overflow for sane denominators
        const std::int64_t kr = k % a.den_;
        return {kr * a.num_, a.den_};
    }

    friend constexpr bool operator==(RationalMod1, RationalMod1) = default;

    /// "p/q", or "0" for zero.
    [[nodiscard]] std::string str() const {
        if (num_ == 0) return "0";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q", "p" (integer, taken mod 1) and surrounding whitespace.
    static RationalMod1 parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        auto to_int = [&](std::string_view s) -> std::int64_t {
            s = trim(s);
            if (s.empty()) throw ParseError("empty integer in exponent '" + std::string(text) + "'");
            std::size_t pos = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(std::string(s), &pos);
            } catch (const std::exception&) {
                throw ParseError("bad integer in exponent '" + std::string(text) + "'");
            }
            if (pos != s.size()) throw ParseError("trailing characters in exponent '" + std::string(text) + "'");
            return v;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return {to_int(text), 1};
        const std::int64_t den = to_int(text.substr(slash + 1));
        if (den <= 0) throw ParseError("exponent denominator must be positive in '" + std::string(text) + "'");
        return {to_int(text.substr(0, slash)), den};
    }

  private:
    constexpr void canonicalize() {
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        num_ %= den_;
        if (num_ < 0) num_ += den_;
        const std::int64_t g = std::gcd(num_, den_);
        if (num_ == 0) {
            den_ = 1;
        } else {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const RationalMod1& r) { return os << r.str(); }

/// Root of unity e^{2 pi i r}, exact.
class UnitScalar {
  public:
    constexpr UnitScalar() = default;
    constexpr explicit UnitScalar(RationalMod1 exponent) : exp_(exponent) {}
    constexpr UnitScalar(std::int64_t num, std::int64_t den) : exp_(num, den) {}

    static constexpr UnitScalar one() { return {}; }

    [[nodiscard]] constexpr RationalMod1 exponent() const { return exp_; }
    [[nodiscard]] constexpr bool is_one() const { return exp_.is_zero(); }

    [[nodiscard]] constexpr UnitScalar inverse() const { return UnitScalar(-exp_); }

    [[nodiscard]] constexpr UnitScalar pow(std::int64_t k) const { return UnitScalar(k * exp_); }

    friend constexpr UnitScalar operator*(UnitScalar x, UnitScalar y) { return UnitScalar(x.exp_ + y.exp_); }
    friend constexpr UnitScalar operator/(UnitScalar x, UnitScalar y) { return UnitScalar(x.exp_ - y.exp_); }
    constexpr UnitScalar& operator*=(UnitScalar y) { return *this = *this * y; }
    friend constexpr bool operator==(UnitScalar, UnitScalar) = default;

    /// e^{2 pi i r}. Quarter turns are returned exactly.
    [[nodiscard]] std::complex<double> to_complex() const {
        const std::int64_t p = exp_.num();
        const std::int64_t q = exp_.den();
        if (p == 0) return {1.0, 0.0};
        if (4 * p == q) return {0.0, 1.0};
        if (2 * p == q) return {-1.0, 0.0};
        if (4 * p == 3 * q) return {0.0, -1.0};
        const double angle = 2.0 * std::numbers::pi * exp_.to_double();
        return std::polar(1.0, angle);
    }

    [[nodiscard]] std::string str() const { return exp_.str(); }

  private:
    RationalMod1 exp_;
};

inline std::ostream& operator<<(std::ostream& os, const UnitScalar& u) { return os << "e(" << u.str() << ")"; }

// Free-function spellings used throughout the library.
inline constexpr UnitScalar us_mul(UnitScalar x, UnitScalar y) { return x * y; }
inline constexpr UnitScalar us_pow(UnitScalar x, std::int64_t k) { return x.pow(k); }
inline std::complex<double> us_to_complex(UnitScalar x) { return x.to_complex(); }

}  // namespace twistrep
