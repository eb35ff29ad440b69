#pragma once

/**
 * @file branchcut.hpp
 * @brief Branch-cut bookkeeping for the scalar vertex-tensor structure.
 *
 * The fixed branch is log z = log|z| + i arg z with 0 <= arg z < 2 pi
 * (cut along the positive real axis). For |z1| > |z2| > 0 the integer
 * p_{z1,z2} is defined by
 *
 *     log(z1 - z2) = log z1 + Log(1 - z2/z1) + 2 pi i p_{z1,z2}
 *
 * where Log is the power series of log(1 - x), i.e. the principal branch
 * (Re(1 - z2/z1) > 0 there).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "twistrep/cocycle.hpp"
#include "twistrep/errors.hpp"

namespace twistrep {

using complex = std::complex<double>;

/// arg z in [0, 2 pi).
inline double cut_arg(complex z) {
    if (z == complex{}) throw DomainError("argument of 0 is undefined");
    double a = std::atan2(z.imag(), z.real());
    if (a < 0) a += 2 * std::numbers::pi;
    if (a >= 2 * std::numbers::pi) a -= 2 * std::numbers::pi;
    return a;
}

/// log|z| + i arg z with arg in [0, 2 pi).
inline complex plog(complex z) {
    if (z == complex{}) throw DomainError("plog: z = 0");
    return {std::log(std::abs(z)), cut_arg(z)};
}

inline std::int64_t round_branch_integer(double x, double tol, const char* what) {
    const double r = std::round(x);
    if (std::abs(x - r) >= tol)
        throw NumericalError(std::string(what) + ": residual " + std::to_string(std::abs(x - r)) + " too large");
    return static_cast<std::int64_t>(r);
}

/// p_{z1,z2}; requires |z1| > |z2| > 0 and z1 != z2.
inline std::int64_t p_int(complex z1, complex z2, double tol = 1e-6) {
    if (!(std::abs(z2) > 0)) throw DomainError("p_int: need |z2| > 0");
    if (!(std::abs(z1) > std::abs(z2))) throw DomainError("p_int: need |z1| > |z2|");
    if (z1 == z2) throw DomainError("p_int: need z1 != z2");
    const complex series_log = std::log(complex{1.0, 0.0} - z2 / z1);  // principal branch
    const complex gap = plog(z1 - z2) - plog(z1) - series_log;
    return round_branch_integer(gap.imag() / (2 * std::numbers::pi), tol, "p_int");
}

/// Throws DomainError naming the first violated inequality of
/// |z1| > |z2| > |z1 - z2| > 0.
inline void check_assoc_region(complex z1, complex z2) {
    const double r1 = std::abs(z1), r2 = std::abs(z2), r12 = std::abs(z1 - z2);
    if (!(r1 > r2)) throw DomainError("|z1| > |z2| fails: " + std::to_string(r1) + " <= " + std::to_string(r2));
    if (!(r2 > r12)) throw DomainError("|z2| > |z1-z2| fails: " + std::to_string(r2) + " <= " + std::to_string(r12));
    if (!(r12 > 0)) throw DomainError("|z1-z2| > 0 fails");
}

inline bool in_assoc_region(complex z1, complex z2) {
    const double r1 = std::abs(z1), r2 = std::abs(z2), r12 = std::abs(z1 - z2);
    return r1 > r2 && r2 > r12 && r12 > 0;
}

/// The two branch integers entering the associativity scalar.
struct AssocBranch {
    std::int64_t p12 = 0;   // p_{z1,z2}
    std::int64_t p2_21 = 0; // p_{z2,z2-z1}
};

inline AssocBranch assoc_branch(complex z1, complex z2, double tol = 1e-6) {
    check_assoc_region(z1, z2);
    return {p_int(z1, z2, tol), p_int(z2, z2 - z1, tol)};
}

/// A_{z1,z2}(a1,a2,a3) =
///   (W(a1,a2)W(a2,a1))^{-p_{z1,z2}} (W(a1,a3)W(a3,a1))^{p_{z2,z2-z1}} F(a1,a2,a3)^{-1}
inline UnitScalar assoc_scalar(const AbelianCocycle& c, complex z1, complex z2, const GroupElt& a1,
                               const GroupElt& a2, const GroupElt& a3, double tol = 1e-6) {
    const auto br = assoc_branch(z1, z2, tol);
    const UnitScalar mono12(c.bform(a1, a2));
    const UnitScalar mono13(c.bform(a1, a3));
    return mono12.pow(-br.p12) * mono13.pow(br.p2_21) * c.F(a1, a2, a3).inverse();
}

/// Polyline in C^x. Segments may not meet the origin.
class PathPolyline {
  public:
    explicit PathPolyline(std::vector<complex> waypoints) : pts_(std::move(waypoints)) {
        if (pts_.empty()) throw DomainError("path needs at least one waypoint");
        for (const auto& z : pts_)
            if (z == complex{}) throw DomainError("path waypoint at the origin");
        for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
            if (!(origin_distance(pts_[i], pts_[i + 1]) > 0))
                throw DomainError("path segment " + std::to_string(i) + " passes through the origin");
    }

    [[nodiscard]] const std::vector<complex>& waypoints() const { return pts_; }
    [[nodiscard]] complex start() const { return pts_.front(); }
    [[nodiscard]] complex end() const { return pts_.back(); }

    /// This path followed by other; other must start where this one ends.
    [[nodiscard]] PathPolyline then(const PathPolyline& other, double tol = 1e-12) const {
        if (std::abs(end() - other.start()) > tol) throw DomainError("paths do not join");
        std::vector<complex> pts = pts_;
        pts.insert(pts.end(), other.pts_.begin() + 1, other.pts_.end());
        return PathPolyline(std::move(pts));
    }

    /// Net change of a continuously tracked argument along the path.
    [[nodiscard]] double arg_increment() const {
        double total = 0;
        for (std::size_t i = 0; i + 1 < pts_.size(); ++i) total += segment_increment(pts_[i], pts_[i + 1]);
        return total;
    }

  private:
    static double origin_distance(complex a, complex b) {
        const complex ab = b - a;
        const double len2 = std::norm(ab);
        if (len2 == 0) return std::abs(a);
        double t = -(a.real() * ab.real() + a.imag() * ab.imag()) / len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(a + t * ab);
    }

    // A straight segment off the origin subtends less than pi; halve until
    // each piece is well inside (-pi/2, pi/2) so the principal arg is exact.
    static double segment_increment(complex a, complex b) {
        const double d = std::arg(b / a);
        if (std::abs(d) < std::numbers::pi / 2) return d;
        const complex mid = 0.5 * (a + b);
        return segment_increment(a, mid) + segment_increment(mid, b);
    }

    std::vector<complex> pts_;
};

/// Unit circle traversed clockwise, gamma(t) = e^{-2 pi i t}, from 1 back to 1.
inline PathPolyline clockwise_unit_loop(int segments = 16) {
    std::vector<complex> pts;
    for (int k = 0; k <= segments; ++k) pts.push_back(std::polar(1.0, -2 * std::numbers::pi * k / segments));
    pts.back() = {1.0, 0.0};
    pts.front() = {1.0, 0.0};
    return PathPolyline(std::move(pts));
}

/// Integer p such that log(start) + 2 pi i p is the branch at the start point
/// obtained by continuing log(end) backwards along the path. The clockwise
/// unit loop has p = +1.
inline std::int64_t winding(const PathPolyline& path, double tol = 1e-6) {
    const double x = (cut_arg(path.end()) - cut_arg(path.start()) - path.arg_increment()) / (2 * std::numbers::pi);
    return round_branch_integer(x, tol, "winding");
}

/// Parallel transport along the path: (W(a1,a2)W(a2,a1))^{-p}.
inline UnitScalar transport_scalar(const AbelianCocycle& c, const PathPolyline& path, const GroupElt& a1,
                                   const GroupElt& a2) {
    return UnitScalar(c.bform(a1, a2)).pow(-winding(path));
}

}  // namespace twistrep
