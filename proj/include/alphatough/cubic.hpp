#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace alphatough {

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct Cubic {
    double c2 = 0.0, c1 = 0.0, c0 = 0.0;

    double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

namespace detail {

inline double newton_polish(const Cubic& c, double x, double lo, double hi) {
    for (int it = 0; it < 8; ++it) {
        double f = c(x);
        double df = c.derivative(x);
        if (df == 0.0) break;
        double next = x - f / df;
        if (!(next > lo && next < hi)) break;
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace detail

/// Largest real root, located by sign bracketing on the increasing branch
/// that contains it, then bisection with a Newton polish. bracket_hint
/// seeds the bracket expansion. Throws if no bracket is found (non-finite
/// coefficients).
inline double largest_root(const Cubic& c, double bracket_hint = 0.0) {
    if (!std::isfinite(c.c2) || !std::isfinite(c.c1) || !std::isfinite(c.c0))
        throw std::invalid_argument("largest_root: non-finite coefficients");

    // Critical points of the cubic split the line into monotone pieces.
    double lo, hi;
    double disc = c.c2 * c.c2 - 3.0 * c.c1;
    bool have_lo = false, have_hi = false;
    if (disc > 0.0) {
        double sq = std::sqrt(disc);
        double local_max = (-c.c2 - sq) / 3.0;
        double local_min = (-c.c2 + sq) / 3.0;
        if (c(local_min) <= 0.0) {
            lo = local_min;  // largest root lies on [local_min, inf)
            have_lo = true;
        } else {
            hi = local_max;  // single real root left of the local max
            have_hi = true;
        }
    }
    if (!have_hi) {
        hi = std::max(bracket_hint, have_lo ? lo : 0.0) + 1.0;
        double step = 1.0;
        int tries = 0;
        while (c(hi) <= 0.0) {
            if (++tries > 200) throw std::runtime_error("largest_root: no upper bracket found");
            step *= 2.0;
            hi += step;
        }
    }
    if (!have_lo) {
        lo = std::min(bracket_hint, hi) - 1.0;
        double step = 1.0;
        int tries = 0;
        while (c(lo) > 0.0) {
            if (++tries > 200) throw std::runtime_error("largest_root: no lower bracket found");
            step *= 2.0;
            lo -= step;
        }
    }
    // Invariant: c(lo) <= 0 < c(hi) on an interval where c crosses once.
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (c(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return detail::newton_polish(c, 0.5 * (lo + hi), lo - 1e-9, hi + 1e-9);
}

/// All real roots, nonincreasing. A cubic whose discriminant is
/// (numerically) nonnegative yields three entries counting multiplicity,
/// otherwise one.
inline std::vector<double> real_roots(const Cubic& c) {
    double shift = c.c2 / 3.0;
    double p = c.c1 - c.c2 * c.c2 / 3.0;
    double q = 2.0 * c.c2 * c.c2 * c.c2 / 27.0 - c.c2 * c.c1 / 3.0 + c.c0;

    double half_q = 0.5 * q;
    double third_p = p / 3.0;
    double disc = half_q * half_q + third_p * third_p * third_p;
    double scale = std::abs(half_q * half_q) + std::abs(third_p * third_p * third_p);

    std::vector<double> roots;
    if (disc <= 1e-12 * scale) {
        if (p >= 0.0) {
            // p ~ 0 with tiny q: (numerically) triple root.
            double y = std::cbrt(-q);
            roots = {y - shift, y - shift, y - shift};
        } else {
            double m = 2.0 * std::sqrt(-third_p);
            double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            double theta = std::acos(arg) / 3.0;
            constexpr double two_pi_3 = 2.0943951023931953;
            for (int k = 0; k < 3; ++k)
                roots.push_back(m * std::cos(theta - two_pi_3 * k) - shift);
        }
    } else {
        double sq = std::sqrt(disc);
        double y = std::cbrt(-half_q + sq) + std::cbrt(-half_q - sq);
        roots = {y - shift};
    }
    for (double& r : roots) {
        double f = c(r);
        double df = c.derivative(r);
        if (df != 0.0) {
            double next = r - f / df;
            if (std::abs(c(next)) < std::abs(f)) r = next;
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

}  // namespace alphatough
