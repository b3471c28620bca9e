#pragma once

#include <stdexcept>

#include "alphatough/cubic.hpp"
#include "alphatough/graph.hpp"
#include "alphatough/matrix.hpp"

namespace alphatough {

/// A_alpha(G) = alpha*D(G) + (1-alpha)*A(G). alpha is accepted on the
/// closed interval [0,1]; callers enforcing theorem-specific ranges do so
/// themselves.
inline SymMatrix a_alpha_matrix(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("a_alpha_matrix: alpha must lie in [0,1]");
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u) {
        m.set(u, u, alpha * g.degree(u));
        for (int v : g.neighbors(u))
            if (u < v) m.set(u, v, 1.0 - alpha);
    }
    return m;
}

/// rho_alpha(G), the largest eigenvalue of A_alpha(G).
inline double spectral_radius(const Graph& g, double alpha) {
    return full_spectrum(a_alpha_matrix(g, alpha)).rho();
}

/// Threshold cubic of theorem 1.1: rho_alpha(K_1 v (K_{n-2} u K_1)) is its
/// largest root.
inline Cubic theorem11_cubic(int n, double alpha) {
    if (n < 3) throw std::invalid_argument("theorem11_cubic: need n >= 3");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("theorem11_cubic: alpha must lie in [0,1]");
    double a = alpha;
    double nn = n;
    return Cubic{
        -((a + 1.0) * nn + a - 3.0),
        a * nn * nn + (a * a - a - 1.0) * nn - 2.0 * a + 1.0,
        -a * a * nn * nn + (3.0 * a * a - a + 1.0) * nn - 4.0 * a * a + 5.0 * a - 3.0,
    };
}

/// Characteristic cubic of the canonical 3-block quotient of
/// A_alpha(family_gs2(n, s)). Coincides with theorem11_cubic at s = 1.
inline Cubic family_gs2_quotient_cubic(int n, int s, double alpha) {
    if (s < 1 || 2 * s > n - 1)
        throw std::invalid_argument("family_gs2_quotient_cubic: need 1 <= s <= (n-1)/2");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("family_gs2_quotient_cubic: alpha must lie in [0,1]");
    double a = alpha;
    double nn = n;
    double ss = s;
    return Cubic{
        -((a + 1.0) * nn + (a - 1.0) * ss - 2.0),
        a * nn * nn + (a * a * ss - a - 1.0) * nn - ss * ss - (2.0 * a - 1.0) * ss + 1.0,
        -a * a * ss * nn * nn + (2.0 * a * a - 2.0 * a + 1.0) * ss * ss * nn +
            (a * a + a) * ss * nn - (3.0 * a * a - 5.0 * a + 2.0) * ss * ss * ss -
            (a * a - a + 1.0) * ss * ss - a * ss,
    };
}

/// Upper bound rho_alpha(G) <= 2m(1-alpha)/(n-1) + alpha*n - 1, valid for
/// alpha in [1/2, 1] on graphs without isolated vertices; for connected G
/// and alpha in (1/2, 1) equality holds exactly for K_n.
inline double spectral_radius_size_bound(int n, long long m, double alpha) {
    return 2.0 * static_cast<double>(m) * (1.0 - alpha) / (n - 1) + alpha * n - 1.0;
}

}  // namespace alphatough
