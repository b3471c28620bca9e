#pragma once

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphatough/cubic.hpp"
#include "alphatough/graph.hpp"
#include "alphatough/partition.hpp"
#include "alphatough/rational.hpp"
#include "alphatough/spectral.hpp"
#include "alphatough/toughness.hpp"

namespace alphatough {

/// Comparison tolerance for spectral hypothesis tests: the eigensolver is
/// good to ~1e-10, one safety decade on top.
inline constexpr double kEps = 1e-8;

namespace detail {

// Order thresholds like 4/(1-alpha) pick up representation error from
// alpha (4/(1-0.8) evaluates to 20.000000000000004); integer orders that
// meet the bound exactly must not be rejected for it.
inline bool order_below(int n, double min_order) { return n + 1e-9 < min_order; }

inline std::string short_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

}  // namespace detail

/// Minimum order required by theorem 1.1: 6 on [0, 2/3], else 4/(1-alpha).
inline double theorem11_min_order(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("theorem11_min_order: alpha must lie in [0,1)");
    if (alpha <= 2.0 / 3.0) return 6.0;
    return 4.0 / (1.0 - alpha);
}

/// Minimum order required by theorem 1.2:
/// max{5t^2+10t+1, (12t(1-alpha)-2alpha+1)/(3-4alpha)}.
inline double theorem12_min_order(int t, double alpha) {
    if (t < 1) throw std::invalid_argument("theorem12_min_order: t must be a positive integer");
    if (!(alpha >= 0.5 && alpha < 0.75))
        throw std::invalid_argument("theorem12_min_order: alpha must lie in [1/2, 3/4)");
    double first = 5.0 * t * t + 10.0 * t + 1.0;
    double second = (12.0 * t * (1.0 - alpha) - 2.0 * alpha + 1.0) / (3.0 - 4.0 * alpha);
    return std::max(first, second);
}

/// Recognizes K_1 v (K_{n-2} u K_1): a pendant vertex whose neighbor is
/// universal, with everything else a clique.
inline bool is_extremal_1tough(const Graph& g) {
    int n = g.order();
    if (n < 4) throw std::invalid_argument("is_extremal_1tough: need n >= 4");
    long long want_edges =
        static_cast<long long>(n - 2) * (n - 3) / 2 + (n - 1);
    if (g.edge_count() != want_edges) return false;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 1) continue;
        int v = g.neighbors(u)[0];
        if (g.degree(v) != n - 1) continue;
        bool clique = true;
        for (int w1 = 0; w1 < n && clique; ++w1) {
            if (w1 == u || w1 == v) continue;
            for (int w2 = w1 + 1; w2 < n; ++w2) {
                if (w2 == u || w2 == v) continue;
                if (!g.has_edge(w1, w2)) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) return true;
    }
    return false;
}

/// Recognizes K_{2t-1} v (K_{n-2t} u K_1): exactly one vertex of degree
/// 2t-1, all its neighbors universal, and the rest a clique.
inline bool is_extremal_ttough(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("is_extremal_ttough: t must be a positive integer");
    int n = g.order();
    if (n < 2 * t + 2) throw std::invalid_argument("is_extremal_ttough: need n >= 2t + 2");
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 2 * t - 1) {
            if (u >= 0) return false;
            u = v;
        }
    }
    if (u < 0) return false;
    for (int w : g.neighbors(u))
        if (g.degree(w) != n - 1) return false;
    for (int w1 = 0; w1 < n; ++w1) {
        if (w1 == u || g.has_edge(u, w1)) continue;
        for (int w2 = w1 + 1; w2 < n; ++w2) {
            if (w2 == u || g.has_edge(u, w2)) continue;
            if (!g.has_edge(w1, w2)) return false;
        }
    }
    return true;
}

/// Outcome of testing one graph against a theorem: does the spectral
/// hypothesis hold (with signed margin), does the toughness conclusion
/// hold, is the graph the stated extremal exception, and is everything
/// consistent with the theorem.
struct TheoremVerdict {
    bool hypothesis_holds = false;
    double hypothesis_margin = 0.0;  // rho_alpha(G) - threshold
    bool conclusion_holds = false;
    bool is_extremal = false;
    bool consistent = true;
    double rho = 0.0;
    double threshold = 0.0;
};

namespace detail {

inline TheoremVerdict verdict_from(double rho, double threshold, bool conclusion, bool extremal,
                                   double eps) {
    TheoremVerdict v;
    v.rho = rho;
    v.threshold = threshold;
    v.hypothesis_margin = rho - threshold;
    v.hypothesis_holds = v.hypothesis_margin >= -eps;
    v.conclusion_holds = conclusion;
    v.is_extremal = extremal;
    v.consistent = !v.hypothesis_holds || v.conclusion_holds || v.is_extremal;
    return v;
}

}  // namespace detail

/// Theorem 1.1: for connected G of order n >= theorem11_min_order(alpha),
/// rho_alpha(G) >= rho_alpha(K_1 v (K_{n-2} u K_1)) forces G to be 1-tough
/// unless G is that extremal graph.
inline TheoremVerdict check_theorem11(const Graph& g, double alpha, double eps = kEps) {
    int n = g.order();
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("check_theorem11: alpha must lie in [0,1)");
    if (detail::order_below(n, theorem11_min_order(alpha)))
        throw std::invalid_argument("check_theorem11: order below theorem11_min_order(alpha)");
    if (!is_connected(g)) throw std::invalid_argument("check_theorem11: graph must be connected");
    double threshold = largest_root(theorem11_cubic(n, alpha), n - 2.0);
    return detail::verdict_from(spectral_radius(g, alpha), threshold,
                                is_t_tough(g, Rational(1)), is_extremal_1tough(g), eps);
}

/// Theorem 1.2: for alpha in [1/2, 3/4) and order n >=
/// theorem12_min_order(t, alpha), rho_alpha(G) >= rho_alpha(K_{2t-1} v
/// (K_{n-2t} u K_1)) forces G to be t-tough unless G is that extremal
/// graph.
inline TheoremVerdict check_theorem12(const Graph& g, double alpha, int t, double eps = kEps) {
    int n = g.order();
    if (t < 1) throw std::invalid_argument("check_theorem12: t must be a positive integer");
    if (!(alpha >= 0.5 && alpha < 0.75))
        throw std::invalid_argument("check_theorem12: alpha must lie in [1/2, 3/4)");
    if (detail::order_below(n, theorem12_min_order(t, alpha)))
        throw std::invalid_argument("check_theorem12: order below theorem12_min_order(t, alpha)");
    if (!is_connected(g)) throw std::invalid_argument("check_theorem12: graph must be connected");
    double threshold = spectral_radius(family_g2(n, t, 2), alpha);
    return detail::verdict_from(spectral_radius(g, alpha), threshold,
                                is_t_tough(g, Rational(t)), is_extremal_ttough(g, t), eps);
}

// ---- proof-chain audits --------------------------------------------------

struct AuditCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
};

struct AuditReport {
    std::string title;
    std::vector<AuditCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

// Helper polynomials of the theorem 1.1 chain, transcribed verbatim.

inline double chain11_h(double x, double n, double s, double a) {
    return (1 - a) * x * x + (a * a * n - 2 * a - s) * x - a * a * n * n +
           (2 * a * a - 2 * a + 1) * s * n + (3 * a * a - a + 1) * n -
           (3 * a * a - 5 * a + 2) * s * s - (4 * a * a - 6 * a + 3) * s - 4 * a * a + 5 * a - 3;
}

inline double chain11_p(double x, double s, double a) {
    return (1 - a) * x * x + ((2 * a * a - 2 * a) * s + a * a + a - 3) * x -
           (3 * a * a - 5 * a + 2) * s * s - (4 * a * a - 6 * a + 1) * s - 4 * a * a + 5 * a + 1;
}

inline double chain11_big_phi(double s, double n, double a) {
    return (3 * a - 2) * (1 - a) * s * s * s +
           ((2 * a * a - 2 * a) * n - a * a + a + 1) * s * s +
           ((1 - a) * n * n - (a * a - 3 * a + 3) * n - a + 2) * s + (a - 1) * n * n -
           (2 * a - 3) * n - 2;
}

inline double chain12_edge_quadratic(double c, double n, double t) {
    return (2 * t + 1) * c * c - (2 * n + 2 * t + 3) * c + n * n + n + 2;
}

inline double chain12_psi(double n, double t, double a) {
    return -(1 - a) * n * n + ((2 - a) * t * t + (4 - 2 * a) * t + 3 * a - 2) * n - t * t -
           2 * t - 5 + 4 * a;
}

inline AuditCheck identity_check(std::string name, double lhs, double rhs, double tol) {
    AuditCheck c{std::move(name), lhs, rhs, lhs - rhs, false};
    c.pass = std::abs(c.margin) <= tol;
    return c;
}

inline AuditCheck at_least_check(std::string name, double lhs, double rhs, double tol) {
    // lhs >= rhs within tolerance
    AuditCheck c{std::move(name), lhs, rhs, lhs - rhs, false};
    c.pass = c.margin >= -tol;
    return c;
}

inline AuditCheck strictly_above_check(std::string name, double lhs, double rhs, double tol) {
    // lhs > rhs by more than the tolerance
    AuditCheck c{std::move(name), lhs, rhs, lhs - rhs, false};
    c.pass = c.margin > tol;
    return c;
}

}  // namespace detail

/// Numerical audit of the inequality chain behind theorem 1.1's key claim:
/// rho_alpha(family_gs2(n, s)) stays strictly below the threshold for
/// every s >= 2. Checks the difference identity at the threshold root, the
/// branch-specific sign conditions, the expansion of the quotient cubic at
/// n-2, and the strict conclusion itself.
inline AuditReport audit_theorem11_chain(int n, int s, double alpha, double tol = kEps) {
    if (s < 2 || 2 * s > n - 1)
        throw std::invalid_argument("audit_theorem11_chain: need 2 <= s <= (n-1)/2");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("audit_theorem11_chain: alpha must lie in [0,1)");
    if (detail::order_below(n, theorem11_min_order(alpha)))
        throw std::invalid_argument("audit_theorem11_chain: order below theorem11_min_order");

    AuditReport report;
    report.title = "theorem 1.1 chain, n=" + std::to_string(n) + " s=" + std::to_string(s) +
                   " alpha=" + detail::short_double(alpha);
    Cubic quotient = family_gs2_quotient_cubic(n, s, alpha);
    double theta = largest_root(theorem11_cubic(n, alpha), n - 2.0);

    report.checks.push_back(detail::identity_check(
        "difference_identity_at_threshold", quotient(theta),
        (s - 1.0) * detail::chain11_h(theta, n, s, alpha), tol));
    if (alpha <= 2.0 / 3.0) {
        report.checks.push_back(detail::at_least_check(
            "low_alpha_quadratic_nonnegative", detail::chain11_p(n, s, alpha), 0.0, tol));
    } else {
        report.checks.push_back(detail::at_least_check(
            "high_alpha_corner_s2_positive", detail::chain11_big_phi(2.0, n, alpha), 0.0, tol));
        report.checks.push_back(detail::at_least_check(
            "high_alpha_corner_smax_positive",
            detail::chain11_big_phi((n - 1.0) / 2.0, n, alpha), 0.0, tol));
    }
    report.checks.push_back(detail::strictly_above_check(
        "radius_strictly_below_threshold", theta, spectral_radius(family_gs2(n, s), alpha), tol));
    report.checks.push_back(detail::identity_check(
        "quotient_cubic_at_nminus2_expansion", quotient(n - 2.0),
        detail::chain11_big_phi(s, n, alpha), tol));
    return report;
}

/// Numerical audit of the theorem 1.2 chain: the edge-count identity of
/// family_g2, the location of the edge quadratic's maximum, the n-2 radius
/// cap for c >= 3, the extremal graph sitting above the cap, the sign of
/// the independent-part defect, and family_g3 staying below the cap.
inline AuditReport audit_theorem12_chain(int n, int t, double alpha, int c, double tol = kEps) {
    if (t < 1) throw std::invalid_argument("audit_theorem12_chain: t must be a positive integer");
    if (!(alpha >= 0.5 && alpha < 0.75))
        throw std::invalid_argument("audit_theorem12_chain: alpha must lie in [1/2, 3/4)");
    if (detail::order_below(n, theorem12_min_order(t, alpha)))
        throw std::invalid_argument("audit_theorem12_chain: order below theorem12_min_order");
    if (c < 3 || static_cast<long long>(c) * (t + 1) > n + 1)
        throw std::invalid_argument("audit_theorem12_chain: need 3 <= c <= (n+1)/(t+1)");

    AuditReport report;
    report.title = "theorem 1.2 chain, n=" + std::to_string(n) + " t=" + std::to_string(t) +
                   " alpha=" + detail::short_double(alpha) + " c=" + std::to_string(c);
    Graph g2 = family_g2(n, t, c);
    double two_e = 2.0 * static_cast<double>(g2.edge_count());
    double closed_form = static_cast<double>(n - c + 1) * (n - c) + 2.0 * (t * c - 1) * (c - 1);
    report.checks.push_back(
        detail::identity_check("family_g2_edge_count_identity", two_e, closed_form, tol));
    report.checks.push_back(detail::strictly_above_check(
        "edge_quadratic_max_at_c3",
        detail::chain12_edge_quadratic(3.0, n, t),
        detail::chain12_edge_quadratic((n + 1.0) / (t + 1.0), n, t), tol));
    report.checks.push_back(detail::at_least_check(
        "family_g2_radius_capped", n - 2.0, spectral_radius(g2, alpha), tol));
    report.checks.push_back(detail::strictly_above_check(
        "extremal_radius_above_cap", spectral_radius(family_g2(n, t, 2), alpha), n - 2.0, tol));
    report.checks.push_back(detail::strictly_above_check(
        "independent_part_defect_negative", 0.0, detail::chain12_psi(n, t, alpha), tol));
    report.checks.push_back(detail::strictly_above_check(
        "family_g3_radius_below_cap", n - 2.0, spectral_radius(family_g3(n, t), alpha), tol));
    return report;
}

/// Ordering among K_s v (union of cliques) with a fixed number of parts:
/// concentrating all but one vertex per part into a single clique
/// maximizes rho_alpha, with equality exactly at the concentrated split.
/// Returns true iff both the inequality and the equality characterization
/// hold for the given instance.
inline bool clique_split_ordering_check(int s, const std::vector<int>& parts, double alpha,
                                        double eps = kEps) {
    if (s < 1) throw std::invalid_argument("clique_split_ordering_check: need s >= 1");
    if (parts.empty()) throw std::invalid_argument("clique_split_ordering_check: no parts");
    int count = static_cast<int>(parts.size());
    int total = 0;
    for (int i = 0; i < count; ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("clique_split_ordering_check: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("clique_split_ordering_check: parts must be nonincreasing");
        total += parts[i];
    }
    int n = total + s;
    int concentrated = n - s - count + 1;
    if (parts[0] > concentrated)
        throw std::invalid_argument("clique_split_ordering_check: leading part too large");

    Graph union_part = complete(parts[0]);
    for (int i = 1; i < count; ++i) union_part = disjoint_union(union_part, complete(parts[i]));
    Graph lhs = join(complete(s), union_part);

    Graph rhs_union = count == 1 ? complete(concentrated)
                                 : disjoint_union(complete(concentrated), edgeless(count - 1));
    Graph rhs = join(complete(s), rhs_union);

    double diff = spectral_radius(rhs, alpha) - spectral_radius(lhs, alpha);
    bool holds = diff >= -eps;
    bool equality = std::abs(diff) <= eps;
    bool extremal_split = parts[0] == concentrated;
    for (int i = 1; i < count; ++i) extremal_split = extremal_split && parts[i] == 1;
    return holds && equality == extremal_split;
}

}  // namespace alphatough
