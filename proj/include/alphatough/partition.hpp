#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphatough/cubic.hpp"
#include "alphatough/graph.hpp"
#include "alphatough/matrix.hpp"
#include "alphatough/spectral.hpp"

namespace alphatough {

/// Ordered partition of {0..n-1} into disjoint nonempty blocks.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    Partition(int order, std::vector<std::vector<int>> parts) : n(order), blocks(std::move(parts)) {
        std::vector<char> seen(n, 0);
        int covered = 0;
        for (const auto& block : blocks) {
            if (block.empty()) throw std::invalid_argument("Partition: empty block");
            for (int v : block) {
                if (v < 0 || v >= n) throw std::invalid_argument("Partition: vertex out of range");
                if (seen[v]) throw std::invalid_argument("Partition: blocks overlap");
                seen[v] = 1;
                ++covered;
            }
        }
        if (covered != n) throw std::invalid_argument("Partition: blocks do not cover all vertices");
    }

    int block_count() const { return static_cast<int>(blocks.size()); }

    static Partition singletons(int n) {
        std::vector<std::vector<int>> parts;
        for (int v = 0; v < n; ++v) parts.push_back({v});
        return Partition(n, std::move(parts));
    }
    static Partition one_block(int n) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return Partition(n, {all});
    }
};

/// The canonical equitable partition of family_gs2(n, s) in block order
/// (independent part, big clique, join clique) — the order the quotient
/// matrix formulas below assume.
inline Partition family_gs2_partition(int n, int s) {
    if (s < 1 || 2 * s > n - 1)
        throw std::invalid_argument("family_gs2_partition: need 1 <= s <= (n-1)/2");
    std::vector<int> independent, big, joinset;
    for (int v = n - s; v < n; ++v) independent.push_back(v);
    for (int v = s; v < n - s; ++v) big.push_back(v);
    for (int v = 0; v < s; ++v) joinset.push_back(v);
    return Partition(n, {independent, big, joinset});
}

/// Matrix of average block row sums b_ij = sum(M[V_i, V_j]) / |V_i|.
struct QuotientMatrix {
    int t = 0;
    std::vector<double> b;        // row-major t x t
    std::vector<int> block_sizes;

    double operator()(int i, int j) const { return b[static_cast<std::size_t>(i) * t + j]; }
};

namespace detail {

inline void check_partition_matches(const SymMatrix& m, const Partition& p, const char* who) {
    if (p.n != m.order())
        throw std::invalid_argument(std::string(who) + ": partition/matrix size mismatch");
}

}  // namespace detail

/// True iff within every block M_ij all row sums agree (absolute 1e-12 by
/// default; assembled entries are exact to the machine representation of
/// alpha, so the tolerance only absorbs summation order).
inline bool is_equitable(const SymMatrix& m, const Partition& p, double tol = 1e-12) {
    detail::check_partition_matches(m, p, "is_equitable");
    for (const auto& rows : p.blocks) {
        for (const auto& cols : p.blocks) {
            bool first = true;
            double expected = 0.0;
            for (int u : rows) {
                double sum = 0.0;
                for (int v : cols) sum += m(u, v);
                if (first) {
                    expected = sum;
                    first = false;
                } else if (std::abs(sum - expected) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
    detail::check_partition_matches(m, p, "quotient_matrix");
    int t = p.block_count();
    QuotientMatrix q;
    q.t = t;
    q.b.assign(static_cast<std::size_t>(t) * t, 0.0);
    q.block_sizes.reserve(t);
    for (const auto& block : p.blocks) q.block_sizes.push_back(static_cast<int>(block.size()));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            double sum = 0.0;
            for (int u : p.blocks[i])
                for (int v : p.blocks[j]) sum += m(u, v);
            q.b[static_cast<std::size_t>(i) * t + j] = sum / q.block_sizes[i];
        }
    return q;
}

/// Eigenvalues of a quotient of a symmetric matrix. The rescaling
/// diag(sqrt(|V_i|)) * B * diag(1/sqrt(|V_i|)) is symmetric because
/// b_ij |V_i| = b_ji |V_j|, so the symmetric solver applies.
inline Spectrum quotient_spectrum(const QuotientMatrix& q) {
    SymMatrix s(q.t);
    for (int i = 0; i < q.t; ++i)
        for (int j = i; j < q.t; ++j) {
            double scaled = q(i, j) * std::sqrt(static_cast<double>(q.block_sizes[i]) /
                                                static_cast<double>(q.block_sizes[j]));
            s.set(i, j, scaled);
        }
    return full_spectrum(s);
}

/// Characteristic polynomial of a 3x3 quotient matrix, monic.
inline Cubic quotient_charpoly3(const QuotientMatrix& q) {
    if (q.t != 3) throw std::invalid_argument("quotient_charpoly3: need a 3x3 quotient");
    double tr = q(0, 0) + q(1, 1) + q(2, 2);
    double minors = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0) + q(0, 0) * q(2, 2) -
                    q(0, 2) * q(2, 0) + q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1);
    double det = q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
                 q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
                 q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
    return Cubic{-tr, minors, -det};
}

struct QuotientSpectrumReport {
    bool pass = false;
    double max_eigenvalue_mismatch = 0.0;  // worst gap when matching quotient eigenvalues into M's
    double radius_mismatch = 0.0;
    std::vector<double> quotient_eigenvalues;
    std::vector<double> matrix_eigenvalues;
};

/// Checks that every eigenvalue of the quotient appears among the
/// eigenvalues of M (greedy matching on the sorted sequences) and that the
/// spectral radii agree. Requires an equitable partition.
inline QuotientSpectrumReport quotient_spectrum_check(const SymMatrix& m, const Partition& p,
                                                      double tol = 1e-8) {
    if (!is_equitable(m, p))
        throw std::invalid_argument("quotient_spectrum_check: partition is not equitable");
    QuotientSpectrumReport report;
    report.quotient_eigenvalues = quotient_spectrum(quotient_matrix(m, p)).eigenvalues;
    report.matrix_eigenvalues = full_spectrum(m).eigenvalues;

    // Both lists are nonincreasing; march through the big list once.
    std::size_t j = 0;
    double worst = 0.0;
    for (double lambda : report.quotient_eigenvalues) {
        while (j < report.matrix_eigenvalues.size() &&
               report.matrix_eigenvalues[j] > lambda + tol)
            ++j;
        if (j == report.matrix_eigenvalues.size()) {
            worst = std::max(worst, std::abs(lambda - report.matrix_eigenvalues.back()));
            continue;
        }
        worst = std::max(worst, std::abs(report.matrix_eigenvalues[j] - lambda));
        ++j;
    }
    report.max_eigenvalue_mismatch = worst;
    report.radius_mismatch =
        std::abs(report.quotient_eigenvalues.front() - report.matrix_eigenvalues.front());
    report.pass = worst <= tol && report.radius_mismatch <= tol;
    return report;
}

/// Checks the second-root bound for the family_gs2 quotient cubic:
/// eta_2 <= n + (alpha-2)s - 1 and that this cap sits strictly below n-2.
/// Applies only on the s >= 2 branch.
inline bool interlacing_bound_check(int n, int s, double alpha, double tol = 1e-8) {
    if (s < 2 || 2 * s > n - 1)
        throw std::invalid_argument("interlacing_bound_check: need 2 <= s <= (n-1)/2");
    auto roots = real_roots(family_gs2_quotient_cubic(n, s, alpha));
    if (roots.size() != 3)
        throw std::runtime_error("interlacing_bound_check: quotient cubic lost real roots");
    double cap = n + (alpha - 2.0) * s - 1.0;
    return roots[1] <= cap + tol && cap < n - 2;
}

}  // namespace alphatough
