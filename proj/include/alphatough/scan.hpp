#pragma once

#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "alphatough/graph.hpp"
#include "alphatough/graph6.hpp"
#include "alphatough/matrix.hpp"
#include "alphatough/spectral.hpp"
#include "alphatough/theorems.hpp"
#include "alphatough/toughness.hpp"

namespace alphatough {

struct ScanOptions {
    int jobs = 1;
    double eps = kEps;
};

struct ScanInconsistency {
    long long index = 0;  // edge mask (enumeration) or line number (stream)
    std::string graph6;
    double rho = 0.0;
    double margin = 0.0;
};

/// Outcome of scanning a set of graphs against theorem 1.1. Counts are
/// deterministic and independent of the parallelism degree.
struct ScanReport {
    int n = 0;  // 0 for mixed-order stream input
    double alpha = 0.0;
    double threshold = 0.0;  // fixed-n enumeration only
    long long total = 0;
    long long connected = 0;
    long long skipped = 0;  // stream graphs failing a precondition
    long long hypothesis_true = 0;
    long long extremal_count = 0;
    double extremal_margin_worst = 0.0;  // max |margin| over extremal graphs
    std::vector<ScanInconsistency> inconsistencies;

    long long inconsistent_count() const {
        return static_cast<long long>(inconsistencies.size());
    }
};

namespace detail {

// is_t_tough on adjacency masks; t = 1 specialization used by the scans.
inline bool is_one_tough_masks(const std::vector<std::uint64_t>& adj, int n,
                               std::uint64_t full) {
    if (mask_components(adj, full) >= 2) return false;
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        complete = std::popcount(adj[u]) == n - 1;
    if (complete) return true;
    for (int k = 1; k <= n - 2 && k < n - k; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        do {
            std::uint64_t removed = 0;
            for (int v : idx) removed |= std::uint64_t{1} << v;
            if (mask_components(adj, full & ~removed) > k) return false;
        } while (next_combination(idx, n));
    }
    return true;
}

// Extremal-graph recognition straight off the masks (same predicate as
// is_extremal_1tough, avoiding Graph construction in the hot loop).
inline bool is_extremal_1tough_masks(const std::vector<std::uint64_t>& adj, int n,
                                     std::uint64_t full, int edge_count) {
    if (edge_count != (n - 2) * (n - 3) / 2 + (n - 1)) return false;
    for (int u = 0; u < n; ++u) {
        if (std::popcount(adj[u]) != 1) continue;
        int v = std::countr_zero(adj[u]);
        if (std::popcount(adj[v]) != n - 1) continue;
        std::uint64_t rest = full & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
        bool clique = true;
        for (std::uint64_t m = rest; m && clique; m &= m - 1) {
            int w = std::countr_zero(m);
            clique = (adj[w] & rest) == (rest & ~(std::uint64_t{1} << w));
        }
        if (clique) return true;
    }
    return false;
}

inline double rho_from_masks(const std::vector<std::uint64_t>& adj, int n, double alpha) {
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) {
        m.set(u, u, alpha * std::popcount(adj[u]));
        for (std::uint64_t nb = adj[u]; nb; nb &= nb - 1) {
            int v = std::countr_zero(nb);
            if (u < v) m.set(u, v, 1.0 - alpha);
        }
    }
    return full_spectrum(m).rho();
}

inline std::string graph6_from_masks(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (std::uint64_t nb = adj[u]; nb; nb &= nb - 1) {
            int v = std::countr_zero(nb);
            if (u < v) edges.emplace_back(u, v);
        }
    return emit_graph6(Graph(n, edges));
}

// One connected graph against theorem 1.1 with a precomputed threshold.
// The toughness conclusion is evaluated lazily: it only matters when the
// hypothesis holds and the graph is not the extremal one.
inline void scan_one_graph(const std::vector<std::uint64_t>& adj, int n, std::uint64_t full,
                           int edge_count, double alpha, double threshold, double eps,
                           long long index, ScanReport& chunk) {
    ++chunk.connected;
    bool extremal = is_extremal_1tough_masks(adj, n, full, edge_count);
    double rho = rho_from_masks(adj, n, alpha);
    double margin = rho - threshold;
    bool hypothesis = margin >= -eps;
    if (hypothesis) ++chunk.hypothesis_true;
    if (extremal) {
        ++chunk.extremal_count;
        chunk.extremal_margin_worst = std::max(chunk.extremal_margin_worst, std::abs(margin));
    }
    if (hypothesis && !extremal && !is_one_tough_masks(adj, n, full))
        chunk.inconsistencies.push_back({index, graph6_from_masks(adj, n), rho, margin});
}

}  // namespace detail

namespace detail {

// Runs one worker per chunk; a throwing chunk surfaces its exception
// after all threads have joined.
inline void run_chunked(int jobs, const std::function<void(int)>& worker) {
    if (jobs == 1) {
        worker(0);
        return;
    }
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j)
        threads.emplace_back([&, j] {
            try {
                worker(j);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    for (auto& th : threads) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace detail

/// Exhaustive theorem 1.1 scan over every labeled graph on n vertices
/// (connected ones are checked; 6 <= n <= 8 keeps the 2^(n(n-1)/2)
/// enumeration tractable). Expected result: an empty inconsistency list.
inline ScanReport scan_theorem11(int n, double alpha, ScanOptions opts = {}) {
    if (n < 6 || n > 8)
        throw std::invalid_argument("scan_theorem11: built-in enumeration supports 6 <= n <= 8");
    if (detail::order_below(n, theorem11_min_order(alpha)))
        throw std::invalid_argument("scan_theorem11: order below theorem11_min_order(alpha)");

    int npairs = n * (n - 1) / 2;
    // Pair k <-> (u_k, v_k) in column order, matching the graph6 bit order.
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

    double threshold = largest_root(theorem11_cubic(n, alpha), n - 2.0);
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::uint64_t total = std::uint64_t{1} << npairs;

    int jobs = std::max(1, opts.jobs);
    std::vector<ScanReport> chunks(jobs);
    auto worker = [&](int which) {
        std::uint64_t lo = total / jobs * which + std::min<std::uint64_t>(which, total % jobs);
        std::uint64_t hi = lo + total / jobs + (static_cast<std::uint64_t>(which) < total % jobs);
        ScanReport& chunk = chunks[which];
        std::vector<std::uint64_t> adj(n);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            ++chunk.total;
            std::fill(adj.begin(), adj.end(), 0);
            for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
                auto [u, v] = pairs[std::countr_zero(bits)];
                adj[u] |= std::uint64_t{1} << v;
                adj[v] |= std::uint64_t{1} << u;
            }
            if (detail::mask_components(adj, full) != 1) continue;
            detail::scan_one_graph(adj, n, full, std::popcount(mask), alpha, threshold,
                                   opts.eps, static_cast<long long>(mask), chunk);
        }
    };
    detail::run_chunked(jobs, worker);

    ScanReport report;
    report.n = n;
    report.alpha = alpha;
    report.threshold = threshold;
    for (const auto& chunk : chunks) {
        report.total += chunk.total;
        report.connected += chunk.connected;
        report.hypothesis_true += chunk.hypothesis_true;
        report.extremal_count += chunk.extremal_count;
        report.extremal_margin_worst =
            std::max(report.extremal_margin_worst, chunk.extremal_margin_worst);
        report.inconsistencies.insert(report.inconsistencies.end(),
                                      chunk.inconsistencies.begin(),
                                      chunk.inconsistencies.end());
    }
    return report;
}

/// Theorem 1.1 scan over a graph6 stream, one graph per line. Graphs that
/// fail a precondition (order below theorem11_min_order, or disconnected)
/// are counted as skipped. Lines are processed with per-graph thresholds,
/// so mixed orders are fine.
inline ScanReport scan_theorem11_stream(const std::vector<std::string>& lines, double alpha,
                                        ScanOptions opts = {}) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("scan_theorem11_stream: alpha must lie in [0,1)");
    int jobs = std::max(1, opts.jobs);
    std::vector<ScanReport> chunks(jobs);
    long long count = static_cast<long long>(lines.size());
    double min_order = theorem11_min_order(alpha);

    auto worker = [&](int which) {
        long long lo = count / jobs * which + std::min<long long>(which, count % jobs);
        long long hi = lo + count / jobs + (which < count % jobs);
        ScanReport& chunk = chunks[which];
        for (long long i = lo; i < hi; ++i) {
            if (lines[i].empty()) continue;
            ++chunk.total;
            Graph g = parse_graph6(lines[i]);
            int n = g.order();
            if (detail::order_below(n, min_order) || n > 64) {
                ++chunk.skipped;
                continue;
            }
            auto adj = g.adjacency_masks();
            std::uint64_t full =
                (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
            if (detail::mask_components(adj, full) != 1) {
                ++chunk.skipped;
                continue;
            }
            double threshold = largest_root(theorem11_cubic(n, alpha), n - 2.0);
            detail::scan_one_graph(adj, n, full, static_cast<int>(g.edge_count()), alpha,
                                   threshold, opts.eps, i + 1, chunk);
        }
    };
    detail::run_chunked(jobs, worker);

    ScanReport report;
    report.alpha = alpha;
    for (const auto& chunk : chunks) {
        report.total += chunk.total;
        report.connected += chunk.connected;
        report.skipped += chunk.skipped;
        report.hypothesis_true += chunk.hypothesis_true;
        report.extremal_count += chunk.extremal_count;
        report.extremal_margin_worst =
            std::max(report.extremal_margin_worst, chunk.extremal_margin_worst);
        report.inconsistencies.insert(report.inconsistencies.end(),
                                      chunk.inconsistencies.begin(),
                                      chunk.inconsistencies.end());
    }
    return report;
}

}  // namespace alphatough
