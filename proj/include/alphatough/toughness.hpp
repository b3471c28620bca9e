#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphatough/graph.hpp"
#include "alphatough/rational.hpp"

namespace alphatough {

namespace detail {

/// Components of the subgraph induced on `remaining` (bitmask flood fill).
inline int mask_components(const std::vector<std::uint64_t>& adj, std::uint64_t remaining) {
    int count = 0;
    while (remaining) {
        ++count;
        std::uint64_t comp = remaining & (~remaining + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t scan = frontier;
            while (scan) {
                int u = std::countr_zero(scan);
                scan &= scan - 1;
                next |= adj[u];
            }
            next &= remaining & ~comp;
            comp |= next;
            frontier = next;
        }
        remaining &= ~comp;
    }
    return count;
}

/// Lexicographic order on vertex sets encoded as bitmasks (compared as
/// sorted member sequences of equal size): the lowest differing vertex
/// decides.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

/// Advances a size-k combination (ascending indices) to its lexicographic
/// successor over {0..n-1}; returns false after the last one.
inline bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct CutCandidate {
    bool found = false;
    int size = 0;
    int components = 0;
    std::uint64_t mask = 0;

    // Canonical order: smaller ratio, then smaller |S|, then lex-smaller S.
    // Order-independent, so any enumeration or merge schedule produces the
    // same winner.
    bool better_than(const CutCandidate& other) const {
        if (!other.found) return found;
        if (!found) return false;
        long long lhs = static_cast<long long>(size) * other.components;
        long long rhs = static_cast<long long>(other.size) * components;
        if (lhs != rhs) return lhs < rhs;
        if (size != other.size) return size < other.size;
        return mask_lex_less(mask, other.mask);
    }
};

}  // namespace detail

/// Exact toughness: min |S|/c(G-S) over cut sets, infinite for complete
/// graphs, 0 for disconnected input (witness = empty set).
struct Toughness {
    bool infinite = false;
    Rational value;     // meaningful iff !infinite
    VertexSet witness;  // empty when infinite
    int components = 0; // c(G - witness); 0 when infinite
};

inline Toughness toughness(const Graph& g) {
    int n = g.order();
    Toughness result;
    if (g.is_complete()) {
        result.infinite = true;
        result.witness = VertexSet(n, {});
        return result;
    }
    auto adj = g.adjacency_masks();
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    int whole = detail::mask_components(adj, full);
    if (whole >= 2) {
        result.value = Rational(0);
        result.witness = VertexSet(n, {});
        result.components = whole;
        return result;
    }

    detail::CutCandidate best;
    for (int k = 1; k <= n - 2; ++k) {
        // Ratio k/c is at least k/(n-k); once that reaches the incumbent
        // ratio no larger k can win (ties lose on |S|).
        if (best.found &&
            static_cast<long long>(k) * best.components >=
                static_cast<long long>(best.size) * (n - k))
            break;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        do {
            std::uint64_t removed = 0;
            for (int v : idx) removed |= std::uint64_t{1} << v;
            int c = detail::mask_components(adj, full & ~removed);
            if (c < 2) continue;
            detail::CutCandidate cand{true, k, c, removed};
            if (cand.better_than(best)) best = cand;
        } while (detail::next_combination(idx, n));
    }

    std::vector<int> members;
    for (std::uint64_t m = best.mask; m; m &= m - 1) members.push_back(std::countr_zero(m));
    result.value = Rational(best.size, best.components);
    result.witness = VertexSet(n, members);
    result.components = best.components;
    return result;
}

namespace detail {

// Flood fill on adjacency lists with reusable scratch; the n > 64 path.
inline int list_components(const Graph& g, const std::vector<char>& removed,
                           std::vector<char>& visited, std::vector<int>& stack) {
    int n = g.order();
    std::fill(visited.begin(), visited.end(), 0);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (removed[start] || visited[start]) continue;
        ++count;
        visited[start] = 1;
        stack.clear();
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!removed[v] && !visited[v]) {
                    visited[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return count;
}

}  // namespace detail

/// |S| >= t*c(G-S) for every S with c(G-S) >= 2. Exact rational
/// comparisons; early exit on the first violating cut.
inline bool is_t_tough(const Graph& g, const Rational& t) {
    if (t < Rational(0)) throw std::invalid_argument("is_t_tough: t must be nonnegative");
    if (g.is_complete()) return true;
    if (t == Rational(0)) return true;
    int n = g.order();
    auto violates = [&](int k, int c) {
        return c >= 2 && static_cast<__int128>(k) * t.den() < static_cast<__int128>(t.num()) * c;
    };
    auto no_violation_possible = [&](int k) {
        // a violation |S| < t*c needs c > k/t, and c <= n-k
        return static_cast<__int128>(k) * t.den() >= static_cast<__int128>(t.num()) * (n - k);
    };

    if (n <= 64) {
        auto adj = g.adjacency_masks();
        std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        if (detail::mask_components(adj, full) >= 2) return false;  // 0 < t*c
        for (int k = 1; k <= n - 2; ++k) {
            if (no_violation_possible(k)) break;
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            do {
                std::uint64_t removed = 0;
                for (int v : idx) removed |= std::uint64_t{1} << v;
                if (violates(k, detail::mask_components(adj, full & ~removed))) return false;
            } while (detail::next_combination(idx, n));
        }
        return true;
    }

    std::vector<char> removed(n, 0), visited(n, 0);
    std::vector<int> stack;
    if (detail::list_components(g, removed, visited, stack) >= 2) return false;
    for (int k = 1; k <= n - 2; ++k) {
        if (no_violation_possible(k)) break;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        do {
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : idx) removed[v] = 1;
            if (violates(k, detail::list_components(g, removed, visited, stack))) return false;
        } while (detail::next_combination(idx, n));
    }
    return true;
}

/// Witness cut (S, c(G-S)) minimizing |S|/c(G-S) with the canonical
/// tie-break. Defined only for connected non-complete graphs.
inline std::pair<VertexSet, int> worst_cut(const Graph& g) {
    if (g.is_complete()) throw std::invalid_argument("worst_cut: complete graph has no cut set");
    if (!is_connected(g)) throw std::invalid_argument("worst_cut: graph must be connected");
    Toughness t = toughness(g);
    return {t.witness, t.components};
}

}  // namespace alphatough
