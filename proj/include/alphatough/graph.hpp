#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphatough {

/// A subset of the vertices of a graph of order n. Members are kept sorted.
struct VertexSet {
    int n = 0;
    std::vector<int> members;

    VertexSet() = default;
    VertexSet(int order, std::vector<int> verts) : n(order), members(std::move(verts)) {
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 0 || members[i] >= n)
                throw std::invalid_argument("VertexSet: vertex out of range");
            if (i > 0 && members[i] == members[i - 1])
                throw std::invalid_argument("VertexSet: duplicate vertex");
        }
    }

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n == b.n && a.members == b.members;
    }
};

/// Undirected simple graph on vertices 0..n-1, adjacency kept as sorted
/// neighbor lists. Immutable once constructed; copy to modify.
class Graph {
public:
    explicit Graph(int n) : adj_(check_order(n)) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(check_order(n)) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
        sort_adjacency();
    }

    int order() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const {
        long long total = 0;
        for (const auto& nb : adj_) total += static_cast<long long>(nb.size());
        return total / 2;
    }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_.at(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) result.emplace_back(u, v);
        return result;
    }

    /// Copy with one extra edge.
    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_checked(u, v);
        g.sort_adjacency();
        return g;
    }

    /// Copy with one edge removed.
    Graph without_edge(int u, int v) const {
        if (!has_edge(u, v)) throw std::invalid_argument("without_edge: edge not present");
        Graph g = *this;
        auto drop = [](std::vector<int>& nb, int w) {
            nb.erase(std::find(nb.begin(), nb.end(), w));
        };
        drop(g.adj_[u], v);
        drop(g.adj_[v], u);
        return g;
    }

    bool is_complete() const {
        return edge_count() == static_cast<long long>(order()) * (order() - 1) / 2;
    }

    /// Neighborhoods as 64-bit masks; usable only for order <= 64.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (order() > 64) throw std::invalid_argument("adjacency_masks: order exceeds 64");
        std::vector<std::uint64_t> masks(order(), 0);
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u]) masks[u] |= std::uint64_t{1} << v;
        return masks;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    static int check_order(int n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be positive");
        return n;
    }
    void add_edge_checked(int u, int v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
            throw std::invalid_argument("Graph: duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    void sort_adjacency() {
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    std::vector<std::vector<int>> adj_;
};

// ---- constructors ------------------------------------------------------

/// K_n. Rejects n = 0: component counts and toughness are undefined on the
/// empty graph, and no construction needs it.
inline Graph complete(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// nK_1: n vertices, no edges.
inline Graph edgeless(int n) { return Graph(n); }

/// Path on n vertices with edges i -- i+1.
inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

/// Cycle C_n, n >= 3.
inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

/// G1 u G2 with the vertices of G2 shifted by |V(G1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.order();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    return Graph(n1 + g2.order(), edges);
}

/// G1 v G2: disjoint union plus every edge between the parts. The G1 block
/// keeps indices 0..|V(G1)|-1, fixing a canonical labeling.
inline Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.order();
    int n2 = g2.order();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

/// K_a,b as join(aK_1, bK_1).
inline Graph complete_bipartite(int a, int b) { return join(edgeless(a), edgeless(b)); }

/// K_s v (K_{n-2s} u sK_1), the family G_s^2. Vertices 0..s-1 form the join
/// clique, s..n-s-1 the big clique, n-s..n-1 the independent part.
inline Graph family_gs2(int n, int s) {
    if (s < 1 || 2 * s > n - 1)
        throw std::invalid_argument("family_gs2: need 1 <= s <= (n-1)/2");
    return join(complete(s), disjoint_union(complete(n - 2 * s), edgeless(s)));
}

/// K_{tc-1} v (K_{n-(t+1)c+2} u (c-1)K_1), the family G_2.
inline Graph family_g2(int n, int t, int c) {
    if (t < 1) throw std::invalid_argument("family_g2: need t >= 1");
    if (c < 2) throw std::invalid_argument("family_g2: need c >= 2");
    if (n < (t + 1) * c - 1) throw std::invalid_argument("family_g2: need n >= (t+1)c - 1");
    return join(complete(t * c - 1),
                disjoint_union(complete(n - (t + 1) * c + 2), edgeless(c - 1)));
}

inline int family_g3_independent_part(int n, int t) {
    return (n + 2 + t) / (t + 1);  // ceil((n+2)/(t+1))
}

/// K_{n-q} v qK_1 with q = ceil((n+2)/(t+1)), the family G_3.
inline Graph family_g3(int n, int t) {
    if (t < 1) throw std::invalid_argument("family_g3: need t >= 1");
    int q = family_g3_independent_part(n, t);
    if (n < q + 1) throw std::invalid_argument("family_g3: order too small for t");
    return join(complete(n - q), edgeless(q));
}

// ---- connectivity ------------------------------------------------------

/// Number of connected components of G - S; 0 when S = V(G).
inline int components_after_removal(const Graph& g, const VertexSet& s) {
    if (s.n != g.order()) throw std::invalid_argument("components_after_removal: size mismatch");
    int n = g.order();
    std::vector<char> removed(n, 0), seen(n, 0);
    for (int v : s.members) removed[v] = 1;
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (removed[start] || seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!removed[v] && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return count;
}

inline bool is_connected(const Graph& g) {
    return components_after_removal(g, VertexSet(g.order(), {})) == 1;
}

}  // namespace alphatough
