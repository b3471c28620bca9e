#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphatough/graph.hpp"

namespace alphatough {

// graph6: ASCII encoding of a simple undirected graph. A length field is
// followed by the upper triangle packed column by column, 6 bits per byte,
// each byte offset by 63. Reference: the format description distributed
// with nauty (formats.txt).

namespace detail {

inline void g6_require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("graph6: ") + msg);
}

inline int g6_value(unsigned char ch) {
    g6_require(ch >= 63 && ch <= 126, "character outside [63,126]");
    return ch - 63;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    using detail::g6_require;
    using detail::g6_value;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    g6_require(!text.empty(), "empty input");

    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = g6_value(text[0]);
        pos = 1;
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
        g6_require(text.size() >= 4, "truncated length prefix");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_value(text[i]);
        g6_require(n >= 63, "non-canonical long length prefix");
        pos = 4;
    } else {
        g6_require(text.size() >= 8, "truncated length prefix");
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | g6_value(text[i]);
        g6_require(n >= 258048, "non-canonical long length prefix");
        pos = 8;
    }
    g6_require(n >= 1, "graph of order 0 not supported");
    g6_require(n <= 100000, "order too large");

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    g6_require(static_cast<long long>(text.size() - pos) == nbytes,
               "length prefix inconsistent with payload size");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (long long i = 0; i < nbytes; ++i) {
        int val = g6_value(text[pos + i]);
        for (int b = 5; b >= 0; --b, ++bit) {
            int set = (val >> b) & 1;
            if (bit >= nbits) {
                g6_require(set == 0, "nonzero trailing padding bits");
                continue;
            }
            if (set) {
                // invert bit index -> (u, v) in column order
                long long k = bit;
                int v = 1;
                while (k >= v) { k -= v; ++v; }
                edges.emplace_back(static_cast<int>(k), v);
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

// Edge-list format: first line the order n, then one "u v" pair per line
// with 0 <= u < v < n. Blank lines ignored.

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1)
                throw std::invalid_argument("edge_list: first line must be a positive order");
            continue;
        }
        long long u, v;
        if (!(fields >> u >> v))
            throw std::invalid_argument("edge_list: expected 'u v' on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge_list: vertex out of range on line " + std::to_string(lineno));
        if (u == v)
            throw std::invalid_argument("edge_list: self-loop on line " + std::to_string(lineno));
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw std::invalid_argument("edge_list: empty input");
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j]) throw std::invalid_argument("edge_list: duplicate edge");
    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace alphatough
