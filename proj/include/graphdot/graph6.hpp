#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace graphdot {

namespace detail {

[[noreturn]] inline void g6_fail(std::size_t byte, const std::string& what) {
    fail(errc::parse, "graph6: byte " + std::to_string(byte) + ": " + what);
}

inline int g6_value(const std::string& s, std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) g6_fail(pos, "character out of printable range 63..126");
    return c - 63;
}

}  // namespace detail

/// Decode one graph from graph6 text (no trailing newline). The order header is
/// a single byte for n <= 62, or '~' followed by three 6-bit bytes for larger n;
/// edge bits follow in colex order, six per byte, zero-padded to a full byte.
inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) fail(errc::parse, "graph6: empty input");
    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            detail::g6_fail(1, "8-byte order header is beyond the supported range");
        if (text.size() < 4) detail::g6_fail(text.size(), "truncated order header");
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | detail::g6_value(text, pos);
    } else {
        n = detail::g6_value(text, 0);
        pos = 1;
    }
    if (n < 1) fail(errc::parse, "graph6: order must be positive");
    if (n > kMaxOrder)
        fail(errc::guard,
             "graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                 std::to_string(kMaxOrder));

    const int order = static_cast<int>(n);
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != pos + body)
        fail(errc::parse, "graph6: expected " + std::to_string(pos + body) + " bytes for order " +
                              std::to_string(n) + ", got " + std::to_string(text.size()));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t k = 0; k < body; ++k) {
        const int v = detail::g6_value(text, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (v >> b) & 1;
            if (bit >= bits) {
                if (set) detail::g6_fail(pos + k, "nonzero padding bit");
                continue;
            }
            if (set) {
                // colex order: bit index b(i,j) = j(j-1)/2 + i counts pairs (0,1),(0,2),(1,2),...
                int j = 1;
                while (static_cast<long long>(j) * (j + 1) / 2 <= bit) ++j;
                const int i = static_cast<int>(bit - static_cast<long long>(j) * (j - 1) / 2);
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(order, edges);
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (bits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Edge-list text format: first non-blank line is the vertex count, each further
/// line one edge "i j". Blank lines and '#' comments are ignored.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n)) continue;  // blank or comment-only line before the header
            std::string rest;
            if (fields >> rest)
                fail(errc::parse, "edge list: line " + std::to_string(lineno) +
                                      ": expected a lone vertex count");
            if (n < 1) fail(errc::parse, "edge list: vertex count must be positive");
            continue;
        }
        int i, j;
        if (!(fields >> i)) continue;
        std::string rest;
        if (!(fields >> j) || (fields >> rest))
            fail(errc::parse,
                 "edge list: line " + std::to_string(lineno) + ": expected two vertex ids");
        if (i < 0 || j >= n || i >= j)
            fail(errc::parse, "edge list: line " + std::to_string(lineno) + ": edge {" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  "} must satisfy 0 <= i < j < " + std::to_string(n));
        edges.emplace_back(i, j);
    }
    if (n < 0) fail(errc::parse, "edge list: missing vertex count");
    try {
        return Graph(n, edges);
    } catch (const error& e) {
        fail(errc::parse, std::string("edge list: ") + e.what());
    }
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace graphdot
