#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace graphdot {

/// Library-wide cap on vertex count; adjacency rows are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// A bijection on {0..n-1}, validated at construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
        const int n = static_cast<int>(map_.size());
        if (n == 0 || n > kMaxOrder) fail(errc::invalid_input, "permutation: bad order");
        std::uint64_t seen = 0;
        for (int v : map_) {
            if (v < 0 || v >= n || (seen >> v) & 1)
                fail(errc::invalid_input, "permutation: mapping is not a bijection");
            seen |= std::uint64_t{1} << v;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
        return Permutation(std::move(m));
    }

    int order() const noexcept { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mapping() const noexcept { return map_; }

    Permutation inverse() const {
        std::vector<int> inv(map_.size());
        for (int i = 0; i < order(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

/// Immutable simple undirected graph on n labeled vertices (0-based),
/// adjacency stored as one bitset word per vertex.
class Graph {
public:
    explicit Graph(int n) : n_(check_order(n)), m_(0), adj_(static_cast<std::size_t>(n), 0) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(check_order(n)), m_(0), adj_(static_cast<std::size_t>(n), 0) {
        for (auto [i, j] : edges) add_edge_checked(i, j);
    }

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    bool has_edge(int i, int j) const { return (adj_[static_cast<std::size_t>(i)] >> j) & 1; }
    std::uint64_t neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return std::popcount(adj_[static_cast<std::size_t>(i)]); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) out.emplace_back(i, j);
        return out;
    }

    /// Graph with the complementary edge set (diagonal stays empty).
    Graph complement() const {
        Graph c(n_);
        const std::uint64_t all = mask_all(n_);
        for (int i = 0; i < n_; ++i)
            c.adj_[static_cast<std::size_t>(i)] =
                (~adj_[static_cast<std::size_t>(i)] & all) & ~(std::uint64_t{1} << i);
        c.m_ = n_ * (n_ - 1) / 2 - m_;
        return c;
    }

    /// Image of this graph under p: vertex i becomes p[i].
    Graph relabeled(const Permutation& p) const {
        if (p.order() != n_) fail(errc::invalid_input, "relabel: permutation order mismatch");
        Graph out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) out.add_edge_unchecked(p[i], p[j]);
        return out;
    }

    /// Colex pair index of {i,j}, i < j: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, ...
    static int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

    /// Edge bitstring packed MSB-first in colex pair order (pair 0 highest bit),
    /// so ascending integer order equals lexicographic order on the bit sequence.
    /// Requires n(n-1)/2 <= 64 bits, i.e. n <= 11.
    std::uint64_t edge_code() const {
        const int pairs = n_ * (n_ - 1) / 2;
        if (pairs > 64) fail(errc::guard, "edge_code: order too large for a 64-bit code");
        std::uint64_t code = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (has_edge(i, j)) code |= std::uint64_t{1} << (pairs - 1 - pair_index(i, j));
        return code;
    }

    static Graph from_edge_code(int n, std::uint64_t code) {
        Graph g(n);
        const int pairs = n * (n - 1) / 2;
        if (pairs > 64) fail(errc::guard, "from_edge_code: order too large for a 64-bit code");
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((code >> (pairs - 1 - pair_index(i, j))) & 1) g.add_edge_unchecked(i, j);
        return g;
    }

    bool operator==(const Graph&) const = default;

    static std::uint64_t mask_all(int n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

private:
    static int check_order(int n) {
        if (n < 1) fail(errc::invalid_input, "graph: order must be positive");
        if (n > kMaxOrder)
            fail(errc::guard, "graph: order " + std::to_string(n) + " exceeds supported maximum " +
                                  std::to_string(kMaxOrder));
        return n;
    }

    void add_edge_checked(int i, int j) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n_ || i == j)
            fail(errc::invalid_input, "graph: edge {" + std::to_string(i) + "," + std::to_string(j) +
                                          "} out of range for order " + std::to_string(n_));
        if (has_edge(i, j))
            fail(errc::invalid_input, "graph: duplicate edge {" + std::to_string(i) + "," +
                                          std::to_string(j) + "}");
        add_edge_unchecked(i, j);
    }

    void add_edge_unchecked(int i, int j) {
        adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        ++m_;
    }

    int n_;
    int m_;
    std::vector<std::uint64_t> adj_;
};

inline Graph complement(const Graph& g) { return g.complement(); }

// ---- standard small-graph factories -------------------------------------

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) fail(errc::invalid_input, "cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

/// Star S_k on n vertices: center 0 adjacent to leaves 1..k, the rest isolated.
inline Graph star_graph(int n, int k) {
    if (k < 0 || k > n - 1) fail(errc::guard, "star_graph: leaf count out of range");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

enum class SplitVariant { coclique, clique };

/// K_r on vertices 0..r-1, and on the rest either nothing (coclique: K_r u ~K_{n-r})
/// or another clique (clique: K_r u K_{n-r}).
inline Graph clique_split_graph(int n, int r, SplitVariant variant) {
    if (r < 1 || r > n) fail(errc::guard, "clique_split_graph: r out of range");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) e.emplace_back(i, j);
    if (variant == SplitVariant::clique)
        for (int i = r; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [i, j] : b.edges()) e.emplace_back(i + a.order(), j + a.order());
    return Graph(a.order() + b.order(), e);
}

// ---- signed matrix representation ----------------------------------------

/// The +-r/0 matrix for a (possibly scaled) graph: +r on edges, -r on non-edges,
/// zero diagonal. Materialized only at API boundaries; the solvers work on bitsets.
struct SignMatrix {
    int order = 0;
    double weight = 1.0;
    std::vector<double> entries;  // row-major, order x order

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
};

inline SignMatrix sign_matrix(const Graph& g, double r) {
    if (r == 0.0) fail(errc::invalid_input, "sign_matrix: weight r = 0 erases all structure");
    const int n = g.order();
    SignMatrix m{n, r, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.entries[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? r : -r;
    return m;
}

}  // namespace graphdot
