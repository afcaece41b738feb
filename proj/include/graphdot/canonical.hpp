#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace graphdot {

/// Largest order accepted by the canonical-labeling search.
inline constexpr int kCanonicalMaxOrder = 10;
/// Largest order for which the full isomorphism-class catalog is enumerable.
inline constexpr int kCatalogMaxOrder = 7;

namespace detail {

/// Depth-first search for the relabeling that minimizes the packed edge code.
/// Positions are filled 0,1,2,...; placing position j fixes the code bits of all
/// pairs {i,j}, i<j, which occupy the next block of bits below the ones already
/// fixed, so a partial code that exceeds the incumbent can never recover.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.order()), pairs_(n_ * (n_ - 1) / 2), best_(g.edge_code()) {
        placed_.reserve(static_cast<std::size_t>(n_));
        descend(0, 0, 0);
    }

    std::uint64_t code() const noexcept { return best_; }
    const std::vector<int>& labeling() const noexcept { return best_order_; }

private:
    void descend(int depth, std::uint64_t partial, std::uint64_t used) {
        if (depth == n_) {
            if (partial <= best_) {
                best_ = partial;
                best_order_ = placed_;
            }
            return;
        }
        // Candidates sorted by the value of the code block they would emit, so
        // the subtree most likely to contain the minimum is explored first.
        struct Cand {
            std::uint64_t block;
            int vertex;
        };
        std::vector<Cand> cands;
        cands.reserve(static_cast<std::size_t>(n_ - depth));
        for (int v = 0; v < n_; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < depth; ++i)
                block = (block << 1) | (g_.has_edge(placed_[static_cast<std::size_t>(i)], v) ? 1 : 0);
            cands.push_back({block, v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.block != b.block ? a.block < b.block : a.vertex < b.vertex;
        });
        const int shift = pairs_ - (depth + 1) * depth / 2;  // bits still unplaced after this level
        for (const Cand& c : cands) {
            const std::uint64_t next = partial | (c.block << shift);
            if (next > best_) break;  // sorted, so every later candidate is no better
            placed_.push_back(c.vertex);
            descend(depth + 1, next, used | (std::uint64_t{1} << c.vertex));
            placed_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    int pairs_;
    std::uint64_t best_;
    std::vector<int> placed_;
    std::vector<int> best_order_;
};

inline void check_canonical_order(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        fail(errc::guard, "canonical form: order " + std::to_string(g.order()) +
                              " exceeds search limit " + std::to_string(kCanonicalMaxOrder));
}

}  // namespace detail

/// Minimum packed edge code over all relabelings: equal codes <=> isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
    detail::check_canonical_order(g);
    return detail::CanonicalSearch(g).code();
}

/// The isomorph of g realizing the canonical code.
inline Graph canonical_form(const Graph& g) {
    detail::check_canonical_order(g);
    return Graph::from_edge_code(g.order(), detail::CanonicalSearch(g).code());
}

namespace detail {

/// Backtracking vertex matcher shared by the isomorphism test and the
/// automorphism counter. Maps vertices of a onto b one at a time, accepting a
/// candidate only if its adjacency to every already-mapped vertex agrees.
template <typename OnComplete>
void match_graphs(const Graph& a, const Graph& b, int depth, std::vector<int>& image,
                  std::uint64_t used, OnComplete&& on_complete) {
    const int n = a.order();
    if (depth == n) {
        on_complete(image);
        return;
    }
    std::uint64_t required = 0;
    for (int u = 0; u < depth; ++u)
        if (a.has_edge(u, depth))
            required |= std::uint64_t{1} << image[static_cast<std::size_t>(u)];
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (a.degree(depth) != b.degree(w)) continue;
        if ((b.neighbors(w) & used) != required) continue;
        image[static_cast<std::size_t>(depth)] = w;
        match_graphs(a, b, depth + 1, image, used | (std::uint64_t{1} << w),
                     std::forward<OnComplete>(on_complete));
    }
}

}  // namespace detail

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    const int n = g.order();
    std::vector<int> dg(static_cast<std::size_t>(n)), dh(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        dg[static_cast<std::size_t>(i)] = g.degree(i);
        dh[static_cast<std::size_t>(i)] = h.degree(i);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    bool found = false;
    std::vector<int> image(static_cast<std::size_t>(n));
    struct Stop {};
    try {
        detail::match_graphs(g, h, 0, image, 0, [&](const std::vector<int>&) {
            found = true;
            throw Stop{};
        });
    } catch (const Stop&) {
    }
    return found;
}

/// |Aut(g)|: the number of relabelings fixing g.
inline std::int64_t automorphism_count(const Graph& g) {
    std::int64_t count = 0;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    detail::match_graphs(g, g, 0, image, 0, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Canonical codes of every isomorphism class on n vertices, ascending.
/// Scans all 2^(n choose 2) edge codes once, marking each newly seen class's
/// full relabeling orbit; the first unmarked code of an orbit is its minimum.
inline const std::vector<std::uint64_t>& enumerate_iso_classes(int n) {
    if (n < 1 || n > kCatalogMaxOrder)
        fail(errc::guard, "isomorphism catalog: order " + std::to_string(n) +
                              " outside supported range 1.." + std::to_string(kCatalogMaxOrder));
    static std::mutex cache_mutex;
    static std::map<int, std::vector<std::uint64_t>> cache;  // node-based: references stay valid
    const std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int pairs = n * (n - 1) / 2;

    // bit_maps[p][b]: where code bit b lands after relabeling by permutation p.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps;
    do {
        std::vector<int> map(static_cast<std::size_t>(pairs));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                const int pi = perm[static_cast<std::size_t>(i)];
                const int pj = perm[static_cast<std::size_t>(j)];
                const int from = pairs - 1 - Graph::pair_index(i, j);
                const int to =
                    pairs - 1 - Graph::pair_index(std::min(pi, pj), std::max(pi, pj));
                map[static_cast<std::size_t>(from)] = to;
            }
        bit_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> classes;
    std::vector<bool> marked(std::size_t{1} << pairs, false);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        if (marked[code]) continue;
        classes.push_back(code);
        for (const auto& map : bit_maps) {
            std::uint64_t img = 0;
            std::uint64_t rest = code;
            while (rest != 0) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint64_t{1} << map[static_cast<std::size_t>(b)];
            }
            marked[img] = true;
        }
    }
    return cache.emplace(n, std::move(classes)).first->second;
}

/// Position of g's class in the ascending canonical catalog for its order.
inline int iso_class_index(const Graph& g) {
    const auto& classes = enumerate_iso_classes(g.order());
    const std::uint64_t code = canonical_code(g);
    const auto it = std::lower_bound(classes.begin(), classes.end(), code);
    if (it == classes.end() || *it != code)
        fail(errc::invalid_input, "iso_class_index: canonical code missing from catalog");
    return static_cast<int>(it - classes.begin());
}

}  // namespace graphdot
