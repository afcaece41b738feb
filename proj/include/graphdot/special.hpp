#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cross_order.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace graphdot {

/// Block-size cap for the clique-split solver (it enumerates min(r, n-r)-subsets).
inline constexpr int kCliqueSplitMaxBlock = 4;

namespace detail {

// Saturating counting helpers: counts that do not fit int64 become "not computed".
inline std::optional<std::int64_t> sat_mul(std::optional<std::int64_t> a,
                                           std::optional<std::int64_t> b) {
    if (!a || !b) return std::nullopt;
    const __int128 p = static_cast<__int128>(*a) * *b;
    if (p > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return static_cast<std::int64_t>(p);
}

inline std::optional<std::int64_t> sat_add(std::optional<std::int64_t> a,
                                           std::optional<std::int64_t> b) {
    if (!a || !b) return std::nullopt;
    const __int128 s = static_cast<__int128>(*a) + *b;
    if (s > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return static_cast<std::int64_t>(s);
}

inline std::optional<std::int64_t> sat_factorial(int n) {
    std::optional<std::int64_t> f = 1;
    for (int i = 2; i <= n; ++i) f = sat_mul(f, i);
    return f;
}

/// Exact binomial coefficient; fits int64 for every n <= 63.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::int64_t>(r);
}

/// Enumerates all s-subsets of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int s, Visit&& visit) {
    std::vector<int> pick(static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, int depth, int from) -> void {
        if (depth == s) {
            visit(pick);
            return;
        }
        for (int v = from; v <= n - (s - depth); ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

/// Dot product of g with the n-vertex star carrying k leaves, in O(n).
/// For a fixed image w of the center, the best leaf placement recovers
/// 2*min(k, deg(w)) agreements on top of a w-independent base, so only the
/// center image matters. witness maps g-vertices onto the reference labeling
/// (center 0, leaves 1..k, isolated vertices after).
inline DotResult dot_star(const Graph& g, int k) {
    const int n = g.order();
    if (k < 0 || k > n - 1) fail(errc::guard, "dot_star: leaf count out of range");

    int best_match = -1;
    int center = 0;
    for (int w = 0; w < n; ++w) {
        const int m = std::min(k, g.degree(w));
        if (m > best_match) {
            best_match = m;
            center = w;
        }
    }
    const std::int64_t base = static_cast<std::int64_t>(n - 1 - k) +
                              detail::binomial(n - 1, 2) - g.edge_count();
    const std::int64_t agreements = base + 2 * best_match;

    // Count maximizers: choose which neighbors/non-neighbors of the center image
    // host leaves, then order the leaves and the isolated vertices freely.
    const auto arrangements =
        detail::sat_mul(detail::sat_factorial(k), detail::sat_factorial(n - 1 - k));
    std::optional<std::int64_t> count = 0;
    for (int w = 0; w < n; ++w) {
        const int d = g.degree(w);
        if (std::min(k, d) != best_match) continue;
        const std::int64_t sets =
            detail::binomial(d, best_match) * detail::binomial(n - 1 - d, k - best_match);
        count = detail::sat_add(count, detail::sat_mul(arrangements, sets));
    }

    DotResult r;
    r.value = 4 * agreements - static_cast<std::int64_t>(n) * (n - 1);
    r.phase = count;
    r.ops = static_cast<std::uint64_t>(n);

    // One explicit maximizer: smallest qualifying center image, smallest leaf hosts.
    r.witness.assign(static_cast<std::size_t>(n), -1);
    r.witness[static_cast<std::size_t>(center)] = 0;
    int nbr_leaves = best_match;      // leaf hosts drawn from the center's neighbors
    int other_leaves = k - best_match;  // leaf hosts drawn from non-neighbors
    int next_leaf = 1, next_rest = k + 1;
    for (int v = 0; v < n; ++v) {
        if (v == center) continue;
        int& pool = g.has_edge(center, v) ? nbr_leaves : other_leaves;
        if (pool > 0) {
            --pool;
            r.witness[static_cast<std::size_t>(v)] = next_leaf++;
        } else {
            r.witness[static_cast<std::size_t>(v)] = next_rest++;
        }
    }
    return r;
}

/// Dot product of g with the split graph K_r plus either isolated vertices
/// (coclique) or a second clique (clique), by enumerating min(r, n-r)-subsets:
/// the value depends only on which subset hosts the clique block.
inline DotResult dot_clique_split(const Graph& g, int r, SplitVariant variant) {
    const int n = g.order();
    if (r < 1 || r > n) fail(errc::guard, "dot_clique_split: block size out of range");
    const int s = std::min(r, n - r);
    if (s > kCliqueSplitMaxBlock)
        fail(errc::guard, "dot_clique_split: min(r, n-r) = " + std::to_string(s) +
                              " exceeds enumeration limit " +
                              std::to_string(kCliqueSplitMaxBlock));

    const bool subset_is_block = (s == r);
    const std::int64_t e = g.edge_count();
    std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
    std::int64_t optimal_subsets = 0;
    std::vector<int> best_pick;
    std::uint64_t ops = 0;
    detail::for_each_subset(n, s, [&](const std::vector<int>& pick) {
        ++ops;
        std::int64_t inside = 0, degsum = 0;
        for (std::size_t a = 0; a < pick.size(); ++a) {
            degsum += g.degree(pick[a]);
            for (std::size_t b = a + 1; b < pick.size(); ++b)
                inside += g.has_edge(pick[a], pick[b]) ? 1 : 0;
        }
        // edges inside the complement of the picked set
        const std::int64_t outside = e + inside - degsum;
        std::int64_t block_edges, rest_edges;
        if (subset_is_block) {
            block_edges = inside;
            rest_edges = outside;
        } else {
            block_edges = outside;
            rest_edges = inside;
        }
        const std::int64_t score =
            variant == SplitVariant::clique ? block_edges + rest_edges : block_edges;
        if (score > best_score) {
            best_score = score;
            optimal_subsets = 1;
            best_pick = pick;
        } else if (score == best_score) {
            ++optimal_subsets;
        }
    });

    const std::int64_t rest = n - r;
    const std::int64_t agreements =
        variant == SplitVariant::clique
            ? 2 * best_score + static_cast<std::int64_t>(r) * rest - e
            : 2 * best_score + static_cast<std::int64_t>(r) * rest +
                  detail::binomial(static_cast<int>(rest), 2) - e;

    DotResult out;
    out.value = 4 * agreements - static_cast<std::int64_t>(n) * (n - 1);
    // Every bijection is determined by which subset hosts the block plus free
    // orderings inside the block and the remainder.
    out.phase = detail::sat_mul(detail::sat_mul(optimal_subsets, detail::sat_factorial(r)),
                                detail::sat_factorial(static_cast<int>(rest)));
    out.ops = ops;

    // Witness from the lexicographically first optimal subset: block hosts get
    // reference labels 0..r-1, the remainder r..n-1, each in ascending order.
    std::uint64_t block_mask = 0;
    for (int v : best_pick) block_mask |= std::uint64_t{1} << v;
    if (!subset_is_block) block_mask = Graph::mask_all(n) & ~block_mask;
    out.witness.assign(static_cast<std::size_t>(n), -1);
    int next_block = 0, next_rest = r;
    for (int v = 0; v < n; ++v)
        out.witness[static_cast<std::size_t>(v)] =
            ((block_mask >> v) & 1) ? next_block++ : next_rest++;
    return out;
}

/// Mixed-order dot against a pattern of at most kBoundedOrderMaxOrder vertices.
inline DotResult dot_bounded_order(const Graph& g, const Graph& h,
                                   const CrossOptions& opt = {}) {
    return dot_cross_order(g, h, opt);
}

// ---- family recognition ----------------------------------------------------

enum class FamilyKind { none, star, clique_split };

/// A structural match of an arbitrary labeled graph against one of the
/// polynomially solvable families, with the relabeling onto the reference
/// (factory) labeling so witnesses can be translated back.
struct FamilyMatch {
    FamilyKind kind = FamilyKind::none;
    int leaf_count = 0;                            // star
    int block_size = 0;                            // clique split
    SplitVariant variant = SplitVariant::coclique; // clique split
    std::vector<int> to_reference;                 // vertex -> reference label

    explicit operator bool() const noexcept { return kind != FamilyKind::none; }
};

inline FamilyMatch recognize_family(const Graph& h) {
    const int n = h.order();
    FamilyMatch m;

    // Star: some center carries every edge and everyone else has degree <= 1.
    for (int c = 0; c < n; ++c) {
        if (h.degree(c) != h.edge_count()) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != c && h.degree(v) > 1) ok = false;
        if (!ok) continue;
        m.kind = FamilyKind::star;
        m.leaf_count = h.degree(c);
        m.to_reference.assign(static_cast<std::size_t>(n), -1);
        m.to_reference[static_cast<std::size_t>(c)] = 0;
        int next_leaf = 1, next_rest = m.leaf_count + 1;
        for (int v = 0; v < n; ++v) {
            if (v == c) continue;
            m.to_reference[static_cast<std::size_t>(v)] =
                h.has_edge(c, v) ? next_leaf++ : next_rest++;
        }
        return m;
    }

    // Coclique split: the non-isolated vertices form a clique.
    {
        std::uint64_t live = 0;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > 0) live |= std::uint64_t{1} << v;
        bool ok = live != 0;
        for (int v = 0; v < n && ok; ++v)
            if ((live >> v) & 1)
                if (h.neighbors(v) != (live & ~(std::uint64_t{1} << v))) ok = false;
        if (ok) {
            m.kind = FamilyKind::clique_split;
            m.variant = SplitVariant::coclique;
            m.block_size = std::popcount(live);
            m.to_reference.assign(static_cast<std::size_t>(n), -1);
            int next_block = 0, next_rest = m.block_size;
            for (int v = 0; v < n; ++v)
                m.to_reference[static_cast<std::size_t>(v)] =
                    ((live >> v) & 1) ? next_block++ : next_rest++;
            return m;
        }
    }

    // Two-clique split: exactly two connected components, each complete.
    {
        std::vector<std::uint64_t> comps;
        std::uint64_t seen = 0;
        for (int v = 0; v < n; ++v) {
            if ((seen >> v) & 1) continue;
            std::uint64_t comp = std::uint64_t{1} << v;
            std::uint64_t frontier = comp;
            while (frontier != 0) {
                const int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint64_t fresh = h.neighbors(u) & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            comps.push_back(comp);
            seen |= comp;
        }
        if (comps.size() == 2) {
            bool complete = true;
            for (const std::uint64_t comp : comps)
                for (std::uint64_t rest = comp; rest != 0 && complete; rest &= rest - 1) {
                    const int v = std::countr_zero(rest);
                    if (h.neighbors(v) != (comp & ~(std::uint64_t{1} << v))) complete = false;
                }
            if (complete) {
                const int s0 = std::popcount(comps[0]);
                const int s1 = std::popcount(comps[1]);
                const std::uint64_t block = s0 <= s1 ? comps[0] : comps[1];
                m.kind = FamilyKind::clique_split;
                m.variant = SplitVariant::clique;
                m.block_size = std::min(s0, s1);
                m.to_reference.assign(static_cast<std::size_t>(n), -1);
                int next_block = 0, next_rest = m.block_size;
                for (int v = 0; v < n; ++v)
                    m.to_reference[static_cast<std::size_t>(v)] =
                        ((block >> v) & 1) ? next_block++ : next_rest++;
                return m;
            }
        }
    }
    return m;
}

/// Dot of g against an arbitrarily labeled member h of a recognized family:
/// solves against the reference labeling and translates the witness back to
/// h's own vertex names.
inline DotResult dot_special(const Graph& g, const Graph& h, const FamilyMatch& match) {
    detail::check_same_order(g, h, "dot_special");
    if (!match) fail(errc::invalid_input, "dot_special: graph is not a recognized family member");
    DotResult ref;
    switch (match.kind) {
        case FamilyKind::star:
            ref = dot_star(g, match.leaf_count);
            break;
        case FamilyKind::clique_split:
            ref = dot_clique_split(g, match.block_size, match.variant);
            break;
        default:
            fail(errc::invalid_input, "dot_special: graph is not a recognized family member");
    }
    std::vector<int> from_reference(match.to_reference.size());
    for (std::size_t v = 0; v < match.to_reference.size(); ++v)
        from_reference[static_cast<std::size_t>(match.to_reference[v])] = static_cast<int>(v);
    for (int& w : ref.witness) w = from_reference[static_cast<std::size_t>(w)];
    return ref;
}

}  // namespace graphdot
