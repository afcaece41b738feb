#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace graphdot {

/// Default cap on the pattern order for the mixed-order dot product.
inline constexpr int kBoundedOrderMaxOrder = 5;
/// Default cap on the host order for exhaustive embedding enumeration.
inline constexpr int kEmbedHostMaxOrder = 16;

namespace detail {

enum class EmbedMode {
    full_max,          // visit every injective map, track the agreement maximum
    embeddings_count,  // count only fully agreeing maps (induced embeddings)
    embeddings_any,    // stop at the first induced embedding
};

/// Enumerates injective maps from the pattern h into the host g in
/// lexicographic image order, scoring each by the number of vertex pairs of h
/// classified the same way by both graphs.
class EmbedSearch {
public:
    EmbedSearch(const Graph& host, const Graph& pattern, EmbedMode mode)
        : g_(host),
          h_(pattern),
          k_(pattern.order()),
          mode_(mode),
          image_(static_cast<std::size_t>(k_), -1) {
        descend(0, 0, 0);
    }

    std::int64_t best() const noexcept { return best_; }
    std::int64_t count() const noexcept { return count_; }
    const std::vector<int>& witness() const noexcept { return witness_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool descend(int depth, std::uint64_t used, std::int64_t agree) {
        ++nodes_;
        if (depth == k_) {
            if (agree > best_) {
                best_ = agree;
                count_ = 1;
                witness_ = image_;  // lex order: first hit is the smallest witness
            } else if (agree == best_) {
                ++count_;
            }
            return mode_ == EmbedMode::embeddings_any;
        }
        std::uint64_t required = 0;
        for (int u = 0; u < depth; ++u)
            if (h_.has_edge(u, depth))
                required |= std::uint64_t{1} << image_[static_cast<std::size_t>(u)];
        for (int w = 0; w < g_.order(); ++w) {
            if ((used >> w) & 1) continue;
            const std::int64_t gain = std::popcount(~(g_.neighbors(w) ^ required) & used);
            if (mode_ != EmbedMode::full_max && gain != depth) continue;  // a pair disagrees
            image_[static_cast<std::size_t>(depth)] = w;
            if (descend(depth + 1, used | (std::uint64_t{1} << w), agree + gain)) return true;
            image_[static_cast<std::size_t>(depth)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int k_;
    EmbedMode mode_;
    std::vector<int> image_;
    std::int64_t best_ = -1;
    std::int64_t count_ = 0;
    std::vector<int> witness_;
    std::uint64_t nodes_ = 0;
};

inline void check_embed_orders(const Graph& host, const Graph& pattern, const char* who) {
    if (pattern.order() > host.order())
        fail(errc::order_mismatch, std::string(who) + ": pattern order " +
                                       std::to_string(pattern.order()) +
                                       " exceeds host order " + std::to_string(host.order()));
}

}  // namespace detail

struct CrossOptions {
    int max_sub_order = kBoundedOrderMaxOrder;
    int max_host_order = kEmbedHostMaxOrder;
    bool count_phase = true;
};

/// Mixed-order dot product of a host g with a strictly smaller pattern h on k
/// vertices: the maximum over injective maps V(h) -> V(g) of 4*agreements -
/// k(k-1). Capped at k(k-1), attained exactly when h embeds as an induced
/// subgraph. witness[u] is the host vertex carrying pattern vertex u; phase
/// counts injective maps, so symmetric patterns count once per automorphism.
inline DotResult dot_cross_order(const Graph& g, const Graph& h,
                                 const CrossOptions& opt = {}) {
    if (h.order() >= g.order())
        fail(errc::order_mismatch,
             "dot_cross_order: pattern order " + std::to_string(h.order()) +
                 " must be smaller than host order " + std::to_string(g.order()) +
                 " (equal orders take the same-order dot)");
    if (h.order() > opt.max_sub_order)
        fail(errc::guard, "dot_cross_order: pattern order " + std::to_string(h.order()) +
                              " exceeds configured limit " + std::to_string(opt.max_sub_order));
    if (g.order() > opt.max_host_order)
        fail(errc::guard, "dot_cross_order: host order " + std::to_string(g.order()) +
                              " exceeds configured limit " + std::to_string(opt.max_host_order));
    detail::EmbedSearch search(g, h, detail::EmbedMode::full_max);
    const std::int64_t k = h.order();
    DotResult r;
    r.value = 4 * search.best() - k * (k - 1);
    if (opt.count_phase) r.phase = search.count();
    r.witness = search.witness();
    r.ops = search.nodes();
    return r;
}

/// Whether h occurs in g as an induced subgraph (order-k pattern, any host order
/// up to the library cap). Equivalent to the mixed-order dot reaching k(k-1).
inline bool contains_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order()) return false;
    detail::EmbedSearch search(g, h, detail::EmbedMode::embeddings_any);
    return search.count() > 0;
}

/// Number of distinct induced copies of h in g: fully agreeing injective maps
/// divided by |Aut(h)|, which counts each vertex subset exactly once.
inline std::int64_t count_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order()) return 0;
    if (g.order() > kEmbedHostMaxOrder)
        fail(errc::guard, "count_induced: host order " + std::to_string(g.order()) +
                              " exceeds enumeration limit " +
                              std::to_string(kEmbedHostMaxOrder));
    detail::EmbedSearch search(g, h, detail::EmbedMode::embeddings_count);
    return search.count() / automorphism_count(h);
}

}  // namespace graphdot
