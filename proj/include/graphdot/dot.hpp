#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "spectral.hpp"

namespace graphdot {

/// Largest order accepted by the exhaustive (full enumeration) solver.
inline constexpr int kExhaustiveMaxOrder = 10;
/// Auto dispatch switches from exhaustive to branch-and-bound above this order.
inline constexpr int kAutoExhaustiveCutoff = 8;
/// Orders covered by the orthogonal-pair and quasi-orthogonality catalog scans.
inline constexpr int kOrthogonalScanMaxOrder = 7;
inline constexpr int kQuasiScanMaxOrder = 6;

/// Outcome of a dot-product search.
struct DotResult {
    std::int64_t value = 0;            // maximum trace over all relabelings
    std::optional<std::int64_t> phase; // number of maximizers, when counted
    std::vector<int> witness;          // witness[u] = image of vertex u realizing the value
    std::uint64_t ops = 0;             // assignments examined / search nodes expanded
};

namespace detail {

inline void check_same_order(const Graph& g, const Graph& h, const char* who) {
    if (g.order() != h.order())
        fail(errc::order_mismatch, std::string(who) + ": operand orders differ (" +
                                       std::to_string(g.order()) + " vs " +
                                       std::to_string(h.order()) + ")");
}

/// Number of unordered vertex pairs both graphs classify the same way under the
/// identity relabeling. The trace of any relabeling sigma is 4*agreements - n(n-1).
inline std::int64_t identity_agreements(const Graph& g, const Graph& h) {
    const int n = g.order();
    const std::uint64_t all = Graph::mask_all(n);
    std::int64_t twice = 0;
    for (int i = 0; i < n; ++i)
        twice += std::popcount(~(g.neighbors(i) ^ h.neighbors(i)) & all &
                               ~(std::uint64_t{1} << i));
    return twice / 2;
}

/// Visits every bijection V(g) -> V(h) in lexicographic image order, passing the
/// agreement count and the image vector to the callback.
template <typename Visit>
class BijectionScan {
public:
    BijectionScan(const Graph& g, const Graph& h, Visit visit)
        : g_(g), h_(h), n_(g.order()), image_(static_cast<std::size_t>(n_)), visit_(visit) {
        descend(0, 0, 0);
    }

    std::uint64_t leaves() const noexcept { return leaves_; }

private:
    void descend(int depth, std::uint64_t used, std::int64_t agree) {
        if (depth == n_) {
            ++leaves_;
            visit_(agree, image_);
            return;
        }
        std::uint64_t required = 0;
        for (int u = 0; u < depth; ++u)
            if (g_.has_edge(u, depth))
                required |= std::uint64_t{1} << image_[static_cast<std::size_t>(u)];
        for (int w = 0; w < n_; ++w) {
            if ((used >> w) & 1) continue;
            const std::int64_t gain =
                std::popcount(~(h_.neighbors(w) ^ required) & used);
            image_[static_cast<std::size_t>(depth)] = w;
            descend(depth + 1, used | (std::uint64_t{1} << w), agree + gain);
        }
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    std::vector<int> image_;
    Visit visit_;
    std::uint64_t leaves_ = 0;
};

struct AgreementRange {
    std::int64_t min = 0;
    std::int64_t max = 0;
};

/// Smallest and largest agreement count over all bijections, in one sweep.
inline AgreementRange agreement_range(const Graph& g, const Graph& h) {
    AgreementRange r{std::numeric_limits<std::int64_t>::max(),
                     std::numeric_limits<std::int64_t>::min()};
    BijectionScan scan(g, h, [&](std::int64_t a, const std::vector<int>&) {
        r.min = std::min(r.min, a);
        r.max = std::max(r.max, a);
    });
    return r;
}

}  // namespace detail

/// Full enumeration of all n! relabelings. Exact value, exact phase, and the
/// lexicographically smallest witness. Reference solver for everything else.
inline DotResult dot_exhaustive(const Graph& g, const Graph& h, bool count_phase = true) {
    detail::check_same_order(g, h, "dot_exhaustive");
    const int n = g.order();
    if (n > kExhaustiveMaxOrder)
        fail(errc::guard, "dot_exhaustive: order " + std::to_string(n) +
                              " exceeds enumeration limit " +
                              std::to_string(kExhaustiveMaxOrder) + "; use dot_bnb");
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::int64_t count = 0;
    std::vector<int> witness;
    detail::BijectionScan scan(g, h, [&](std::int64_t a, const std::vector<int>& image) {
        if (a > best) {
            best = a;
            count = 1;
            witness = image;  // first hit in lex order = smallest witness
        } else if (a == best) {
            ++count;
        }
    });
    DotResult r;
    r.value = 4 * best - static_cast<std::int64_t>(n) * (n - 1);
    if (count_phase) r.phase = count;
    r.witness = std::move(witness);
    r.ops = scan.leaves();
    return r;
}

struct BnbOptions {
    int max_order = 16;        // refuse larger inputs; raise deliberately if needed
    bool count_phase = true;   // exact maximizer count (forbids equal-bound pruning)
};

namespace detail {

/// Branch-and-bound maximizer of the agreement count. Vertices of g are
/// assigned in descending-degree order; a node is cut only when its optimistic
/// bound is strictly below the incumbent, so every maximizer reaches a leaf and
/// the phase count stays exact. With count_phase off, equal-bound cuts are
/// allowed: the value is still exact but the witness is merely some maximizer.
class BnbSearch {
public:
    BnbSearch(const Graph& g, const Graph& h, const BnbOptions& opt)
        : g_(g),
          h_(h),
          n_(g.order()),
          strict_(opt.count_phase),
          all_(Graph::mask_all(n_)),
          image_(static_cast<std::size_t>(n_), -1),
          required_(static_cast<std::size_t>(n_), 0) {
        order_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) order_[static_cast<std::size_t>(i)] = i;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g_.degree(a) != g_.degree(b) ? g_.degree(a) > g_.degree(b) : a < b;
        });
        // Global cap on the agreement count from the eigenvalue bound on the trace.
        const double t = spectral_trace_bound(g_, h_) + 1e-6;
        cap_ = static_cast<std::int64_t>(
            std::floor((t + static_cast<double>(n_) * (n_ - 1)) / 4.0));
        descend(0, 0, 0);
    }

    std::int64_t best() const noexcept { return best_; }
    std::int64_t count() const noexcept { return count_; }
    const std::vector<int>& witness() const noexcept { return witness_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::int64_t bound_from(int depth, std::uint64_t used, std::int64_t agree) const {
        const std::uint64_t free = all_ & ~used;
        // Assigned-to-unassigned pairs: each pending vertex independently takes
        // its best match among the free images (injectivity relaxed).
        std::int64_t cross = 0;
        for (int d = depth; d < n_; ++d) {
            const int v = order_[static_cast<std::size_t>(d)];
            std::int64_t vbest = 0;
            for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                vbest = std::max<std::int64_t>(
                    vbest, std::popcount(~(h_.neighbors(w) ^
                                           required_[static_cast<std::size_t>(v)]) &
                                         used));
            }
            cross += vbest;
        }
        // Pairs inside the unassigned block: a vertex with residual degree d can
        // agree with its image on at most r-1-|d - d'| of the r-1 other pairs, so
        // matching sorted residual degree sequences bounds the block.
        const int r = n_ - depth;
        std::vector<int> dg, dh;
        dg.reserve(static_cast<std::size_t>(r));
        dh.reserve(static_cast<std::size_t>(r));
        std::uint64_t pending = 0;
        for (int d = depth; d < n_; ++d)
            pending |= std::uint64_t{1} << order_[static_cast<std::size_t>(d)];
        for (int d = depth; d < n_; ++d)
            dg.push_back(std::popcount(
                g_.neighbors(order_[static_cast<std::size_t>(d)]) & pending));
        for (std::uint64_t rest = free; rest != 0; rest &= rest - 1)
            dh.push_back(std::popcount(h_.neighbors(std::countr_zero(rest)) & free));
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        std::int64_t mismatch = 0;
        for (int i = 0; i < r; ++i)
            mismatch += std::abs(dg[static_cast<std::size_t>(i)] - dh[static_cast<std::size_t>(i)]);
        const std::int64_t inner = (static_cast<std::int64_t>(r) * (r - 1) - mismatch) / 2;
        return std::min(agree + cross + inner, cap_);
    }

    void descend(int depth, std::uint64_t used, std::int64_t agree) {
        ++nodes_;
        if (depth == n_) {
            if (agree > best_) {
                best_ = agree;
                count_ = 1;
                witness_ = image_;
            } else if (agree == best_) {
                ++count_;
                if (image_ < witness_) witness_ = image_;
            }
            return;
        }
        if (best_ >= 0) {
            const std::int64_t bound = bound_from(depth, used, agree);
            if (bound < best_ || (!strict_ && bound == best_)) return;
        }
        const int v = order_[static_cast<std::size_t>(depth)];
        struct Cand {
            std::int64_t gain;
            int w;
        };
        std::vector<Cand> cands;
        for (std::uint64_t rest = all_ & ~used; rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            cands.push_back(
                {std::popcount(~(h_.neighbors(w) ^ required_[static_cast<std::size_t>(v)]) & used),
                 w});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.gain != b.gain ? a.gain > b.gain : a.w < b.w;
        });
        for (const Cand& c : cands) {
            image_[static_cast<std::size_t>(v)] = c.w;
            const std::uint64_t vbit = std::uint64_t{1} << c.w;
            for (int d = depth + 1; d < n_; ++d) {
                const int u = order_[static_cast<std::size_t>(d)];
                if (g_.has_edge(v, u)) required_[static_cast<std::size_t>(u)] |= vbit;
            }
            descend(depth + 1, used | vbit, agree + c.gain);
            for (int d = depth + 1; d < n_; ++d) {
                const int u = order_[static_cast<std::size_t>(d)];
                if (g_.has_edge(v, u)) required_[static_cast<std::size_t>(u)] &= ~vbit;
            }
            image_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    bool strict_;
    std::uint64_t all_;
    std::int64_t cap_ = 0;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<std::uint64_t> required_;
    std::int64_t best_ = -1;
    std::int64_t count_ = 0;
    std::vector<int> witness_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Branch-and-bound solver: exact value for orders beyond exhaustive reach.
inline DotResult dot_bnb(const Graph& g, const Graph& h, const BnbOptions& opt = {}) {
    detail::check_same_order(g, h, "dot_bnb");
    const int n = g.order();
    if (n > opt.max_order)
        fail(errc::guard, "dot_bnb: order " + std::to_string(n) + " exceeds configured limit " +
                              std::to_string(opt.max_order));
    detail::BnbSearch search(g, h, opt);
    DotResult r;
    r.value = 4 * search.best() - static_cast<std::int64_t>(n) * (n - 1);
    if (opt.count_phase) r.phase = search.count();
    r.witness = search.witness();
    r.ops = search.nodes();
    return r;
}

enum class Solver { automatic, exhaustive, branch_bound };

/// Same-order dot product: max_P tr(A_g P A_h P^T) with +1/-1/0 sign matrices.
inline DotResult dot(const Graph& g, const Graph& h, Solver solver = Solver::automatic,
                     bool count_phase = true) {
    detail::check_same_order(g, h, "dot");
    switch (solver) {
        case Solver::exhaustive:
            return dot_exhaustive(g, h, count_phase);
        case Solver::branch_bound:
            return dot_bnb(g, h, BnbOptions{.max_order = 16, .count_phase = count_phase});
        case Solver::automatic:
        default:
            if (g.order() <= kAutoExhaustiveCutoff) return dot_exhaustive(g, h, count_phase);
            return dot_bnb(g, h, BnbOptions{.max_order = 16, .count_phase = count_phase});
    }
}

/// Number of relabelings attaining the maximum trace.
inline std::int64_t phase(const Graph& g, const Graph& h, Solver solver = Solver::automatic) {
    return *dot(g, h, solver, true).phase;
}

/// Squared norm of any n-vertex graph: the diagonal dot product n(n-1).
inline std::int64_t norm_squared(const Graph& g) {
    return static_cast<std::int64_t>(g.order()) * (g.order() - 1);
}

inline double norm(const Graph& g) { return std::sqrt(static_cast<double>(norm_squared(g))); }

/// dot(g,h) / (|g| |h|) as an exact rational; equals 1/1 iff g and h are isomorphic.
inline Rational norm_dot(const Graph& g, const Graph& h, Solver solver = Solver::automatic) {
    detail::check_same_order(g, h, "norm_dot");
    if (g.order() < 2)
        fail(errc::invalid_input, "norm_dot: undefined on one-vertex graphs (zero norm)");
    return Rational(dot(g, h, solver, false).value, norm_squared(g));
}

/// Squared embedding distance 2n(n-1) - 2 dot(g,h); always a multiple of 8.
inline std::int64_t metric_distance(const Graph& g, const Graph& h,
                                    Solver solver = Solver::automatic) {
    detail::check_same_order(g, h, "metric_distance");
    return 2 * norm_squared(g) - 2 * dot(g, h, solver, false).value;
}

/// Minimum of the trace over all relabelings; the complement flips every
/// agreement, so this is -dot(g, complement(h)).
inline std::int64_t min_trace(const Graph& g, const Graph& h,
                              Solver solver = Solver::automatic) {
    detail::check_same_order(g, h, "min_trace");
    return -dot(g, h.complement(), solver, false).value;
}

struct ScaledDotResult {
    double value = 0.0;
    std::vector<int> witness;  // relabeling attaining the extremum
};

/// max_P tr((r A_g) P A_h P^T): positive r scales the maximum, negative r turns
/// the problem into r times the minimum. r = 0 is rejected (degenerate matrix).
inline ScaledDotResult dot_scaled(const Graph& g, const Graph& h, double r,
                                  Solver solver = Solver::automatic) {
    detail::check_same_order(g, h, "dot_scaled");
    if (r == 0.0) fail(errc::invalid_input, "dot_scaled: weight r = 0 erases all structure");
    if (r > 0.0) {
        DotResult d = dot(g, h, solver, false);
        return {r * static_cast<double>(d.value), std::move(d.witness)};
    }
    DotResult d = dot(g, h.complement(), solver, false);  // maximizer of -trace
    return {r * static_cast<double>(-d.value), std::move(d.witness)};
}

/// True when every relabeling has trace zero: dot(g,h) and dot(g,~h) both vanish.
inline bool is_orthogonal(const Graph& g, const Graph& h, Solver solver = Solver::automatic) {
    detail::check_same_order(g, h, "is_orthogonal");
    if (dot(g, h, solver, false).value != 0) return false;
    return dot(g, h.complement(), solver, false).value == 0;
}

// ---- catalog scans --------------------------------------------------------

struct OrthogonalPairsReport {
    int order = 0;
    std::int64_t class_count = 0;
    std::vector<std::pair<int, int>> pairs;  // catalog indices, first <= second
    std::uint64_t pairs_scanned = 0;
    std::uint64_t full_checks = 0;  // pairs that survived the identity-trace filter
};

/// Finds all orthogonal pairs of isomorphism classes on n vertices. Any single
/// relabeling with nonzero trace certifies non-orthogonality, so each pair is
/// first screened with the identity relabeling before the full sweep.
inline OrthogonalPairsReport orthogonal_pairs_scan(int n) {
    // Order 1 is excluded: with zero norm every trace vanishes and the notion
    // of orthogonality degenerates, exactly as for the normalized dot.
    if (n < 2 || n > kOrthogonalScanMaxOrder)
        fail(errc::guard, "orthogonal_pairs_scan: order " + std::to_string(n) +
                              " outside supported range 2.." +
                              std::to_string(kOrthogonalScanMaxOrder));
    const auto& codes = enumerate_iso_classes(n);
    const std::int64_t k = static_cast<std::int64_t>(codes.size());
    std::vector<Graph> reps;
    reps.reserve(codes.size());
    for (std::uint64_t c : codes) reps.push_back(Graph::from_edge_code(n, c));

    const std::int64_t m = static_cast<std::int64_t>(n) * (n - 1);
    const std::int64_t total = k * (k + 1) / 2;
    std::vector<std::uint8_t> orthogonal(static_cast<std::size_t>(total), 0);
    std::vector<std::uint8_t> checked(static_cast<std::size_t>(total), 0);
    parallel_for(0, total, [&](std::int64_t t) {
        // unrank t -> (i, j) with i <= j, rows of decreasing length
        std::int64_t i = 0, rem = t;
        while (rem >= k - i) rem -= k - i, ++i;
        const std::int64_t j = i + rem;
        const Graph& a = reps[static_cast<std::size_t>(i)];
        const Graph& b = reps[static_cast<std::size_t>(j)];
        if (4 * detail::identity_agreements(a, b) - m != 0) return;
        checked[static_cast<std::size_t>(t)] = 1;
        const auto range = detail::agreement_range(a, b);
        // all traces zero <=> min and max agreement both equal n(n-1)/4
        orthogonal[static_cast<std::size_t>(t)] =
            (4 * range.min == m && 4 * range.max == m) ? 1 : 0;
    });

    OrthogonalPairsReport rep;
    rep.order = n;
    rep.class_count = k;
    rep.pairs_scanned = static_cast<std::uint64_t>(total);
    for (std::int64_t t = 0; t < total; ++t) {
        rep.full_checks += checked[static_cast<std::size_t>(t)];
        if (orthogonal[static_cast<std::size_t>(t)]) {
            std::int64_t i = 0, rem = t;
            while (rem >= k - i) rem -= k - i, ++i;
            rep.pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + rem));
        }
    }
    return rep;
}

struct QuasiOrthogonalityReport {
    int order = 0;
    std::int64_t class_count = 0;
    std::int64_t min_value = 0;  // smallest max(|dot(g,h)|, |dot(g,~h)|) over class pairs
    std::vector<std::pair<int, int>> minimizing_pairs;
    std::uint64_t pairs_scanned = 0;
};

/// How close to orthogonal distinct classes on n vertices can get: minimizes
/// max(|dot(g,h)|, |dot(g, complement(h))|) over all unordered pairs of
/// distinct isomorphism classes.
inline QuasiOrthogonalityReport quasi_orthogonality_scan(int n) {
    if (n < 2 || n > kQuasiScanMaxOrder)
        fail(errc::guard, "quasi_orthogonality_scan: order " + std::to_string(n) +
                              " outside supported range 2.." +
                              std::to_string(kQuasiScanMaxOrder));
    const auto& codes = enumerate_iso_classes(n);
    const std::int64_t k = static_cast<std::int64_t>(codes.size());
    std::vector<Graph> reps;
    reps.reserve(codes.size());
    for (std::uint64_t c : codes) reps.push_back(Graph::from_edge_code(n, c));

    const std::int64_t m = static_cast<std::int64_t>(n) * (n - 1);
    const std::int64_t total = k * (k - 1) / 2;
    std::vector<std::int64_t> score(static_cast<std::size_t>(total), 0);
    parallel_for(0, total, [&](std::int64_t t) {
        std::int64_t i = 0, rem = t;
        while (rem >= k - 1 - i) rem -= k - 1 - i, ++i;
        const std::int64_t j = i + 1 + rem;
        // one sweep gives both extremes: dot = 4*max - m, dot with complement = m - 4*min
        const auto range = detail::agreement_range(reps[static_cast<std::size_t>(i)],
                                                   reps[static_cast<std::size_t>(j)]);
        score[static_cast<std::size_t>(t)] =
            std::max(std::abs(4 * range.max - m), std::abs(m - 4 * range.min));
    });

    QuasiOrthogonalityReport rep;
    rep.order = n;
    rep.class_count = k;
    rep.pairs_scanned = static_cast<std::uint64_t>(total);
    rep.min_value = *std::min_element(score.begin(), score.end());
    for (std::int64_t t = 0; t < total; ++t) {
        if (score[static_cast<std::size_t>(t)] != rep.min_value) continue;
        std::int64_t i = 0, rem = t;
        while (rem >= k - 1 - i) rem -= k - 1 - i, ++i;
        rep.minimizing_pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1 + rem));
    }
    return rep;
}

}  // namespace graphdot
