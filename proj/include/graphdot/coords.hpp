#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "cross_order.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "special.hpp"

namespace graphdot {

/// Largest catalog order accepted by the greedy basis search.
inline constexpr int kBasisSearchMaxOrder = 6;
/// Largest catalog order accepted by basis verification.
inline constexpr int kBasisVerifyMaxOrder = 7;

enum class SolverKind { exhaustive, branch_bound, special_family, bounded_order };

inline const char* solver_kind_name(SolverKind k) {
    switch (k) {
        case SolverKind::exhaustive: return "exhaustive";
        case SolverKind::branch_bound: return "branch-bound";
        case SolverKind::special_family: return "special-family";
        case SolverKind::bounded_order: return "bounded-order";
    }
    return "?";
}

/// Dispatch thresholds for dot_any: full enumeration, then branch-and-bound,
/// then recognized polynomial families; smaller operands go through the
/// mixed-order solver.
struct SolvePolicy {
    int exhaustive_max = kAutoExhaustiveCutoff;
    int bnb_max = 16;
    int bounded_max = kBoundedOrderMaxOrder;
    bool count_phase = true;
};

struct DotRecord {
    DotResult result;
    SolverKind solver = SolverKind::exhaustive;
};

/// Dot of a host g against a basis element h of the same or smaller order,
/// picking the cheapest applicable solver under the policy.
inline DotRecord dot_any(const Graph& g, const Graph& h, const SolvePolicy& policy = {}) {
    if (h.order() > g.order())
        fail(errc::order_mismatch, "dot_any: element order " + std::to_string(h.order()) +
                                       " exceeds host order " + std::to_string(g.order()));
    if (h.order() < g.order()) {
        CrossOptions opt;
        opt.max_sub_order = policy.bounded_max;
        opt.max_host_order = policy.bnb_max;
        opt.count_phase = policy.count_phase;
        return {dot_cross_order(g, h, opt), SolverKind::bounded_order};
    }
    const int n = g.order();
    if (n <= policy.exhaustive_max)
        return {dot_exhaustive(g, h, policy.count_phase), SolverKind::exhaustive};
    if (n <= policy.bnb_max) {
        BnbOptions opt;
        opt.max_order = policy.bnb_max;
        opt.count_phase = policy.count_phase;
        return {dot_bnb(g, h, opt), SolverKind::branch_bound};
    }
    if (const FamilyMatch m = recognize_family(h))
        return {dot_special(g, h, m), SolverKind::special_family};
    if (const FamilyMatch m = recognize_family(g)) {
        DotResult swapped = dot_special(h, g, m);
        std::vector<int> inverted(swapped.witness.size());
        for (std::size_t x = 0; x < swapped.witness.size(); ++x)
            inverted[static_cast<std::size_t>(swapped.witness[x])] = static_cast<int>(x);
        swapped.witness = std::move(inverted);
        return {std::move(swapped), SolverKind::special_family};
    }
    fail(errc::guard, "dot_any: order " + std::to_string(n) +
                          " exceeds configured solvers and neither operand is a "
                          "recognized polynomial family");
}

// ---- coordinates -----------------------------------------------------------

struct CoordinateEntry {
    std::int64_t value = 0;
    std::optional<std::int64_t> phase;
    SolverKind solver = SolverKind::exhaustive;
};

struct Coordinates {
    std::vector<CoordinateEntry> entries;
};

/// Rejects empty bases and bases with two isomorphic (hence redundant) elements.
inline void validate_basis(const std::vector<Graph>& basis) {
    if (basis.empty()) fail(errc::invalid_input, "basis: must contain at least one element");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i].order() == basis[j].order() && is_isomorphic(basis[i], basis[j]))
                fail(errc::invalid_input, "basis: elements " + std::to_string(i) + " and " +
                                              std::to_string(j) + " are isomorphic");
}

/// The projection of g onto each basis element: value, maximizer count, and the
/// solver that produced them, in basis order.
inline Coordinates coordinates(const Graph& g, const std::vector<Graph>& basis,
                               const SolvePolicy& policy = {}) {
    validate_basis(basis);
    Coordinates c;
    c.entries.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        try {
            const DotRecord rec = dot_any(g, basis[i], policy);
            c.entries[i] = {rec.result.value, rec.result.phase, rec.solver};
        } catch (const error& e) {
            fail(e.kind(), "coordinates: basis element " + std::to_string(i) + ": " + e.what());
        }
    }
    return c;
}

namespace detail {

/// Comparable fingerprint of a coordinate vector. Phase -1 encodes "dropped"
/// (values-only comparison) or "not computed"; real counts are always >= 1.
inline std::vector<std::int64_t> coordinate_key(const Coordinates& c, bool values_only) {
    std::vector<std::int64_t> key;
    key.reserve(c.entries.size() * 2);
    for (const CoordinateEntry& e : c.entries) {
        key.push_back(e.value);
        key.push_back(values_only ? -1 : e.phase.value_or(-1));
    }
    return key;
}

}  // namespace detail

// ---- basis verification ------------------------------------------------------

struct BasisCheckReport {
    int order = 0;
    std::int64_t class_count = 0;
    bool values_only = false;
    bool injective = false;
    std::int64_t distinct_keys = 0;
    std::vector<std::pair<int, int>> collisions;  // catalog index pairs with equal keys
};

/// Checks whether basis coordinates separate every isomorphism class on n
/// vertices. With values_only the maximizer counts are ignored, otherwise the
/// (value, phase) pairs are compared.
inline BasisCheckReport verify_basis(const std::vector<Graph>& basis, int n, bool values_only,
                                     const SolvePolicy& policy = {}) {
    if (n < 1 || n > kBasisVerifyMaxOrder)
        fail(errc::guard, "verify_basis: order " + std::to_string(n) +
                              " outside supported range 1.." +
                              std::to_string(kBasisVerifyMaxOrder));
    validate_basis(basis);
    for (const Graph& b : basis)
        if (b.order() > n)
            fail(errc::order_mismatch,
                 "verify_basis: basis element order exceeds catalog order " + std::to_string(n));

    const auto& codes = enumerate_iso_classes(n);
    std::vector<Graph> reps;
    reps.reserve(codes.size());
    for (std::uint64_t c : codes) reps.push_back(Graph::from_edge_code(n, c));

    std::vector<std::vector<std::int64_t>> keys(reps.size());
    parallel_for(0, static_cast<std::int64_t>(reps.size()), [&](std::int64_t i) {
        keys[static_cast<std::size_t>(i)] = detail::coordinate_key(
            coordinates(reps[static_cast<std::size_t>(i)], basis, policy), values_only);
    });

    BasisCheckReport rep;
    rep.order = n;
    rep.class_count = static_cast<std::int64_t>(reps.size());
    rep.values_only = values_only;

    std::vector<int> idx(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] != keys[static_cast<std::size_t>(b)]
                   ? keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]
                   : a < b;
    });
    for (std::size_t s = 0; s < idx.size();) {
        std::size_t e = s;
        while (e < idx.size() &&
               keys[static_cast<std::size_t>(idx[e])] == keys[static_cast<std::size_t>(idx[s])])
            ++e;
        ++rep.distinct_keys;
        for (std::size_t a = s; a < e; ++a)
            for (std::size_t b = a + 1; b < e; ++b)
                rep.collisions.emplace_back(std::min(idx[a], idx[b]), std::max(idx[a], idx[b]));
        s = e;
    }
    std::sort(rep.collisions.begin(), rep.collisions.end());
    rep.injective = rep.collisions.empty();
    return rep;
}

// ---- clustering --------------------------------------------------------------

struct ClusterPartition {
    std::vector<std::vector<int>> clusters;  // input indices, ordered by first appearance
    std::vector<int> assignment;             // input index -> cluster id
};

/// Groups input graphs by exact coordinate key; isomorphic inputs always share a
/// cluster because the coordinates are relabeling-invariant.
inline ClusterPartition cluster(const std::vector<Graph>& items, const std::vector<Graph>& basis,
                                bool values_only = false, const SolvePolicy& policy = {}) {
    validate_basis(basis);
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i].order() != items[0].order())
            fail(errc::order_mismatch,
                 "cluster: item " + std::to_string(i) + " has order " +
                     std::to_string(items[i].order()) + " but item 0 has order " +
                     std::to_string(items[0].order()));
    std::vector<std::vector<std::int64_t>> keys(items.size());
    parallel_for(0, static_cast<std::int64_t>(items.size()), [&](std::int64_t i) {
        keys[static_cast<std::size_t>(i)] = detail::coordinate_key(
            coordinates(items[static_cast<std::size_t>(i)], basis, policy), values_only);
    });
    ClusterPartition part;
    part.assignment.resize(items.size(), -1);
    std::map<std::vector<std::int64_t>, int> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto [it, fresh] =
            seen.emplace(keys[i], static_cast<int>(part.clusters.size()));
        if (fresh) part.clusters.emplace_back();
        part.clusters[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
        part.assignment[i] = it->second;
    }
    return part;
}

// ---- induced-subgraph census ---------------------------------------------------

struct CensusReport {
    int sub_order = 0;
    std::vector<std::int64_t> counts;  // catalog order of the k-vertex classes
};

/// Counts induced copies of every k-vertex isomorphism class inside g; the
/// counts sum to C(|g|, k) since each k-subset induces exactly one class.
inline CensusReport subgraph_census(const Graph& g, int k) {
    if (k < 1 || k > kBoundedOrderMaxOrder)
        fail(errc::guard, "subgraph_census: sub-order " + std::to_string(k) +
                              " outside supported range 1.." +
                              std::to_string(kBoundedOrderMaxOrder));
    if (k > g.order())
        fail(errc::guard, "subgraph_census: sub-order " + std::to_string(k) +
                              " exceeds graph order " + std::to_string(g.order()));
    const auto& codes = enumerate_iso_classes(k);
    CensusReport rep;
    rep.sub_order = k;
    rep.counts.resize(codes.size(), 0);
    parallel_for(0, static_cast<std::int64_t>(codes.size()), [&](std::int64_t i) {
        rep.counts[static_cast<std::size_t>(i)] =
            count_induced(g, Graph::from_edge_code(k, codes[static_cast<std::size_t>(i)]));
    });
    return rep;
}

// ---- similarity ranking ---------------------------------------------------------

struct RankedMatch {
    int index = 0;    // position in the candidate list
    Rational score;   // normalized dot with the query
};

/// Orders same-order candidates by normalized dot with the query, best first;
/// ties keep their input order. A score of 1/1 pinpoints an isomorph.
inline std::vector<RankedMatch> similarity_rank(const Graph& g,
                                                const std::vector<Graph>& candidates,
                                                const SolvePolicy& policy = {}) {
    if (candidates.empty())
        fail(errc::invalid_input, "similarity_rank: need at least one candidate");
    std::vector<RankedMatch> out(candidates.size());
    parallel_for(0, static_cast<std::int64_t>(candidates.size()), [&](std::int64_t i) {
        SolvePolicy p = policy;
        p.count_phase = false;
        detail::check_same_order(g, candidates[static_cast<std::size_t>(i)], "similarity_rank");
        const DotRecord rec = dot_any(g, candidates[static_cast<std::size_t>(i)], p);
        out[static_cast<std::size_t>(i)] = {static_cast<int>(i),
                                            Rational(rec.result.value, norm_squared(g))};
    });
    std::stable_sort(out.begin(), out.end(), [](const RankedMatch& a, const RankedMatch& b) {
        return b.score < a.score;
    });
    return out;
}

// ---- greedy basis search -------------------------------------------------------

struct BasisSearchReport {
    int order = 0;
    bool values_only = false;
    std::vector<int> chosen;                          // catalog indices, in pick order
    std::vector<std::int64_t> colliding_pairs_after;  // collisions left after each pick
    bool injective = false;
};

/// Greedy forward selection of same-order basis elements from the full catalog:
/// each round adds the candidate splitting the most colliding class pairs, until
/// the coordinates are injective or the size cap is hit.
inline BasisSearchReport search_basis(int n, int max_size, bool values_only = false) {
    if (n < 2 || n > kBasisSearchMaxOrder)
        fail(errc::guard, "search_basis: order " + std::to_string(n) +
                              " outside supported range 2.." +
                              std::to_string(kBasisSearchMaxOrder));
    if (max_size < 1) fail(errc::invalid_input, "search_basis: size cap must be positive");
    const auto& codes = enumerate_iso_classes(n);
    const std::int64_t k = static_cast<std::int64_t>(codes.size());
    std::vector<Graph> reps;
    reps.reserve(codes.size());
    for (std::uint64_t c : codes) reps.push_back(Graph::from_edge_code(n, c));

    // Full pairwise value/phase tables (symmetric in both arguments).
    std::vector<std::int64_t> value(static_cast<std::size_t>(k * k));
    std::vector<std::int64_t> phase_tab(static_cast<std::size_t>(k * k));
    const std::int64_t total = k * (k + 1) / 2;
    parallel_for(0, total, [&](std::int64_t t) {
        std::int64_t i = 0, rem = t;
        while (rem >= k - i) rem -= k - i, ++i;
        const std::int64_t j = i + rem;
        const DotResult d = dot_exhaustive(reps[static_cast<std::size_t>(i)],
                                           reps[static_cast<std::size_t>(j)], !values_only);
        value[static_cast<std::size_t>(i * k + j)] = d.value;
        value[static_cast<std::size_t>(j * k + i)] = d.value;
        const std::int64_t p = values_only ? -1 : *d.phase;
        phase_tab[static_cast<std::size_t>(i * k + j)] = p;
        phase_tab[static_cast<std::size_t>(j * k + i)] = p;
    });

    // Classes start in one group; every pick refines the grouping.
    std::vector<int> group(static_cast<std::size_t>(k), 0);
    int group_count = 1;
    auto collisions_of = [&](const std::vector<int>& grp, int groups) {
        std::vector<std::int64_t> size(static_cast<std::size_t>(groups), 0);
        for (int gid : grp) ++size[static_cast<std::size_t>(gid)];
        std::int64_t pairs = 0;
        for (std::int64_t s : size) pairs += s * (s - 1) / 2;
        return pairs;
    };
    auto refine = [&](const std::vector<int>& grp, int cand, std::vector<int>* out) {
        std::map<std::tuple<int, std::int64_t, std::int64_t>, int> fresh;
        std::vector<int> next(static_cast<std::size_t>(k));
        for (std::int64_t i = 0; i < k; ++i) {
            const auto key = std::make_tuple(grp[static_cast<std::size_t>(i)],
                                             value[static_cast<std::size_t>(i * k + cand)],
                                             phase_tab[static_cast<std::size_t>(i * k + cand)]);
            next[static_cast<std::size_t>(i)] =
                fresh.emplace(key, static_cast<int>(fresh.size())).first->second;
        }
        if (out) *out = std::move(next);
        return static_cast<int>(fresh.size());
    };

    BasisSearchReport rep;
    rep.order = n;
    rep.values_only = values_only;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    std::int64_t current = collisions_of(group, group_count);
    while (current > 0 && static_cast<int>(rep.chosen.size()) < max_size) {
        std::int64_t best_pairs = -1;
        int best_cand = -1;
        for (int cand = 0; cand < k; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            std::vector<int> next;
            const int groups = refine(group, cand, &next);
            const std::int64_t pairs = collisions_of(next, groups);
            if (best_pairs < 0 || pairs < best_pairs) {
                best_pairs = pairs;
                best_cand = cand;
            }
        }
        if (best_cand < 0) break;  // every catalog element already picked
        used[static_cast<std::size_t>(best_cand)] = true;
        group_count = refine(group, best_cand, &group);
        current = best_pairs;
        rep.chosen.push_back(best_cand);
        rep.colliding_pairs_after.push_back(current);
    }
    rep.injective = current == 0;
    return rep;
}

}  // namespace graphdot
