// Coordinate-layer tests: projections onto a basis, basis verification and
// greedy search, coordinate clustering, the induced-subgraph census, and
// similarity ranking. Discriminating-power results (which bases separate which
// catalogs) were measured once with the enumeration oracles and are frozen
// here as regression anchors.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <graphdot/graphdot.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using graphdot::Graph;
using graphdot::errc;

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

// ---- coordinates -------------------------------------------------------------

TEST(Coordinates, KnownProjection) {
    const Graph k4 = graphdot::complete_graph(4);
    const auto c = graphdot::coordinates(k4, {k4, graphdot::empty_graph(4)});
    ASSERT_EQ(c.entries.size(), 2u);
    EXPECT_EQ(c.entries[0].value, 12);
    EXPECT_EQ(*c.entries[0].phase, 24);
    EXPECT_EQ(c.entries[0].solver, graphdot::SolverKind::exhaustive);
    EXPECT_EQ(c.entries[1].value, -12);
    EXPECT_EQ(*c.entries[1].phase, 24);
}

TEST(Coordinates, RelabelingInvariance) {
    std::mt19937_64 rng(301);
    const std::vector<Graph> basis = {graphdot::complete_graph(3), graphdot::path_graph(3),
                                      graphdot::cycle_graph(4)};
    for (int t = 0; t < 10; ++t) {
        const Graph g = oracle::random_graph(6, rng);
        const Graph h = g.relabeled(oracle::random_permutation(6, rng));
        const auto a = graphdot::coordinates(g, basis);
        const auto b = graphdot::coordinates(h, basis);
        ASSERT_EQ(a.entries.size(), b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            EXPECT_EQ(a.entries[i].value, b.entries[i].value);
            EXPECT_EQ(a.entries[i].phase, b.entries[i].phase);
        }
    }
}

TEST(Coordinates, MixedOrderElementsMatchTheirSolvers) {
    std::mt19937_64 rng(307);
    const Graph g = oracle::random_graph(6, rng);
    const std::vector<Graph> basis = {graphdot::complete_graph(3), graphdot::complete_graph(4),
                                      oracle::random_graph(6, rng)};
    const auto c = graphdot::coordinates(g, basis);
    EXPECT_EQ(c.entries[0].solver, graphdot::SolverKind::bounded_order);
    EXPECT_EQ(c.entries[1].solver, graphdot::SolverKind::bounded_order);
    EXPECT_EQ(c.entries[2].solver, graphdot::SolverKind::exhaustive);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto direct = graphdot::dot_any(g, basis[i]);
        EXPECT_EQ(c.entries[i].value, direct.result.value);
        EXPECT_EQ(c.entries[i].phase, direct.result.phase);
    }
}

TEST(Coordinates, PhaseSuppression) {
    graphdot::SolvePolicy quiet;
    quiet.count_phase = false;
    const auto c = graphdot::coordinates(graphdot::cycle_graph(5),
                                         {graphdot::complete_graph(5)}, quiet);
    EXPECT_FALSE(c.entries[0].phase.has_value());
}

TEST(Coordinates, BasisValidation) {
    const Graph c5 = graphdot::cycle_graph(5);
    EXPECT_FAILS(errc::invalid_input, graphdot::coordinates(c5, {}));
    // Isomorphic duplicates are redundant and rejected up front.
    std::mt19937_64 rng(311);
    EXPECT_FAILS(errc::invalid_input,
                 graphdot::coordinates(
                     c5, {graphdot::path_graph(4),
                          graphdot::path_graph(4).relabeled(oracle::random_permutation(4, rng))}));
}

TEST(Coordinates, ElementErrorsNameTheElement) {
    const Graph c5 = graphdot::cycle_graph(5);
    try {
        graphdot::coordinates(c5, {graphdot::complete_graph(3), graphdot::complete_graph(6)});
        FAIL() << "expected an order mismatch";
    } catch (const graphdot::error& e) {
        EXPECT_EQ(e.kind(), errc::order_mismatch);
        EXPECT_NE(std::string(e.what()).find("basis element 1"), std::string::npos);
    }
}

// ---- basis verification ----------------------------------------------------------

TEST(VerifyBasis, FullCatalogSeparatesItself) {
    for (int n : {3, 4, 5}) {
        const auto rep = graphdot::verify_basis(oracle::catalog(n), n, false);
        EXPECT_TRUE(rep.injective) << "n=" << n;
        EXPECT_EQ(rep.order, n);
        EXPECT_EQ(rep.distinct_keys, rep.class_count);
        EXPECT_TRUE(rep.collisions.empty());
    }
}

TEST(VerifyBasis, SingletonCompleteBasisCollidesAtOrderFour) {
    const auto rep = graphdot::verify_basis({graphdot::complete_graph(4)}, 4, false);
    EXPECT_EQ(rep.class_count, 11);
    EXPECT_FALSE(rep.injective);
    EXPECT_EQ(rep.distinct_keys, 7);
    const Pairs expected = {{2, 5}, {3, 4}, {3, 6}, {4, 6}, {7, 8}};
    EXPECT_EQ(rep.collisions, expected);
}

TEST(VerifyBasis, TriangleCatalogSeparatesOrderFour) {
    // The four 3-vertex classes, projected through the mixed-order solver,
    // already separate all 11 classes on 4 vertices -- with or without phases.
    const auto full = graphdot::verify_basis(oracle::catalog(3), 4, false);
    EXPECT_TRUE(full.injective);
    EXPECT_EQ(full.distinct_keys, 11);
    const auto vo = graphdot::verify_basis(oracle::catalog(3), 4, true);
    EXPECT_TRUE(vo.injective);
    EXPECT_TRUE(vo.values_only);
}

TEST(VerifyBasis, ValuesOnlyCatalogStillSeparatesOrderFour) {
    const auto rep = graphdot::verify_basis(oracle::catalog(4), 4, true);
    EXPECT_TRUE(rep.injective);
    EXPECT_EQ(rep.distinct_keys, 11);
}

TEST(VerifyBasis, ValueCollisionsContainFullKeyCollisions) {
    // Dropping phases can only merge keys, never split them.
    const std::vector<Graph> basis = {graphdot::complete_graph(4)};
    const auto full = graphdot::verify_basis(basis, 4, false);
    const auto vo = graphdot::verify_basis(basis, 4, true);
    for (const auto& p : full.collisions)
        EXPECT_NE(std::find(vo.collisions.begin(), vo.collisions.end(), p), vo.collisions.end());
    EXPECT_LE(vo.distinct_keys, full.distinct_keys);
}

TEST(VerifyBasis, Guards) {
    const std::vector<Graph> basis = {graphdot::complete_graph(3)};
    EXPECT_FAILS(errc::guard, graphdot::verify_basis(basis, 8, false));
    EXPECT_FAILS(errc::guard, graphdot::verify_basis(basis, 0, false));
    EXPECT_FAILS(errc::order_mismatch, graphdot::verify_basis(basis, 2, false));
    EXPECT_FAILS(errc::invalid_input, graphdot::verify_basis({}, 4, false));
}

// ---- clustering ---------------------------------------------------------------

TEST(Cluster, RelabelingsCollapseToTheirClasses) {
    std::mt19937_64 rng(313);
    const Graph c5 = graphdot::cycle_graph(5);
    const Graph p5 = graphdot::path_graph(5);
    std::vector<Graph> items;
    for (int t = 0; t < 6; ++t) {
        items.push_back(c5.relabeled(oracle::random_permutation(5, rng)));
        items.push_back(p5.relabeled(oracle::random_permutation(5, rng)));
    }
    const auto part = graphdot::cluster(items, oracle::catalog(5));
    ASSERT_EQ(part.clusters.size(), 2u);
    EXPECT_EQ(part.assignment.size(), items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        // Even indices hold cycles, odd hold paths; cluster 0 is whichever
        // appeared first (the cycle at index 0).
        EXPECT_EQ(part.assignment[i], static_cast<int>(i % 2));
    }
    EXPECT_EQ(part.clusters[0].size(), 6u);
    EXPECT_EQ(part.clusters[1].size(), 6u);
}

TEST(Cluster, AllLabeledOrderFourGraphsFormElevenClasses) {
    std::vector<Graph> items;
    for (std::uint64_t code = 0; code < 64; ++code)
        items.push_back(Graph::from_edge_code(4, code));
    const auto part = graphdot::cluster(items, oracle::catalog(4));
    ASSERT_EQ(part.clusters.size(), 11u);
    std::size_t total = 0;
    for (const auto& members : part.clusters) {
        ASSERT_FALSE(members.empty());
        const Graph& rep = items[static_cast<std::size_t>(members.front())];
        // Every member is isomorphic to the cluster representative, and the
        // cluster has exactly 24 / |Aut| labeled copies.
        for (int idx : members)
            EXPECT_TRUE(oracle::isomorphic(rep, items[static_cast<std::size_t>(idx)]));
        EXPECT_EQ(static_cast<std::int64_t>(members.size()),
                  24 / oracle::automorphisms(rep));
        total += members.size();
    }
    EXPECT_EQ(total, 64u);
    // Distinct clusters hold non-isomorphic graphs.
    for (std::size_t a = 0; a < part.clusters.size(); ++a)
        for (std::size_t b = a + 1; b < part.clusters.size(); ++b)
            EXPECT_FALSE(oracle::isomorphic(
                items[static_cast<std::size_t>(part.clusters[a].front())],
                items[static_cast<std::size_t>(part.clusters[b].front())]));
}

TEST(Cluster, MixedOrdersAreRejected) {
    EXPECT_FAILS(errc::order_mismatch,
                 graphdot::cluster({graphdot::cycle_graph(4), graphdot::cycle_graph(5)},
                                   {graphdot::complete_graph(3)}));
}

TEST(Cluster, CoarseBasisMergesClassesItCannotSeparate) {
    // Verified above: a lone K_4 basis cannot tell classes 3 and 4 apart, so
    // representatives of both must land in one cluster.
    const auto cat = oracle::catalog(4);
    const auto part = graphdot::cluster({cat[3], cat[4]}, {graphdot::complete_graph(4)});
    EXPECT_EQ(part.clusters.size(), 1u);
    EXPECT_EQ(part.assignment[0], part.assignment[1]);
}

// ---- induced-subgraph census --------------------------------------------------------

TEST(Census, KnownCounts) {
    const auto k4 = graphdot::subgraph_census(graphdot::complete_graph(4), 3);
    EXPECT_EQ(k4.sub_order, 3);
    EXPECT_EQ(k4.counts, (std::vector<std::int64_t>{0, 0, 0, 4}));
    const auto c5 = graphdot::subgraph_census(graphdot::cycle_graph(5), 3);
    EXPECT_EQ(c5.counts, (std::vector<std::int64_t>{0, 5, 5, 0}));
}

TEST(Census, CountsMatchOracleAndSumToSubsets) {
    std::mt19937_64 rng(317);
    for (int n : {4, 5, 6}) {
        for (int k = 1; k <= std::min(4, n); ++k) {
            const Graph g = oracle::random_graph(n, rng);
            const auto rep = graphdot::subgraph_census(g, k);
            const auto& codes = graphdot::enumerate_iso_classes(k);
            ASSERT_EQ(rep.counts.size(), codes.size());
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < codes.size(); ++i) {
                const Graph sub = Graph::from_edge_code(k, codes[i]);
                EXPECT_EQ(rep.counts[i], oracle::induced_copies(g, sub));
                sum += rep.counts[i];
            }
            EXPECT_EQ(sum, binom(n, k));
        }
    }
}

TEST(Census, ComplementSymmetry) {
    // Complementing the host permutes the census by complementing each class.
    std::mt19937_64 rng(331);
    const int k = 3;
    const auto& codes = graphdot::enumerate_iso_classes(k);
    std::vector<int> comp_index(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        comp_index[i] = graphdot::iso_class_index(Graph::from_edge_code(k, codes[i]).complement());
    for (int t = 0; t < 5; ++t) {
        const Graph g = oracle::random_graph(6, rng);
        const auto direct = graphdot::subgraph_census(g, k);
        const auto comp = graphdot::subgraph_census(g.complement(), k);
        for (std::size_t i = 0; i < codes.size(); ++i)
            EXPECT_EQ(comp.counts[static_cast<std::size_t>(comp_index[i])], direct.counts[i]);
    }
}

TEST(Census, OrderFiveClassesNotSeparatedByTriangleCensus) {
    // Exactly two pairs of 5-vertex classes share their full 3-vertex census;
    // measured by enumeration and frozen.
    const auto cat = oracle::catalog(5);
    std::vector<std::vector<std::int64_t>> censuses;
    censuses.reserve(cat.size());
    for (const Graph& g : cat) censuses.push_back(graphdot::subgraph_census(g, 3).counts);
    Pairs equal_pairs;
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = a + 1; b < cat.size(); ++b)
            if (censuses[a] == censuses[b])
                equal_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    const Pairs expected = {{10, 12}, {23, 25}};
    EXPECT_EQ(equal_pairs, expected);
}

TEST(Census, Guards) {
    const Graph g = graphdot::cycle_graph(6);
    EXPECT_FAILS(errc::guard, graphdot::subgraph_census(g, 0));
    EXPECT_FAILS(errc::guard, graphdot::subgraph_census(g, 6));  // above the sub-order cap
    EXPECT_FAILS(errc::guard, graphdot::subgraph_census(graphdot::complete_graph(3), 4));
}

// ---- similarity ranking ---------------------------------------------------------------

TEST(SimilarityRank, IsomorphFirstWithUnitScore) {
    std::mt19937_64 rng(337);
    const Graph p5 = graphdot::path_graph(5);
    const std::vector<Graph> candidates = {
        graphdot::cycle_graph(5),
        graphdot::complete_graph(5),
        p5.relabeled(oracle::random_permutation(5, rng)),
        p5.complement(),
    };
    const auto ranked = graphdot::similarity_rank(p5, candidates);
    ASSERT_EQ(ranked.size(), candidates.size());
    EXPECT_EQ(ranked[0].index, 2);
    EXPECT_EQ(ranked[0].score.num(), 1);
    EXPECT_EQ(ranked[0].score.den(), 1);
    for (std::size_t i = 0; i + 1 < ranked.size(); ++i) {
        EXPECT_FALSE(ranked[i].score < ranked[i + 1].score);  // non-increasing
        EXPECT_FALSE(graphdot::Rational(1) < ranked[i].score);  // never above 1
    }
}

TEST(SimilarityRank, TiesKeepInputOrder) {
    std::mt19937_64 rng(347);
    const Graph c5 = graphdot::cycle_graph(5);
    const std::vector<Graph> candidates = {
        graphdot::path_graph(5),
        c5.relabeled(oracle::random_permutation(5, rng)),
        c5.relabeled(oracle::random_permutation(5, rng)),
    };
    const auto ranked = graphdot::similarity_rank(c5, candidates);
    EXPECT_EQ(ranked[0].index, 1);
    EXPECT_EQ(ranked[1].index, 2);
    EXPECT_EQ(ranked[0].score, ranked[1].score);
}

TEST(SimilarityRank, Errors) {
    const Graph c5 = graphdot::cycle_graph(5);
    EXPECT_FAILS(errc::invalid_input, graphdot::similarity_rank(c5, {}));
    EXPECT_FAILS(errc::order_mismatch,
                 graphdot::similarity_rank(c5, {graphdot::cycle_graph(4)}));
}

// ---- greedy basis search ------------------------------------------------------------

TEST(SearchBasis, FrozenSelections) {
    const auto n4 = graphdot::search_basis(4, 11);
    EXPECT_TRUE(n4.injective);
    EXPECT_EQ(n4.chosen, (std::vector<int>{2, 3}));
    EXPECT_EQ(n4.colliding_pairs_after, (std::vector<std::int64_t>{1, 0}));

    const auto n5 = graphdot::search_basis(5, 34);
    EXPECT_TRUE(n5.injective);
    EXPECT_EQ(n5.chosen, (std::vector<int>{2, 8}));
    EXPECT_EQ(n5.colliding_pairs_after.back(), 0);

    const auto n6 = graphdot::search_basis(6, 10);
    EXPECT_TRUE(n6.injective);
    EXPECT_EQ(n6.chosen, (std::vector<int>{10, 12}));
}

TEST(SearchBasis, ValuesOnlyNeedsMoreElements) {
    const auto vo = graphdot::search_basis(4, 11, true);
    EXPECT_TRUE(vo.injective);
    EXPECT_TRUE(vo.values_only);
    EXPECT_EQ(vo.chosen, (std::vector<int>{0, 3, 4}));
    EXPECT_EQ(vo.colliding_pairs_after, (std::vector<std::int64_t>{5, 1, 0}));
}

TEST(SearchBasis, ChosenBasisPassesVerification) {
    for (int n : {4, 5}) {
        const auto found = graphdot::search_basis(n, 34);
        std::vector<Graph> basis;
        for (int idx : found.chosen) basis.push_back(oracle::catalog(n)[static_cast<std::size_t>(idx)]);
        const auto check = graphdot::verify_basis(basis, n, false);
        EXPECT_EQ(check.injective, found.injective);
        EXPECT_TRUE(check.injective);
    }
}

TEST(SearchBasis, SizeCapStopsEarly) {
    const auto capped = graphdot::search_basis(5, 1);
    EXPECT_FALSE(capped.injective);
    EXPECT_EQ(capped.chosen, (std::vector<int>{2}));
    EXPECT_EQ(capped.colliding_pairs_after, (std::vector<std::int64_t>{8}));
}

TEST(SearchBasis, Guards) {
    EXPECT_FAILS(errc::guard, graphdot::search_basis(7, 5));
    EXPECT_FAILS(errc::guard, graphdot::search_basis(1, 5));
    EXPECT_FAILS(errc::invalid_input, graphdot::search_basis(4, 0));
}
