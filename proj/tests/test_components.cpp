#include <gtest/gtest.h>

#include "rstre/components.hpp"

using namespace rstre;

namespace {

ComponentDecomposition decompose_edges(std::uint64_t n, std::vector<Edge> edges) {
    return decompose(disorder_from_edges(n, 5.0, std::move(edges)));
}

}  // namespace

TEST(Components, EmptyGraphIsAllSingletons) {
    const auto d = decompose_edges(5, {});
    EXPECT_EQ(d.component_count(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(d.sizes[i], 1u);
        EXPECT_EQ(d.excess[i], -1);
        EXPECT_EQ(d.diameter[i], 0u);
    }
}

TEST(Components, PathComponent) {
    // edges {1,2},{2,3} on n=5 (0-based: {0,1},{1,2})
    const auto d = decompose_edges(5, {{0, 1}, {1, 2}});
    ASSERT_EQ(d.component_count(), 3u);
    EXPECT_EQ(d.sizes, (std::vector<std::uint64_t>{3, 1, 1}));
    EXPECT_EQ(d.components[0], (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(d.excess[0], -1);
    EXPECT_EQ(d.diameter[0], 2u);
}

TEST(Components, TriangleHasExcessZeroDiameterOne) {
    const auto d = decompose_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    ASSERT_EQ(d.component_count(), 1u);
    EXPECT_EQ(d.excess[0], 0);
    EXPECT_EQ(d.diameter[0], 1u);
}

TEST(Components, TieBreakPutsSmallestLabelFirst) {
    // two components of size 2: {3,4} appears before... {0 is singleton}
    const auto d = decompose_edges(6, {{3, 4}, {1, 2}});
    ASSERT_EQ(d.component_count(), 4u);
    EXPECT_EQ(d.sizes[0], 2u);
    EXPECT_EQ(d.sizes[1], 2u);
    EXPECT_EQ(d.components[0], (std::vector<Vertex>{1, 2}));  // smaller label first
    EXPECT_EQ(d.components[1], (std::vector<Vertex>{3, 4}));
    EXPECT_EQ(d.components[2], (std::vector<Vertex>{0}));
    EXPECT_EQ(d.components[3], (std::vector<Vertex>{5}));
}

TEST(Components, LabelsAndListsAreConsistent) {
    const DisorderSample s = sample_disorder(2000, 5.0, 31);
    const auto d = decompose(s);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        total += d.sizes[c];
        EXPECT_EQ(d.sizes[c], d.components[c].size());
        for (Vertex v : d.components[c]) EXPECT_EQ(d.label[v], c);
        if (c > 0) {
            const bool ordered = d.sizes[c - 1] > d.sizes[c] ||
                                 (d.sizes[c - 1] == d.sizes[c] &&
                                  d.components[c - 1].front() < d.components[c].front());
            EXPECT_TRUE(ordered);
        }
        EXPECT_GE(d.excess[c], -1);
        EXPECT_LE(d.diameter[c], d.sizes[c] - 1);
    }
    EXPECT_EQ(total, 2000u);
}

TEST(Components, ExactDiameterAgreesWithDoubleBfsOnTreesOnly) {
    // 4-cycle: true diameter 2; excess 0 forces the all-sources BFS path
    const auto d = decompose_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(d.diameter[0], 2u);
    EXPECT_FALSE(d.diameter_is_lower_bound[0]);
}

TEST(Components, DiameterCapFlagsLowerBound) {
    DecomposeOptions opt;
    opt.exact_diameter_cap = 2;
    const auto s = disorder_from_edges(4, 5.0, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto d = decompose(s, opt);
    EXPECT_TRUE(d.diameter_is_lower_bound[0]);
    EXPECT_LE(d.diameter[0], 2u);
}

TEST(Components, ComponentDistanceIsExact) {
    const auto d = decompose_edges(6, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(component_distance(d, 0, 3), 3u);
    EXPECT_EQ(component_distance(d, 1, 1), 0u);
    EXPECT_THROW(component_distance(d, 0, 5), std::invalid_argument);
}

TEST(UnionTopK, MatchesSpecExamples) {
    // sizes [5,3,3,1]; the two size-3 components tie-break by smallest label
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 5; ++v) edges.push_back({v, static_cast<Vertex>(v + 1)});
    edges.push_back({8, 9});
    edges.push_back({9, 10});  // component {8,9,10}
    edges.push_back({5, 6});
    edges.push_back({6, 7});   // component {5,6,7}, smaller label
    const auto d = decompose_edges(12, edges);
    ASSERT_EQ(d.sizes, (std::vector<std::uint64_t>{5, 3, 3, 1}));

    const auto l2 = union_top_k(d, 2);
    EXPECT_EQ(l2.size(), 8u);
    EXPECT_TRUE(std::binary_search(l2.begin(), l2.end(), Vertex{5}));
    EXPECT_FALSE(std::binary_search(l2.begin(), l2.end(), Vertex{8}));

    EXPECT_EQ(union_top_k(d, 1), d.components[0]);
    EXPECT_EQ(union_top_k(d, d.component_count()).size(), 12u);
    EXPECT_THROW(union_top_k(d, 0), std::invalid_argument);
    EXPECT_THROW(union_top_k(d, 5), std::invalid_argument);
}

TEST(Contract, WeightsFollowSizes) {
    const auto d = decompose_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    ASSERT_EQ(d.sizes, (std::vector<std::uint64_t>{4, 3}));
    const ContractedGraph g = contract(d);
    EXPECT_DOUBLE_EQ(g.pair_weight(0, 1), 12.0);
    EXPECT_DOUBLE_EQ(g.pair_weight(1, 1), 9.0);
    EXPECT_DOUBLE_EQ(g.total_incident(0), 4.0 * 7.0);
}

TEST(Contract, StepLawMatchesSizesOverN) {
    const auto d = decompose_edges(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
    ASSERT_EQ(d.sizes, (std::vector<std::uint64_t>{4, 2, 1, 1}));
    const ContractedGraph g = contract(d);
    Xoshiro256pp rng(17);
    const int steps = 100000;
    std::vector<int> hits(4, 0);
    for (int i = 0; i < steps; ++i) ++hits[g.step(rng)];
    for (std::size_t b = 0; b < 4; ++b) {
        const double p = static_cast<double>(d.sizes[b]) / 8.0;
        const double se = std::sqrt(p * (1 - p) / steps);
        EXPECT_NEAR(hits[b] / static_cast<double>(steps), p, 3 * se) << "component " << b;
    }
}
