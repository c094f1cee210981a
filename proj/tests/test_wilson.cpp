#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <string>

#include "rstre/disorder.hpp"
#include "rstre/small_graphs.hpp"
#include "rstre/tree.hpp"
#include "rstre/wilson.hpp"

using namespace rstre;

namespace {

std::string tree_key(const WeightedTree& t) {
    std::vector<Edge> edges = t.edges;
    std::sort(edges.begin(), edges.end());
    std::string key;
    for (const Edge& e : edges)
        key += std::to_string(e.u) + "-" + std::to_string(e.v) + ";";
    return key;
}

// enumeration probabilities keyed the same way as sampled trees
std::map<std::string, double> enumerated_tree_law(const SmallWeightedGraph& g) {
    const auto en = enumerate_spanning_trees(g);
    std::map<std::string, double> law;
    for (const auto& [mask, weight] : en.trees) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < en.edges.size(); ++e)
            if ((mask >> e) & 1)
                edges.push_back(make_edge(static_cast<Vertex>(en.edges[e].first),
                                          static_cast<Vertex>(en.edges[e].second)));
        std::sort(edges.begin(), edges.end());
        std::string key;
        for (const Edge& e : edges)
            key += std::to_string(e.u) + "-" + std::to_string(e.v) + ";";
        law[key] = weight / en.z;
    }
    return law;
}

double max_law_deviation(const DisorderSample& sample, const SmallWeightedGraph& g,
                         int samples, std::uint64_t seed) {
    std::map<std::string, int> counts;
    for (int i = 0; i < samples; ++i) {
        const WeightedTree t = wilson_ust(sample, seed + i);
        EXPECT_TRUE(t.is_valid_tree());
        ++counts[tree_key(t)];
    }
    const auto law = enumerated_tree_law(g);
    double worst = 0.0;
    for (const auto& [key, p] : law) {
        const double freq =
            counts.count(key) ? counts.at(key) / static_cast<double>(samples) : 0.0;
        worst = std::max(worst, std::fabs(freq - p));
    }
    for (const auto& [key, c] : counts)
        EXPECT_TRUE(law.count(key)) << "sampled tree not in enumeration: " << key;
    return worst;
}

}  // namespace

TEST(Wilson, SingleEdgeGraph) {
    const auto s = disorder_from_edges(2, 1.0, {});
    const WeightedTree t = wilson_ust(s, 1);
    ASSERT_EQ(t.edges.size(), 1u);
    EXPECT_EQ(t.edges[0], (Edge{0, 1}));
}

TEST(Wilson, UniformOnK3WithoutHeavyEdges) {
    const auto sample = disorder_from_edges(3, 5.0, {});
    const auto g = SmallWeightedGraph::complete(3);
    EXPECT_LT(max_law_deviation(sample, g, 100000, 500), 0.01);
}

TEST(Wilson, WeightedK3MatchesEnumeration) {
    // heavy edge weight 2 = 3^(1+gamma) => gamma = log3(2) - 1
    const double gamma = std::log(2.0) / std::log(3.0) - 1.0;
    const auto sample = disorder_from_edges(3, gamma, {{0, 1}});
    ASSERT_NEAR(sample.heavy_weight(), 2.0, 1e-12);

    SmallWeightedGraph g = SmallWeightedGraph::complete(3);
    g.set_weight(0, 1, 2.0);
    // law is (2/5, 2/5, 1/5) over the three trees
    EXPECT_LT(max_law_deviation(sample, g, 100000, 900), 0.01);
}

TEST(Wilson, MatchesEnumerationOnSmallDisorderedGraphs) {
    // n = 5 with a fixed heavy pattern at moderate weight
    const double gamma = std::log(3.0) / std::log(5.0) - 1.0;  // heavy weight 3
    const auto sample = disorder_from_edges(5, gamma, {{0, 1}, {2, 3}});
    SmallWeightedGraph g = SmallWeightedGraph::complete(5);
    g.set_weight(0, 1, sample.heavy_weight());
    g.set_weight(2, 3, sample.heavy_weight());
    EXPECT_LT(max_law_deviation(sample, g, 100000, 1234), 0.01);
}

TEST(Wilson, TreesAreValidAcrossGammaRange) {
    // walk escapes from an untouched heavy component cost ~n^gamma steps,
    // so the large-gamma case runs at small n only
    for (const double gamma : {-2.0, -1.0, 0.0, 1.0}) {
        const DisorderSample s = sample_disorder(200, gamma, 77);
        const WeightedTree t = wilson_ust(s, 1000 + static_cast<int>(gamma * 10));
        EXPECT_EQ(t.edges.size(), 199u);
        EXPECT_TRUE(t.is_valid_tree());
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DisorderSample s = sample_disorder(12, 5.0, 500 + seed);
        const WeightedTree t = wilson_ust(s, 600 + seed);
        EXPECT_EQ(t.edges.size(), 11u);
        EXPECT_TRUE(t.is_valid_tree());
    }
}

TEST(Wilson, ComponentRestrictedSamplerIsUniform) {
    // triangle component: 3 spanning trees, each with probability 1/3
    const auto s = disorder_from_edges(3, 1.0, {{0, 1}, {1, 2}, {0, 2}});
    std::map<std::string, int> counts;
    Xoshiro256pp rng(4242);
    const int samples = 60000;
    const std::vector<Vertex> comp{0, 1, 2};
    for (int i = 0; i < samples; ++i) {
        auto edges = wilson_component_ust(s.heavy_adj, comp, rng);
        auto t = WeightedTree::from_edges(3, std::move(edges));
        EXPECT_TRUE(t.is_valid_tree());
        ++counts[tree_key(t)];
    }
    ASSERT_EQ(counts.size(), 3u);
    for (const auto& [key, c] : counts)
        EXPECT_NEAR(c / static_cast<double>(samples), 1.0 / 3.0, 0.01);
}

TEST(Wilson, K8DistanceLawMatchesClosedForm) {
    // distances between two fixed vertices follow the K_m tail product
    const auto sample = disorder_from_edges(8, 1.0, {});
    const int samples = 30000;
    std::vector<int> tail_count(9, 0);
    for (int i = 0; i < samples; ++i) {
        const WeightedTree t = wilson_ust(sample, 7000 + i);
        const auto dist = tree_distance(t, 0, 1);
        for (std::uint32_t L = 1; L <= dist && L <= 8; ++L) ++tail_count[L];
    }
    for (int L = 1; L <= 7; ++L) {
        const double expected = km_distance_tail(8, L);
        EXPECT_NEAR(tail_count[L] / static_cast<double>(samples), expected, 0.015)
            << "L=" << L;
    }
}
