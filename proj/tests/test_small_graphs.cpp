#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <vector>

#include "rstre/rng.hpp"
#include "rstre/small_graphs.hpp"

using namespace rstre;

using BigInt = boost::multiprecision::cpp_int;
using Frac = boost::rational<BigInt>;

namespace {

// independent BFS diameter for tiny graphs given an adjacency matrix
int graph_diameter(const std::vector<std::vector<int>>& adj_mat) {
    const int m = static_cast<int>(adj_mat.size());
    int diam = 0;
    for (int s = 0; s < m; ++s) {
        std::vector<int> dist(m, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int u = queue[h];
            for (int v = 0; v < m; ++v)
                if (adj_mat[u][v] && dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    diam = std::max(diam, dist[v]);
                    queue.push_back(v);
                }
        }
    }
    return diam;
}

SmallWeightedGraph k3_with_heavy_edge(double w) {
    SmallWeightedGraph g = SmallWeightedGraph::complete(3);
    g.set_weight(0, 1, w);
    return g;
}

SmallWeightedGraph random_connected_graph(int m, Xoshiro256pp& rng, bool integer_weights) {
    while (true) {
        SmallWeightedGraph g = SmallWeightedGraph::empty(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (rng.uniform01() < 0.6) {
                    const double w = integer_weights
                                         ? static_cast<double>(1 + rng.uniform_below(9))
                                         : 0.25 + rng.uniform01() * 4.0;
                    g.set_weight(i, j, w);
                }
        if (g.connected()) return g;
    }
}

}  // namespace

TEST(Enumeration, K3UnitWeights) {
    const auto en = enumerate_spanning_trees(SmallWeightedGraph::complete(3));
    EXPECT_EQ(en.trees.size(), 3u);
    EXPECT_DOUBLE_EQ(en.z, 3.0);
}

TEST(Enumeration, K3OneEdgeWeightTwo) {
    const auto en = enumerate_spanning_trees(k3_with_heavy_edge(2.0));
    EXPECT_EQ(en.trees.size(), 3u);
    EXPECT_DOUBLE_EQ(en.z, 5.0);  // 1 + 2 + 2
}

TEST(Enumeration, TreeInputHasExactlyOneSpanningTree) {
    SmallWeightedGraph g = SmallWeightedGraph::empty(4);
    g.set_weight(0, 1, 1.0);
    g.set_weight(1, 2, 1.0);
    g.set_weight(1, 3, 1.0);
    const auto en = enumerate_spanning_trees(g);
    EXPECT_EQ(en.trees.size(), 1u);
    EXPECT_DOUBLE_EQ(en.z, 1.0);
}

TEST(Enumeration, DisconnectedAndOversizeInputsFail) {
    SmallWeightedGraph g = SmallWeightedGraph::empty(4);
    g.set_weight(0, 1, 1.0);
    g.set_weight(2, 3, 1.0);
    EXPECT_THROW(enumerate_spanning_trees(g), NoSpanningTreeError);
    EXPECT_THROW(enumerate_spanning_trees(SmallWeightedGraph::complete(11)), SizeLimitError);
}

TEST(Enumeration, CayleyCountOnCompleteGraphs) {
    for (int m = 2; m <= 7; ++m) {
        const auto en = enumerate_spanning_trees(SmallWeightedGraph::complete(m));
        EXPECT_DOUBLE_EQ(en.z, std::pow(m, m - 2)) << "m=" << m;
        EXPECT_EQ(en.trees.size(), static_cast<std::size_t>(std::pow(m, m - 2)));
    }
}

TEST(MatrixTree, AgreesWithEnumerationOnRandomGraphs) {
    Xoshiro256pp rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 3 + static_cast<int>(rng.uniform_below(6));  // 3..8
        const auto g = random_connected_graph(m, rng, false);
        const auto en = enumerate_spanning_trees(g);
        const double det = matrix_tree_value(g);
        EXPECT_NEAR(std::fabs(det - en.z) / en.z, 0.0, 1e-10);
    }
}

TEST(MatrixTree, ExactRationalAnchor) {
    // K_3 with one edge of weight 2: Z = 5 exactly
    const auto z = matrix_tree_value<Frac>(3, [](int i, int j) {
        if (i == j) return Frac(0);
        return (i + j == 1) ? Frac(2) : Frac(1);
    });
    EXPECT_EQ(z, Frac(5));
}

TEST(EffectiveResistance, ClosedFormCases) {
    SmallWeightedGraph single = SmallWeightedGraph::empty(2);
    single.set_weight(0, 1, 4.0);
    EXPECT_NEAR(effective_resistance(single, 0, 1), 0.25, 1e-12);

    EXPECT_NEAR(effective_resistance(SmallWeightedGraph::complete(3), 0, 1), 2.0 / 3.0, 1e-12);

    SmallWeightedGraph path = SmallWeightedGraph::empty(3);
    path.set_weight(0, 1, 1.0);
    path.set_weight(1, 2, 1.0);
    EXPECT_NEAR(effective_resistance(path, 0, 2), 2.0, 1e-12);

    EXPECT_THROW(effective_resistance(path, 1, 1), std::invalid_argument);
}

TEST(EffectiveResistance, ExactRationalAnchor) {
    const auto r = effective_resistance_t<Frac>(
        3, [](int i, int j) { return i == j ? Frac(0) : Frac(1); }, 0, 1);
    EXPECT_EQ(r, Frac(2, 3));
}

TEST(EdgeProbability, KirchhoffAndEnumerationAgree) {
    // K_3 unit: every edge in 2 of 3 trees
    EXPECT_NEAR(ust_edge_probability(SmallWeightedGraph::complete(3), 0, 1), 2.0 / 3.0, 1e-12);

    // bridges always belong to the tree
    SmallWeightedGraph path = SmallWeightedGraph::empty(3);
    path.set_weight(0, 1, 3.0);
    path.set_weight(1, 2, 1.0);
    EXPECT_NEAR(ust_edge_probability(path, 0, 1), 1.0, 1e-12);

    // K_3 with weights (2,1,1): the weight-2 edge is in trees of weight 4 of Z=5
    EXPECT_NEAR(ust_edge_probability(k3_with_heavy_edge(2.0), 0, 1), 0.8, 1e-12);

    EXPECT_THROW(ust_edge_probability(path, 0, 2), std::invalid_argument);
}

TEST(EdgeProbability, InclusionProbabilitiesSumToMMinusOne) {
    Xoshiro256pp rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 3 + static_cast<int>(rng.uniform_below(5));  // 3..7
        const auto g = random_connected_graph(m, rng, false);
        double sum = 0;
        for (const auto& [u, v] : g.edge_list()) sum += ust_edge_probability(g, u, v);
        EXPECT_NEAR(sum, m - 1.0, 1e-9);
    }
}

TEST(KmDistanceTail, ClosedFormValues) {
    EXPECT_DOUBLE_EQ(km_distance_tail(3, 1), 1.0);
    EXPECT_DOUBLE_EQ(km_distance_tail(3, 2), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(km_distance_tail(4, 3), 0.125);  // (2/4)*(1/4)
    EXPECT_DOUBLE_EQ(km_distance_tail(5, 5), 0.0);
    EXPECT_THROW(km_distance_tail(1, 1), std::invalid_argument);
    EXPECT_THROW(km_distance_tail(3, 0), std::invalid_argument);
}

TEST(KmDistanceTail, MatchesEnumerationOnK3) {
    // distance between fixed vertices 0,1 over the 3 spanning trees of K_3
    const auto en = enumerate_spanning_trees(SmallWeightedGraph::complete(3));
    int at_least_two = 0;
    for (const auto& [mask, w] : en.trees) {
        const bool direct = (mask >> en.edge_index(0, 1)) & 1;
        if (!direct) ++at_least_two;
    }
    EXPECT_NEAR(at_least_two / 3.0, km_distance_tail(3, 2), 1e-15);
}

TEST(KmDistanceTail, IsANonIncreasingDistribution) {
    const int m = 9;
    double prev = 1.0;
    double mass = 0.0;
    for (int L = 1; L <= m - 1; ++L) {
        const double t = km_distance_tail(m, L);
        EXPECT_LE(t, prev);
        prev = t;
        mass += t - km_distance_tail(m, L + 1);  // P(d = L)
    }
    EXPECT_NEAR(mass, 1.0, 1e-12);
}

TEST(LaplacianWalk, DegenerateAndSupportCases) {
    for (std::uint64_t s = 0; s < 50; ++s) EXPECT_EQ(laplacian_walk_sample(2, s), 1);
    for (std::uint64_t s = 0; s < 2000; ++s) {
        const auto len = laplacian_walk_sample(6, s);
        EXPECT_GE(len, 1);
        EXPECT_LE(len, 5);
    }
}

TEST(LaplacianWalk, TailMatchesClosedFormAtM3) {
    const int k = 100000;
    int at_least_two = 0;
    for (int s = 0; s < k; ++s)
        if (laplacian_walk_sample(3, 9000 + s) >= 2) ++at_least_two;
    const double p = 1.0 / 3.0;
    const double se = std::sqrt(p * (1 - p) / k);
    EXPECT_NEAR(at_least_two / static_cast<double>(k), p, 3 * se);
}

TEST(KmExpectedDistance, StaysAboveFrozenSqrtLaw) {
    // one-sided inequality with C frozen from a desk run: the conditional
    // expectation at m = 100 is 1.1323 * sqrt(m); C = 0.7 covers every m >= 2
    EXPECT_NEAR(km_expected_distance(100), 11.323193, 1e-5);
    for (int m : {2, 3, 4, 5, 8, 16, 50, 100, 200, 500})
        EXPECT_GE(km_expected_distance(m), 0.7 * std::sqrt(m)) << "m=" << m;
}

TEST(Bottleneck, ClosedFormFixtures) {
    EXPECT_NEAR(bottleneck_ratio_exact(SmallWeightedGraph::complete(2)), 0.5, 1e-12);
    EXPECT_NEAR(bottleneck_ratio_exact(SmallWeightedGraph::complete(4)), 0.4, 1e-12);
}

TEST(Bottleneck, HeavyEdgeCompleteGraphInequality) {
    // K_n with a single heavy edge of weight n^(1+gamma): the enumerated
    // minimum respects the 1/(6(2/3 + B n^gamma)) lower bound with B = 2
    for (const double gamma : {-1.0, 0.0, 0.5}) {
        for (const int n : {5, 7, 9}) {
            SmallWeightedGraph g = SmallWeightedGraph::complete(n);
            g.set_weight(0, 1, std::pow(n, 1.0 + gamma));
            const double phi = bottleneck_ratio_exact(g);
            const double bound = 1.0 / (6.0 * (2.0 / 3.0 + 2.0 * std::pow(n, gamma)));
            EXPECT_GE(phi, bound) << "n=" << n << " gamma=" << gamma;
        }
    }
}

TEST(Balanced, RatioExamples) {
    EXPECT_DOUBLE_EQ(balanced_ratio(SmallWeightedGraph::complete(6)), 1.0);

    const auto g = k3_with_heavy_edge(5.0);  // degrees (6, 6, 2)
    EXPECT_DOUBLE_EQ(balanced_ratio(g), 3.0);

    SmallWeightedGraph starg = SmallWeightedGraph::empty(4);
    for (int leaf = 1; leaf < 4; ++leaf) starg.set_weight(0, leaf, 1.0);
    EXPECT_DOUBLE_EQ(balanced_ratio(starg), 3.0);
}

TEST(ExcessDiameterBound, HoldsForEverySpanningTreeOfSmallGraphs) {
    // diam(T) <= 2(Exc(H)+2) diam(H) + Exc(H)+1 over all connected graphs
    // on 4 vertices and random connected graphs on 5..7
    auto check_graph = [](const SmallWeightedGraph& g) {
        const int m = g.m;
        std::vector<std::vector<int>> adj_mat(m, std::vector<int>(m, 0));
        int edge_count = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (g.w[i][j] > 0) {
                    adj_mat[i][j] = adj_mat[j][i] = 1;
                    ++edge_count;
                }
        const int exc = edge_count - m;
        const int diam_h = graph_diameter(adj_mat);
        const auto en = enumerate_spanning_trees(g);
        for (const auto& [mask, w] : en.trees) {
            std::vector<std::vector<int>> tree_mat(m, std::vector<int>(m, 0));
            for (std::size_t e = 0; e < en.edges.size(); ++e)
                if ((mask >> e) & 1) {
                    const auto [a, b] = en.edges[e];
                    tree_mat[a][b] = tree_mat[b][a] = 1;
                }
            const int diam_t = graph_diameter(tree_mat);
            EXPECT_LE(diam_t, 2 * (exc + 2) * diam_h + exc + 1);
        }
    };

    // all connected graphs on 4 vertices (64 edge subsets)
    for (unsigned mask = 0; mask < 64; ++mask) {
        SmallWeightedGraph g = SmallWeightedGraph::empty(4);
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
                if ((mask >> bit) & 1) g.set_weight(i, j, 1.0);
        if (g.connected()) check_graph(g);
    }

    Xoshiro256pp rng(31337);
    for (int trial = 0; trial < 30; ++trial)
        check_graph(random_connected_graph(5 + static_cast<int>(rng.uniform_below(3)), rng, true));
}
