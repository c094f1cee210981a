#pragma once
// Two-point edge disorder on the complete graph K_n: every edge carries
// weight n^(1+gamma) with probability 1/n and weight 1 otherwise. Only the
// heavy edges are stored (expected (n-1)/2 of them); weight-1 edges stay
// implicit, which keeps n up to 10^6 in reach.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rstre/rng.hpp"

namespace rstre {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u, v;  // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("make_edge: endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_key(Vertex u, Vertex v, std::uint64_t n) noexcept {
    return u < v ? u * n + v : v * n + u;
}

struct DisorderSample {
    std::uint64_t n = 0;
    double gamma = 0.0;
    std::vector<Edge> heavy_edges;         // sorted, unique
    std::uint64_t master_seed = 0;

    // neighbor lists of the heavy-edge graph, each sorted ascending
    std::vector<std::vector<Vertex>> heavy_adj;

    double heavy_weight() const noexcept {
        return std::pow(static_cast<double>(n), 1.0 + gamma);
    }

    double weight(Vertex a, Vertex b) const {
        return is_heavy(a, b) ? heavy_weight() : 1.0;
    }

    bool is_heavy(Vertex a, Vertex b) const {
        if (a == b) return false;
        const auto& nb = heavy_adj[a];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    void rebuild_adjacency() {
        heavy_adj.assign(n, {});
        for (const Edge& e : heavy_edges) {
            heavy_adj[e.u].push_back(e.v);
            heavy_adj[e.v].push_back(e.u);
        }
        for (auto& nb : heavy_adj) std::sort(nb.begin(), nb.end());
    }
};

// Builds a sample from an explicit heavy-edge list (fixtures and unit tests).
inline DisorderSample disorder_from_edges(std::uint64_t n, double gamma,
                                          std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("disorder_from_edges: n must be >= 1");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n || e.u == e.v)
            throw std::invalid_argument("disorder_from_edges: edge endpoints out of range");
    }
    DisorderSample s;
    s.n = n;
    s.gamma = gamma;
    s.heavy_edges = std::move(edges);
    s.rebuild_adjacency();
    return s;
}

// Samples the edge set of G(n, p) sparsely: the edge count is drawn as
// Binomial(C(n,2), p), then that many distinct pairs are chosen uniformly
// with rejection of duplicates. Equivalent in law to keeping each pair
// independently with probability p.
inline std::vector<Edge> sample_er_edges(std::uint64_t n, double p, Xoshiro256pp& rng) {
    if (n < 1) throw std::invalid_argument("sample_er_edges: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_er_edges: p outside [0,1]");
    const std::uint64_t pairs = n * (n - 1) / 2;
    const auto count =
        static_cast<std::uint64_t>(binomial(rng, static_cast<std::int64_t>(pairs), p));

    std::vector<Edge> edges;
    edges.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    while (edges.size() < count) {
        const auto a = static_cast<Vertex>(rng.uniform_below(n));
        const auto b = static_cast<Vertex>(rng.uniform_below(n));
        if (a == b) continue;
        if (!seen.insert(edge_key(a, b, n)).second) continue;
        edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Draws the disorder for K_n: each of the C(n,2) pairs is heavy
// independently with probability 1/n. Deterministic given the seed.
inline DisorderSample sample_disorder(std::uint64_t n, double gamma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_disorder: n must be >= 1");
    Xoshiro256pp rng(seed);
    DisorderSample s;
    s.n = n;
    s.gamma = gamma;
    s.master_seed = seed;
    s.heavy_edges = sample_er_edges(n, 1.0 / static_cast<double>(n), rng);
    s.rebuild_adjacency();
    return s;
}

}  // namespace rstre
