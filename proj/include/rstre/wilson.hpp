#pragma once
// Wilson's algorithm (iterated loop-erased random walks toward the current
// tree, rooted at vertex 0). Exact for arbitrary positive edge weights; here
// specialized to the two-valued disorder so that one walk step costs O(1)
// expected time: pick the heavy block vs the light block by total weight,
// then draw uniformly inside the block, rejecting heavy collisions in the
// light block (heavy degrees are logarithmic, so retries are rare).
//
// Step count caveat: a walk that starts inside a heavy component not yet
// touched by the tree leaves it only through a light edge, which takes
// ~n^gamma steps in expectation. Direct sampling is therefore practical for
// moderate weights or small n; the heavy-disorder regime is served by the
// contraction construction in contracted_walk.hpp.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rstre/disorder.hpp"
#include "rstre/tree.hpp"

namespace rstre {

namespace detail {

inline Vertex disorder_walk_step(const DisorderSample& s, Vertex u, double heavy_w,
                                 Xoshiro256pp& rng) {
    const auto& heavy = s.heavy_adj[u];
    const auto h = static_cast<double>(heavy.size());
    const auto light_count = static_cast<double>(s.n - 1) - h;
    const double total = h * heavy_w + light_count;
    if (!heavy.empty() && rng.uniform01() * total < h * heavy_w) {
        return heavy[rng.uniform_below(heavy.size())];
    }
    while (true) {
        const auto v = static_cast<Vertex>(rng.uniform_below(s.n));
        if (v == u || s.is_heavy(u, v)) continue;
        return v;
    }
}

// Core of Wilson's algorithm over an arbitrary one-step sampler.
template <class StepFn>
WeightedTree wilson_with_steps(std::uint64_t n, StepFn&& step) {
    std::vector<char> in_tree(n, 0);
    std::vector<Vertex> next(n, 0);
    in_tree[0] = 1;  // root
    for (Vertex start = 1; start < n; ++start) {
        Vertex u = start;
        while (!in_tree[u]) {
            next[u] = step(u);
            u = next[u];
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            u = next[u];
        }
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge(v, next[v]));
    return WeightedTree::from_edges(n, std::move(edges));
}

}  // namespace detail

// Exact sample from the weighted UST law of the disorder sample:
// P(T) proportional to the product of its edge weights.
inline WeightedTree wilson_ust(const DisorderSample& sample, std::uint64_t seed) {
    if (sample.n < 1) throw std::invalid_argument("wilson_ust: n must be >= 1");
    if (sample.n == 1) return WeightedTree::from_edges(1, {});
    Xoshiro256pp rng(seed);
    const double heavy_w = sample.heavy_weight();
    return detail::wilson_with_steps(sample.n, [&](Vertex u) {
        return detail::disorder_walk_step(sample, u, heavy_w, rng);
    });
}

// Uniform spanning tree of one heavy component (all weights equal inside),
// sampled by Wilson restricted to the component's adjacency. Returns edges
// in original vertex labels.
inline std::vector<Edge> wilson_component_ust(
    const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& comp,
    Xoshiro256pp& rng) {
    if (comp.size() <= 1) return {};

    // walk on original labels; per-vertex state keyed by position in comp
    std::vector<char> in_tree(comp.size(), 0);
    std::vector<Vertex> next(comp.size(), 0);
    auto index_of = [&](Vertex v) {
        const auto it = std::lower_bound(comp.begin(), comp.end(), v);
        return static_cast<std::uint32_t>(it - comp.begin());
    };

    in_tree[0] = 1;  // root at the smallest label
    for (std::uint32_t s = 1; s < comp.size(); ++s) {
        Vertex u = comp[s];
        std::uint32_t ui = s;
        while (!in_tree[ui]) {
            const auto& nb = adj[u];
            const Vertex v = nb[rng.uniform_below(nb.size())];
            next[ui] = v;
            u = v;
            ui = index_of(u);
        }
        u = comp[s];
        ui = s;
        while (!in_tree[ui]) {
            in_tree[ui] = 1;
            u = next[ui];
            ui = index_of(u);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(comp.size() - 1);
    for (std::uint32_t i = 1; i < comp.size(); ++i) edges.push_back(make_edge(comp[i], next[i]));
    return edges;
}

}  // namespace rstre
