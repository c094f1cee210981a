#pragma once
// Spanning trees of [n] with hop-count metrics: BFS distance, double-BFS
// diameter, and structural validation (n-1 edges, connected, acyclic).

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rstre/disorder.hpp"

namespace rstre {

struct WeightedTree {
    std::uint64_t n = 0;
    std::vector<Edge> edges;                   // n-1 unordered pairs
    std::vector<std::vector<Vertex>> adjacency;

    static WeightedTree from_edges(std::uint64_t n, std::vector<Edge> edges) {
        WeightedTree t;
        t.n = n;
        t.edges = std::move(edges);
        t.adjacency.assign(n, {});
        for (const Edge& e : t.edges) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("WeightedTree: edge endpoint out of range");
            t.adjacency[e.u].push_back(e.v);
            t.adjacency[e.v].push_back(e.u);
        }
        return t;
    }

    // Union-find check of the tree invariants.
    bool is_valid_tree() const {
        if (n == 0) return false;
        if (edges.size() != n - 1) return false;
        std::vector<Vertex> parent(n);
        std::iota(parent.begin(), parent.end(), Vertex{0});
        auto find = [&](Vertex x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const Edge& e : edges) {
            const Vertex ru = find(e.u), rv = find(e.v);
            if (ru == rv) return false;  // cycle
            parent[ru] = rv;
        }
        return true;  // n-1 acyclic edges on n vertices => connected
    }
};

namespace detail {

inline std::uint32_t tree_bfs(const WeightedTree& t, Vertex src,
                              std::vector<std::uint32_t>& dist, Vertex* farthest) {
    dist.assign(t.n, std::numeric_limits<std::uint32_t>::max());
    dist[src] = 0;
    std::vector<Vertex> queue{src};
    queue.reserve(t.n);
    std::uint32_t best = 0;
    Vertex best_v = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : t.adjacency[u]) {
            if (dist[w] != std::numeric_limits<std::uint32_t>::max()) continue;
            dist[w] = dist[u] + 1;
            if (dist[w] > best) {
                best = dist[w];
                best_v = w;
            }
            queue.push_back(w);
        }
    }
    if (farthest) *farthest = best_v;
    return best;
}

}  // namespace detail

// Exact diameter by double BFS (exact on trees).
inline std::uint32_t tree_diameter(const WeightedTree& t) {
    if (t.n == 0) throw std::invalid_argument("tree_diameter: empty tree");
    if (t.n == 1) return 0;
    std::vector<std::uint32_t> dist;
    Vertex far = 0;
    detail::tree_bfs(t, 0, dist, &far);
    return detail::tree_bfs(t, far, dist, nullptr);
}

inline std::uint32_t tree_distance(const WeightedTree& t, Vertex u, Vertex v) {
    if (u >= t.n || v >= t.n)
        throw std::invalid_argument("tree_distance: vertex out of range");
    if (u == v) return 0;
    std::vector<std::uint32_t> dist;
    detail::tree_bfs(t, u, dist, nullptr);
    return dist[v];
}

}  // namespace rstre
