#pragma once
// Component decomposition of the heavy-edge graph: labels, sizes, excesses
// and exact diameters, ordered by decreasing size with ties broken by the
// smallest contained vertex label. Also the component-level contraction,
// whose pairwise weights |C_A||C_B| and self-loops |C_A|^2 drive the
// component random walk (one-step law |C_B|/n).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rstre/disorder.hpp"

namespace rstre {

struct DecomposeOptions {
    // Exact diameters: double-BFS for tree components, BFS from every vertex
    // otherwise. Components with excess >= 0 larger than this cap fall back
    // to the double-BFS lower bound and are flagged.
    std::uint32_t exact_diameter_cap = 50000;
    bool compute_diameters = true;  // sweeps that only need sizes switch this off
};

struct ComponentDecomposition {
    std::uint64_t n = 0;
    std::vector<std::uint32_t> label;                 // vertex -> component id
    std::vector<std::vector<Vertex>> components;      // each sorted ascending
    std::vector<std::uint64_t> sizes;
    std::vector<std::int64_t> excess;                 // |E| - |V|, -1 for trees
    std::vector<std::uint32_t> diameter;
    std::vector<bool> diameter_is_lower_bound;        // flagged fallback entries

    // heavy-edge adjacency, kept for BFS queries inside components
    std::vector<std::vector<Vertex>> adj;

    std::size_t component_count() const noexcept { return components.size(); }
};

namespace detail {

// BFS distances from src restricted to one component; dist uses UINT32_MAX
// as "unvisited" and is only touched on component vertices.
inline std::uint32_t bfs_farthest(const std::vector<std::vector<Vertex>>& adj,
                                  Vertex src, const std::vector<Vertex>& comp,
                                  std::vector<std::uint32_t>& dist,
                                  std::vector<Vertex>& queue,
                                  Vertex* farthest = nullptr) {
    for (Vertex v : comp) dist[v] = std::numeric_limits<std::uint32_t>::max();
    dist[src] = 0;
    queue.clear();
    queue.push_back(src);
    std::uint32_t best = 0;
    Vertex best_v = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : adj[u]) {
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

// Exact distance between two vertices of the same component (BFS).
inline std::uint32_t component_distance(const ComponentDecomposition& d, Vertex a, Vertex b) {
    if (a >= d.n || b >= d.n)
        throw std::invalid_argument("component_distance: vertex out of range");
    if (d.label[a] != d.label[b])
        throw std::invalid_argument("component_distance: vertices in different components");
    if (a == b) return 0;
    const auto& comp = d.components[d.label[a]];
    std::vector<std::uint32_t> dist(d.n);
    std::vector<Vertex> queue;
    detail::bfs_farthest(d.adj, a, comp, dist, queue);
    return dist[b];
}

inline ComponentDecomposition decompose(const DisorderSample& sample,
                                        const DecomposeOptions& opt = {}) {
    const std::uint64_t n = sample.n;
    ComponentDecomposition d;
    d.n = n;
    d.adj = sample.heavy_adj;

    // union-find with path halving
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Edge& e : sample.heavy_edges) {
        const Vertex ru = find(e.u), rv = find(e.v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }

    // roots are the smallest labels of their components, so ordering the
    // groups by (size desc, root asc) realizes the smallest-label tie-break
    std::vector<std::uint64_t> root_size(n, 0);
    for (Vertex v = 0; v < n; ++v) ++root_size[find(v)];
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n; ++v)
        if (find(v) == v) roots.push_back(v);
    std::sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) {
        if (root_size[a] != root_size[b]) return root_size[a] > root_size[b];
        return a < b;
    });

    const std::size_t k = roots.size();
    std::vector<std::uint32_t> comp_of_root(n);
    for (std::size_t i = 0; i < k; ++i) comp_of_root[roots[i]] = static_cast<std::uint32_t>(i);

    d.label.resize(n);
    d.components.resize(k);
    d.sizes.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        d.sizes[i] = root_size[roots[i]];
        d.components[i].reserve(root_size[roots[i]]);
    }
    for (Vertex v = 0; v < n; ++v) {
        const std::uint32_t c = comp_of_root[find(v)];
        d.label[v] = c;
        d.components[c].push_back(v);  // ascending since v is
    }

    d.excess.assign(k, -1);
    std::vector<std::uint64_t> edge_count(k, 0);
    for (const Edge& e : sample.heavy_edges) ++edge_count[d.label[e.u]];
    for (std::size_t i = 0; i < k; ++i)
        d.excess[i] = static_cast<std::int64_t>(edge_count[i]) -
                      static_cast<std::int64_t>(d.sizes[i]);

    d.diameter.assign(k, 0);
    d.diameter_is_lower_bound.assign(k, false);
    if (opt.compute_diameters) {
        std::vector<std::uint32_t> dist(n);
        std::vector<Vertex> queue;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& comp = d.components[i];
            if (comp.size() <= 1) continue;
            if (d.excess[i] == -1 || comp.size() > opt.exact_diameter_cap) {
                // double BFS; exact on trees, a lower bound otherwise
                Vertex far = comp.front();
                detail::bfs_farthest(d.adj, comp.front(), comp, dist, queue, &far);
                d.diameter[i] = detail::bfs_farthest(d.adj, far, comp, dist, queue);
                if (d.excess[i] >= 0) d.diameter_is_lower_bound[i] = true;
            } else {
                std::uint32_t best = 0;
                for (Vertex v : comp)
                    best = std::max(best, detail::bfs_farthest(d.adj, v, comp, dist, queue));
                d.diameter[i] = best;
            }
        }
    }
    return d;
}

// Union of the k largest components under the canonical ordering; sorted.
inline std::vector<Vertex> union_top_k(const ComponentDecomposition& d, std::size_t k) {
    if (k < 1 || k > d.component_count())
        throw std::invalid_argument("union_top_k: k out of range");
    std::vector<Vertex> out;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) total += d.components[i].size();
    out.reserve(total);
    for (std::size_t i = 0; i < k; ++i)
        out.insert(out.end(), d.components[i].begin(), d.components[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

// Component-level multigraph G'. Weights are implicit in the sizes:
// w'(A,B) = sizes[A]*sizes[B] for A != B, self-loop sizes[A]^2, so the
// total weight incident to A is sizes[A]*n.
struct ContractedGraph {
    std::vector<std::uint64_t> sizes;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> size_prefix;  // prefix sums for vertex -> block lookups

    std::size_t vertex_count() const noexcept { return sizes.size(); }

    double pair_weight(std::size_t a, std::size_t b) const {
        return a == b ? static_cast<double>(sizes[a]) * static_cast<double>(sizes[a])
                      : static_cast<double>(sizes[a]) * static_cast<double>(sizes[b]);
    }

    double total_incident(std::size_t a) const {
        return static_cast<double>(sizes[a]) * static_cast<double>(n);
    }

    // One walk step: P(next = B) = sizes[B]/n, self-loops included.
    std::uint32_t step(Xoshiro256pp& rng) const {
        const std::uint64_t x = rng.uniform_below(n);
        const auto it = std::upper_bound(size_prefix.begin(), size_prefix.end(), x);
        return static_cast<std::uint32_t>(it - size_prefix.begin());
    }
};

inline ContractedGraph contract(const ComponentDecomposition& d) {
    ContractedGraph g;
    g.sizes = d.sizes;
    g.n = d.n;
    g.size_prefix.resize(g.sizes.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < g.sizes.size(); ++i) {
        acc += g.sizes[i];
        g.size_prefix[i] = acc;
    }
    return g;
}

}  // namespace rstre
