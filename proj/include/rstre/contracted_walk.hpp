#pragma once
// The lazy component-level random walk and the constructions built on it.
//
// A walk step on the contracted multigraph G' lands on component B with
// probability |C_B|/n, self-loops included, realized by drawing a uniform
// vertex of [n] and taking its component. That drawn vertex is also the
// uniform entry point into B, and an independent uniform vertex of the
// current component is the exit point, matching the parallel-edge picture.
//
// aldous_broder_contracted collects the first-entry tree on G';
// assemble_full_tree joins per-component uniform spanning trees through the
// first-entry connector edges; assemble_lower_bound_path adds up the exact
// BFS distances between entry and exit points of the components visited
// before the first repeat.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rstre/components.hpp"
#include "rstre/disorder.hpp"
#include "rstre/errors.hpp"
#include "rstre/rng.hpp"
#include "rstre/tree.hpp"
#include "rstre/wilson.hpp"

namespace rstre {

struct ContractedWalkTrace {
    std::vector<std::uint32_t> visited;        // contracted-vertex ids in visit order
    std::vector<Vertex> entry_vertex;          // uniform entry point per step
    std::vector<Vertex> exit_vertex;           // uniform exit point per step
    std::optional<std::uint64_t> first_repeat_index;  // 1-based; >= 2 when present
};

struct ContractedWalkResult {
    WeightedTree tree;            // first-entry tree on G' (vertices = component ids)
    ContractedWalkTrace trace;
    bool covered = false;
    std::uint64_t steps = 0;
};

inline std::uint64_t default_cover_steps(std::uint64_t n) {
    return 50 * n * static_cast<std::uint64_t>(
                        std::ceil(std::log(static_cast<double>(n + 1))));
}

// Runs the walk from `start` until every contracted vertex has been seen or
// max_steps transitions were taken. A run that stops early is returned with
// covered = false and the partial trace; the caller flags the record.
inline ContractedWalkResult aldous_broder_contracted(const ContractedGraph& g,
                                                     const ComponentDecomposition& d,
                                                     std::uint32_t start,
                                                     std::uint64_t seed,
                                                     std::uint64_t max_steps) {
    const std::size_t k = g.vertex_count();
    if (start >= k) throw std::invalid_argument("aldous_broder_contracted: start out of range");

    Xoshiro256pp rng(seed);
    ContractedWalkResult res;
    std::vector<char> seen(k, 0);
    std::vector<Edge> gprime_edges;
    gprime_edges.reserve(k > 0 ? k - 1 : 0);

    auto uniform_in = [&](std::uint32_t comp) {
        const auto& members = d.components[comp];
        return members[rng.uniform_below(members.size())];
    };

    std::uint32_t current = start;
    seen[current] = 1;
    std::size_t seen_count = 1;
    res.trace.visited.push_back(current);
    res.trace.entry_vertex.push_back(uniform_in(current));
    res.trace.exit_vertex.push_back(uniform_in(current));

    while (seen_count < k && res.steps < max_steps) {
        // landing vertex determines both the next component and its entry point
        const auto landing = static_cast<Vertex>(rng.uniform_below(g.n));
        const std::uint32_t next = d.label[landing];
        ++res.steps;

        if (!res.trace.first_repeat_index) {
            const std::uint64_t idx = res.trace.visited.size() + 1;  // 1-based position
            if (std::find(res.trace.visited.begin(), res.trace.visited.end(), next) !=
                res.trace.visited.end())
                res.trace.first_repeat_index = idx;
        }
        if (!seen[next]) {
            seen[next] = 1;
            ++seen_count;
            gprime_edges.push_back(make_edge(current, next));
        }
        res.trace.visited.push_back(next);
        res.trace.entry_vertex.push_back(landing);
        res.trace.exit_vertex.push_back(uniform_in(next));
        current = next;
    }

    res.covered = seen_count == k;
    // on a partial cover this is the first-entry forest collected so far
    res.tree = WeightedTree::from_edges(k, std::move(gprime_edges));
    return res;
}

// Sum over the pre-repeat prefix of exact within-component distances between
// each step's entry and exit vertices. Lower-bounds the full-tree diameter.
inline std::uint64_t assemble_lower_bound_path(const ContractedWalkTrace& trace,
                                               const ComponentDecomposition& d) {
    if (!trace.first_repeat_index)
        throw NotApplicableError("assemble_lower_bound_path: no repeat observed");
    const std::uint64_t t1 = *trace.first_repeat_index;

    std::vector<std::uint32_t> dist(d.n);
    std::vector<Vertex> queue;
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i + 1 <= t1 - 1; ++i) {  // terms 1 .. t1-1
        const Vertex a = trace.entry_vertex[i];
        const Vertex b = trace.exit_vertex[i];
        if (a == b) continue;
        const auto& comp = d.components[trace.visited[i]];
        detail::bfs_farthest(d.adj, a, comp, dist, queue);
        total += dist[b];
    }
    return total;
}

struct AssembledTree {
    WeightedTree tree;
    ContractedWalkTrace trace;
    bool covered = false;
};

// Full-tree construction for heavily weighted disorder: per-component
// uniform spanning trees joined by the contracted walk's first-entry edges.
// Exact for the weighted UST law conditioned on every component being
// internally spanned by heavy edges (failure probability <= n^(4-gamma)).
inline AssembledTree assemble_full_tree(const DisorderSample& sample,
                                        const ComponentDecomposition& d,
                                        std::uint64_t seed,
                                        std::uint64_t max_steps = 0) {
    if (max_steps == 0) max_steps = default_cover_steps(sample.n);
    Xoshiro256pp rng(seed);
    const ContractedGraph g = contract(d);

    // size-biased start: the component of a uniform vertex
    const auto first = static_cast<Vertex>(rng.uniform_below(sample.n));
    const std::uint32_t start = d.label[first];

    ContractedWalkResult walk =
        aldous_broder_contracted(g, d, start, rng(), max_steps);

    AssembledTree out;
    out.covered = walk.covered;
    out.trace = std::move(walk.trace);
    if (!walk.covered) return out;

    std::vector<Edge> edges;
    edges.reserve(sample.n - 1);
    for (const auto& comp : d.components) {
        auto local = wilson_component_ust(d.adj, comp, rng);
        edges.insert(edges.end(), local.begin(), local.end());
    }

    // connector edges: for each first-entry step, the exit point recorded in
    // the source component and the landing vertex in the target component
    std::vector<char> entered(d.component_count(), 0);
    entered[out.trace.visited[0]] = 1;
    for (std::size_t i = 1; i < out.trace.visited.size(); ++i) {
        const std::uint32_t c = out.trace.visited[i];
        if (entered[c]) continue;
        entered[c] = 1;
        edges.push_back(make_edge(out.trace.exit_vertex[i - 1], out.trace.entry_vertex[i]));
    }

    out.tree = WeightedTree::from_edges(sample.n, std::move(edges));
    return out;
}

// True iff some tree path between two same-component vertices runs through
// a weight-1 edge; equivalently, some component's Steiner tree inside T
// contains a light edge. Walks the tree paths between consecutive
// same-component vertices in DFS order.
inline bool path_containment_violation(const DisorderSample& sample, const WeightedTree& t,
                                       const ComponentDecomposition& d) {
    if (t.n != sample.n)
        throw std::invalid_argument("path_containment_violation: tree size mismatch");
    const std::uint64_t n = t.n;
    if (n <= 1) return false;

    // iterative DFS for parent, depth and entry order
    std::vector<Vertex> parent(n, 0);
    std::vector<std::uint32_t> depth(n, 0), tin(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::uint32_t timer = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        tin[u] = timer++;
        for (Vertex w : t.adjacency[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent[w] = u;
            depth[w] = depth[u] + 1;
            stack.push_back(w);
        }
    }

    auto path_has_light_edge = [&](Vertex a, Vertex b) {
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            if (!sample.is_heavy(a, parent[a])) return true;
            a = parent[a];
        }
        return false;
    };

    for (const auto& comp : d.components) {
        if (comp.size() < 2) continue;
        std::vector<Vertex> order(comp.begin(), comp.end());
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return tin[a] < tin[b]; });
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (path_has_light_edge(order[i], order[i + 1])) return true;
    }
    return false;
}

}  // namespace rstre
