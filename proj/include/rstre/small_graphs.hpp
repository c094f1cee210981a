#pragma once
// Closed-form and brute-force ground truths on small weighted graphs:
// spanning-tree enumeration with the partition function Z, the weighted
// matrix-tree determinant, effective resistances, Kirchhoff edge-inclusion
// probabilities, the exact K_m tree-distance law and its sequential
// sampler, and the bottleneck/balanced observables.
//
// The linear-algebra cores are templated on the scalar so tests can run
// them in exact rational arithmetic; the double instantiations use partial
// pivoting.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rstre/errors.hpp"
#include "rstre/rng.hpp"

namespace rstre {

// Dense symmetric weight matrix; zero entries mean "no edge".
struct SmallWeightedGraph {
    int m = 0;
    std::vector<std::vector<double>> w;

    static SmallWeightedGraph empty(int m) {
        if (m < 1) throw std::invalid_argument("SmallWeightedGraph: m must be >= 1");
        if (m > 16) throw SizeLimitError("SmallWeightedGraph: m must be <= 16");
        SmallWeightedGraph g;
        g.m = m;
        g.w.assign(m, std::vector<double>(m, 0.0));
        return g;
    }

    static SmallWeightedGraph complete(int m, double weight = 1.0) {
        SmallWeightedGraph g = empty(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) g.w[i][j] = weight;
        return g;
    }

    void set_weight(int u, int v, double weight) {
        if (u == v || u < 0 || v < 0 || u >= m || v >= m)
            throw std::invalid_argument("set_weight: bad vertex pair");
        if (weight < 0.0) throw std::invalid_argument("set_weight: negative weight");
        w[u][v] = w[v][u] = weight;
    }

    bool connected() const {
        std::vector<char> seen(m, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < m; ++v) {
                if (!seen[v] && w[u][v] > 0.0) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == m;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (w[i][j] > 0.0) edges.emplace_back(i, j);
        return edges;
    }
};

namespace detail {

template <class T>
bool is_zero(const T& x) {
    if constexpr (std::is_floating_point_v<T>)
        return std::fabs(x) < 1e-300;
    else
        return x == T(0);
}

// Determinant by Gaussian elimination. Partial pivoting for floating point;
// first-nonzero pivoting (exact) otherwise.
template <class T>
T determinant(std::vector<std::vector<T>> a) {
    const std::size_t k = a.size();
    T det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        if constexpr (std::is_floating_point_v<T>) {
            for (std::size_t r = col + 1; r < k; ++r)
                if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        } else {
            while (pivot < k && is_zero(a[pivot][col])) ++pivot;
            if (pivot == k) return T(0);
        }
        if (is_zero(a[pivot][col])) return T(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            if (is_zero(a[r][col])) continue;
            const T factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

// Solves a*x = b in place; same pivoting policy as determinant().
template <class T>
std::vector<T> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
    const std::size_t k = a.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        if constexpr (std::is_floating_point_v<T>) {
            for (std::size_t r = col + 1; r < k; ++r)
                if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        } else {
            while (pivot < k && is_zero(a[pivot][col])) ++pivot;
        }
        if (pivot >= k || is_zero(a[pivot][col]))
            throw std::runtime_error("solve_linear: singular system");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < k; ++r) {
            if (is_zero(a[r][col])) continue;
            const T factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<T> x(k, T(0));
    for (std::size_t ri = k; ri-- > 0;) {
        T acc = b[ri];
        for (std::size_t c = ri + 1; c < k; ++c) acc -= a[ri][c] * x[c];
        x[ri] = acc / a[ri][ri];
    }
    return x;
}

// Weighted Laplacian with row/column `ground` removed.
template <class T, class WeightAt>
std::vector<std::vector<T>> grounded_laplacian(int m, int ground, WeightAt&& wat) {
    std::vector<std::vector<T>> a(m - 1, std::vector<T>(m - 1, T(0)));
    auto idx = [&](int v) { return v < ground ? v : v - 1; };
    for (int i = 0; i < m; ++i) {
        if (i == ground) continue;
        T deg(0);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const T wij = wat(i, j);
            deg += wij;
            if (j != ground) a[idx(i)][idx(j)] = -wij;
        }
        a[idx(i)][idx(i)] = deg;
    }
    return a;
}

}  // namespace detail

// Weighted matrix-tree value: any cofactor of the weighted Laplacian.
template <class T, class WeightAt>
T matrix_tree_value(int m, WeightAt&& wat) {
    if (m == 1) return T(1);
    return detail::determinant(detail::grounded_laplacian<T>(m, 0, wat));
}

inline double matrix_tree_value(const SmallWeightedGraph& g) {
    return matrix_tree_value<double>(g.m, [&](int i, int j) { return g.w[i][j]; });
}

// Effective resistance between u and v with conductances w(e): grounds v,
// injects a unit current at u, reads the potential at u.
template <class T, class WeightAt>
T effective_resistance_t(int m, WeightAt&& wat, int u, int v) {
    if (u == v) throw std::invalid_argument("effective_resistance: u == v");
    auto a = detail::grounded_laplacian<T>(m, v, wat);
    std::vector<T> b(m - 1, T(0));
    const int ui = u < v ? u : u - 1;
    b[ui] = T(1);
    return detail::solve_linear(std::move(a), std::move(b))[ui];
}

inline double effective_resistance(const SmallWeightedGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.m || v >= g.m)
        throw std::invalid_argument("effective_resistance: vertex out of range");
    if (!g.connected()) throw std::invalid_argument("effective_resistance: graph not connected");
    return effective_resistance_t<double>(g.m, [&](int i, int j) { return g.w[i][j]; }, u, v);
}

// All spanning trees of a small connected graph, as bitmasks over the
// graph's edge list, with their weight products and the partition function.
struct TreeEnumeration {
    std::vector<std::pair<int, int>> edges;            // index -> edge
    std::vector<std::pair<std::uint64_t, double>> trees;  // (edge bitmask, weight product)
    double z = 0.0;

    int edge_index(int u, int v) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if ((edges[i].first == u && edges[i].second == v) ||
                (edges[i].first == v && edges[i].second == u))
                return static_cast<int>(i);
        return -1;
    }
};

inline TreeEnumeration enumerate_spanning_trees(const SmallWeightedGraph& g) {
    if (g.m > 10) throw SizeLimitError("enumerate_spanning_trees: m must be <= 10");
    if (!g.connected()) throw NoSpanningTreeError("enumerate_spanning_trees: graph not connected");

    TreeEnumeration out;
    out.edges = g.edge_list();
    if (g.m == 1) {
        out.trees.emplace_back(0, 1.0);
        out.z = 1.0;
        return out;
    }

    const int need = g.m - 1;
    const int ecount = static_cast<int>(out.edges.size());
    std::vector<int> parent(g.m), rank_(g.m, 0);
    for (int i = 0; i < g.m; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };

    // backtracking over edge indices; unions are undone on return
    struct Undo {
        int child, parent_was, root, rank_was;
    };
    std::vector<Undo> undo;
    std::uint64_t mask = 0;
    double product = 1.0;

    auto recurse = [&](auto&& self, int idx, int chosen) -> void {
        if (chosen == need) {
            out.trees.emplace_back(mask, product);
            out.z += product;
            return;
        }
        if (ecount - idx < need - chosen) return;
        for (int i = idx; i <= ecount - (need - chosen); ++i) {
            const auto [a, b] = out.edges[i];
            const int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            int child = ra, root = rb;
            if (rank_[child] > rank_[root]) std::swap(child, root);
            undo.push_back({child, parent[child], root, rank_[root]});
            parent[child] = root;
            if (rank_[child] == rank_[root]) ++rank_[root];
            mask |= (1ULL << i);
            product *= g.w[a][b];

            self(self, i + 1, chosen + 1);

            product /= g.w[a][b];
            mask &= ~(1ULL << i);
            const Undo u = undo.back();
            undo.pop_back();
            parent[u.child] = u.parent_was;
            rank_[u.root] = u.rank_was;
        }
    };
    recurse(recurse, 0, 0);

    // the partition function must match the weighted Laplacian cofactor
    const double det = matrix_tree_value(g);
    if (std::fabs(det - out.z) > 1e-9 * std::max(1.0, out.z))
        throw std::logic_error("enumerate_spanning_trees: enumeration Z " +
                               std::to_string(out.z) + " disagrees with matrix-tree value " +
                               std::to_string(det));
    return out;
}

// Exact edge-inclusion probability, computed both by enumeration and by
// Kirchhoff's formula w(e) * R_eff(u,v); the two routes must agree.
inline double ust_edge_probability(const SmallWeightedGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.m || v >= g.m || u == v)
        throw std::invalid_argument("ust_edge_probability: bad vertex pair");
    if (g.w[u][v] <= 0.0) throw std::invalid_argument("ust_edge_probability: edge absent");

    const TreeEnumeration en = enumerate_spanning_trees(g);
    const int ei = en.edge_index(u, v);
    double with_edge = 0.0;
    for (const auto& [mask, weight] : en.trees)
        if (mask & (1ULL << ei)) with_edge += weight;
    const double p_enum = with_edge / en.z;
    const double p_kirchhoff = g.w[u][v] * effective_resistance(g, u, v);
    if (std::fabs(p_enum - p_kirchhoff) > 1e-10)
        throw std::logic_error("ust_edge_probability: enumeration and Kirchhoff routes disagree: " +
                               std::to_string(p_enum) + " vs " + std::to_string(p_kirchhoff));
    return p_enum;
}

// Tail of the tree distance between two fixed distinct vertices of a UST on
// K_m: P(d >= L) = prod_{k=1}^{L-1} (m-k-1)/m. Empty product for L = 1.
inline double km_distance_tail(std::int64_t m, std::int64_t L) {
    if (m < 2) throw std::invalid_argument("km_distance_tail: m must be >= 2");
    if (L < 1) throw std::invalid_argument("km_distance_tail: L must be >= 1");
    if (L > m - 1) return 0.0;
    double p = 1.0;
    for (std::int64_t k = 1; k <= L - 1; ++k)
        p *= static_cast<double>(m - k - 1) / static_cast<double>(m);
    return p;
}

// E[d(u,v)] for distinct u, v, summed from the exact tail.
inline double km_expected_distance(std::int64_t m) {
    double e = 0.0;
    for (std::int64_t L = 1; L <= m - 1; ++L) e += km_distance_tail(m, L);
    return e;
}

// Sequential continue/stop sampler of the distance law above: after step k
// the path continues with probability (m-k-1)/m. Support is {1,...,m-1}.
inline std::int64_t laplacian_walk_sample(std::int64_t m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("laplacian_walk_sample: m must be >= 2");
    Xoshiro256pp rng(seed);
    std::int64_t k = 1;
    while (rng.uniform01() < static_cast<double>(m - k - 1) / static_cast<double>(m)) ++k;
    return k;
}

// Ratio of the largest to the smallest weighted vertex degree.
inline double balanced_ratio(const SmallWeightedGraph& g) {
    if (g.m < 2) throw std::invalid_argument("balanced_ratio: m must be >= 2");
    double mx = 0.0, mn = 0.0;
    for (int i = 0; i < g.m; ++i) {
        double deg = 0.0;
        for (int j = 0; j < g.m; ++j) deg += g.w[i][j];
        if (i == 0) {
            mx = mn = deg;
        } else {
            mx = std::max(mx, deg);
            mn = std::min(mn, deg);
        }
    }
    if (mn <= 0.0) throw std::invalid_argument("balanced_ratio: isolated vertex");
    return mx / mn;
}

// Exact bottleneck ratio: min over nonempty S with pi(S) <= 1/2 of
// cut(S) / (2 * total weight of edges meeting S), where pi is the
// stationary distribution of the weighted walk. Subsets are enumerated
// with vertex 0 pinned to one side; both S and its complement are tested.
inline double bottleneck_ratio_exact(const SmallWeightedGraph& g) {
    if (g.m > 16) throw SizeLimitError("bottleneck_ratio_exact: m must be <= 16");
    if (!g.connected())
        throw std::invalid_argument("bottleneck_ratio_exact: graph not connected");

    std::vector<double> deg(g.m, 0.0);
    double total_weight = 0.0;  // sum over edges
    for (int i = 0; i < g.m; ++i)
        for (int j = i + 1; j < g.m; ++j) {
            deg[i] += g.w[i][j];
            deg[j] += g.w[i][j];
            total_weight += g.w[i][j];
        }

    auto phi_of = [&](std::uint32_t s_mask) -> double {
        double cut = 0.0, within = 0.0, pi_vol = 0.0;
        for (int i = 0; i < g.m; ++i) {
            if (!(s_mask >> i & 1)) continue;
            pi_vol += deg[i];
            for (int j = 0; j < g.m; ++j) {
                if (j == i) continue;
                if (s_mask >> j & 1) {
                    if (j > i) within += g.w[i][j];
                } else {
                    cut += g.w[i][j];
                }
            }
        }
        const double pi_s = pi_vol / (2.0 * total_weight);
        if (pi_s <= 0.0 || pi_s > 0.5) return -1.0;               // filtered out
        return cut / (2.0 * (within + cut));
    };

    const std::uint32_t full = (1u << g.m) - 1;
    double best = 1.0;
    for (std::uint32_t half = 0; half < (1u << (g.m - 1)); ++half) {
        const std::uint32_t s = (half << 1) | 1u;  // vertex 0 always in S
        if (s == full) continue;
        for (std::uint32_t mask : {s, full ^ s}) {
            const double phi = phi_of(mask);
            if (phi >= 0.0) best = std::min(best, phi);
        }
    }
    return best;
}

}  // namespace rstre
