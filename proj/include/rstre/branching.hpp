#pragma once
// Critical branching process with Binomial(n, 1/n) offspring, the
// one-vertex-per-step exploration of G(n, p) with lazily revealed edges,
// the breadth-first exploration coupled to a dominating branching process,
// and aggregate small-component statistics.
//
// The exploration never materializes the graph: at each step the number of
// newly discovered neighbors is Binomial(#unseen, p), and back-edges to the
// remaining active vertices are Binomial(#active - 1, p). Each vertex pair
// is examined exactly once this way, so the component-size law is exact.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rstre/rng.hpp"

namespace rstre {

struct BPRun {
    std::vector<std::uint64_t> generation_sizes;  // Z_0 = 1, Z_1, ...
    std::uint64_t height = 0;                     // largest k with Z_k > 0
    std::uint64_t total_progeny = 0;
    bool capped = false;
};

// Generation sizes are drawn in one shot: the Z_k individuals contribute
// Binomial(n * Z_k, 1/n) children in total.
inline BPRun simulate_bp(std::uint64_t n, std::uint64_t height_cap, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate_bp: n must be >= 1");
    if (height_cap < 1) throw std::invalid_argument("simulate_bp: height_cap must be >= 1");
    Xoshiro256pp rng(seed);
    const double p = 1.0 / static_cast<double>(n);

    BPRun run;
    run.generation_sizes.push_back(1);
    run.total_progeny = 1;
    std::uint64_t alive = 1;
    while (alive > 0) {
        if (run.height >= height_cap) {
            run.capped = true;
            break;
        }
        alive = static_cast<std::uint64_t>(
            binomial(rng, static_cast<std::int64_t>(n * alive), p));
        run.generation_sizes.push_back(alive);
        if (alive > 0) {
            ++run.height;
            run.total_progeny += alive;
        }
    }
    return run;
}

struct ExplorationLog {
    std::vector<std::uint64_t> active_sizes;  // |A_t| for t = 1..steps
    std::vector<std::uint64_t> eta;           // newly discovered per step
    std::vector<std::uint32_t> component_of_start;  // canonical discovery-order labels
    // back-edges to active vertices revealed while the start component was
    // being explored; zero iff that component is a tree
    std::uint64_t cycle_edges_found = 0;
    std::uint64_t steps = 0;
};

// One-vertex-per-step exploration started at `start`. Vertex identities are
// exchangeable under the lazy revelation, so discovered vertices receive the
// smallest unused labels in discovery order. If full_run is set the process
// continues through all components and takes exactly n steps; otherwise it
// stops when the start component is exhausted.
inline ExplorationLog explore_component(std::uint64_t n, double p, std::uint32_t start,
                                        std::uint64_t seed, bool full_run = false) {
    if (n < 1) throw std::invalid_argument("explore_component: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("explore_component: p outside [0,1]");
    if (start >= n) throw std::invalid_argument("explore_component: start out of range");

    Xoshiro256pp rng(seed);
    ExplorationLog log;
    log.component_of_start.push_back(start);

    std::uint32_t next_label = 0;  // fresh labels for discovered vertices, skipping start
    auto fresh = [&]() {
        if (next_label == start) ++next_label;
        return next_label++;
    };

    std::uint64_t active = 1;  // |A_0| = {start}
    bool in_first_component = true;
    for (std::uint64_t t = 1; t <= n; ++t) {
        const std::uint64_t unseen = n - (t - 1) - active;
        std::uint64_t discovered = 0;
        if (active >= 1) {
            discovered = static_cast<std::uint64_t>(
                binomial(rng, static_cast<std::int64_t>(unseen), p));
            if (active >= 2 && in_first_component)
                log.cycle_edges_found += static_cast<std::uint64_t>(
                    binomial(rng, static_cast<std::int64_t>(active - 1), p));
            else if (active >= 2)
                (void)binomial(rng, static_cast<std::int64_t>(active - 1), p);
            active = active - 1 + discovered;
        } else {
            // new component: the explored vertex comes from the unseen pool
            in_first_component = false;
            discovered = static_cast<std::uint64_t>(
                binomial(rng, static_cast<std::int64_t>(unseen - 1), p));
            active = discovered;
        }
        if (in_first_component)
            for (std::uint64_t i = 0; i < discovered; ++i)
                log.component_of_start.push_back(fresh());
        log.active_sizes.push_back(active);
        log.eta.push_back(discovered);
        log.steps = t;
        if (!full_run && active == 0) break;
    }
    return log;
}

inline std::uint64_t component_size_of_start(const ExplorationLog& log) {
    for (std::uint64_t t = 0; t < log.active_sizes.size(); ++t)
        if (log.active_sizes[t] == 0) return t + 1;
    return log.steps;  // unreachable for completed runs
}

struct DominationTrial {
    std::uint64_t component_diameter = 0;
    std::uint64_t twice_bp_height = 0;
    bool held = false;
    bool bp_capped = false;
};

// Breadth-first exploration of the component of one vertex, coupled level by
// level with a Binomial(n, 1/n) branching process: every explored vertex's
// child draw Binomial(#unseen, p) is topped up with an independent
// Binomial(n - #unseen, p), and individuals without a component counterpart
// reproduce with full Binomial(n, p) draws. Level sizes of the component
// never exceed those of the branching process.
inline DominationTrial coupled_domination_trial(std::uint64_t n, std::uint64_t seed,
                                                std::uint64_t bp_height_cap = 0) {
    if (n < 2) throw std::invalid_argument("coupled_domination_trial: n must be >= 2");
    if (bp_height_cap == 0)
        bp_height_cap = 64 + 10 * static_cast<std::uint64_t>(
                                 std::ceil(std::sqrt(static_cast<double>(n))));
    Xoshiro256pp rng(seed);
    const double p = 1.0 / static_cast<double>(n);

    // materialized component, local ids in discovery order, 0 = start
    std::vector<std::vector<std::uint32_t>> adj(1);
    std::vector<std::uint32_t> current_level{0};  // BFS frontier
    std::vector<std::uint64_t> comp_levels{1}, bp_levels{1};
    std::uint64_t unseen = n - 1;
    std::uint64_t bp_alive = 1;

    bool level_domination = true;
    while (!current_level.empty()) {
        std::vector<std::uint32_t> next_level;
        std::uint64_t bp_next = 0;
        for (std::size_t pos = 0; pos < current_level.size(); ++pos) {
            const std::uint32_t u = current_level[pos];
            const std::size_t siblings_before = next_level.size();
            const auto children = static_cast<std::uint64_t>(
                binomial(rng, static_cast<std::int64_t>(unseen), p));
            for (std::uint64_t c = 0; c < children; ++c) {
                const auto id = static_cast<std::uint32_t>(adj.size());
                adj.emplace_back();
                adj[u].push_back(id);
                adj[id].push_back(u);
                next_level.push_back(id);
            }
            unseen -= children;
            // back-edges to the active vertices: the rest of this level plus
            // next-level vertices discovered before u's own children
            for (std::size_t q = pos + 1; q < current_level.size(); ++q)
                if (rng.bernoulli(p)) {
                    adj[u].push_back(current_level[q]);
                    adj[current_level[q]].push_back(u);
                }
            for (std::size_t q = 0; q < siblings_before; ++q)
                if (rng.bernoulli(p)) {
                    adj[u].push_back(next_level[q]);
                    adj[next_level[q]].push_back(u);
                }
            // top-up so that this individual reaches a full Binomial(n, p)
            bp_next += children + static_cast<std::uint64_t>(binomial(
                                      rng, static_cast<std::int64_t>(n - unseen - children), p));
        }
        // branching-process individuals with no component counterpart
        if (bp_alive < current_level.size()) {
            level_domination = false;  // cannot happen under the coupling
        } else {
            const std::uint64_t ghosts = bp_alive - current_level.size();
            bp_next += static_cast<std::uint64_t>(
                binomial(rng, static_cast<std::int64_t>(n * ghosts), p));
        }

        comp_levels.push_back(next_level.size());
        bp_levels.push_back(bp_next);
        bp_alive = bp_next;
        current_level = std::move(next_level);
    }

    DominationTrial out;
    std::uint64_t height = 0;
    for (std::uint64_t j = 1; j < bp_levels.size(); ++j)
        if (bp_levels[j] > 0) height = j;
    std::uint64_t gen = bp_levels.size() - 1;
    while (bp_alive > 0) {
        if (gen >= bp_height_cap) {
            out.bp_capped = true;
            break;
        }
        bp_alive = static_cast<std::uint64_t>(
            binomial(rng, static_cast<std::int64_t>(n * bp_alive), p));
        ++gen;
        if (bp_alive > 0) height = gen;
    }

    // exact diameter of the materialized component
    const std::size_t size = adj.size();
    std::uint64_t diam = 0;
    std::vector<std::uint32_t> dist(size);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < size; ++s) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            for (std::uint32_t w : adj[u]) {
                if (dist[w] != UINT32_MAX) continue;
                dist[w] = dist[u] + 1;
                diam = std::max<std::uint64_t>(diam, dist[w]);
                queue.push_back(w);
            }
        }
    }

    for (std::size_t j = 0; j < comp_levels.size(); ++j)
        if (comp_levels[j] > bp_levels[j]) level_domination = false;

    out.component_diameter = diam;
    out.twice_bp_height = 2 * height;
    out.held = level_domination && diam <= 2 * height;
    return out;
}

struct ComponentStatsRow {
    std::uint64_t j = 0;
    std::uint64_t count = 0;       // trials with |C(start)| == j
    double p_hat = 0.0;
    double p_se = 0.0;
    std::uint64_t cycle_free = 0;  // among those trials
    double cycle_free_frac = 1.0;
};

struct ComponentStatsTable {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::vector<ComponentStatsRow> rows;  // j = 1 .. j_max
    std::uint64_t same_component_count = 0;
    double same_component_freq = 0.0;
    double same_component_se = 0.0;
};

// Monte Carlo over exploration trials at p = 1/n: the distribution of
// |C(start)| for small sizes, the cycle-free fraction conditional on the
// size, and the frequency that a second fixed vertex falls in the explored
// component. The latter is sampled as Bernoulli((size-1)/(n-1)), its exact
// conditional law under vertex exchangeability.
inline ComponentStatsTable component_statistics(std::uint64_t n, std::uint64_t trials,
                                                std::uint64_t j_max, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("component_statistics: n must be >= 2");
    if (j_max < 1 ||
        static_cast<double>(j_max) >
            std::pow(static_cast<double>(n), 0.2) + 1e-9)
        throw std::invalid_argument("component_statistics: j_max outside [1, n^(1/5)]");

    ComponentStatsTable table;
    table.n = n;
    table.trials = trials;
    table.rows.resize(j_max);
    for (std::uint64_t j = 1; j <= j_max; ++j) table.rows[j - 1].j = j;

    SeedStream stream(seed);
    const double p = 1.0 / static_cast<double>(n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Xoshiro256pp rng(stream.child("component-stats", trial));
        // inline lazy exploration of the first component only
        std::uint64_t active = 1, explored = 0, cycles = 0;
        while (active > 0) {
            const std::uint64_t unseen = n - explored - active;
            const auto discovered = static_cast<std::uint64_t>(
                binomial(rng, static_cast<std::int64_t>(unseen), p));
            if (active >= 2)
                cycles += static_cast<std::uint64_t>(
                    binomial(rng, static_cast<std::int64_t>(active - 1), p));
            ++explored;
            active = active - 1 + discovered;
        }
        const std::uint64_t size = explored;
        if (size <= j_max) {
            auto& row = table.rows[size - 1];
            ++row.count;
            if (cycles == 0) ++row.cycle_free;
        }
        const double p_same = static_cast<double>(size - 1) / static_cast<double>(n - 1);
        if (rng.bernoulli(p_same)) ++table.same_component_count;
    }

    const auto t = static_cast<double>(trials);
    for (auto& row : table.rows) {
        row.p_hat = static_cast<double>(row.count) / t;
        row.p_se = std::sqrt(row.p_hat * (1.0 - row.p_hat) / t);
        row.cycle_free_frac =
            row.count == 0 ? 1.0 : static_cast<double>(row.cycle_free) /
                                       static_cast<double>(row.count);
    }
    table.same_component_freq = static_cast<double>(table.same_component_count) / t;
    table.same_component_se =
        std::sqrt(table.same_component_freq * (1.0 - table.same_component_freq) / t);
    return table;
}

}  // namespace rstre
