#pragma once
// The verification suites behind the `verify` CLI subcommand and the
// acceptance test binary. Each check pins its thresholds in code, runs a
// deterministic seeded experiment and reports the measured values next to
// the threshold it was judged against.
//
// Suites: "oracles" (closed-form identities and exact samplers), "lemmas"
// (repeat times, component statistics, branching-process bounds), and
// "scaling" (diameter laws over the n-grid). A reduced budget shrinks the
// grids and trial counts and is labeled as such in the report.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rstre/branching.hpp"
#include "rstre/component_sampling.hpp"
#include "rstre/components.hpp"
#include "rstre/config.hpp"
#include "rstre/contracted_walk.hpp"
#include "rstre/disorder.hpp"
#include "rstre/experiments.hpp"
#include "rstre/records.hpp"
#include "rstre/small_graphs.hpp"
#include "rstre/tree.hpp"
#include "rstre/wilson.hpp"

namespace rstre {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    bool reduced = false;   // tiny-budget mode: smaller grids and trial counts
    unsigned threads = 0;
};

namespace verify_detail {

inline std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(4);
    ss << x;
    return ss.str();
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

inline std::string tree_signature(const WeightedTree& t) {
    std::vector<Edge> edges = t.edges;
    std::sort(edges.begin(), edges.end());
    std::string key;
    for (const Edge& e : edges) key += std::to_string(e.u) + "-" + std::to_string(e.v) + ";";
    return key;
}

}  // namespace verify_detail

// --- criterion 1: exact UST law on K_4 with one heavy edge of weight 9 ---
inline CheckResult check_ust_law_k4(const VerifyOptions& opt) {
    using namespace verify_detail;
    const int samples = opt.reduced ? 20000 : 100000;
    const double gamma = std::log(9.0) / std::log(4.0) - 1.0;  // 4^(1+gamma) = 9
    const auto sample = disorder_from_edges(4, gamma, {{0, 1}});

    SmallWeightedGraph g = SmallWeightedGraph::complete(4);
    g.set_weight(0, 1, 9.0);
    const auto en = enumerate_spanning_trees(g);

    std::map<std::string, double> law;
    for (const auto& [mask, weight] : en.trees) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < en.edges.size(); ++e)
            if ((mask >> e) & 1)
                edges.push_back(make_edge(static_cast<Vertex>(en.edges[e].first),
                                          static_cast<Vertex>(en.edges[e].second)));
        WeightedTree t = WeightedTree::from_edges(4, std::move(edges));
        law[tree_signature(t)] = weight / en.z;
    }

    SeedStream stream(opt.seed);
    std::map<std::string, int> counts;
    for (int i = 0; i < samples; ++i)
        ++counts[tree_signature(wilson_ust(sample, stream.child("ust-law", i)))];

    double worst = 0.0;
    for (const auto& [key, p] : law) {
        const double freq = counts.count(key) ? counts.at(key) / double(samples) : 0.0;
        worst = std::max(worst, std::fabs(freq - p));
    }
    bool alien = false;
    for (const auto& [key, c] : counts)
        if (!law.count(key)) alien = true;

    CheckResult res;
    res.name = "ust-law-k4-heavy-edge";
    res.pass = worst < 0.01 && !alien;
    res.detail = "max |freq - prob| = " + fmt(worst) + " (threshold 0.01, " +
                 std::to_string(samples) + " samples, 16 trees)";
    return res;
}

// --- criterion 2: K_m distance law and the sequential walk sampler ---
inline CheckResult check_km_distance_law(const VerifyOptions& opt) {
    using namespace verify_detail;
    const int samples = opt.reduced ? 20000 : 100000;
    SeedStream stream(opt.seed);

    // UST distances on unweighted K_8 between fixed vertices 0 and 1
    const auto sample = disorder_from_edges(8, 1.0, {});
    std::vector<int> tail_count(9, 0);
    for (int i = 0; i < samples; ++i) {
        const WeightedTree t = wilson_ust(sample, stream.child("km-ust", i));
        const auto d = tree_distance(t, 0, 1);
        for (std::uint32_t L = 1; L <= d && L <= 8; ++L) ++tail_count[L];
    }
    double worst_ust = 0.0;
    for (int L = 1; L <= 7; ++L)
        worst_ust = std::max(worst_ust, std::fabs(tail_count[L] / double(samples) -
                                                  km_distance_tail(8, L)));

    // sequential sampler at m = 3 and m = 8
    double worst_walk = 0.0;
    for (const int m : {3, 8}) {
        std::vector<int> walk_tail(m + 1, 0);
        for (int i = 0; i < samples; ++i) {
            const auto len =
                laplacian_walk_sample(m, stream.child("km-walk-" + std::to_string(m), i));
            for (int L = 1; L <= len && L <= m; ++L) ++walk_tail[L];
        }
        for (int L = 1; L <= m - 1; ++L)
            worst_walk = std::max(worst_walk, std::fabs(walk_tail[L] / double(samples) -
                                                        km_distance_tail(m, L)));
    }

    CheckResult res;
    res.name = "km-distance-law";
    res.pass = worst_ust < 0.01 && worst_walk < 0.01;
    res.detail = "UST tail dev = " + fmt(worst_ust) + ", walk tail dev = " + fmt(worst_walk) +
                 " (threshold 0.01 each)";
    return res;
}

// --- criterion 3: Kirchhoff identity on random small weighted graphs ---
inline SmallWeightedGraph random_connected_weighted_graph(Xoshiro256pp& rng, int m_lo,
                                                          int m_hi, double density) {
    while (true) {
        const int m = m_lo + static_cast<int>(rng.uniform_below(m_hi - m_lo + 1));
        SmallWeightedGraph g = SmallWeightedGraph::empty(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (rng.uniform01() < density) g.set_weight(i, j, 0.25 + 4.0 * rng.uniform01());
        if (g.connected()) return g;
    }
}

inline CheckResult check_kirchhoff_identity(const VerifyOptions& opt) {
    using namespace verify_detail;
    const int graphs = opt.reduced ? 15 : 50;
    Xoshiro256pp rng(splitmix64_mix(opt.seed ^ 0xa3c1ULL));

    // closed-form anchor: every K_3 edge has inclusion probability 2/3
    const double k3 = ust_edge_probability(SmallWeightedGraph::complete(3), 0, 1);
    const bool anchor_ok = std::fabs(k3 - 2.0 / 3.0) < 1e-12;

    double worst = 0.0;
    int edges_checked = 0;
    for (int trial = 0; trial < graphs; ++trial) {
        const SmallWeightedGraph g = random_connected_weighted_graph(rng, 3, 7, 0.6);
        const auto en = enumerate_spanning_trees(g);
        for (const auto& [u, v] : g.edge_list()) {
            double with_edge = 0.0;
            const int ei = en.edge_index(u, v);
            for (const auto& [mask, w] : en.trees)
                if ((mask >> ei) & 1) with_edge += w;
            const double p_enum = with_edge / en.z;
            const double p_kirch = g.w[u][v] * effective_resistance(g, u, v);
            worst = std::max(worst, std::fabs(p_enum - p_kirch));
            ++edges_checked;
        }
    }
    CheckResult res;
    res.name = "kirchhoff-identity";
    res.pass = worst < 1e-10 && anchor_ok;
    res.detail = "K_3 edge probability = " + fmt(k3) + " (expected 2/3); max |enumeration - "
                 "w*R_eff| = " + fmt(worst) + " over " + std::to_string(edges_checked) +
                 " edges in " + std::to_string(graphs) + " graphs (threshold 1e-10)";
    return res;
}

// --- criterion 4: repeat-time oracle against empirical streams ---
inline CheckResult check_repeat_time_oracle(const VerifyOptions& opt) {
    using namespace verify_detail;
    const int streams = opt.reduced ? 20000 : 100000;
    const int fixtures = opt.reduced ? 6 : 20;
    SeedStream stream(opt.seed);

    double worst_z = 0.0;  // deviation in standard-error units
    for (int f = 0; f < fixtures; ++f) {
        // n = 30 keeps every decomposition at <= 30 components
        const DisorderSample s = sample_disorder(30, 1.0, stream.child("fixture", f));
        const auto d = decompose(s);
        std::vector<int> tail(12, 0);
        for (int i = 0; i < streams; ++i) {
            const auto trace =
                size_biased_stream(d, 31, stream.child("stream-" + std::to_string(f), i));
            for (std::uint64_t k = 1; k <= 10; ++k)
                if (!trace.t_1 || *trace.t_1 > k) ++tail[k];
        }
        for (std::int64_t k = 1; k <= 10; ++k) {
            const double exact = no_repeat_prob_exact(d.sizes, k);
            const double freq = tail[k] / double(streams);
            const double se = std::sqrt(exact * (1.0 - exact) / streams) + 1e-12;
            worst_z = std::max(worst_z, std::fabs(freq - exact) / se);
        }
    }

    // birthday fixture: 365 singletons, k = 23
    const auto bday = decompose(disorder_from_edges(365, 1.0, {}));
    const double p_exact = no_repeat_prob_exact(bday.sizes, 23);
    int bday_tail = 0;
    for (int i = 0; i < streams; ++i) {
        const auto trace = size_biased_stream(bday, 366, stream.child("birthday", i));
        if (!trace.t_1 || *trace.t_1 > 23) ++bday_tail;
    }
    const double bday_freq = bday_tail / double(streams);
    const double bday_se = std::sqrt(p_exact * (1.0 - p_exact) / streams);
    const double bday_z = std::fabs(bday_freq - p_exact) / bday_se;

    CheckResult res;
    res.name = "repeat-time-oracle";
    res.pass = worst_z <= 3.0 && bday_z <= 3.0 && std::fabs(p_exact - 0.4927) < 0.0001;
    res.detail = "worst deviation = " + fmt(worst_z) + " SE over " + std::to_string(fixtures) +
                 " fixtures; birthday P(t_1>23) = " + fmt(p_exact) + " (expected 0.4927), " +
                 fmt(bday_z) + " SE (threshold 3 SE)";
    return res;
}

// --- criterion 5: survival envelope and tightness of t_1 / n^(1/3) ---
inline CheckResult check_repeat_envelope(const VerifyOptions& opt) {
    using namespace verify_detail;
    const std::uint64_t n_env = opt.reduced ? 10000 : 100000;
    const int trials = opt.reduced ? 50 : 200;
    SeedStream stream(opt.seed);

    DecomposeOptions no_diam;
    no_diam.compute_diameters = false;

    const std::vector<double> rs{0.5, 1.0};
    std::vector<double> mean_survival(rs.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
        const DisorderSample s = sample_disorder(n_env, 0.0, stream.child("env-disorder", t));
        const auto d = decompose(s, no_diam);
        const double sn = s_statistic(d);
        for (std::size_t ri = 0; ri < rs.size(); ++ri) {
            const auto k = static_cast<std::int64_t>(std::ceil(rs[ri] / sn));
            mean_survival[ri] += no_repeat_prob_exact(d.sizes, k);
        }
    }
    for (double& m : mean_survival) m /= trials;

    bool env_ok = true;
    std::string env_detail;
    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
        const double floor_value = repeat_envelope(rs[ri]) - 0.05;
        if (mean_survival[ri] < floor_value) env_ok = false;
        env_detail += "r=" + fmt(rs[ri]) + ": mean P = " + fmt(mean_survival[ri]) +
                      " >= " + fmt(floor_value) + (ri + 1 < rs.size() ? "; " : "");
    }

    // medians of t_1 / n^(1/3) across three decades
    const std::vector<std::uint64_t> grid =
        opt.reduced ? std::vector<std::uint64_t>{1000, 10000}
                    : std::vector<std::uint64_t>{1000, 10000, 100000};
    std::vector<double> medians;
    for (const std::uint64_t n : grid) {
        std::vector<double> scaled;
        for (int t = 0; t < trials; ++t) {
            const DisorderSample s =
                sample_disorder(n, 0.0, stream.child("tight-" + std::to_string(n), t));
            const auto d = decompose(s, no_diam);
            const auto trace =
                size_biased_stream(d, n + 1, stream.child("tstream-" + std::to_string(n), t));
            scaled.push_back(double(*trace.t_1) / std::cbrt(double(n)));
        }
        medians.push_back(median(std::move(scaled)));
    }
    const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
    const double spread = *hi / *lo;

    CheckResult res;
    res.name = "repeat-envelope-and-tightness";
    res.pass = env_ok && spread < 2.0;
    res.detail = env_detail + "; median(t_1/n^(1/3)) spread = " + fmt(spread) +
                 " (threshold 2.0, n in {1e3..1e5})";
    return res;
}

// --- criteria 6 and 7: diameter scaling ---
inline CheckResult check_diameter_scaling(const VerifyOptions& opt, double gamma,
                                          Sampler sampler, double norm_power,
                                          bool with_log_factor, double spread_limit,
                                          double slope_lo, double slope_hi,
                                          const std::string& name) {
    using namespace verify_detail;
    ExperimentConfig cfg;
    cfg.mode = Mode::diameter;
    cfg.gamma = gamma;
    cfg.sampler = sampler;
    cfg.master_seed = splitmix64_mix(opt.seed ^ fnv1a64(name));
    cfg.threads = opt.threads;
    if (opt.reduced) {
        // the short grid sits deeper in the log-correction regime, so the
        // fitted slope gets extra headroom; the pinned range applies to the
        // full grid
        cfg.n_grid = {1 << 12, 1 << 13, 1 << 14};
        cfg.trials_per_n = 50;
        slope_hi += 0.05;
    } else {
        cfg.n_grid = {1 << 12, 1 << 13, 1 << 14, 1 << 15, 1 << 16};
        cfg.trials_per_n = 200;
    }

    const auto records = run_diameter_sweep(cfg);

    std::vector<double> ratios;
    for (const std::uint64_t n : cfg.n_grid) {
        std::vector<double> normed;
        for (const auto& r : records) {
            if (r.n != n || r.flagged() || !r.diameter) continue;
            const double nn = static_cast<double>(n);
            double norm = std::pow(nn, norm_power);
            if (with_log_factor) norm *= std::log(nn);
            normed.push_back(static_cast<double>(*r.diameter) / norm);
        }
        ratios.push_back(median(std::move(normed)));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double spread = *hi / *lo;
    const auto fit = estimate_exponent(records, "n", "diameter");

    CheckResult res;
    res.name = name;
    res.pass = spread < spread_limit && fit.slope > slope_lo && fit.slope < slope_hi;
    res.detail = "median ratio spread = " + fmt(spread) + " (threshold " + fmt(spread_limit) +
                 "), log-log slope = " + fmt(fit.slope) + " (range " + fmt(slope_lo) + ".." +
                 fmt(slope_hi) + "), " + std::to_string(records.size()) + " trials";
    return res;
}

inline CheckResult check_diameter_scaling_large_gamma(const VerifyOptions& opt) {
    return check_diameter_scaling(opt, 5.0, Sampler::contracted_assembly, 1.0 / 3.0, true,
                                  3.0, 0.30, 0.45, "diameter-scaling-gamma5");
}

inline CheckResult check_diameter_scaling_negative_gamma(const VerifyOptions& opt) {
    return check_diameter_scaling(opt, -1.0, Sampler::wilson, 0.5, false, 2.0, 0.45, 0.55,
                                  "diameter-scaling-gamma-neg1");
}

// --- criterion 8: small-component statistics ---
inline CheckResult check_component_statistics(const VerifyOptions& opt) {
    using namespace verify_detail;
    const std::uint64_t n = opt.reduced ? 10000 : 100000;
    const std::uint64_t trials = opt.reduced ? 30000 : 100000;
    const std::uint64_t j_max = opt.reduced ? 6 : 10;
    SeedStream stream(opt.seed);

    const auto table = component_statistics(n, trials, j_max, stream.child("comp-stats", 0));

    double min_scaled = 1e18;
    bool cycle_ok = true;
    for (const auto& row : table.rows) {
        if (row.j >= 2)
            min_scaled = std::min(min_scaled,
                                  std::pow(double(row.j), 1.5) * row.p_hat);
        if (row.cycle_free_frac < 0.95) cycle_ok = false;
    }

    // same-component frequency across three decades, scaled by n^(1/3)
    double max_same_scaled = 0.0;
    const std::vector<std::uint64_t> grid =
        opt.reduced ? std::vector<std::uint64_t>{1000, 10000}
                    : std::vector<std::uint64_t>{1000, 10000, 100000};
    for (const std::uint64_t m : grid) {
        const auto tm = component_statistics(
            m, trials, 3, stream.child("same-" + std::to_string(m), 0));
        max_same_scaled =
            std::max(max_same_scaled, std::cbrt(double(m)) * tm.same_component_freq);
    }

    CheckResult res;
    res.name = "component-statistics";
    // thresholds frozen from a calibration run; see README for provenance
    const double c_size = 0.3, c_same = 0.5;
    res.pass = min_scaled >= c_size && cycle_ok && max_same_scaled <= c_same;
    res.detail = "min j^(3/2) P(|C|=j) = " + fmt(min_scaled) + " (>= " + fmt(c_size) +
                 "), cycle-free >= 0.95: " + (cycle_ok ? "yes" : "NO") +
                 ", max n^(1/3) P(same comp) = " + fmt(max_same_scaled) + " (<= " +
                 fmt(c_same) + ")";
    return res;
}

// --- criterion 9: branching-process domination and height tail ---
inline CheckResult check_bp_domination_and_tail(const VerifyOptions& opt) {
    using namespace verify_detail;
    const std::uint64_t n = 10000;
    const std::uint64_t trials = opt.reduced ? 20000 : 100000;
    SeedStream stream(opt.seed);

    std::uint64_t held = 0;
    for (std::uint64_t t = 0; t < trials; ++t)
        if (coupled_domination_trial(n, stream.child("domination", t)).held) ++held;

    // height tail: capped runs are censored above every probe and counted in
    const std::uint64_t bp_runs = trials;
    const std::uint64_t cap = 16384;
    std::uint64_t gt10 = 0, gt100 = 0, gt1000 = 0;
    for (std::uint64_t t = 0; t < bp_runs; ++t) {
        const BPRun run = simulate_bp(n, cap, stream.child("bp-tail", t));
        const std::uint64_t h = run.height;
        if (h > 10) ++gt10;
        if (h > 100) ++gt100;
        if (h > 1000) ++gt1000;
    }
    const double c10 = 10.0 * gt10 / double(bp_runs);
    const double c100 = 100.0 * gt100 / double(bp_runs);
    const double c1000 = 1000.0 * gt1000 / double(bp_runs);
    const double c_bp = 3.0;  // frozen tail constant

    CheckResult res;
    res.name = "bp-domination-and-tail";
    res.pass = held == trials && c10 <= c_bp && c100 <= c_bp && c1000 <= c_bp;
    res.detail = "domination held " + std::to_string(held) + "/" + std::to_string(trials) +
                 "; k*P(ht>k) = {" + fmt(c10) + ", " + fmt(c100) + ", " + fmt(c1000) +
                 "} (threshold " + fmt(c_bp) + ")";
    return res;
}

// --- criterion 10: structural property suite ---
inline CheckResult check_structural_properties(const VerifyOptions& opt) {
    using namespace verify_detail;
    Xoshiro256pp rng(splitmix64_mix(opt.seed ^ 0x57abULL));

    // exact bottleneck/balanced fixtures
    bool fixtures_ok = std::fabs(bottleneck_ratio_exact(SmallWeightedGraph::complete(4)) - 0.4) <
                           1e-12 &&
                       std::fabs(bottleneck_ratio_exact(SmallWeightedGraph::complete(2)) - 0.5) <
                           1e-12 &&
                       std::fabs(balanced_ratio(SmallWeightedGraph::complete(5)) - 1.0) < 1e-12;

    // excess-diameter inequality over every spanning tree of enumerated graphs
    auto graph_diam = [](const std::vector<std::vector<int>>& mat) {
        const int m = static_cast<int>(mat.size());
        int diam = 0;
        for (int s = 0; s < m; ++s) {
            std::vector<int> dist(m, -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (std::size_t h = 0; h < queue.size(); ++h)
                for (int v = 0; v < m; ++v)
                    if (mat[queue[h]][v] && dist[v] == -1) {
                        dist[v] = dist[queue[h]] + 1;
                        diam = std::max(diam, dist[v]);
                        queue.push_back(v);
                    }
        }
        return diam;
    };

    std::uint64_t trees_checked = 0;
    bool excess_ok = true;
    auto check_graph = [&](const SmallWeightedGraph& g) {
        const int m = g.m;
        std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
        int edges = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (g.w[i][j] > 0) {
                    mat[i][j] = mat[j][i] = 1;
                    ++edges;
                }
        const int exc = edges - m;
        const int dh = graph_diam(mat);
        const auto en = enumerate_spanning_trees(g);
        for (const auto& [mask, w] : en.trees) {
            std::vector<std::vector<int>> tm(m, std::vector<int>(m, 0));
            for (std::size_t e = 0; e < en.edges.size(); ++e)
                if ((mask >> e) & 1) {
                    const auto [a, b] = en.edges[e];
                    tm[a][b] = tm[b][a] = 1;
                }
            if (graph_diam(tm) > 2 * (exc + 2) * dh + exc + 1) excess_ok = false;
            ++trees_checked;
        }
    };

    // every connected graph on up to 5 vertices
    for (int m = 2; m <= 5; ++m) {
        const int pairs = m * (m - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            SmallWeightedGraph g = SmallWeightedGraph::empty(m);
            int bit = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j, ++bit)
                    if ((mask >> bit) & 1) g.set_weight(i, j, 1.0);
            if (g.connected()) check_graph(g);
        }
    }
    // complete graphs and random graphs at m = 6, 7
    check_graph(SmallWeightedGraph::complete(6));
    check_graph(SmallWeightedGraph::complete(7));
    const int extra = opt.reduced ? 10 : 40;
    for (int t = 0; t < extra; ++t) {
        SmallWeightedGraph g = random_connected_weighted_graph(rng, 6, 7, 0.5);
        for (int i = 0; i < g.m; ++i)
            for (int j = i + 1; j < g.m; ++j)
                if (g.w[i][j] > 0) g.set_weight(i, j, 1.0);  // unweighted variant
        check_graph(g);
    }

    // edge-inclusion handshake on random weighted graphs
    bool handshake_ok = true;
    for (int t = 0; t < (opt.reduced ? 5 : 15); ++t) {
        const SmallWeightedGraph g = random_connected_weighted_graph(rng, 3, 7, 0.7);
        double sum = 0;
        for (const auto& [u, v] : g.edge_list()) sum += ust_edge_probability(g, u, v);
        if (std::fabs(sum - (g.m - 1)) > 1e-9) handshake_ok = false;
    }

    // sampled trees satisfy the structural invariants; the direct sampler
    // runs at moderate weights (its escape cost grows like n^gamma), while
    // the assembly path covers the heavy-disorder regime
    bool trees_ok = true;
    for (int t = 0; t < (opt.reduced ? 10 : 30); ++t) {
        const DisorderSample s = sample_disorder(300, 1.0, splitmix64_mix(opt.seed + t));
        const WeightedTree w = wilson_ust(s, splitmix64_mix(opt.seed + 1000 + t));
        if (!w.is_valid_tree() || w.edges.size() != 299) trees_ok = false;
        const DisorderSample h = sample_disorder(300, 5.0, splitmix64_mix(opt.seed + 500 + t));
        const auto d = decompose(h);
        const auto at = assemble_full_tree(h, d, splitmix64_mix(opt.seed + 2000 + t));
        if (!at.covered || !at.tree.is_valid_tree()) trees_ok = false;
    }

    CheckResult res;
    res.name = "structural-properties";
    res.pass = fixtures_ok && excess_ok && handshake_ok && trees_ok;
    res.detail = std::string("bottleneck/balanced fixtures: ") +
                 (fixtures_ok ? "exact" : "WRONG") + "; excess-diameter bound over " +
                 std::to_string(trees_checked) + " spanning trees: " +
                 (excess_ok ? "holds" : "VIOLATED") + "; edge-probability handshake: " +
                 (handshake_ok ? "holds" : "VIOLATED") + "; sampled trees valid: " +
                 (trees_ok ? "yes" : "NO");
    return res;
}

// --- criterion 11: byte-identical reruns ---
inline CheckResult check_determinism(const VerifyOptions& opt, const std::string& tmp_dir) {
    ExperimentConfig cfg;
    cfg.mode = Mode::diameter;
    cfg.n_grid = {128, 256};
    cfg.gamma = 5.0;
    cfg.trials_per_n = opt.reduced ? 4 : 12;
    cfg.master_seed = opt.seed;
    cfg.sampler = Sampler::contracted_assembly;

    auto render = [&](const std::string& path, unsigned threads) {
        auto c = cfg;
        c.threads = threads;
        const auto records = run_diameter_sweep(c);
        write_records(records, RecordFormat::csv, path, "determinism");
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = render(tmp_dir + "/det-a.csv", 0);
    const std::string b = render(tmp_dir + "/det-b.csv", 0);
    const std::string c = render(tmp_dir + "/det-c.csv", 1);

    CheckResult res;
    res.name = "determinism";
    res.pass = !a.empty() && a == b && a == c;
    res.detail = res.pass ? "repeated sweeps are byte-identical (and thread-count independent)"
                          : "OUTPUT BYTES DIFFER between reruns";
    return res;
}

// --- suite assembly ---
inline std::vector<CheckResult> verify_suite(const std::string& suite,
                                             const VerifyOptions& opt,
                                             const std::string& tmp_dir = "/tmp") {
    std::vector<CheckResult> results;
    if (suite == "oracles") {
        results.push_back(check_ust_law_k4(opt));
        results.push_back(check_kirchhoff_identity(opt));
        results.push_back(check_structural_properties(opt));
        results.push_back(check_determinism(opt, tmp_dir));
    } else if (suite == "lemmas") {
        results.push_back(check_km_distance_law(opt));
        results.push_back(check_repeat_time_oracle(opt));
        results.push_back(check_repeat_envelope(opt));
        results.push_back(check_component_statistics(opt));
        results.push_back(check_bp_domination_and_tail(opt));
    } else if (suite == "scaling") {
        results.push_back(check_diameter_scaling_large_gamma(opt));
        results.push_back(check_diameter_scaling_negative_gamma(opt));
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    return results;
}

}  // namespace rstre
