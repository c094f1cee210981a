#pragma once
// Monte Carlo sweeps over (n, gamma): tree-diameter measurements, repeat
// times of the size-biased component stream, and log-log slope fits.
//
// Trials run in parallel but every record is produced from its own child
// seed and stored by trial index, so the emitted stream is byte-identical
// for a fixed config regardless of the thread count.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rstre/component_sampling.hpp"
#include "rstre/components.hpp"
#include "rstre/contracted_walk.hpp"
#include "rstre/disorder.hpp"
#include "rstre/rng.hpp"
#include "rstre/tree.hpp"
#include "rstre/wilson.hpp"

namespace rstre {

enum class Mode { diameter, repeat, component_stats, oracle_verify };
enum class Sampler { wilson, contracted_assembly };

inline std::string to_string(Mode m) {
    switch (m) {
        case Mode::diameter: return "diameter";
        case Mode::repeat: return "repeat";
        case Mode::component_stats: return "component-stats";
        case Mode::oracle_verify: return "oracle-verify";
    }
    return "?";
}

inline std::string to_string(Sampler s) {
    return s == Sampler::wilson ? "wilson" : "contracted-assembly";
}

struct ExperimentCaps {
    std::uint64_t max_steps = 0;            // 0: default cover budget
    std::uint32_t exact_diameter_cap = 50000;

    friend bool operator==(const ExperimentCaps&, const ExperimentCaps&) = default;
};

struct ExperimentConfig {
    std::vector<std::uint64_t> n_grid;
    double gamma = 5.0;
    std::uint64_t trials_per_n = 10;
    std::uint64_t master_seed = 1;
    Mode mode = Mode::diameter;
    std::optional<Sampler> sampler;         // filled by validate() when absent
    ExperimentCaps caps;
    unsigned threads = 0;                   // 0: hardware concurrency

    void validate() {
        if (n_grid.empty()) throw std::invalid_argument("config: n_grid is empty");
        for (std::size_t i = 0; i < n_grid.size(); ++i) {
            if (n_grid[i] < 1) throw std::invalid_argument("config: n must be >= 1");
            if (i > 0 && n_grid[i] <= n_grid[i - 1])
                throw std::invalid_argument("config: n_grid must be strictly increasing");
        }
        if (trials_per_n < 1) throw std::invalid_argument("config: trials must be >= 1");
        if (!sampler)
            sampler = gamma >= 2.0 ? Sampler::contracted_assembly : Sampler::wilson;
    }

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ResultRecord {
    std::uint64_t n = 0;
    double gamma = 0.0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> diameter;
    std::optional<std::int64_t> c1_size;
    std::optional<std::int64_t> max_excess;
    std::optional<std::int64_t> max_comp_diam;
    std::optional<std::int64_t> t_1;
    std::optional<double> s_n;
    bool flag_partial_cover = false;
    bool flag_capped = false;

    // wall-clock time; kept out of the serialized stream so that identical
    // configs produce byte-identical output files
    double elapsed_ms = 0.0;

    bool flagged() const noexcept { return flag_partial_cover || flag_capped; }

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_trials(std::uint64_t count, unsigned threads,
                            const std::function<void(std::uint64_t)>& fn) {
    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (workers == 0) workers = 1;
    if (workers == 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

namespace detail {

inline void fill_component_fields(const ComponentDecomposition& d, ResultRecord& rec) {
    rec.c1_size = static_cast<std::int64_t>(d.sizes.front());
    std::int64_t mx = -1;
    for (std::int64_t e : d.excess) mx = std::max(mx, e);
    rec.max_excess = mx;
    if (!d.diameter.empty()) {
        std::uint32_t md = 0;
        for (std::size_t i = 0; i < d.diameter.size(); ++i) {
            md = std::max(md, d.diameter[i]);
            if (d.diameter_is_lower_bound[i]) rec.flag_capped = true;
        }
        rec.max_comp_diam = static_cast<std::int64_t>(md);
    }
}

}  // namespace detail

// One diameter trial: fresh disorder, UST sample by the configured sampler,
// exact tree diameter plus component summary fields.
inline ResultRecord diameter_trial(std::uint64_t n, double gamma, Sampler sampler,
                                   const ExperimentCaps& caps, std::uint64_t trial_seed) {
    Xoshiro256pp split(trial_seed);
    const std::uint64_t disorder_seed = split();
    const std::uint64_t sampler_seed = split();

    ResultRecord rec;
    rec.n = n;
    rec.gamma = gamma;
    rec.seed = trial_seed;

    const DisorderSample sample = sample_disorder(n, gamma, disorder_seed);
    DecomposeOptions opt;
    opt.exact_diameter_cap = caps.exact_diameter_cap;
    const ComponentDecomposition d = decompose(sample, opt);
    detail::fill_component_fields(d, rec);

    if (sampler == Sampler::wilson) {
        const WeightedTree t = wilson_ust(sample, sampler_seed);
        rec.diameter = static_cast<std::int64_t>(tree_diameter(t));
    } else {
        const std::uint64_t budget =
            caps.max_steps == 0 ? default_cover_steps(n) : caps.max_steps;
        const AssembledTree at = assemble_full_tree(sample, d, sampler_seed, budget);
        if (at.covered) {
            rec.diameter = static_cast<std::int64_t>(tree_diameter(at.tree));
        } else {
            rec.flag_partial_cover = true;
        }
    }
    return rec;
}

inline std::vector<ResultRecord> run_diameter_sweep(ExperimentConfig cfg) {
    cfg.validate();
    if (cfg.mode != Mode::diameter)
        throw std::invalid_argument("run_diameter_sweep: mode must be 'diameter'");
    const SeedStream stream(cfg.master_seed);
    const std::uint64_t total = cfg.n_grid.size() * cfg.trials_per_n;
    std::vector<ResultRecord> records(total);
    parallel_trials(total, cfg.threads, [&](std::uint64_t g) {
        const std::uint64_t ni = g / cfg.trials_per_n;
        const std::uint64_t trial = g % cfg.trials_per_n;
        ResultRecord rec = diameter_trial(cfg.n_grid[ni], cfg.gamma, *cfg.sampler,
                                          cfg.caps, stream.child("diameter", g));
        rec.trial = trial;
        records[g] = std::move(rec);
    });
    return records;
}

struct RepeatSweepOutput {
    std::vector<ResultRecord> records;
    std::vector<std::int64_t> k_probes;
    // probe_values[g][ki] = exact P(t_1 > k_probes[ki]) for trial g's decomposition
    std::vector<std::vector<double>> probe_values;
};

// One repeat trial: disorder, component sizes, size-biased stream to the
// first repeat; optionally the exact no-repeat probability at probe values.
inline RepeatSweepOutput run_repeat_sweep(ExperimentConfig cfg,
                                          std::vector<std::int64_t> k_probes = {}) {
    cfg.validate();
    if (cfg.mode != Mode::repeat)
        throw std::invalid_argument("run_repeat_sweep: mode must be 'repeat'");
    const SeedStream stream(cfg.master_seed);
    const std::uint64_t total = cfg.n_grid.size() * cfg.trials_per_n;

    RepeatSweepOutput out;
    out.records.resize(total);
    out.k_probes = std::move(k_probes);
    out.probe_values.resize(total);

    parallel_trials(total, cfg.threads, [&](std::uint64_t g) {
        const std::uint64_t ni = g / cfg.trials_per_n;
        const std::uint64_t n = cfg.n_grid[ni];
        const std::uint64_t trial_seed = stream.child("repeat", g);
        Xoshiro256pp split(trial_seed);
        const std::uint64_t disorder_seed = split();
        const std::uint64_t stream_seed = split();

        ResultRecord rec;
        rec.n = n;
        rec.gamma = cfg.gamma;
        rec.trial = g % cfg.trials_per_n;
        rec.seed = trial_seed;

        const DisorderSample sample = sample_disorder(n, cfg.gamma, disorder_seed);
        DecomposeOptions opt;
        opt.compute_diameters = false;
        const ComponentDecomposition d = decompose(sample, opt);
        rec.c1_size = static_cast<std::int64_t>(d.sizes.front());
        std::int64_t mx = -1;
        for (std::int64_t e : d.excess) mx = std::max(mx, e);
        rec.max_excess = mx;

        const RepeatTrace trace = size_biased_stream(d, n + 1, stream_seed);
        rec.s_n = trace.s_n;
        if (trace.t_1) rec.t_1 = static_cast<std::int64_t>(*trace.t_1);

        auto& probes = out.probe_values[g];
        probes.reserve(out.k_probes.size());
        for (std::int64_t k : out.k_probes)
            probes.push_back(no_repeat_prob_exact(d.sizes, k));
        out.records[g] = std::move(rec);
    });
    return out;
}

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
};

namespace detail {

inline std::optional<double> record_field(const ResultRecord& r, const std::string& name) {
    auto from_int = [](const std::optional<std::int64_t>& v) -> std::optional<double> {
        if (!v) return std::nullopt;
        return static_cast<double>(*v);
    };
    if (name == "n") return static_cast<double>(r.n);
    if (name == "gamma") return r.gamma;
    if (name == "diameter") return from_int(r.diameter);
    if (name == "c1_size") return from_int(r.c1_size);
    if (name == "max_excess") return from_int(r.max_excess);
    if (name == "max_comp_diam") return from_int(r.max_comp_diam);
    if (name == "t_1") return from_int(r.t_1);
    if (name == "s_n") return r.s_n;
    throw std::invalid_argument("unknown record field: " + name);
}

}  // namespace detail

// Ordinary least squares of log(mean y per x) on log x over unflagged
// records. Flagged records and null fields are skipped.
inline ExponentFit estimate_exponent(const std::vector<ResultRecord>& records,
                                     const std::string& x_field, const std::string& y_field) {
    std::map<double, std::pair<double, std::uint64_t>> groups;  // x -> (sum y, count)
    for (const ResultRecord& r : records) {
        if (r.flagged()) continue;
        const auto x = detail::record_field(r, x_field);
        const auto y = detail::record_field(r, y_field);
        if (!x || !y) continue;
        auto& [sum, count] = groups[*x];
        sum += *y;
        ++count;
    }
    if (groups.size() < 2)
        throw std::invalid_argument("estimate_exponent: need at least 2 distinct grid points");

    std::vector<double> lx, ly;
    for (const auto& [x, acc] : groups) {
        const double mean = acc.first / static_cast<double>(acc.second);
        if (x <= 0.0 || mean <= 0.0)
            throw std::invalid_argument("estimate_exponent: log-log fit needs positive data");
        lx.push_back(std::log(x));
        ly.push_back(std::log(mean));
    }

    const auto k = static_cast<double>(lx.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (lx.size() > 2) {
        double ss_res = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            const double resid = ly[i] - (fit.intercept + fit.slope * lx[i]);
            ss_res += resid * resid;
        }
        fit.stderr_slope = std::sqrt(ss_res / (k - 2.0) / sxx);
    }
    return fit;
}

}  // namespace rstre
