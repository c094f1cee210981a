// Command-line harness: Monte Carlo sweeps over (n, gamma), component
// statistics tables, and the verification suites.
//
//   rstre sweep-diameter --gamma 5 --n-grid 4096,8192 --trials 200 --seed 1 --out d.csv
//   rstre sweep-repeat   --n 100000 --trials 200 --seed 1 --probe-k 50 --out r.csv
//   rstre component-stats --n 100000 --trials 100000 --j-max 10 --out stats.csv
//   rstre verify oracles|lemmas|scaling [--budget tiny] [--seed 1]
//
// Exit codes: 0 success, 1 check failure, 2 usage/config error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "rstre/branching.hpp"
#include "rstre/config.hpp"
#include "rstre/records.hpp"
#include "rstre/verify.hpp"
#include "rstre/version.hpp"

namespace {

using namespace rstre;

struct FlagValues {
    std::string config_path;
    std::string mode;
    std::string gamma;
    std::string n;
    std::string n_grid;
    std::string trials;
    std::string seed;
    std::string out;
    std::string format;
    std::string threads;
    std::string sampler;
};

void add_shared_flags(CLI::App* cmd, FlagValues& flags) {
    cmd->add_option("--config", flags.config_path, "config file (key = value lines)");
    cmd->add_option("--mode", flags.mode, "experiment mode (must match the subcommand)");
    cmd->add_option("--gamma", flags.gamma, "disorder exponent");
    cmd->add_option("--n", flags.n, "single vertex count");
    cmd->add_option("--n-grid", flags.n_grid, "comma-separated vertex counts, increasing");
    cmd->add_option("--trials", flags.trials, "trials per grid point");
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--out", flags.out, "output file (stdout when omitted)");
    cmd->add_option("--format", flags.format, "csv or jsonl");
    cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware)");
    cmd->add_option("--sampler", flags.sampler, "wilson or contracted-assembly");
}

RunConfig build_config(const FlagValues& flags, Mode required_mode) {
    RunConfig cfg;
    if (!flags.config_path.empty()) cfg = parse_config_file(flags.config_path);

    auto apply = [&](const std::string& key, const std::string& value,
                     const std::string& flag) {
        if (!value.empty()) apply_config_value(cfg, key, value, "flag " + flag);
    };
    apply("mode", flags.mode, "--mode");
    apply("gamma", flags.gamma, "--gamma");
    apply("n", flags.n, "--n");
    if (!flags.n_grid.empty())
        apply_config_value(cfg, "n_grid", "[" + flags.n_grid + "]", "flag --n-grid");
    apply("trials", flags.trials, "--trials");
    apply("seed", flags.seed, "--seed");
    apply("out", flags.out, "--out");
    apply("format", flags.format, "--format");
    apply("threads", flags.threads, "--threads");
    apply("sampler", flags.sampler, "--sampler");

    if (cfg.exp.threads == 0) {
        if (const char* env = std::getenv("RSTRE_THREADS"))
            cfg.exp.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }

    if (cfg.mode_explicit && cfg.exp.mode != required_mode)
        throw ConfigError("config: mode '" + to_string(cfg.exp.mode) +
                          "' does not match the subcommand");
    cfg.exp.mode = required_mode;
    finalize_config(cfg);
    return cfg;
}

void emit_records(const std::vector<ResultRecord>& records, const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
        std::cout << kRecordHeader << '\n';
        for (const auto& r : records) std::cout << record_to_csv_line(r) << '\n';
        return;
    }
    write_records(records, cfg.format, cfg.out_path, config_hash(cfg));
    std::cerr << "wrote " << records.size() << " records to " << cfg.out_path << "\n";
}

int cmd_sweep_diameter(const FlagValues& flags) {
    RunConfig cfg = build_config(flags, Mode::diameter);
    const auto records = run_diameter_sweep(cfg.exp);
    emit_records(records, cfg);
    return 0;
}

int cmd_sweep_repeat(const FlagValues& flags, const std::vector<std::int64_t>& probes) {
    RunConfig cfg = build_config(flags, Mode::repeat);
    const auto out = run_repeat_sweep(cfg.exp, probes);
    emit_records(out.records, cfg);
    if (!cfg.out_path.empty() && !out.k_probes.empty()) {
        const std::string probe_path = cfg.out_path + ".probes.csv";
        std::ofstream pf(probe_path, std::ios::binary);
        if (!pf) throw IoError("cannot open " + probe_path);
        pf << "trial,k,p_no_repeat\n";
        for (std::size_t g = 0; g < out.records.size(); ++g)
            for (std::size_t ki = 0; ki < out.k_probes.size(); ++ki) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.17g", out.probe_values[g][ki]);
                pf << g << ',' << out.k_probes[ki] << ',' << buf << '\n';
            }
        std::cerr << "wrote oracle probes to " << probe_path << "\n";
    }
    return 0;
}

int cmd_component_stats(const FlagValues& flags, std::uint64_t j_max) {
    RunConfig cfg = build_config(flags, Mode::component_stats);
    std::ostringstream table;
    table << "n,j,count,p_hat,p_se,cycle_free_frac,same_comp_freq,same_comp_se,trials\n";
    for (const std::uint64_t n : cfg.exp.n_grid) {
        const auto stats = component_statistics(
            n, cfg.exp.trials_per_n, j_max, SeedStream(cfg.exp.master_seed).child("cs", n));
        for (const auto& row : stats.rows) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%llu",
                          static_cast<unsigned long long>(n),
                          static_cast<unsigned long long>(row.j),
                          static_cast<unsigned long long>(row.count), row.p_hat, row.p_se,
                          row.cycle_free_frac, stats.same_component_freq,
                          stats.same_component_se,
                          static_cast<unsigned long long>(stats.trials));
            table << buf << '\n';
        }
    }
    if (cfg.out_path.empty()) {
        std::cout << table.str();
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw IoError("cannot open " + cfg.out_path);
        out << table.str();
        std::ofstream meta(cfg.out_path + ".meta", std::ios::binary);
        meta << "{\"artifact_version\":\"" << kArtifactVersion << "\",\"config_hash\":\""
             << config_hash(cfg) << "\",\"format\":\"csv\"}\n";
        std::cerr << "wrote component statistics to " << cfg.out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& budget, std::uint64_t seed,
               unsigned threads) {
    if (suite != "oracles" && suite != "lemmas" && suite != "scaling")
        throw ConfigError("usage: unknown verify suite '" + suite +
                          "' (expected oracles, lemmas or scaling)");
    VerifyOptions opt;
    opt.seed = seed;
    opt.threads = threads;
    opt.reduced = budget == "tiny";
    if (budget != "full" && budget != "tiny")
        throw ConfigError("usage: --budget must be 'full' or 'tiny'");

    if (opt.reduced)
        std::cout << "=== reduced-budget run: grids and trial counts are shrunk ===\n";
    const auto results = verify_suite(suite, opt);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random spanning trees under two-point edge disorder"};
    app.set_version_flag("--version", rstre::kArtifactVersion);
    app.require_subcommand(1);

    FlagValues flags;
    std::vector<std::int64_t> probes;
    std::uint64_t j_max = 10;
    std::string suite, budget = "full";
    std::string verify_seed = "1", verify_threads;

    auto* sd = app.add_subcommand("sweep-diameter", "tree diameters over an n-grid");
    add_shared_flags(sd, flags);
    auto* sr = app.add_subcommand("sweep-repeat", "size-biased stream repeat times");
    add_shared_flags(sr, flags);
    sr->add_option("--probe-k", probes, "oracle probe values k for P(t_1 > k)");
    auto* cs = app.add_subcommand("component-stats", "small-component statistics table");
    add_shared_flags(cs, flags);
    cs->add_option("--j-max", j_max, "largest component size tracked");
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "oracles | lemmas | scaling")->required();
    vf->add_option("--budget", budget, "full (default) or tiny");
    vf->add_option("--seed", verify_seed, "suite seed");
    vf->add_option("--threads", verify_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sd->parsed()) return cmd_sweep_diameter(flags);
        if (sr->parsed()) return cmd_sweep_repeat(flags, probes);
        if (cs->parsed()) return cmd_component_stats(flags, j_max);
        if (vf->parsed()) {
            unsigned threads = 0;
            if (!verify_threads.empty())
                threads = static_cast<unsigned>(std::stoul(verify_threads));
            else if (const char* env = std::getenv("RSTRE_THREADS"))
                threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
            return cmd_verify(suite, budget, std::stoull(verify_seed), threads);
        }
    } catch (const rstre::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rstre::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
