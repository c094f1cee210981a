#pragma once
// Flat key/value experiment configs: a TOML-compatible subset (no tables),
// one `key = value` per line, `#` comments. Flags override file values
// through the same parser, so both paths share validation and error text.
// serialize_config() emits the canonical form used for hashing and
// round-trips back to an equal config.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rstre/errors.hpp"
#include "rstre/experiments.hpp"
#include "rstre/records.hpp"
#include "rstre/rng.hpp"

namespace rstre {

struct RunConfig {
    ExperimentConfig exp;
    RecordFormat format = RecordFormat::csv;
    std::string out_path;
    bool mode_explicit = false;  // a mode key/flag was actually given

    friend bool operator==(const RunConfig& a, const RunConfig& b) {
        return a.exp == b.exp && a.format == b.format && a.out_path == b.out_path;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Accepts "quoted" strings or bare words.
inline std::string parse_string_value(const std::string& raw, const std::string& ctx) {
    if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"')
        return raw.substr(1, raw.size() - 2);
    if (!raw.empty() && raw.front() != '[' && raw.front() != '"') return raw;
    throw ConfigError(ctx + ": expected a string, got '" + raw + "'");
}

inline std::int64_t parse_int_value(const std::string& raw, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(ctx + ": expected an integer, got '" + raw + "'");
    }
}

inline std::uint64_t parse_uint_value(const std::string& raw, const std::string& ctx) {
    const std::int64_t v = parse_int_value(raw, ctx);
    if (v < 0) throw ConfigError(ctx + ": expected a non-negative integer, got '" + raw + "'");
    return static_cast<std::uint64_t>(v);
}

inline double parse_float_value(const std::string& raw, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(ctx + ": expected a number, got '" + raw + "'");
    }
}

inline std::vector<std::uint64_t> parse_int_list_value(const std::string& raw,
                                                       const std::string& ctx) {
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
        throw ConfigError(ctx + ": expected a list like [1024, 2048], got '" + raw + "'");
    std::vector<std::uint64_t> out;
    std::string inner = raw.substr(1, raw.size() - 2);
    std::istringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(ctx + ": empty list element");
        out.push_back(parse_uint_value(item, ctx));
    }
    if (out.empty()) throw ConfigError(ctx + ": list must not be empty");
    return out;
}

}  // namespace detail

inline Mode mode_from_string(const std::string& s, const std::string& ctx) {
    if (s == "diameter") return Mode::diameter;
    if (s == "repeat") return Mode::repeat;
    if (s == "component-stats") return Mode::component_stats;
    if (s == "oracle-verify") return Mode::oracle_verify;
    throw ConfigError(ctx + ": unknown mode '" + s + "'");
}

inline Sampler sampler_from_string(const std::string& s, const std::string& ctx) {
    if (s == "wilson") return Sampler::wilson;
    if (s == "contracted-assembly") return Sampler::contracted_assembly;
    throw ConfigError(ctx + ": unknown sampler '" + s + "'");
}

// Applies one key/value pair; ctx names the source (file:line or flag).
inline void apply_config_value(RunConfig& cfg, const std::string& key,
                               const std::string& value, const std::string& ctx) {
    using namespace detail;
    if (key == "mode") {
        cfg.exp.mode = mode_from_string(parse_string_value(value, ctx), ctx);
        cfg.mode_explicit = true;
    } else if (key == "gamma") {
        cfg.exp.gamma = parse_float_value(value, ctx);
    } else if (key == "n") {
        cfg.exp.n_grid = {parse_uint_value(value, ctx)};
    } else if (key == "n_grid") {
        cfg.exp.n_grid = parse_int_list_value(value, ctx);
    } else if (key == "trials") {
        cfg.exp.trials_per_n = parse_uint_value(value, ctx);
    } else if (key == "seed") {
        cfg.exp.master_seed = parse_uint_value(value, ctx);
    } else if (key == "sampler") {
        cfg.exp.sampler = sampler_from_string(parse_string_value(value, ctx), ctx);
    } else if (key == "max_steps") {
        cfg.exp.caps.max_steps = parse_uint_value(value, ctx);
    } else if (key == "diameter_cap") {
        cfg.exp.caps.exact_diameter_cap =
            static_cast<std::uint32_t>(parse_uint_value(value, ctx));
    } else if (key == "threads") {
        cfg.exp.threads = static_cast<unsigned>(parse_uint_value(value, ctx));
    } else if (key == "format") {
        const std::string f = parse_string_value(value, ctx);
        if (f != "csv" && f != "jsonl")
            throw ConfigError(ctx + ": format must be \"csv\" or \"jsonl\", got '" + f + "'");
        cfg.format = record_format_from_string(f);
    } else if (key == "out") {
        cfg.out_path = parse_string_value(value, ctx);
    } else {
        throw ConfigError(ctx + ": unknown key '" + key + "'");
    }
}

inline RunConfig parse_config_text(const std::string& text, const std::string& source_name) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::string ctx = source_name + ":" + std::to_string(lineno);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ctx + ": expected 'key = value', got '" + line + "'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(ctx + ": missing key");
        if (value.empty()) throw ConfigError(ctx + ": missing value for '" + key + "'");
        apply_config_value(cfg, key, value, ctx);
    }
    return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("parse_config_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

// Validation that names the offending field; fills defaulted values
// (notably the sampler choice) so serialization is total.
inline void finalize_config(RunConfig& cfg, const std::string& ctx = "config") {
    if (cfg.exp.n_grid.empty())
        throw ConfigError(ctx + ": missing required field 'n' or 'n_grid'");
    for (std::size_t i = 0; i < cfg.exp.n_grid.size(); ++i) {
        if (cfg.exp.n_grid[i] < 1) throw ConfigError(ctx + ": n_grid entries must be >= 1");
        if (i > 0 && cfg.exp.n_grid[i] <= cfg.exp.n_grid[i - 1])
            throw ConfigError(ctx + ": n_grid must be strictly increasing");
    }
    if (cfg.exp.trials_per_n < 1) throw ConfigError(ctx + ": trials must be >= 1");
    if (!cfg.exp.sampler)
        cfg.exp.sampler =
            cfg.exp.gamma >= 2.0 ? Sampler::contracted_assembly : Sampler::wilson;
}

inline std::string serialize_config(const RunConfig& cfg) {
    std::string s;
    s += "mode = \"" + to_string(cfg.exp.mode) + "\"\n";
    s += "gamma = " + detail::format_double(cfg.exp.gamma) + "\n";
    s += "n_grid = [";
    for (std::size_t i = 0; i < cfg.exp.n_grid.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(cfg.exp.n_grid[i]);
    }
    s += "]\n";
    s += "trials = " + std::to_string(cfg.exp.trials_per_n) + "\n";
    s += "seed = " + std::to_string(cfg.exp.master_seed) + "\n";
    if (cfg.exp.sampler) s += "sampler = \"" + to_string(*cfg.exp.sampler) + "\"\n";
    s += "max_steps = " + std::to_string(cfg.exp.caps.max_steps) + "\n";
    s += "diameter_cap = " + std::to_string(cfg.exp.caps.exact_diameter_cap) + "\n";
    s += "threads = " + std::to_string(cfg.exp.threads) + "\n";
    s += "format = \"" + std::string(cfg.format == RecordFormat::csv ? "csv" : "jsonl") +
         "\"\n";
    if (!cfg.out_path.empty()) s += "out = \"" + cfg.out_path + "\"\n";
    return s;
}

// Hash over the experiment-defining fields only; thread counts and output
// paths never change the data and are excluded.
inline std::string config_hash(const RunConfig& cfg) {
    std::string s;
    s += "mode=" + to_string(cfg.exp.mode);
    s += ";gamma=" + detail::format_double(cfg.exp.gamma);
    s += ";n_grid=";
    for (std::size_t i = 0; i < cfg.exp.n_grid.size(); ++i)
        s += (i ? "," : "") + std::to_string(cfg.exp.n_grid[i]);
    s += ";trials=" + std::to_string(cfg.exp.trials_per_n);
    s += ";seed=" + std::to_string(cfg.exp.master_seed);
    if (cfg.exp.sampler) s += ";sampler=" + to_string(*cfg.exp.sampler);
    s += ";max_steps=" + std::to_string(cfg.exp.caps.max_steps);
    s += ";diameter_cap=" + std::to_string(cfg.exp.caps.exact_diameter_cap);
    s += ";format=" + std::string(cfg.format == RecordFormat::csv ? "csv" : "jsonl");
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

}  // namespace rstre
