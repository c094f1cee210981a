#pragma once
// Record serialization. CSV is the canonical format (fixed header order);
// JSONL carries one object per line with the same field names. Floats are
// rendered with 17 significant digits so re-parsing is lossless, and no
// wall-clock data enters the files: the same config yields the same bytes.
//
// Every data file gets a `<path>.meta` sidecar (single JSON line) with the
// artifact version, the config hash and the record count.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rstre/errors.hpp"
#include "rstre/experiments.hpp"
#include "rstre/version.hpp"

namespace rstre {

enum class RecordFormat { csv, jsonl };

inline RecordFormat record_format_from_string(const std::string& s) {
    if (s == "csv") return RecordFormat::csv;
    if (s == "jsonl") return RecordFormat::jsonl;
    throw std::invalid_argument("unknown record format: " + s);
}

inline constexpr const char* kRecordHeader =
    "n,gamma,trial,seed,diameter,c1_size,max_excess,max_comp_diam,t_1,s_n,flags";

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string flags_token(const ResultRecord& r) {
    std::string s;
    if (r.flag_partial_cover) s += "partial-cover";
    if (r.flag_capped) {
        if (!s.empty()) s += ';';
        s += "capped";
    }
    return s;
}

template <class T>
std::string opt_cell(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>)
        return format_double(*v);
    else
        return std::to_string(*v);
}

template <class T>
std::string opt_json(const std::optional<T>& v) {
    if (!v) return "null";
    if constexpr (std::is_floating_point_v<T>)
        return format_double(*v);
    else
        return std::to_string(*v);
}

}  // namespace detail

inline std::string record_to_csv_line(const ResultRecord& r) {
    std::string line;
    line += std::to_string(r.n);
    line += ',';
    line += detail::format_double(r.gamma);
    line += ',';
    line += std::to_string(r.trial);
    line += ',';
    line += std::to_string(r.seed);
    line += ',';
    line += detail::opt_cell(r.diameter);
    line += ',';
    line += detail::opt_cell(r.c1_size);
    line += ',';
    line += detail::opt_cell(r.max_excess);
    line += ',';
    line += detail::opt_cell(r.max_comp_diam);
    line += ',';
    line += detail::opt_cell(r.t_1);
    line += ',';
    line += detail::opt_cell(r.s_n);
    line += ',';
    line += detail::flags_token(r);
    return line;
}

inline std::string record_to_json_line(const ResultRecord& r) {
    std::string line = "{";
    line += "\"n\":" + std::to_string(r.n);
    line += ",\"gamma\":" + detail::format_double(r.gamma);
    line += ",\"trial\":" + std::to_string(r.trial);
    line += ",\"seed\":" + std::to_string(r.seed);
    line += ",\"diameter\":" + detail::opt_json(r.diameter);
    line += ",\"c1_size\":" + detail::opt_json(r.c1_size);
    line += ",\"max_excess\":" + detail::opt_json(r.max_excess);
    line += ",\"max_comp_diam\":" + detail::opt_json(r.max_comp_diam);
    line += ",\"t_1\":" + detail::opt_json(r.t_1);
    line += ",\"s_n\":" + detail::opt_json(r.s_n);
    line += ",\"flags\":[";
    bool first = true;
    if (r.flag_partial_cover) {
        line += "\"partial-cover\"";
        first = false;
    }
    if (r.flag_capped) {
        if (!first) line += ',';
        line += "\"capped\"";
    }
    line += "]}";
    return line;
}

inline void write_records(const std::vector<ResultRecord>& records, RecordFormat format,
                          const std::string& path, const std::string& config_hash = "") {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("write_records: cannot open " + path);
        if (format == RecordFormat::csv) {
            out << kRecordHeader << '\n';
            for (const ResultRecord& r : records) out << record_to_csv_line(r) << '\n';
        } else {
            for (const ResultRecord& r : records) out << record_to_json_line(r) << '\n';
        }
        if (!out) throw IoError("write_records: write failed for " + path);
    }
    std::ofstream meta(path + ".meta", std::ios::binary);
    if (!meta) throw IoError("write_records: cannot open " + path + ".meta");
    meta << "{\"artifact_version\":\"" << kArtifactVersion << "\""
         << ",\"config_hash\":\"" << config_hash << "\""
         << ",\"format\":\"" << (format == RecordFormat::csv ? "csv" : "jsonl") << "\""
         << ",\"records\":" << records.size() << "}\n";
    if (!meta) throw IoError("write_records: write failed for " + path + ".meta");
}

// CSV read-back; accepts exactly the layout written above.
inline std::vector<ResultRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_records_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader)
        throw IoError("read_records_csv: bad header in " + path);

    std::vector<ResultRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        while (cells.size() < 11) cells.emplace_back();  // trailing empty cells
        if (cells.size() != 11) throw IoError("read_records_csv: bad row in " + path);

        ResultRecord r;
        r.n = std::stoull(cells[0]);
        r.gamma = std::stod(cells[1]);
        r.trial = std::stoull(cells[2]);
        r.seed = std::stoull(cells[3]);
        auto opt_i = [](const std::string& s) -> std::optional<std::int64_t> {
            if (s.empty()) return std::nullopt;
            return std::stoll(s);
        };
        r.diameter = opt_i(cells[4]);
        r.c1_size = opt_i(cells[5]);
        r.max_excess = opt_i(cells[6]);
        r.max_comp_diam = opt_i(cells[7]);
        r.t_1 = opt_i(cells[8]);
        if (!cells[9].empty()) r.s_n = std::stod(cells[9]);
        r.flag_partial_cover = cells[10].find("partial-cover") != std::string::npos;
        r.flag_capped = cells[10].find("capped") != std::string::npos;
        records.push_back(r);
    }
    return records;
}

}  // namespace rstre
