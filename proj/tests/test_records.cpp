#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rstre/records.hpp"

using namespace rstre;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<ResultRecord> sample_records() {
    std::vector<ResultRecord> records;
    ResultRecord a;
    a.n = 4096;
    a.gamma = 5.0;
    a.trial = 0;
    a.seed = 123456789;
    a.diameter = 321;
    a.c1_size = 250;
    a.max_excess = 1;
    a.max_comp_diam = 40;
    records.push_back(a);

    ResultRecord b;
    b.n = 4096;
    b.gamma = -1.0;
    b.trial = 1;
    b.seed = 42;
    b.t_1 = 17;
    b.s_n = 0.0625;
    b.flag_partial_cover = true;
    b.flag_capped = true;
    records.push_back(b);
    return records;
}

}  // namespace

TEST(Records, EmptyListWritesHeaderOnlyCsvPlusMetadata) {
    const std::string path = testing::TempDir() + "empty.csv";
    write_records({}, RecordFormat::csv, path, "cafe");
    EXPECT_EQ(slurp(path), std::string(kRecordHeader) + "\n");

    const std::string meta = slurp(path + ".meta");
    const auto j = nlohmann::json::parse(meta);
    EXPECT_EQ(j["records"], 0);
    EXPECT_EQ(j["config_hash"], "cafe");
    EXPECT_EQ(j["artifact_version"], kArtifactVersion);
}

TEST(Records, CsvRoundTripIsFieldIdentical) {
    const std::string path = testing::TempDir() + "roundtrip.csv";
    const auto records = sample_records();
    write_records(records, RecordFormat::csv, path);
    const auto back = read_records_csv(path);
    ASSERT_EQ(back.size(), records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto expected = records[i];
        expected.elapsed_ms = 0.0;  // timing never round-trips
        EXPECT_EQ(back[i], expected);
    }
}

TEST(Records, RewriteIsByteIdentical) {
    const std::string p1 = testing::TempDir() + "bytes1.csv";
    const std::string p2 = testing::TempDir() + "bytes2.csv";
    const auto records = sample_records();
    write_records(records, RecordFormat::csv, p1, "h");
    write_records(records, RecordFormat::csv, p2, "h");
    EXPECT_EQ(slurp(p1), slurp(p2));
    EXPECT_EQ(slurp(p1 + ".meta"), slurp(p2 + ".meta"));
}

TEST(Records, JsonlCarriesSameFieldNames) {
    const std::string path = testing::TempDir() + "records.jsonl";
    write_records(sample_records(), RecordFormat::jsonl, path);
    std::ifstream in(path);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["n"], 4096);
    EXPECT_EQ(j["diameter"], 321);
    EXPECT_TRUE(j["t_1"].is_null());
    EXPECT_TRUE(j["flags"].empty());

    ASSERT_TRUE(std::getline(in, line));
    j = nlohmann::json::parse(line);
    EXPECT_TRUE(j["diameter"].is_null());
    EXPECT_EQ(j["t_1"], 17);
    EXPECT_DOUBLE_EQ(j["s_n"].get<double>(), 0.0625);
    EXPECT_EQ(j["flags"].size(), 2u);
    EXPECT_EQ(j["flags"][0], "partial-cover");
}

TEST(Records, FloatsKeepSeventeenSignificantDigits) {
    ResultRecord r;
    r.n = 8;
    r.gamma = 1.0 / 3.0;
    r.s_n = 0.12345678901234567;
    const std::string line = record_to_csv_line(r);
    EXPECT_NE(line.find("0.33333333333333331"), std::string::npos);
    EXPECT_NE(line.find("0.12345678901234566"), std::string::npos);
}

TEST(Records, IoFailureCarriesPathContext) {
    try {
        write_records({}, RecordFormat::csv, "/nonexistent-dir/x.csv");
        FAIL() << "expected IoError";
    } catch (const IoError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
    }
}
