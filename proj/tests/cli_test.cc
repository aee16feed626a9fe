// Copyright 2026 The termrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "termrank/cli.h"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "termrank/term_store.h"

namespace termrank {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("termrank_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    store_ = (dir_ / "terms.jsonl").string();
    annotated_ = (dir_ / "annotated.tsv").string();
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "termrank");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string corpus() const {
    return std::string(TERMRANK_TEST_DATA_DIR) + "/synthetic_corpus.txt";
  }

  void preprocess_and_extract() {
    auto r = run({"preprocess", "--input", corpus(), "--format", "one-doc-per-line",
                  "--output", annotated_});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run({"--store", store_, "extract", "--input", annotated_});
    ASSERT_EQ(r.code, 0) << r.err;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::string store_;
  std::string annotated_;
};

TEST_F(CliTest, PreprocessRawDirectory) {
  for (int i = 0; i < 3; ++i) {
    std::ofstream(dir_ / ("doc" + std::to_string(i) + ".txt"))
        << "Drug effects were studied. Normal fault systems.";
  }
  fs::create_directories(dir_ / "raw");
  for (int i = 0; i < 3; ++i) {
    fs::rename(dir_ / ("doc" + std::to_string(i) + ".txt"),
               dir_ / "raw" / ("doc" + std::to_string(i) + ".txt"));
  }
  auto r = run({"preprocess", "--input", (dir_ / "raw").string(), "--format",
                "plain-text-dir", "--output", annotated_});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("3 documents, 6 sentences", 0), 0u) << r.out;
  EXPECT_TRUE(fs::exists(annotated_));
}

TEST_F(CliTest, ConlluPassThrough) {
  std::ofstream(dir_ / "in.conllu") << "# doc_id = a\n"
                                       "a\t0\tDrug\tdrug\tNOUN\n"
                                       "a\t0\teffects\teffect\tNOUN\n";
  auto r = run({"preprocess", "--input", (dir_ / "in.conllu").string(), "--format",
                "conllu", "--output", annotated_});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("1 documents, 1 sentences, 2 tokens", 0), 0u) << r.out;
  EXPECT_EQ(slurp(annotated_), "# doc_id = a\na\t0\tDrug\tdrug\tNOUN\n"
                               "a\t0\teffects\teffect\tNOUN\n");
}

TEST_F(CliTest, MissingStopwordFileIsConfigError) {
  auto r = run({"preprocess", "--input", corpus(), "--format", "one-doc-per-line",
                "--stopwords", "/nonexistent/stop.txt", "--output", annotated_});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--stopwords"), std::string::npos) << r.err;
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"preprocess", "--input", corpus(), "--format", "xml"}).code, 2);
  preprocess_and_extract();
  EXPECT_EQ(run({"--store", store_, "score", "--top-fraction", "0"}).code, 2);
  EXPECT_EQ(run({"--store", store_, "score", "--metrics", "tfidf"}).code, 2);
  EXPECT_EQ(run({"--store", store_, "score", "--context-mode", "window",
                 "--window", "9"})
                .code,
            2);
  EXPECT_EQ(run({"--store", store_, "top", "--metric", "bogus"}).code, 2);
  EXPECT_EQ(run({"bench", "--input", corpus(), "--format", "one-doc-per-line",
                 "--scales", "0"})
                .code,
            2);
}

TEST_F(CliTest, RuntimeErrorsExitOne) {
  EXPECT_EQ(run({"--store", (dir_ / "absent.jsonl").string(), "score"}).code, 1);
  preprocess_and_extract();
  auto r = run({"--store", store_, "top", "--metric", "lidf"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("score"), std::string::npos);
}

TEST_F(CliTest, ExtractIsDeterministic) {
  preprocess_and_extract();
  const auto first = slurp(store_);
  EXPECT_FALSE(first.empty());
  auto r = run({"--store", store_, "extract", "--input", annotated_});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(store_), first);
  EXPECT_NE(r.out.find("candidate terms"), std::string::npos);
}

TEST_F(CliTest, NoNounsGiveEmptyStoreAndWarning) {
  std::ofstream(dir_ / "in.tsv") << "a\t0\tquickly\tquickly\tADV\n"
                                    "a\t0\tran\trun\tVERB\n";
  auto r = run({"--store", store_, "extract", "--input", (dir_ / "in.tsv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0 candidate terms\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(slurp(store_), "");
}

TEST_F(CliTest, ScoreMetricsSubsetAndDependency) {
  preprocess_and_extract();
  auto r = run({"--store", store_, "score", "--metrics", "cvalue"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& rec : read_records(store_)) {
    EXPECT_TRUE(rec.c_value && rec.c_value_norm);
    EXPECT_FALSE(rec.nc_value || rec.lidf_value);
  }
  preprocess_and_extract();
  r = run({"--store", store_, "score", "--metrics", "ncvalue"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("cvalue"), std::string::npos);
  for (const auto& rec : read_records(store_)) {
    EXPECT_TRUE(rec.c_value && rec.nc_value);
    EXPECT_FALSE(rec.lidf_value);
  }
}

TEST_F(CliTest, WindowZeroGivesEightyPercentOfC) {
  preprocess_and_extract();
  auto r = run({"--store", store_, "score", "--context-mode", "window", "--window", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto records = read_records(store_);
  ASSERT_FALSE(records.empty());
  for (const auto& rec : records) {
    EXPECT_EQ(*rec.nc_value, 0.8 * *rec.c_value) << rec.term;
    EXPECT_EQ(rec.meta.context_mode, "window");
    EXPECT_EQ(rec.meta.window, 0);
  }
}

TEST_F(CliTest, TopTableShape) {
  preprocess_and_extract();
  ASSERT_EQ(run({"--store", store_, "score"}).code, 0);
  auto r = run({"--store", store_, "top", "--metric", "cvalue", "-k", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_TRUE(std::regex_match(header, std::regex(R"(rank\s+term\s+cvalue\s+frequency\s+nested)")))
      << header;
  std::string line;
  int rows = 0;
  const std::regex row(R"((\d+)\s+(.+?)\s+(\d\.\d\d)\s+(\d+)\s+(Yes|No))");
  while (std::getline(lines, line)) {
    std::smatch m;
    ASSERT_TRUE(std::regex_match(line, m, row)) << line;
    ++rows;
    EXPECT_EQ(std::stoi(m[1]), rows);
    if (rows == 1) EXPECT_EQ(m[3].str(), "1.00");
  }
  EXPECT_EQ(rows, 10);
}

TEST_F(CliTest, TopJsonAndSearch) {
  preprocess_and_extract();
  ASSERT_EQ(run({"--store", store_, "score"}).code, 0);
  auto r = run({"--store", store_, "top", "--metric", "lidf", "-k", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line, first_term;
  int n = 0;
  while (std::getline(lines, line)) {
    auto rec = parse_json_line(line);
    if (n++ == 0) first_term = rec.term;
  }
  EXPECT_EQ(n, 3);
  r = run({"--store", store_, "search", first_term, "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_json_line(r.out.substr(0, r.out.size() - 1)).term, first_term);
  r = run({"--store", store_, "search", first_term});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  r = run({"--store", store_, "search", "no such term at all"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(CliTest, ShardFlagsDoNotChangeStore) {
  preprocess_and_extract();
  ASSERT_EQ(run({"--store", store_, "score"}).code, 0);
  const auto expected = slurp(store_);
  auto other = (dir_ / "other.jsonl").string();
  ASSERT_EQ(run({"--shards", "3", "--workers", "2", "--store", other, "extract",
                 "--input", annotated_})
                .code,
            0);
  ASSERT_EQ(run({"--shards", "3", "--workers", "2", "--store", other, "score"}).code, 0);
  EXPECT_EQ(slurp(other), expected);
}

TEST_F(CliTest, BenchReport) {
  auto csv = (dir_ / "bench.csv").string();
  auto r = run({"bench", "--input", corpus(), "--format", "one-doc-per-line",
                "--scales", "1,2", "--repeats", "2", "--output", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "scale,phase,mean_seconds,stddev_seconds,n_runs");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_TRUE(std::regex_match(
        line, std::regex(R"([12],(preprocessing|cvalue|ncvalue|lidf),[0-9.e+-]+,[0-9.e+-]+,2)")))
        << line;
  }
  EXPECT_EQ(rows, 8);
}

}  // namespace
}  // namespace termrank
