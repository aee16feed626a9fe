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

#include "termrank/engine.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace termrank {
namespace {

using Counts = std::map<std::string, std::int64_t>;

Counts word_count(std::size_t i) {
  Counts c;
  c["doc"] = 1;
  c["w" + std::to_string(i % 7)] += static_cast<std::int64_t>(i);
  return c;
}

void merge_counts(Counts& into, Counts&& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

TEST(ShardPlan, RoundRobinAssignment) {
  ShardPlan plan = ShardPlan::resolve({4, 2, false});
  EXPECT_EQ(plan.shard_count, 4u);
  EXPECT_EQ(plan.workers, 2);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(plan.shard_of(i), i % 4);
  ShardPlan defaults = ShardPlan::resolve({});
  EXPECT_GE(defaults.workers, 1);
  EXPECT_EQ(defaults.shard_count, static_cast<std::size_t>(defaults.workers));
}

TEST(RunSharded, SumsIdenticalAcrossShardCounts) {
  const Counts expected = run_serial(100, Counts{}, word_count, merge_counts);
  EXPECT_EQ(expected.at("doc"), 100);
  for (std::size_t shards : {1u, 2u, 4u, 8u}) {
    for (int workers : {1, 3, 8}) {
      Counts got = run_sharded(100, ShardOptions{shards, workers, false}, Counts{},
                               word_count, merge_counts);
      EXPECT_EQ(got, expected) << shards << " shards, " << workers << " workers";
    }
  }
}

TEST(RunSharded, EmptyAndSingleItem) {
  EXPECT_TRUE((run_sharded(0, ShardOptions{4, 4, false}, Counts{}, word_count,
                           merge_counts)
                   .empty()));
  EXPECT_EQ((run_sharded(1, ShardOptions{4, 4, false}, Counts{}, word_count,
                         merge_counts)
                 .at("doc")),
            1);
}

TEST(RunSharded, FailureNamesShardAndDocument) {
  auto work = [](std::size_t i) -> Counts {
    if (i == 13) throw std::runtime_error("bad token");
    return word_count(i);
  };
  auto label = [](std::size_t i) { return "doc-" + std::to_string(i); };
  for (std::size_t shards : {1u, 4u}) {
    try {
      run_sharded(30, ShardOptions{shards, 4, false}, Counts{}, work, merge_counts, label);
      FAIL();
    } catch (const ShardFailure& e) {
      EXPECT_EQ(e.shard(), shards == 1 ? 0u : 13u % shards);
      EXPECT_EQ(e.item(), 13u);
      EXPECT_NE(std::string(e.what()).find("doc-13"), std::string::npos);
      EXPECT_NE(std::string(e.what()).find("bad token"), std::string::npos);
    }
  }
}

TEST(ParallelMap, PreservesOrderAndMatchesSerial) {
  auto fn = [](std::size_t i) { return static_cast<long>(i * i) - 7; };
  auto serial = serial_map<long>(1000, fn);
  for (std::size_t shards : {1u, 4u}) {
    EXPECT_EQ(parallel_map<long>(1000, ShardOptions{shards, 4, false}, fn), serial);
  }
  EXPECT_EQ(parallel_map<long>(1000, ShardOptions{0, 0, true}, fn), serial);
}

TEST(ParallelMap, PropagatesErrors) {
  auto fn = [](std::size_t i) -> int {
    if (i == 5) throw ConfigError("five");
    return 0;
  };
  EXPECT_THROW(parallel_map<int>(10, ShardOptions{2, 2, false}, fn), ConfigError);
}

}  // namespace
}  // namespace termrank
