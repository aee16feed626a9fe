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

#include <algorithm>
#include <thread>

namespace termrank {

ShardPlan ShardPlan::resolve(const ShardOptions& options) {
  ShardPlan plan;
  int workers = options.workers;
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  plan.workers = workers;
  plan.shard_count =
      options.shards > 0 ? options.shards : static_cast<std::size_t>(workers);
  return plan;
}

ShardFailure::ShardFailure(std::size_t shard, std::size_t item,
                           const std::string& label, const std::string& cause)
    : Error("shard " + std::to_string(shard) + " failed on document '" + label +
            "': " + cause),
      shard_(shard),
      item_(item) {}

}  // namespace termrank
