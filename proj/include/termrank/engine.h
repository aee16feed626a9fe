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

// Deterministic sharded execution.
//
// Items (documents) are assigned round-robin to shards by their index in
// ingestion order. Each shard folds its items in order into a partial
// result; partials are then merged in shard order. With a commutative and
// associative merge the result equals the sequential left fold over all
// items, which is what the serial reference kernels compute.
//
// Parallel phases only ever merge integer counts and sets, so results are
// bit-identical for any shard or worker count.

#ifndef TERMRANK_ENGINE_H_
#define TERMRANK_ENGINE_H_

#include <omp.h>

#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "termrank/types.h"

namespace termrank {

struct ShardOptions {
  // 0 means "same as workers".
  std::size_t shards = 0;
  // 0 means hardware concurrency.
  int workers = 0;
  // Run the serial reference kernels instead of the OpenMP ones.
  bool serial = false;
};

struct ShardPlan {
  std::size_t shard_count = 1;
  int workers = 1;

  static ShardPlan resolve(const ShardOptions& options);
  std::size_t shard_of(std::size_t index) const { return index % shard_count; }
};

// Raised when per-item work throws; names the shard and the failing item.
class ShardFailure : public Error {
 public:
  ShardFailure(std::size_t shard, std::size_t item, const std::string& label,
               const std::string& cause);
  std::size_t shard() const { return shard_; }
  std::size_t item() const { return item_; }

 private:
  std::size_t shard_;
  std::size_t item_;
};

using ItemLabel = std::function<std::string(std::size_t)>;

// Sequential left fold: merge(acc, work(i)) for i = 0..count-1.
template <class Partial, class Work, class Merge>
Partial run_serial(std::size_t count, Partial identity, Work&& work,
                   Merge&& merge, const ItemLabel& label = {}) {
  Partial acc = std::move(identity);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      merge(acc, work(i));
    } catch (const std::exception& e) {
      throw ShardFailure(0, i, label ? label(i) : std::to_string(i), e.what());
    }
  }
  return acc;
}

// `work(i)` produces the partial for item i; `merge(into, from)` folds
// `from` into `into`. Work must not touch shared mutable state.
template <class Partial, class Work, class Merge>
Partial run_sharded(std::size_t count, const ShardOptions& options,
                    const Partial& identity, Work&& work, Merge&& merge,
                    const ItemLabel& label = {}) {
  const ShardPlan plan = ShardPlan::resolve(options);
  if (options.serial || plan.shard_count == 1 || count <= 1) {
    return run_serial(count, Partial(identity), work, merge, label);
  }
  const auto shards = static_cast<std::ptrdiff_t>(plan.shard_count);
  std::vector<Partial> partials(plan.shard_count, identity);
  std::vector<std::exception_ptr> errors(plan.shard_count);
  std::vector<std::size_t> failed_item(plan.shard_count, 0);

#pragma omp parallel for num_threads(plan.workers) schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < shards; ++s) {
    auto shard = static_cast<std::size_t>(s);
    for (std::size_t i = shard; i < count; i += plan.shard_count) {
      try {
        merge(partials[shard], work(i));
      } catch (...) {
        errors[shard] = std::current_exception();
        failed_item[shard] = i;
        break;
      }
    }
  }

  for (std::size_t s = 0; s < plan.shard_count; ++s) {
    if (!errors[s]) continue;
    std::string cause = "unknown error";
    try {
      std::rethrow_exception(errors[s]);
    } catch (const std::exception& e) {
      cause = e.what();
    } catch (...) {
    }
    std::size_t i = failed_item[s];
    throw ShardFailure(s, i, label ? label(i) : std::to_string(i), cause);
  }

  Partial result = std::move(partials[0]);
  for (std::size_t s = 1; s < plan.shard_count; ++s) {
    merge(result, std::move(partials[s]));
  }
  return result;
}

template <class Out, class Fn>
std::vector<Out> serial_map(std::size_t count, Fn&& fn) {
  std::vector<Out> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

// Order-preserving map: out[i] = fn(i). Serial reference below.
template <class Out, class Fn>
std::vector<Out> parallel_map(std::size_t count, const ShardOptions& options,
                              Fn&& fn) {
  if (options.serial) return serial_map<Out>(count, fn);
  const ShardPlan plan = ShardPlan::resolve(options);
  std::vector<Out> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for num_threads(plan.workers) schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace termrank

#endif  // TERMRANK_ENGINE_H_
