// Copyright 2026 The skrates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKRATES_MMI_HPP_
#define SKRATES_MMI_HPP_

#include <algorithm>
#include <future>
#include <vector>

#include "skrates/config.hpp"
#include "skrates/entropy.hpp"
#include "skrates/error.hpp"
#include "skrates/partition.hpp"

namespace skrates {

struct MmiResult {
  Rational value;
  // Every minimizing partition, in restricted-growth order.
  std::vector<Partition> optimal_partitions;
  // The finest minimizer.
  Partition fundamental;
};

// I_P(Z_B) = [sum_C H(Z_C) - H(Z_B)] / (|P| - 1).
inline Rational partition_info(const EntropyOracle& oracle, VertexMask b, const Partition& p) {
  oracle.source().check_subset(b);
  require_partition_of(p, b);
  Rational sum = 0;
  for (VertexMask block : p.blocks) sum += oracle.entropy(block);
  sum -= oracle.entropy(b);
  return sum / static_cast<long>(p.size() - 1);
}

inline Rational partition_info(const HypergraphSource& source, VertexMask b, const Partition& p) {
  return partition_info(EntropyOracle(source), b, p);
}

// I_P(Z_B | Z_W), for conditioning on the observations of the vertices in W.
// Conditioning on Z_W deletes every edge that meets W.
inline Rational conditional_partition_info(const HypergraphSource& source, VertexMask b, const Partition& p,
                                           VertexMask w) {
  source.check_subset(w);
  if ((w & b) != 0) throw InputError("conditioning set overlaps the ground set");
  return partition_info(source.without_edges_touching(w), b, p);
}

struct MmiOptions {
  std::size_t threads = 1;
  std::size_t cap = enumeration_cap();
};

// Exhaustive minimization of I_P(Z_B) over Π'(B). The optimal set is checked
// to be closed under meets; the fundamental partition is their iterated meet.
inline MmiResult mmi(const EntropyOracle& oracle, VertexMask b, const MmiOptions& options = {}) {
  oracle.source().check_subset(b);
  if (popcount(b) < 2) throw InputError("MMI needs at least 2 vertices");
  require_within_cap(static_cast<std::size_t>(popcount(b)), options.cap, "MMI enumeration");

  const std::vector<Partition> partitions = enumerate_partitions(b);
  std::vector<Rational> values(partitions.size());
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, partitions.size()));
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = partition_info(oracle, b, partitions[i]);
  };
  if (threads == 1) {
    evaluate(0, partitions.size());
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (partitions.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < partitions.size(); begin += chunk) {
      jobs.push_back(std::async(std::launch::async, evaluate, begin, std::min(begin + chunk, partitions.size())));
    }
    for (auto& job : jobs) job.get();
  }

  MmiResult result;
  result.value = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (values[i] == result.value) result.optimal_partitions.push_back(partitions[i]);
  }
  result.fundamental = result.optimal_partitions.front();
  for (const Partition& p : result.optimal_partitions) {
    result.fundamental = meet(result.fundamental, p);
    if (partition_info(oracle, b, result.fundamental) != result.value) {
      throw InternalConsistencyError("meet of optimal partitions is not optimal");
    }
  }
  return result;
}

inline MmiResult mmi(const HypergraphSource& source, VertexMask b, const MmiOptions& options = {}) {
  return mmi(EntropyOracle(source), b, options);
}

}  // namespace skrates

#endif  // SKRATES_MMI_HPP_
