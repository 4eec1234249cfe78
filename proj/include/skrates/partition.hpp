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

#ifndef SKRATES_PARTITION_HPP_
#define SKRATES_PARTITION_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "skrates/error.hpp"
#include "skrates/source.hpp"

namespace skrates {

// A partition of `ground` into at least two nonempty blocks, kept with
// blocks sorted by their smallest vertex index.
struct Partition {
  VertexMask ground = 0;
  std::vector<VertexMask> blocks;

  std::size_t size() const { return blocks.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline void canonicalize(Partition& p) {
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](VertexMask a, VertexMask b) { return lowest_bit(a) < lowest_bit(b); });
}

inline bool is_partition_of(const Partition& p, VertexMask ground) {
  if (p.ground != ground || p.blocks.size() < 2) return false;
  VertexMask seen = 0;
  for (VertexMask block : p.blocks) {
    if (block == 0 || (block & seen) != 0) return false;
    seen |= block;
  }
  return seen == ground;
}

inline void require_partition_of(const Partition& p, VertexMask ground) {
  if (!is_partition_of(p, ground)) {
    throw InputError("not a partition of the vertex subset into at least 2 nonempty blocks");
  }
}

inline Partition make_partition(VertexMask ground, std::vector<VertexMask> blocks) {
  Partition p{ground, std::move(blocks)};
  require_partition_of(p, ground);
  canonicalize(p);
  return p;
}

inline Partition singletons(VertexMask ground) {
  Partition p{ground, {}};
  for (VertexMask rest = ground; rest != 0; rest &= rest - 1) p.blocks.push_back(lowest_bit(rest));
  return p;
}

// True iff every block of `finer` lies inside some block of `coarser`.
inline bool refines(const Partition& finer, const Partition& coarser) {
  return std::all_of(finer.blocks.begin(), finer.blocks.end(), [&](VertexMask c) {
    return std::any_of(coarser.blocks.begin(), coarser.blocks.end(),
                       [c](VertexMask d) { return (c & ~d) == 0; });
  });
}

// Lattice meet: the coarsest common refinement.
inline Partition meet(const Partition& a, const Partition& b) {
  Partition out{a.ground, {}};
  for (VertexMask c : a.blocks) {
    for (VertexMask d : b.blocks) {
      if ((c & d) != 0) out.blocks.push_back(c & d);
    }
  }
  canonicalize(out);
  return out;
}

// Streams Π'(B) in restricted-growth-string order, skipping the one-block
// partition.
class PartitionStream {
 public:
  explicit PartitionStream(VertexMask ground) : ground_(ground) {
    for (VertexMask rest = ground; rest != 0; rest &= rest - 1) members_.push_back(lowest_bit(rest));
    if (members_.size() < 2) throw InputError("partitions need a ground set of at least 2 vertices");
    labels_.assign(members_.size(), 0);
    prefix_max_.assign(members_.size(), 0);
  }

  std::optional<Partition> next() {
    if (done_ || !advance()) {
      done_ = true;
      return std::nullopt;
    }
    const std::size_t count = static_cast<std::size_t>(prefix_max_.back()) + 1;
    Partition p{ground_, std::vector<VertexMask>(count, 0)};
    for (std::size_t i = 0; i < members_.size(); ++i) p.blocks[labels_[i]] |= members_[i];
    return p;
  }

 private:
  // Moves to the next restricted growth string; the all-zero string is
  // never produced.
  bool advance() {
    const std::size_t n = labels_.size();
    for (std::size_t i = n; i-- > 1;) {
      if (labels_[i] <= prefix_max_[i - 1]) {
        ++labels_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          labels_[j] = 0;
          prefix_max_[j] = prefix_max_[j - 1];
        }
        return true;
      }
    }
    return false;
  }

  VertexMask ground_;
  std::vector<VertexMask> members_;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
  bool done_ = false;
};

inline std::vector<Partition> enumerate_partitions(VertexMask ground) {
  std::vector<Partition> out;
  PartitionStream stream(ground);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace skrates

#endif  // SKRATES_PARTITION_HPP_
