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

#ifndef SKRATES_ENTROPY_HPP_
#define SKRATES_ENTROPY_HPP_

#include <vector>

#include "skrates/rational.hpp"
#include "skrates/source.hpp"

namespace skrates {

// Joint entropies H(Z_B) of a hypergraphical source. Because the edge
// variables are independent, H(Z_B) is the total entropy of the edges that
// meet B. Up to kMemoVertices vertices every subset is tabulated at
// construction; the object is immutable afterwards.
class EntropyOracle {
 public:
  static constexpr std::size_t kMemoVertices = 16;

  explicit EntropyOracle(const HypergraphSource& source) : source_(source) {
    if (source.size() <= kMemoVertices) {
      const VertexMask all = source.all();
      table_.assign(std::size_t{all} + 1, Rational(0));
      for (VertexMask b = 1; b <= all && b != 0; ++b) table_[b] = compute(b);
    }
  }

  const HypergraphSource& source() const { return source_; }

  Rational entropy(VertexMask b) const {
    source_.check_subset(b);
    return table_.empty() ? compute(b) : table_[b];
  }

  // H(Z_B | Z_{V\B}): the edges lying entirely inside B.
  Rational cond_entropy(VertexMask b) const {
    source_.check_subset(b);
    Rational sum = 0;
    for (const Edge& e : source_.edges()) {
      if ((e.on & ~b) == 0) sum += e.h;
    }
    return sum;
  }

  Rational total() const { return entropy(source_.all()); }

 private:
  Rational compute(VertexMask b) const {
    Rational sum = 0;
    for (const Edge& e : source_.edges()) {
      if ((e.on & b) != 0) sum += e.h;
    }
    return sum;
  }

  HypergraphSource source_;
  std::vector<Rational> table_;
};

inline Rational entropy(const HypergraphSource& source, VertexMask b) { return EntropyOracle(source).entropy(b); }

inline Rational cond_entropy(const HypergraphSource& source, VertexMask b) {
  return EntropyOracle(source).cond_entropy(b);
}

}  // namespace skrates

#endif  // SKRATES_ENTROPY_HPP_
