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

#ifndef SKRATES_GF2_HPP_
#define SKRATES_GF2_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace skrates::gf2 {

// A vector over GF(2), packed 64 coordinates per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64) & 1U) != 0; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | bit) : (words_[i / 64] & ~bit);
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  std::optional<std::size_t> leading() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  // Inner product with a packed assignment (sizes up to 64 only).
  bool dot(std::uint64_t assignment) const { return (std::popcount(words_.empty() ? 0 : words_[0] & assignment) & 1) != 0; }

  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incrementally built row-echelon basis; each stored row has a distinct
// pivot (its lowest set coordinate) that no other row contains.
class EchelonBasis {
 public:
  // Reduces `v` against the basis; the result is zero iff v is in the span.
  BitVector reduce(BitVector v) const {
    for (const Row& row : rows_) {
      if (v.get(row.pivot)) v ^= row.vector;
    }
    return v;
  }

  bool contains(const BitVector& v) const { return !reduce(v).any(); }

  // Adds `v`; returns false when it was already in the span.
  bool insert(const BitVector& v) {
    BitVector r = reduce(v);
    const auto pivot = r.leading();
    if (!pivot) return false;
    for (Row& row : rows_) {
      if (row.vector.get(*pivot)) row.vector ^= r;
    }
    rows_.push_back(Row{*pivot, std::move(r)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    BitVector vector;
  };
  std::vector<Row> rows_;
};

inline std::size_t rank(const std::vector<BitVector>& vectors) {
  EchelonBasis basis;
  for (const BitVector& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace skrates::gf2

#endif  // SKRATES_GF2_HPP_
