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

#ifndef SKRATES_PROTOCOL_HPP_
#define SKRATES_PROTOCOL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skrates/error.hpp"
#include "skrates/gf2.hpp"
#include "skrates/rational.hpp"
#include "skrates/source.hpp"
#include "skrates/tree_packing.hpp"

namespace skrates {

// A one-shot binary linear key agreement scheme at blocklength n. Edge e
// contributes n * h(e) independent uniform bits; every message and key bit
// is a GF(2) linear form over all edge bits.
struct LinearProtocol {
  struct EdgeBits {
    std::string edge_id;
    VertexMask on = 0;
    std::size_t offset = 0;
    std::size_t count = 0;
  };
  struct Message {
    std::size_t speaker = 0;
    gf2::BitVector form;
  };

  std::size_t vertices = 0;
  std::size_t blocklength = 1;
  std::size_t total_bits = 0;
  std::vector<EdgeBits> layout;
  std::vector<Message> messages;
  std::vector<gf2::BitVector> key;

  // Bit `k` of edge `edge_id` as a unit form.
  gf2::BitVector bit(const std::string& edge_id, std::size_t k = 0) const {
    for (const EdgeBits& e : layout) {
      if (e.edge_id == edge_id) {
        if (k >= e.count) throw InputError("edge '" + edge_id + "' has only " + std::to_string(e.count) + " bits");
        return gf2::BitVector::unit(total_bits, e.offset + k);
      }
    }
    throw InputError("unknown edge id '" + edge_id + "'");
  }

  // Every bit observed by vertex i.
  std::vector<std::size_t> observed_bits(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const EdgeBits& e : layout) {
      if (e.on >> i & 1U) {
        for (std::size_t k = 0; k < e.count; ++k) out.push_back(e.offset + k);
      }
    }
    return out;
  }

  std::vector<std::size_t> message_bits() const {
    std::vector<std::size_t> count(vertices, 0);
    for (const Message& msg : messages) ++count[msg.speaker];
    return count;
  }
};

// An empty protocol with the bit layout of `source` at blocklength n.
inline LinearProtocol make_protocol_layout(const HypergraphSource& source, std::size_t n) {
  if (n == 0) throw InputError("blocklength must be positive");
  LinearProtocol protocol;
  protocol.vertices = source.size();
  protocol.blocklength = n;
  for (const Edge& e : source.edges()) {
    const Rational bits = e.h * static_cast<long>(n);
    if (!is_integral(bits)) {
      throw DomainError("n * h(" + e.id + ") = " + format_rational(bits) + " is not an integer");
    }
    const std::size_t count = bits.get_num().get_ui();
    protocol.layout.push_back({e.id, e.on, protocol.total_bits, count});
    protocol.total_bits += count;
  }
  return protocol;
}

// Tree-packing protocol. Tree T_j is used n * eta_j times; each use takes one
// fresh bit from every pair of the tree. The key bit of a use is the bit on
// the root's (vertex 0) first tree edge in neighbour order, and a vertex with
// d tree edges broadcasts the d - 1 XORs of consecutive incident bits.
inline LinearProtocol build_tree_protocol(const HypergraphSource& source, const TreePacking& packing,
                                          std::size_t n) {
  if (!source.is_pin()) throw DomainError("the tree-packing protocol requires a PIN source");
  LinearProtocol protocol = make_protocol_layout(source, n);
  std::map<VertexMask, std::vector<std::size_t>> pools;
  for (const LinearProtocol::EdgeBits& e : protocol.layout) {
    auto& pool = pools[e.on];
    for (std::size_t k = 0; k < e.count; ++k) pool.push_back(e.offset + k);
  }
  std::map<VertexMask, std::size_t> cursor;
  const std::size_t m = source.size();
  auto neighbour = [](VertexMask pair, std::size_t i) { return lowest_index(pair & ~(VertexMask{1} << i)); };

  for (const PackedTree& packed : packing.trees) {
    if (!is_spanning_tree(packed.tree, m)) throw DomainError("packing contains a tree that is not spanning");
    const Rational uses = packed.weight * static_cast<long>(n);
    if (!is_integral(uses) || uses < 0) {
      throw DomainError("n * eta = " + format_rational(uses) + " is not a nonnegative integer");
    }
    for (unsigned long use = 0; use < uses.get_num().get_ui(); ++use) {
      std::map<VertexMask, std::size_t> bit_of;
      for (VertexMask pair : packed.tree.pairs) {
        std::size_t& next = cursor[pair];
        const auto& pool = pools[pair];
        if (next >= pool.size()) throw DomainError("scaled packing exceeds the bits available on an edge pair");
        bit_of[pair] = pool[next++];
      }
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<VertexMask> incident;
        for (VertexMask pair : packed.tree.pairs) {
          if (pair >> i & 1U) incident.push_back(pair);
        }
        std::sort(incident.begin(), incident.end(),
                  [&](VertexMask a, VertexMask b) { return neighbour(a, i) < neighbour(b, i); });
        if (i == 0) protocol.key.push_back(gf2::BitVector::unit(protocol.total_bits, bit_of[incident.front()]));
        for (std::size_t k = 0; k + 1 < incident.size(); ++k) {
          gf2::BitVector form(protocol.total_bits);
          form.flip(bit_of[incident[k]]);
          form.flip(bit_of[incident[k + 1]]);
          protocol.messages.push_back({i, std::move(form)});
        }
      }
    }
  }
  return protocol;
}

enum class SecrecyVerdict { kPerfect, kLeaky, kUnrecoverable };

inline const char* to_string(SecrecyVerdict verdict) {
  switch (verdict) {
    case SecrecyVerdict::kPerfect:
      return "perfect";
    case SecrecyVerdict::kLeaky:
      return "leaky";
    case SecrecyVerdict::kUnrecoverable:
      return "unrecoverable";
  }
  return "unknown";
}

struct ExhaustiveCheck {
  std::uint64_t assignments = 0;
  // Every (key, transcript) value pair is equally likely given the transcript.
  bool key_uniform_independent = false;
  Rational conditional_key_entropy;  // H(K|F) in bits
};

struct SecrecyReport {
  std::size_t key_bits = 0;
  std::vector<std::size_t> message_bits;
  std::size_t message_rank = 0;
  std::size_t joint_rank = 0;
  std::vector<bool> recoverable;
  Rational conditional_key_entropy;  // from ranks
  SecrecyVerdict verdict = SecrecyVerdict::kPerfect;
  std::string exhaustive_status = "not_requested";
  std::optional<ExhaustiveCheck> exhaustive;
};

struct VerifyOptions {
  bool exhaustive = false;
  std::size_t max_exhaustive_bits = 24;
};

namespace detail {

inline ExhaustiveCheck enumerate_assignments(const LinearProtocol& protocol) {
  const std::size_t n_bits = protocol.total_bits;
  const std::size_t words = (protocol.messages.size() + 63) / 64;
  std::map<std::vector<std::uint64_t>, std::map<std::uint64_t, std::uint64_t>> joint;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_bits); ++x) {
    std::vector<std::uint64_t> transcript(words, 0);
    for (std::size_t k = 0; k < protocol.messages.size(); ++k) {
      if (protocol.messages[k].form.dot(x)) transcript[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < protocol.key.size(); ++k) {
      if (protocol.key[k].dot(x)) key |= std::uint64_t{1} << k;
    }
    ++joint[transcript][key];
  }
  ExhaustiveCheck check;
  check.assignments = std::uint64_t{1} << n_bits;
  check.key_uniform_independent = true;
  check.conditional_key_entropy = 0;
  for (const auto& [transcript, keys] : joint) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : keys) total += count;
    const std::uint64_t first = keys.begin()->second;
    const bool uniform = std::all_of(keys.begin(), keys.end(), [first](const auto& kv) { return kv.second == first; });
    if (!uniform || !std::has_single_bit(keys.size())) {
      throw InternalConsistencyError("linear protocol produced a non-uniform conditional key distribution");
    }
    if (keys.size() != (std::uint64_t{1} << protocol.key.size())) check.key_uniform_independent = false;
    const long bits = std::countr_zero(keys.size());
    check.conditional_key_entropy +=
        Rational(static_cast<long>(total)) / Rational(static_cast<long>(check.assignments)) * bits;
  }
  return check;
}

}  // namespace detail

// Recoverability by per-vertex span tests, secrecy by
// rank(messages ∪ key) - rank(messages) = H(K|F), and optionally a full
// enumeration of edge-bit assignments.
inline SecrecyReport verify_protocol(const LinearProtocol& protocol, const VerifyOptions& options = {}) {
  SecrecyReport report;
  report.key_bits = protocol.key.size();
  report.message_bits = protocol.message_bits();

  std::vector<gf2::BitVector> observed(protocol.vertices, gf2::BitVector(protocol.total_bits));
  for (std::size_t i = 0; i < protocol.vertices; ++i) {
    for (std::size_t bit : protocol.observed_bits(i)) observed[i].set(bit);
  }
  for (const LinearProtocol::Message& msg : protocol.messages) {
    if (msg.speaker >= protocol.vertices) throw InputError("message speaker out of range");
    gf2::BitVector outside = msg.form;
    for (std::size_t bit : protocol.observed_bits(msg.speaker)) outside.set(bit, false);
    if (outside.any()) throw DomainError("a message uses bits its speaker does not observe");
  }

  gf2::EchelonBasis transcript;
  for (const LinearProtocol::Message& msg : protocol.messages) transcript.insert(msg.form);
  report.message_rank = transcript.rank();
  gf2::EchelonBasis joint = transcript;
  for (const gf2::BitVector& k : protocol.key) joint.insert(k);
  report.joint_rank = joint.rank();
  report.conditional_key_entropy = static_cast<long>(report.joint_rank - report.message_rank);

  bool all_recover = true;
  for (std::size_t i = 0; i < protocol.vertices; ++i) {
    gf2::EchelonBasis view = transcript;
    for (std::size_t bit : protocol.observed_bits(i)) view.insert(gf2::BitVector::unit(protocol.total_bits, bit));
    const bool ok = std::all_of(protocol.key.begin(), protocol.key.end(),
                                [&view](const gf2::BitVector& k) { return view.contains(k); });
    report.recoverable.push_back(ok);
    all_recover = all_recover && ok;
  }
  if (!all_recover) {
    report.verdict = SecrecyVerdict::kUnrecoverable;
  } else if (report.conditional_key_entropy != static_cast<long>(report.key_bits)) {
    report.verdict = SecrecyVerdict::kLeaky;
  } else {
    report.verdict = SecrecyVerdict::kPerfect;
  }

  if (options.exhaustive) {
    if (protocol.total_bits > options.max_exhaustive_bits || protocol.total_bits >= 64 || protocol.key.size() >= 64) {
      report.exhaustive_status = "cap_exceeded";
    } else {
      report.exhaustive = detail::enumerate_assignments(protocol);
      report.exhaustive_status = "done";
    }
  }
  return report;
}

// r_K = key bits / n and r_i = message bits of i / n.
inline RatePoint measured_rates(const LinearProtocol& protocol) {
  const long n = static_cast<long>(protocol.blocklength);
  RatePoint point{make_rational(static_cast<long>(protocol.key.size()), n), {}};
  for (std::size_t bits : protocol.message_bits()) point.rates.push_back(make_rational(static_cast<long>(bits), n));
  return point;
}

// Smallest n making every n * h(e) and n * eta_j an integer.
inline std::size_t minimal_blocklength(const HypergraphSource& source, const TreePacking& packing) {
  mpz_class n = 1;
  for (const Edge& e : source.edges()) n = lcm(n, mpz_class(e.h.get_den()));
  for (const PackedTree& t : packing.trees) n = lcm(n, mpz_class(t.weight.get_den()));
  if (!n.fits_ulong_p()) throw CapExceededError("blocklength does not fit in 64 bits");
  return n.get_ui();
}

}  // namespace skrates

#endif  // SKRATES_PROTOCOL_HPP_
