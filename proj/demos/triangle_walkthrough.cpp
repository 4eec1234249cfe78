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

// Walks through the triangle network: capacity, the discussion-rate curve,
// an optimal tree packing and the protocol it induces.

#include <iostream>

#include "skrates/skrates.hpp"

int main() {
  using namespace skrates;
  const HypergraphSource triangle({"1", "2", "3"}, {{"a", {"1", "2"}, Rational(1)},
                                                    {"b", {"2", "3"}, Rational(1)},
                                                    {"c", {"1", "3"}, Rational(1)}});

  const CapacityReport cap = capacity(triangle);
  std::cout << "H(Z_V) = " << cap.total_entropy << ", R_CO = " << cap.omniscience_rate << ", C_S = " << cap.capacity
            << "\n";

  const PinCurve curve = pin_curve(triangle);
  for (const char* r : {"0", "1/2", "1", "3/2", "2"}) {
    const Rational budget = parse_rational(r);
    std::cout << "R = " << r << ": C_S(R) = " << curve(budget)
              << " (outer bound " << outer_capacity_curve(triangle, budget) << ")\n";
  }

  const PackingResult packing = max_packing(triangle);
  const std::size_t n = minimal_blocklength(triangle, packing.packing);
  const LinearProtocol protocol = build_tree_protocol(triangle, packing.packing, n);
  const SecrecyReport report = verify_protocol(protocol, {.exhaustive = true});
  const RatePoint rates = measured_rates(protocol);
  std::cout << "n = " << n << ": " << report.key_bits << " key bits, verdict " << to_string(report.verdict)
            << ", r_K = " << rates.key_rate << ", r(V) = " << rates.total() << "\n";
  return report.verdict == SecrecyVerdict::kPerfect ? 0 : 1;
}
