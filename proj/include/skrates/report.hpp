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

#ifndef SKRATES_REPORT_HPP_
#define SKRATES_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "skrates/bounds.hpp"
#include "skrates/capacity.hpp"
#include "skrates/greedy.hpp"
#include "skrates/json_io.hpp"
#include "skrates/mmi.hpp"
#include "skrates/protocol.hpp"
#include "skrates/tree_packing.hpp"

namespace skrates {

// JSON renderings of the library's result types. Rationals are strings and
// vertices are reported by their original ids.

inline Json vector_by_vertex(const HypergraphSource& source, const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < source.size(); ++i) out[source.vertices()[i]] = to_json(values[i]);
  return out;
}

inline Json mmi_json(const HypergraphSource& source, VertexMask b, const MmiResult& result) {
  Json optimal = Json::array();
  for (const Partition& p : result.optimal_partitions) optimal.push_back(partition_json(source, p));
  return Json{{"set", vertex_set_json(source, b)},
              {"value", to_json(result.value)},
              {"fundamental", partition_json(source, result.fundamental)},
              {"optimal_partitions", optimal}};
}

inline Json capacity_json(const HypergraphSource& source, const CapacityReport& report) {
  return Json{{"H_V", to_json(report.total_entropy)},
              {"R_CO", to_json(report.omniscience_rate)},
              {"R_CO_point", vector_by_vertex(source, report.omniscience_point)},
              {"C_S", to_json(report.capacity)},
              {"mmi_crosscheck", to_json(report.mmi_crosscheck)}};
}

inline Json inequality_json(const HypergraphSource& source, const Inequality& q) {
  Json rates = Json::object();
  for (std::size_t i = 0; i < source.size(); ++i) rates[source.vertices()[i]] = to_json(q.row[i + 1]);
  return Json{{"r_K", to_json(q.row[0])}, {"r", rates}, {"rhs", to_json(q.rhs)}};
}

inline Json certificate_json(const HypergraphSource& source, const BoundCertificate& cert) {
  Json out{{"kind", to_string(cert.kind)},
           {"B", vertex_set_json(source, cert.subset)},
           {"P", partition_json(source, cert.partition)}};
  if (cert.kind == CertificateKind::kSubsetPartition) {
    out["multiplier"] = to_json(cert.multiplier);
    out["partition_info"] = to_json(cert.partition_info);
  } else {
    out["alpha"] = to_json(cert.alpha);
  }
  out["inequality"] = inequality_json(source, cert.inequality);
  return out;
}

inline Json outer_query_json(const HypergraphSource& source, const OuterRegionQuery& query) {
  Json violations = Json::array();
  for (const BoundCertificate& cert : query.violations) violations.push_back(certificate_json(source, cert));
  return Json{{"point", rates_json(source, query.point)},
              {"verdict", query.feasible() ? "feasible-under-outer-bound" : "violated"},
              {"certificates_checked", query.certificates_checked},
              {"violations", violations}};
}

inline Json tree_json(const HypergraphSource& source, const SpanningTree& tree) {
  Json pairs = Json::array();
  for (VertexMask pair : tree.pairs) pairs.push_back(vertex_set_json(source, pair));
  return pairs;
}

inline Json packing_json(const HypergraphSource& source, const PackingResult& result) {
  Json trees = Json::array();
  for (const PackedTree& t : result.packing.trees) {
    trees.push_back(Json{{"pairs", tree_json(source, t.tree)}, {"weight", to_json(t.weight)}});
  }
  const RatePoint point = packing_to_rates(result.packing, source.size());
  return Json{{"value", to_json(result.value)},
              {"trees", trees},
              {"rate_point", rates_json(source, point)},
              {"total_rate", to_json(point.total())}};
}

inline Json secrecy_json(const HypergraphSource& source, const LinearProtocol& protocol, const SecrecyReport& report) {
  Json bits = Json::object();
  Json recoverable = Json::object();
  for (std::size_t i = 0; i < source.size(); ++i) {
    bits[source.vertices()[i]] = report.message_bits[i];
    recoverable[source.vertices()[i]] = static_cast<bool>(report.recoverable[i]);
  }
  Json exhaustive = nullptr;
  if (report.exhaustive) {
    exhaustive = Json{{"assignments", report.exhaustive->assignments},
                      {"key_uniform_independent", report.exhaustive->key_uniform_independent},
                      {"conditional_key_entropy", to_json(report.exhaustive->conditional_key_entropy)}};
  }
  return Json{{"n", protocol.blocklength},
              {"edge_bits", protocol.total_bits},
              {"key_bits", report.key_bits},
              {"message_bits", bits},
              {"message_rank", report.message_rank},
              {"joint_rank", report.joint_rank},
              {"recoverable", recoverable},
              {"conditional_key_entropy", to_json(report.conditional_key_entropy)},
              {"verdict", to_string(report.verdict)},
              {"exhaustive_status", report.exhaustive_status},
              {"exhaustive", exhaustive},
              {"measured_rates", rates_json(source, measured_rates(protocol))}};
}

inline Json greedy_json(const std::vector<std::string>& labels, const std::vector<Rational>& w,
                        const CoverMeasure& mu) {
  Json weights = Json::array();
  for (std::size_t s = 0; s < labels.size(); ++s) weights.push_back(Json{{"element", labels[s]}, {"w", to_json(w[s])}});
  Json order = Json::array();
  for (std::size_t s : greedy_order(w)) order.push_back(labels[s]);
  Json chain = Json::array();
  for (const auto& [b, value] : mu) {
    Json set = Json::array();
    for (std::size_t s : greedy_order(w)) {
      if (b >> s & 1U) set.push_back(labels[s]);
    }
    chain.push_back(Json{{"set", set}, {"mu", to_json(value)}, {"size", set.size()}});
  }
  // Chain members listed from the smallest set upwards.
  std::sort(chain.begin(), chain.end(), [](const Json& a, const Json& b) { return a["size"] < b["size"]; });
  for (Json& link : chain) link.erase("size");
  return Json{{"weights", weights}, {"order", order}, {"chain", chain}};
}

struct AnalysisOptions {
  bool simulate = false;
  bool exhaustive = false;
  std::optional<std::size_t> blocklength;
  std::size_t threads = 1;
  OuterSearchCaps caps;
};

// Consolidated per-source analysis.
inline Json analyze(const HypergraphSource& source, const AnalysisOptions& options = {}) {
  const CapacityReport cap = capacity(source, MmiOptions{options.threads, options.caps.max_vertices});
  const MmiResult best = mmi(source, source.all(), MmiOptions{options.threads, options.caps.max_vertices});
  Json out{{"vertices", source.vertices()},
           {"is_pin", source.is_pin()},
           {"capacity", capacity_json(source, cap)},
           {"fundamental", partition_json(source, best.fundamental)}};

  if (support_is_spanning_tree(source)) {
    const TreePinRegion region = tree_pin_region(source);
    Json facets = Json::object();
    for (std::size_t i = 0; i < source.size(); ++i) {
      facets[source.vertices()[i]] = static_cast<long>(region.degrees[i]) - 1L;
    }
    out["tree_pin"] = Json{{"C_S", to_json(region.capacity)}, {"rate_multipliers", facets}};
  } else {
    out["tree_pin"] = nullptr;
  }

  if (source.is_pin() && source.size() >= 3) {
    const PinCurve curve{cap.capacity, source.size()};
    out["pin_curve"] = Json{{"C_S", to_json(curve.capacity)},
                            {"slope", to_json(make_rational(1, static_cast<long>(source.size() - 2)))},
                            {"R_S", to_json(curve.communication_complexity())}};
  } else {
    out["pin_curve"] = nullptr;
  }

  if (source.is_pin()) {
    const PackingResult packing = max_packing(source);
    if (packing.value != cap.capacity) {
      throw InternalConsistencyError("tree packing value differs from the secrecy capacity");
    }
    out["packing"] = packing_json(source, packing);
    if (options.simulate) {
      const std::size_t n = options.blocklength.value_or(minimal_blocklength(source, packing.packing));
      const LinearProtocol protocol = build_tree_protocol(source, packing.packing, n);
      out["simulation"] = secrecy_json(source, protocol, verify_protocol(protocol, {.exhaustive = options.exhaustive}));
    } else {
      out["simulation"] = nullptr;
    }
  } else {
    out["packing"] = nullptr;
    out["simulation"] = nullptr;
  }

  const std::vector<BoundCertificate> certs = generate_certificates(source, options.caps);
  std::size_t partition_certs = 0;
  for (const BoundCertificate& cert : certs) partition_certs += cert.kind == CertificateKind::kSubsetPartition;
  out["certificates"] = Json{{"subset_partition", partition_certs},
                             {"edge_crossing", certs.size() - partition_certs},
                             {"outer_lp_rows", outer_inequalities(source, options.caps).size()}};
  return out;
}

}  // namespace skrates

#endif  // SKRATES_REPORT_HPP_
