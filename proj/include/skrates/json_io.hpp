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

#ifndef SKRATES_JSON_IO_HPP_
#define SKRATES_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "skrates/error.hpp"
#include "skrates/partition.hpp"
#include "skrates/rational.hpp"
#include "skrates/source.hpp"

namespace skrates {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3", "3/2"); plain JSON integers are also
// accepted on input.
inline Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(std::to_string(value.get<long long>()));
  throw InputError("expected a rational as a string or integer, got " + value.dump());
}

inline Json to_json(const Rational& value) { return format_rational(value); }

inline Json vertex_set_json(const HypergraphSource& source, VertexMask mask) {
  return source.ids_of(mask);
}

inline Json partition_json(const HypergraphSource& source, const Partition& p) {
  Json blocks = Json::array();
  for (VertexMask block : p.blocks) blocks.push_back(vertex_set_json(source, block));
  return blocks;
}

inline Json rates_json(const HypergraphSource& source, const RatePoint& point) {
  Json rates = Json::object();
  for (std::size_t i = 0; i < source.size(); ++i) rates[source.vertices()[i]] = to_json(point.rates[i]);
  return Json{{"r_K", to_json(point.key_rate)}, {"r", rates}};
}

inline HypergraphSource source_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw InputError("source must be a JSON object");
    std::vector<std::string> vertices;
    for (const Json& v : doc.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<EdgeSpec> edges;
    for (const Json& e : doc.at("edges")) {
      EdgeSpec spec;
      spec.id = e.at("id").get<std::string>();
      for (const Json& v : e.at("on")) spec.on.push_back(v.get<std::string>());
      spec.h = rational_from_json(e.at("h"));
      edges.push_back(std::move(spec));
    }
    return HypergraphSource(std::move(vertices), edges);
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed source: ") + ex.what());
  }
}

inline HypergraphSource load_source(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw InputError(std::string("source is not valid JSON: ") + ex.what());
  }
  return source_from_json(doc);
}

inline HypergraphSource load_source_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open source file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_source(buffer.str());
}

// Canonical serialization: vertices and edges in natural id order, edge
// vertex lists in vertex order.
inline Json source_to_json(const HypergraphSource& source) {
  Json edges = Json::array();
  for (const Edge& e : source.edges()) {
    edges.push_back(Json{{"id", e.id}, {"on", vertex_set_json(source, e.on)}, {"h", to_json(e.h)}});
  }
  return Json{{"vertices", source.vertices()}, {"edges", edges}};
}

inline std::string serialize_source(const HypergraphSource& source) { return source_to_json(source).dump(2); }

// {"r_K": "1", "r": {"1": "0", "2": "1", "3": "0"}}; missing vertices
// default to rate 0.
inline RatePoint rate_point_from_json(const HypergraphSource& source, const Json& doc) {
  try {
    RatePoint point{rational_from_json(doc.at("r_K")), std::vector<Rational>(source.size(), Rational(0))};
    if (doc.contains("r")) {
      for (const auto& [id, value] : doc.at("r").items()) point.rates[source.index_of(id)] = rational_from_json(value);
    }
    point.validate(source.size());
    return point;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed rate point: ") + ex.what());
  }
}

// [["1"], ["2", "3"]] over `ground`.
inline Partition partition_from_json(const HypergraphSource& source, const Json& doc, VertexMask ground) {
  try {
    std::vector<VertexMask> blocks;
    for (const Json& block : doc) blocks.push_back(source.mask_of(block.get<std::vector<std::string>>()));
    return make_partition(ground, std::move(blocks));
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed partition: ") + ex.what());
  }
}

}  // namespace skrates

#endif  // SKRATES_JSON_IO_HPP_
