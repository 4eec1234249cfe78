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

#ifndef SKRATES_CLI_HPP_
#define SKRATES_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skrates/report.hpp"

namespace skrates::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kInputFailure = 2;

namespace detail {

inline std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream in(list);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (id.empty()) throw InputError("empty vertex id in '" + list + "'");
    ids.push_back(id);
  }
  return ids;
}

// Inline JSON when the argument starts with '{' or '[', otherwise a path.
inline Json json_argument(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open '" + arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw InputError(std::string("invalid JSON argument: ") + ex.what());
  }
}

inline std::vector<Rational> budget_grid(const Rational& r_max, const Rational& step) {
  if (step <= 0) throw InputError("--step must be positive");
  if (r_max < 0) throw InputError("--r-max must be nonnegative");
  std::vector<Rational> grid;
  for (Rational r = 0; r <= r_max; r += step) grid.push_back(r);
  return grid;
}

}  // namespace detail

struct Options {
  std::string source_path;
  std::string set;
  std::string point;
  std::string r_max = "2";
  std::string step = "1/4";
  std::optional<std::size_t> n;
  bool exhaustive = false;
  bool simulate = false;
  std::size_t threads = 1;
  std::string output;  // json everywhere; curve defaults to csv
  std::string weights;
  std::string partition;
};

// Runs one subcommand; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact secret-key capacities, discussion-rate bounds and tree-packing schemes for hypergraphical sources",
               "skrates"};
  app.require_subcommand(1);
  Options opt;

  auto add_source = [&opt](CLI::App* cmd, bool required = true) {
    auto* flag = cmd->add_option("--source", opt.source_path, "Source description (JSON)");
    if (required) flag->required();
  };
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "Worker threads for partition enumeration")->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* entropy_cmd = app.add_subcommand("entropy", "Joint and conditional entropy of Z_B");
  add_source(entropy_cmd);
  add_common(entropy_cmd);
  entropy_cmd->add_option("--set", opt.set, "Comma-separated vertex ids")->required();

  auto* mmi_cmd = app.add_subcommand("mmi", "Multivariate mutual information and optimal partitions");
  add_source(mmi_cmd);
  add_common(mmi_cmd);
  mmi_cmd->add_option("--set", opt.set, "Comma-separated vertex ids (default: all)");

  auto* capacity_cmd = app.add_subcommand("capacity", "Omniscience rate and secrecy capacity");
  add_source(capacity_cmd);
  add_common(capacity_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Check a rate point against every outer-bound certificate");
  add_source(bounds_cmd);
  add_common(bounds_cmd);
  bounds_cmd->add_option("--point", opt.point, "Rate point JSON (inline or path)")->required();

  auto* curve_cmd = app.add_subcommand("curve", "Upper bound on the rate-constrained capacity");
  add_source(curve_cmd);
  add_common(curve_cmd);
  curve_cmd->add_option("--r-max", opt.r_max, "Largest total discussion rate");
  curve_cmd->add_option("--step", opt.step, "Grid step");

  auto* pack_cmd = app.add_subcommand("pack", "Maximum fractional tree packing of a PIN");
  add_source(pack_cmd);
  add_common(pack_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "Build and verify the tree-packing protocol");
  add_source(simulate_cmd);
  add_common(simulate_cmd);
  simulate_cmd->add_option("--n", opt.n, "Blocklength (default: smallest valid)")->check(CLI::PositiveNumber);
  simulate_cmd->add_flag("--exhaustive", opt.exhaustive, "Also enumerate every edge-bit assignment");

  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy chain and optimal cover measure for a weight vector");
  add_source(greedy_cmd, false);
  add_common(greedy_cmd);
  greedy_cmd->add_option("--weights", opt.weights, "Weights JSON: [[id, w], ...] or {id: w}");
  greedy_cmd->add_option("--partition", opt.partition, "Partition of V for source-derived weights");

  auto* analyze_cmd = app.add_subcommand("analyze", "Consolidated report for one source");
  add_source(analyze_cmd);
  add_common(analyze_cmd);
  analyze_cmd->add_flag("--simulate", opt.simulate, "Include a protocol simulation");
  analyze_cmd->add_flag("--exhaustive", opt.exhaustive, "Exhaustive check in the simulation");
  analyze_cmd->add_option("--n", opt.n, "Blocklength for the simulation")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputFailure;
  }

  try {
    if (opt.output == "csv" && !curve_cmd->parsed()) throw InputError("--output csv is only supported by curve");
    const OuterSearchCaps caps{enumeration_cap()};
    const MmiOptions mmi_options{opt.threads, caps.max_vertices};
    std::optional<HypergraphSource> source;
    if (!opt.source_path.empty()) source = load_source_file(opt.source_path);

    if (entropy_cmd->parsed()) {
      const VertexMask b = source->mask_of(detail::split_ids(opt.set));
      const EntropyOracle oracle(*source);
      out << Json{{"set", vertex_set_json(*source, b)},
                  {"entropy", to_json(oracle.entropy(b))},
                  {"conditional_entropy", to_json(oracle.cond_entropy(b))}}
                 .dump(2)
          << "\n";
    } else if (mmi_cmd->parsed()) {
      const VertexMask b = opt.set.empty() ? source->all() : source->mask_of(detail::split_ids(opt.set));
      out << mmi_json(*source, b, mmi(*source, b, mmi_options)).dump(2) << "\n";
    } else if (capacity_cmd->parsed()) {
      out << capacity_json(*source, capacity(*source, mmi_options)).dump(2) << "\n";
    } else if (bounds_cmd->parsed()) {
      const RatePoint point = rate_point_from_json(*source, detail::json_argument(opt.point));
      out << outer_query_json(*source, outer_check(*source, point, caps)).dump(2) << "\n";
    } else if (curve_cmd->parsed()) {
      const std::vector<Rational> grid = detail::budget_grid(parse_rational(opt.r_max), parse_rational(opt.step));
      std::optional<PinCurve> exact;
      if (source->is_pin() && source->size() >= 3) exact = pin_curve(*source);
      if (opt.output != "json") {
        out << "R,upper_bound" << (exact ? ",achievable" : "") << "\n";
        for (const Rational& r : grid) {
          out << format_rational(r) << "," << format_rational(outer_capacity_curve(*source, r, caps));
          if (exact) out << "," << format_rational((*exact)(r));
          out << "\n";
        }
      } else {
        Json rows = Json::array();
        for (const Rational& r : grid) {
          Json row{{"R", to_json(r)}, {"upper_bound", to_json(outer_capacity_curve(*source, r, caps))}};
          if (exact) row["achievable"] = to_json((*exact)(r));
          rows.push_back(row);
        }
        out << Json{{"rows", rows}}.dump(2) << "\n";
      }
    } else if (pack_cmd->parsed()) {
      out << packing_json(*source, max_packing(*source)).dump(2) << "\n";
    } else if (simulate_cmd->parsed()) {
      const PackingResult packing = max_packing(*source);
      const std::size_t n = opt.n.value_or(minimal_blocklength(*source, packing.packing));
      const LinearProtocol protocol = build_tree_protocol(*source, packing.packing, n);
      const SecrecyReport report = verify_protocol(protocol, {.exhaustive = opt.exhaustive});
      out << secrecy_json(*source, protocol, report).dump(2) << "\n";
    } else if (greedy_cmd->parsed()) {
      std::vector<std::string> labels;
      std::vector<Rational> w;
      if (!opt.weights.empty()) {
        const Json doc = detail::json_argument(opt.weights);
        if (doc.is_array()) {
          for (const Json& entry : doc) {
            if (!entry.is_array() || entry.size() != 2) throw InputError("weights entries must be [id, w] pairs");
            labels.push_back(entry[0].get<std::string>());
            w.push_back(rational_from_json(entry[1]));
          }
        } else if (doc.is_object()) {
          for (const auto& [id, value] : doc.items()) {
            labels.push_back(id);
            w.push_back(rational_from_json(value));
          }
        } else {
          throw InputError("--weights must be a JSON array or object");
        }
      } else if (source) {
        const Partition p = opt.partition.empty()
                                ? singletons(source->all())
                                : partition_from_json(*source, detail::json_argument(opt.partition), source->all());
        const CrossingWeights cw = crossing_weights(*source, p);
        labels = cw.labels();
        w = cw.weights;
      } else {
        throw InputError("greedy needs --weights or --source");
      }
      out << greedy_json(labels, w, greedy_mu(w)).dump(2) << "\n";
    } else if (analyze_cmd->parsed()) {
      AnalysisOptions options;
      options.simulate = opt.simulate || opt.exhaustive || opt.n.has_value();
      options.exhaustive = opt.exhaustive;
      options.blocklength = opt.n;
      options.threads = opt.threads;
      options.caps = caps;
      out << analyze(*source, options).dump(2) << "\n";
    }
  } catch (const InputError& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputFailure;
  } catch (const Json::exception& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputFailure;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kDomainFailure;
  }
  return kOk;
}

}  // namespace skrates::cli

#endif  // SKRATES_CLI_HPP_
