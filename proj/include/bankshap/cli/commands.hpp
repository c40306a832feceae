// Copyright 2026 The bankshap Authors
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

#ifndef BANKSHAP_CLI_COMMANDS_HPP
#define BANKSHAP_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bankshap/game.hpp"
#include "bankshap/hardness.hpp"
#include "bankshap/monte_carlo.hpp"

namespace bankshap::cli {

enum class Format { json, csv, plain };

struct GlobalOptions {
  Format format = Format::json;
  int precision = 12;
  unsigned workers = 1;
  std::uint64_t seed = 1;
};

/// One command's result. `payoff` is present for solver commands; everything
/// else lands in `fields`, which is emitted verbatim in JSON mode.
struct RunReport {
  std::string command;
  std::optional<std::string> digest;
  std::optional<std::string> method;
  std::optional<std::string> method_reason;
  std::optional<PayoffVector> payoff;
  double timing_ms = 0.0;
  nlohmann::json stats = nlohmann::json::object();
  nlohmann::json fields = nlohmann::json::object();
  /// Non-empty when cross-checked computations disagreed (exit code 5).
  std::vector<std::string> disagreements;
};

nlohmann::json to_json(const RunReport& report, int precision);
void emit(const RunReport& report, const GlobalOptions& global, std::ostream& out);

struct ShapleyOptions {
  std::string method = "auto";
  std::string epsilon = "0.1";
  std::string delta = "0.05";
  std::string scope = "player";
  std::optional<std::uint64_t> samples;
  std::uint64_t memo_cap = 4'000'000;
  std::string dp_threshold = "10000000";
  bool with_state_counts = false;
};

RunReport cmd_shapley(const Game& game, const ShapleyOptions& options, const GlobalOptions& global);

struct ValidateOptions {
  std::size_t brute_cap = 10;
  std::size_t coefficient_cap = 24;
  std::uint64_t memo_cap = 4'000'000;
  std::string dp_threshold = "10000000";
};

RunReport cmd_validate(const Game& game, const ValidateOptions& options, const GlobalOptions& global);

/// Index of WVG[quota; weights] computed directly and as a difference of two
/// bankruptcy Shapley values (estates quota and quota - 1).
RunReport cmd_ssindex(const std::vector<Rational>& weights, const Rational& quota, const GlobalOptions& global);

PartitionInstance parse_partition(const std::string& text);
RunReport cmd_reduce(const PartitionInstance& p);
RunReport cmd_shp_check(const Game& game);

struct PlanOptions {
  std::size_t n = 1;
  std::string epsilon = "0.1";
  std::string delta = "0.05";
  std::string scope = "player";
  std::string bound = "general";
};

RunReport cmd_plan(const PlanOptions& options);

struct BenchOptions {
  std::vector<std::string> methods{"dp"};
  std::string players = "10";
  /// Explicit estate sweep ("100:1600:x2", "100:500:+100" or "100,200").
  std::string estates;
  /// Used when no estate sweep is given: E = floor(fraction * W).
  std::string estate_fraction = "1/2";
  std::int64_t claim_max = 20;
  std::size_t instances = 1;
  std::uint64_t samples = 1000;
};

/// Parses "a:b" (step 1), "a:b:+k", "a:b:xk" or a comma list.
std::vector<std::int64_t> parse_sweep(const std::string& text);

/// Claim vector used by the estate sweep: claims proportional to E with
/// per-player ratios drawn once from `seed`, so that every estate of the
/// sweep sees the same instance up to scale.
std::vector<long long> proportional_claims(std::size_t n, std::int64_t estate, std::uint64_t seed);

/// Streams one CSV row per (instance, method).
void cmd_bench(const BenchOptions& options, const GlobalOptions& global, std::ostream& out);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 2 validation, 3 instance too large, 4 I/O, 5 disagreement.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bankshap::cli

#endif  // BANKSHAP_CLI_COMMANDS_HPP
