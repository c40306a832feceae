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

#include "bankshap/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "bankshap/error.hpp"
#include "bankshap/exact.hpp"
#include "bankshap/instance_io.hpp"
#include "bankshap/recursive.hpp"
#include "bankshap/voting.hpp"

namespace bankshap::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json rational_array(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

json decimal_array(const std::vector<Rational>& xs, int precision) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_decimal(x, precision));
  return a;
}

PlanScope parse_scope(const std::string& s) {
  if (s == "player" || s == "per_player") return PlanScope::per_player;
  if (s == "all" || s == "all_players") return PlanScope::all_players;
  throw ValidationError("bad_scope", "scope must be 'player' or 'all', got '" + s + "'");
}

PlanBound parse_bound(const std::string& s) {
  if (s == "general") return PlanBound::general;
  if (s == "half" || s == "half_estate") return PlanBound::half_estate;
  throw ValidationError("bad_bound", "bound must be 'general' or 'half', got '" + s + "'");
}

Integer parse_threshold(const std::string& text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q) || q < 0) throw ValidationError("bad_threshold", "threshold must be a non-negative integer");
  return q.get_num();
}

std::int64_t to_int64(const Rational& q, const char* what) {
  if (!is_integer(q)) throw ValidationError("non_integer_instance", std::string(what) + " must be integers");
  if (!q.get_num().fits_slong_p()) throw ValidationError("value_overflow", std::string(what) + " out of range");
  return q.get_num().get_si();
}

json plan_json(const SamplePlan& plan) {
  return {{"epsilon", to_string(plan.epsilon)},
          {"delta", to_string(plan.delta)},
          {"scope", std::string(to_string(plan.scope))},
          {"bound", std::string(to_string(plan.bound))},
          {"samples", plan.samples}};
}

PayoffVector scaled_down(const PayoffVector& p, const Integer& scale) {
  PayoffVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / Rational(scale);
  return out;
}

bool dp_reachable(const ScaledGame& sg) {
  if (sg.estate_above_threshold || !sg.game.scaled().fits_int64) return false;
  const auto cells = static_cast<unsigned __int128>(sg.game.scaled().estate64) * sg.game.size();
  return cells <= DpLimits{}.max_cells;
}

// Runs one named solver and records its statistics.
PayoffVector run_method(const Game& game, const std::string& method, const ShapleyOptions& o,
                        const GlobalOptions& g, json& stats) {
  if (method == "brute") {
    const auto r = shapley_permutation(game);
    stats["permutations_visited"] = r.visited;
    return r.payoff;
  }
  if (method == "coeff") {
    const auto r = shapley_coefficient(game, GameForm::primal, {}, g.workers);
    stats["subsets_visited"] = r.visited;
    return r.payoff;
  }
  if (method == "dp") {
    const ScaledGame sg = scale_to_integer(game, parse_threshold(o.dp_threshold));
    const auto r = shapley_dp(sg.game, g.workers);
    stats["scale"] = sg.scale.get_str();
    stats["rows"] = r.rows;
    stats["columns"] = r.columns;
    stats["steps"] = r.steps;
    if (sg.estate_above_threshold) stats["warning"] = "scaled_estate_above_threshold";
    return scaled_down(r.payoff, sg.scale);
  }
  if (method == "oneill" || method == "dual") {
    RecursionOptions ro;
    ro.memo_cap = o.memo_cap;
    ro.workers = g.workers;
    ro.keep_memo = false;
    const auto r = method == "oneill" ? shapley_oneill(game, ro) : shapley_dual_recursive(game, ro);
    stats["states_computed"] = r.stats.states_computed;
    stats["memo_hits"] = r.stats.memo_hits;
    stats["base_lookups"] = r.stats.base_lookups;
    stats["layers"] = r.stats.layers;
    return r.payoff;
  }
  if (method == "mc") {
    McResult r;
    if (o.samples) {
      r = estimate_shapley(game, *o.samples, g.seed, g.workers);
      stats["plan"] = "samples_override";
    } else {
      const PlanBound bound = half_estate_applies(game) ? PlanBound::half_estate : PlanBound::general;
      const SamplePlan plan =
          plan_samples(game.size(), parse_decimal(o.epsilon), parse_decimal(o.delta), parse_scope(o.scope), bound);
      r = estimate_shapley(game, plan, g.seed, g.workers);
      stats["plan"] = plan_json(plan);
    }
    stats["M"] = r.samples;
    stats["seed"] = r.seed;
    stats["workers"] = r.workers;
    stats["generator"] = std::string(r.generator);
    stats["preprocessed_claims"] = rational_array(r.preprocessed_claims);
    return r.estimate;
  }
  throw ValidationError("bad_method", "unknown method '" + method +
                                          "' (expected brute, coeff, dp, oneill, dual, mc or auto)");
}

std::pair<std::string, std::string> choose_method(const Game& game, const ShapleyOptions& o) {
  const Integer threshold = parse_threshold(o.dp_threshold);
  const ScaledGame sg = scale_to_integer(game, threshold);
  if (dp_reachable(sg))
    return {"dp", "integer after scaling by " + sg.scale.get_str() + "; scaled estate " +
                      sg.game.scaled().estate.get_str() + " <= " + threshold.get_str()};
  std::string why = "scaled estate " + sg.game.scaled().estate.get_str() + " above " + threshold.get_str();
  try {
    const MemoStateCounts c = memo_state_counts(game);
    const bool primal = c.primal <= c.dual;
    const std::uint64_t states = std::min(c.primal, c.dual);
    const std::string counts = "L=" + std::to_string(c.primal) + ", W=" + std::to_string(c.dual);
    if (states <= o.memo_cap) return {primal ? "oneill" : "dual", why + "; " + counts + " (smaller count wins)"};
    why += "; " + counts + " above memo cap";
  } catch (const InstanceTooLarge&) {
    why += "; memo state counts unavailable";
  }
  return {"mc", why};
}

json state_counts_json(const Game& game) {
  try {
    const MemoStateCounts c = memo_state_counts(game);
    return {{"L", c.primal}, {"W", c.dual}};
  } catch (const InstanceTooLarge&) {
    return {{"L", nullptr}, {"W", nullptr}};
  }
}

std::string describe_difference(const std::string& a, const std::string& b, const PayoffVector& x,
                                const PayoffVector& y) {
  std::string out = a + " vs " + b + ":";
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) out += " player " + std::to_string(i + 1) + " " + to_string(x[i]) + " != " + to_string(y[i]);
  return out;
}

}  // namespace

// -- report emission ---------------------------------------------------------

json to_json(const RunReport& r, int precision) {
  json j;
  j["command"] = r.command;
  if (r.digest) j["instance_digest"] = *r.digest;
  if (r.method) j["method"] = *r.method;
  if (r.method_reason) j["method_reason"] = *r.method_reason;
  if (r.payoff) {
    j["payoff"] = rational_array(r.payoff->values());
    j["payoff_decimal"] = decimal_array(r.payoff->values(), precision);
  }
  for (const auto& [k, v] : r.fields.items()) j[k] = v;
  if (!r.stats.empty()) j["stats"] = r.stats;
  if (!r.disagreements.empty()) j["disagreements"] = r.disagreements;
  j["timing_ms"] = r.timing_ms;
  return j;
}

void emit(const RunReport& r, const GlobalOptions& g, std::ostream& out) {
  switch (g.format) {
    case Format::json:
      out << to_json(r, g.precision).dump(2) << '\n';
      return;
    case Format::csv:
      if (r.payoff) {
        out << "player,rational,decimal\n";
        for (std::size_t i = 0; i < r.payoff->size(); ++i)
          out << i + 1 << ',' << to_string((*r.payoff)[i]) << ',' << to_decimal((*r.payoff)[i], g.precision) << '\n';
      } else {
        out << "key,value\n";
        for (const auto& [k, v] : r.fields.items()) out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      return;
    case Format::plain:
      out << r.command;
      if (r.method) out << " [" << *r.method << "]";
      out << '\n';
      if (r.method_reason) out << "reason: " << *r.method_reason << '\n';
      if (r.payoff)
        for (std::size_t i = 0; i < r.payoff->size(); ++i)
          out << "player " << i + 1 << ": " << to_string((*r.payoff)[i]) << " ("
              << to_decimal((*r.payoff)[i], g.precision) << ")\n";
      for (const auto& [k, v] : r.fields.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      for (const auto& d : r.disagreements) out << "DISAGREEMENT " << d << '\n';
      return;
  }
}

// -- commands ----------------------------------------------------------------

RunReport cmd_shapley(const Game& game, const ShapleyOptions& o, const GlobalOptions& g) {
  RunReport r;
  r.command = "shapley";
  r.digest = instance_digest(game);
  r.fields["n"] = game.size();
  const auto start = Clock::now();
  std::string method = o.method;
  if (method == "auto") {
    auto [chosen, why] = choose_method(game, o);
    method = chosen;
    r.method_reason = why;
  }
  r.method = method;
  r.payoff = run_method(game, method, o, g, r.stats);
  r.timing_ms = elapsed_ms(start);
  if (o.with_state_counts) {
    const json c = state_counts_json(game);
    r.stats["L"] = c["L"];
    r.stats["W"] = c["W"];
  }
  return r;
}

RunReport cmd_validate(const Game& game, const ValidateOptions& o, const GlobalOptions& g) {
  RunReport r;
  r.command = "validate";
  r.digest = instance_digest(game);
  const auto start = Clock::now();
  const std::size_t n = game.size();

  ShapleyOptions so;
  so.memo_cap = o.memo_cap;
  so.dp_threshold = o.dp_threshold;

  std::vector<std::pair<std::string, PayoffVector>> results;
  json skipped = json::object();
  const auto attempt = [&](const std::string& name) {
    try {
      json ignored;
      results.emplace_back(name, run_method(game, name, so, g, ignored));
    } catch (const InstanceTooLarge& e) {
      skipped[name] = e.what();
    }
  };
  if (n <= o.brute_cap) attempt("brute"); else skipped["brute"] = "n above brute-force cap";
  if (n <= o.coefficient_cap) attempt("coeff"); else skipped["coeff"] = "n above coefficient cap";
  if (dp_reachable(scale_to_integer(game, parse_threshold(o.dp_threshold)))) attempt("dp");
  else skipped["dp"] = "scaled estate above threshold";
  attempt("oneill");
  attempt("dual");
  if (results.empty()) throw InstanceTooLarge("exact methods available", 0, 1);

  json methods = json::array();
  json matrix = json::array();
  for (const auto& [a, pa] : results) {
    methods.push_back(a);
    json row = json::array();
    for (const auto& [b, pb] : results) {
      row.push_back(pa == pb);
      if (a < b && !(pa == pb)) r.disagreements.push_back(describe_difference(a, b, pa, pb));
    }
    matrix.push_back(row);
  }
  const PayoffVector& phi = results.front().second;
  bool bounded = true;
  for (Player i = 0; i < n; ++i) bounded = bounded && phi[i] >= 0 && phi[i] <= game.claim(i);
  if (phi.sum() != game.estate()) r.disagreements.push_back("efficiency: sum of payoffs differs from the estate");
  if (!bounded) r.disagreements.push_back("bounds: some payoff lies outside [0, claim]");

  r.payoff = phi;
  r.fields["methods"] = methods;
  r.fields["agreement"] = matrix;
  r.fields["skipped"] = skipped;
  r.fields["agree"] = r.disagreements.empty();
  r.timing_ms = elapsed_ms(start);
  return r;
}

RunReport cmd_ssindex(const std::vector<Rational>& weights, const Rational& quota, const GlobalOptions&) {
  RunReport r;
  r.command = "ssindex";
  const auto start = Clock::now();
  std::vector<std::int64_t> w;
  for (const auto& x : weights) w.push_back(to_int64(x, "weights"));
  const VotingGame vg(w, to_int64(quota, "quota"));
  const std::int64_t q = vg.quota();
  std::int64_t total = 0;
  for (auto x : w) total += x;

  const PayoffVector direct = shapley_shubik(vg);

  // Bankruptcy Shapley value as a function of the estate, extended by the
  // zero vector at E = 0 and the claim vector at E = W.
  const auto phi_at = [&](std::int64_t estate) {
    if (estate == 0) return PayoffVector(w.size());
    if (estate == total) return PayoffVector(weights);
    return shapley_dual_recursive(Game(weights, Rational(static_cast<long>(estate)))).payoff;
  };
  PayoffVector via_difference = phi_at(q);
  via_difference -= phi_at(q - 1);

  if (!(direct == via_difference))
    r.disagreements.push_back(describe_difference("count-matrix", "estate-difference", direct, via_difference));
  r.method = "count-matrix";
  r.payoff = direct;
  r.fields["quota"] = std::to_string(q);
  r.fields["via_estate_difference"] = rational_array(via_difference.values());
  r.fields["agree"] = r.disagreements.empty();
  r.timing_ms = elapsed_ms(start);
  return r;
}

PartitionInstance parse_partition(const std::string& text) {
  PartitionInstance p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    p.values.push_back(to_int64(parse_rational(item), "PARTITION values"));
  }
  validate(p);
  return p;
}

RunReport cmd_reduce(const PartitionInstance& p) {
  RunReport r;
  r.command = "reduce";
  const ShpInstance s = reduce(p);
  r.fields = game_to_json(s.game);
  return r;
}

RunReport cmd_shp_check(const Game& game) {
  RunReport r;
  r.command = "shp-check";
  r.digest = instance_digest(game);
  const auto start = Clock::now();
  const ShpInstance s = as_shp_instance(game);
  const ShpAnswer a = shp_answer_exact(s);
  const auto cert = find_certificate(s);
  if (cert.has_value() != a.answer)
    r.disagreements.push_back("certificate existence does not match the exact answer");
  r.fields["answer"] = a.answer;
  r.fields["phi_n"] = to_string(a.phi_last);
  if (cert) {
    json order = json::array();
    for (Player p : cert->order()) order.push_back(p + 1);
    r.fields["certificate"] = order;
  } else {
    r.fields["certificate"] = nullptr;
  }
  r.timing_ms = elapsed_ms(start);
  return r;
}

RunReport cmd_plan(const PlanOptions& o) {
  RunReport r;
  r.command = "plan";
  const SamplePlan plan =
      plan_samples(o.n, parse_decimal(o.epsilon), parse_decimal(o.delta), parse_scope(o.scope), parse_bound(o.bound));
  r.fields = plan_json(plan);
  r.fields["n"] = o.n;
  return r;
}

std::vector<std::int64_t> parse_sweep(const std::string& text) {
  std::vector<std::int64_t> out;
  const auto parse_int = [&](const std::string& s) { return to_int64(parse_rational(s), "sweep values"); };
  if (text.find(':') == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.empty()) throw ValidationError("bad_sweep", "empty sweep");
    return out;
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) throw ValidationError("bad_sweep", "sweep must be a:b or a:b:step");
  const std::int64_t lo = parse_int(parts[0]);
  const std::int64_t hi = parse_int(parts[1]);
  bool geometric = false;
  std::int64_t step = 1;
  if (parts.size() == 3 && !parts[2].empty()) {
    geometric = parts[2][0] == 'x';
    step = parse_int(parts[2][0] == 'x' || parts[2][0] == '+' ? parts[2].substr(1) : parts[2]);
  }
  if (lo < 1 || hi < lo || step < 1 || (geometric && step < 2))
    throw ValidationError("bad_sweep", "invalid sweep '" + text + "'");
  for (std::int64_t v = lo; v <= hi; v = geometric ? v * step : v + step) out.push_back(v);
  return out;
}

std::vector<long long> proportional_claims(std::size_t n, std::int64_t estate, std::uint64_t seed) {
  // Ratios in [1000, 2000] / (666 n): the total claim is about 2.25 E.
  std::mt19937_64 rng(seed);
  std::vector<long long> claims;
  __int128 total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ratio = static_cast<__int128>(1000 + uniform_below_or_equal(rng, 1000));
    const auto c = static_cast<long long>(std::max<__int128>(1, estate * ratio / (666 * static_cast<__int128>(n))));
    claims.push_back(c);
    total += c;
  }
  if (total <= estate) throw ValidationError("bad_sweep", "estate too small for the proportional generator");
  return claims;
}

void cmd_bench(const BenchOptions& o, const GlobalOptions& g, std::ostream& out) {
  const auto players = parse_sweep(o.players);
  const auto estates = o.estates.empty() ? std::vector<std::int64_t>{} : parse_sweep(o.estates);
  const Rational fraction = parse_decimal(o.estate_fraction);
  if (fraction <= 0 || fraction >= 1) throw ValidationError("bad_fraction", "estate fraction must lie in (0, 1)");
  if (o.claim_max < 1) throw ValidationError("bad_claim_max", "claim maximum must be positive");

  out << "instance,n,E,W,method,wall_ms,steps,L,W_count,M,seed\n";
  const auto row = [&](std::size_t k, const Game& game, std::uint64_t seed) {
    const json counts = state_counts_json(game);
    for (const auto& method : o.methods) {
      ShapleyOptions so;
      so.samples = o.samples;
      GlobalOptions gg = g;
      gg.seed = seed;
      json stats;
      const auto start = Clock::now();
      run_method(game, method, so, gg, stats);
      const double ms = elapsed_ms(start);
      std::uint64_t steps = 0;
      if (method == "brute") steps = stats["permutations_visited"];
      else if (method == "coeff") steps = stats["subsets_visited"];
      else if (method == "dp") steps = stats["steps"];
      else if (method == "oneill" || method == "dual") steps = stats["states_computed"];
      else if (method == "mc") steps = stats["M"].get<std::uint64_t>() * game.size();
      out << k << ',' << game.size() << ',' << to_string(game.estate()) << ',' << to_string(game.total_claims())
          << ',' << method << ',' << ms << ',' << steps << ',' << (counts["L"].is_null() ? "" : counts["L"].dump())
          << ',' << (counts["W"].is_null() ? "" : counts["W"].dump()) << ','
          << (method == "mc" ? std::to_string(o.samples) : "") << ',' << seed << '\n';
    }
  };

  for (const auto n64 : players) {
    const auto n = static_cast<std::size_t>(n64);
    for (std::size_t k = 0; k < o.instances; ++k) {
      const std::uint64_t seed = stream_seed(g.seed, (static_cast<std::uint64_t>(n) << 32) + k);
      if (!estates.empty()) {
        for (const auto e : estates) row(k, Game::from_integers(proportional_claims(n, e, seed), e), seed);
        continue;
      }
      std::mt19937_64 rng(seed);
      std::vector<long long> claims;
      long long total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        claims.push_back(1 + static_cast<long long>(uniform_below_or_equal(rng, static_cast<std::uint64_t>(o.claim_max - 1))));
        total += claims.back();
      }
      Rational e = fraction * Rational(static_cast<long>(total));
      Integer floor_e = e.get_num() / e.get_den();
      long long estate = std::clamp<long long>(floor_e.get_si(), 1, total - 1);
      if (total < 2) throw ValidationError("bad_sweep", "single unit claim cannot form a bankruptcy");
      row(k, Game::from_integers(claims, estate), seed);
    }
  }
}

// -- entry point -------------------------------------------------------------

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return 2;
    case ErrorKind::instance_too_large: return 3;
    case ErrorKind::io: return 4;
    case ErrorKind::disagreement: return 5;
  }
  return 1;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

Game load_game(const std::string& path) { return to_game(read_instance_file(path)); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shapley value solvers for bankruptcy games"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--precision", g.precision, "Significant digits of decimal renderings")->check(CLI::Range(1, 100));
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--seed", g.seed, "Seed for sampling and generators");

  std::string file;
  ShapleyOptions so;
  std::uint64_t samples = 0;
  auto* shapley = app.add_subcommand("shapley", "Compute the Shapley value of an instance");
  shapley->add_option("file", file, "Instance JSON")->required();
  shapley->add_option("--method", so.method)
      ->check(CLI::IsMember({"brute", "coeff", "dp", "oneill", "dual", "mc", "auto"}));
  shapley->add_option("--epsilon", so.epsilon, "Relative error target (mc)");
  shapley->add_option("--delta", so.delta, "Failure probability (mc)");
  shapley->add_option("--scope", so.scope, "Guarantee scope (mc)")->check(CLI::IsMember({"player", "all"}));
  auto* samples_opt = shapley->add_option("--samples", samples, "Sample count, overriding the planner (mc)");
  shapley->add_option("--memo-cap", so.memo_cap, "Maximum stored recursion states");
  shapley->add_option("--dp-threshold", so.dp_threshold, "Largest scaled estate the auto method sends to dp");
  shapley->add_flag("--stats", so.with_state_counts, "Also report the memo state counts L and W");

  ValidateOptions vo;
  auto* validate_cmd = app.add_subcommand("validate", "Run every exact method and compare");
  validate_cmd->add_option("file", file, "Instance JSON")->required();
  validate_cmd->add_option("--brute-cap", vo.brute_cap, "Largest n for permutation enumeration");
  validate_cmd->add_option("--memo-cap", vo.memo_cap, "Maximum stored recursion states");

  std::optional<std::string> quota_text;
  auto* ssindex = app.add_subcommand("ssindex", "Shapley-Shubik index of a weighted voting game");
  ssindex->add_option("file", file, "Instance JSON with claims (weights) and quota")->required();
  ssindex->add_option("--quota", quota_text, "Quota, overriding the file");

  std::string partition;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the bankruptcy instance of a PARTITION instance");
  reduce_cmd->add_option("--partition", partition, "Comma separated positive integers")->required();

  auto* shp = app.add_subcommand("shp-check", "Decide phi_n < 1/2 on a reduced instance");
  shp->add_option("file", file, "Instance JSON")->required();

  PlanOptions po;
  std::string plan_file;
  auto* plan = app.add_subcommand("plan", "Print the Monte Carlo sample plan");
  auto* plan_n = plan->add_option("--n", po.n, "Player count");
  plan->add_option("file", plan_file, "Instance JSON (sets n and picks the bound)");
  plan->add_option("--epsilon", po.epsilon);
  plan->add_option("--delta", po.delta);
  plan->add_option("--scope", po.scope)->check(CLI::IsMember({"player", "all"}));
  auto* plan_bound = plan->add_option("--bound", po.bound)->check(CLI::IsMember({"general", "half"}));

  BenchOptions bo;
  std::string bench_methods = "dp";
  auto* bench = app.add_subcommand("bench", "Benchmark sweep as CSV");
  bench->add_option("--method", bench_methods, "Comma separated methods");
  bench->add_option("--n", bo.players, "Player counts (a:b, a:b:+k or list)");
  bench->add_option("--estate", bo.estates, "Estate sweep (a:b:xk, a:b:+k or list)");
  bench->add_option("--estate-fraction", bo.estate_fraction, "E = floor(fraction * W) without an estate sweep");
  bench->add_option("--claim-max", bo.claim_max, "Largest random claim without an estate sweep");
  bench->add_option("--instances", bo.instances, "Instances per sweep point");
  bench->add_option("--samples", bo.samples, "Samples for mc rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(err, "bad_arguments", e.what());
    return 2;
  }
  g.format = format == "csv" ? Format::csv : format == "plain" ? Format::plain : Format::json;

  try {
    RunReport report;
    if (*shapley) {
      if (*samples_opt) so.samples = samples;
      report = cmd_shapley(load_game(file), so, g);
    } else if (*validate_cmd) {
      report = cmd_validate(load_game(file), vo, g);
    } else if (*ssindex) {
      const InstanceFile f = read_instance_file(file);
      const std::optional<Rational> q = quota_text ? std::optional<Rational>(parse_rational(*quota_text)) : f.quota;
      if (!q) throw ValidationError("missing_field", "a quota is required (file \"quota\" or --quota)");
      report = cmd_ssindex(f.claims, *q, g);
    } else if (*reduce_cmd) {
      report = cmd_reduce(parse_partition(partition));
      out << report.fields.dump() << '\n';
      return 0;
    } else if (*shp) {
      report = cmd_shp_check(load_game(file));
    } else if (*plan) {
      if (!plan_file.empty()) {
        const Game game = load_game(plan_file);
        if (!*plan_n) po.n = game.size();
        if (!*plan_bound) po.bound = half_estate_applies(game) ? "half" : "general";
        else if (po.bound == "half" && !half_estate_applies(game))
          throw ValidationError("bound_not_applicable", "the half-estate bound needs E >= W/2");
      } else if (!*plan_n) {
        throw ValidationError("missing_field", "plan needs --n or an instance file");
      }
      report = cmd_plan(po);
    } else if (*bench) {
      bo.methods.clear();
      std::stringstream ss(bench_methods);
      std::string m;
      while (std::getline(ss, m, ',')) bo.methods.push_back(m);
      cmd_bench(bo, g, out);
      return 0;
    }
    emit(report, g, out);
    if (!report.disagreements.empty()) {
      std::string joined;
      for (const auto& d : report.disagreements) joined += (joined.empty() ? "" : "; ") + d;
      report_error(err, "method_disagreement", joined);
      return 5;
    }
    return 0;
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "internal_error", e.what());
    return 1;
  }
}

}  // namespace bankshap::cli
