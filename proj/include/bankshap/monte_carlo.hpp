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

#ifndef BANKSHAP_MONTE_CARLO_HPP
#define BANKSHAP_MONTE_CARLO_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bankshap/game.hpp"

namespace bankshap {

enum class PlanScope { per_player, all_players };
enum class PlanBound { general, half_estate };

std::string_view to_string(PlanScope scope);
std::string_view to_string(PlanBound bound);

/// Sample count for the permutation-sampling estimator together with the
/// accuracy target it was derived from.
struct SamplePlan {
  Rational epsilon;
  Rational delta;
  PlanScope scope = PlanScope::per_player;
  PlanBound bound = PlanBound::general;
  std::uint64_t samples = 0;
};

/// Smallest M with
///   general:     M >= n^2 ln(2/delta) / (2 eps^2)   (ln(2n/delta) for all players)
///   half estate: M >= 2 ln(2/delta) / eps^2         (ln(2n/delta) for all players)
/// The bound is evaluated with outward-rounded multi-precision arithmetic, so
/// the returned M never undershoots. The half-estate bound is valid only for
/// E >= W/2; checking that is the caller's job.
SamplePlan plan_samples(std::size_t n, const Rational& epsilon, const Rational& delta, PlanScope scope,
                        PlanBound bound);

/// True when the game satisfies E >= W/2 after preprocessing, so the
/// half-estate bound applies.
bool half_estate_applies(const Game& game);

/// Claims replaced by min{w_i, E}; the characteristic function is unchanged.
/// A single-player game is returned as is (clipping would make E = W).
Game preprocess(const Game& game);

/// Name of the pinned generator recorded in every result.
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-streams/fisher-yates-rejection";

/// Seed of worker stream `rank`: the (rank+1)-th output of splitmix64
/// started at `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t rank);

/// Uniform integer in [0, bound]: 64-bit draws below 2^64 mod (bound+1) are
/// rejected, the rest reduced modulo bound+1.
std::uint64_t uniform_below_or_equal(std::mt19937_64& rng, std::uint64_t bound);

struct McResult {
  PayoffVector estimate;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string_view generator = kGeneratorName;
  SamplePlan plan;
  std::vector<Rational> preprocessed_claims;
};

/// Averages all n marginals of M uniformly random orderings (one prefix sweep
/// per ordering). Worker r draws a contiguous block of the M samples from
/// stream_seed(seed, r); the sum is exact, so the result depends only on
/// (instance, M, seed, workers).
McResult estimate_shapley(const Game& game, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);
McResult estimate_shapley(const Game& game, const SamplePlan& plan, std::uint64_t seed, unsigned workers = 1);

struct CoverageResult {
  std::uint64_t trials = 0;
  /// Fraction of trials meeting the plan's event: for per-player plans the
  /// smallest per-player fraction, for all-player plans the joint fraction.
  double coverage = 1.0;
  std::vector<double> per_player;
  double joint = 1.0;
  /// Trials whose estimate summed exactly to E.
  std::uint64_t efficient_trials = 0;
  /// Set when trials == 0 and the coverage is vacuous.
  bool vacuous = false;
};

/// Runs `trials` independent estimates (trial k seeded by stream_seed(seed, k))
/// and measures how often |est_i - phi_i| / phi_i < epsilon holds against
/// the exact value `exact`.
CoverageResult coverage_experiment(const Game& game, const PayoffVector& exact, const SamplePlan& plan,
                                   std::uint64_t trials, std::uint64_t seed);
/// Same, with the exact value from the coefficient method (n <= 24).
CoverageResult coverage_experiment(const Game& game, const SamplePlan& plan, std::uint64_t trials,
                                   std::uint64_t seed);

}  // namespace bankshap

#endif  // BANKSHAP_MONTE_CARLO_HPP
