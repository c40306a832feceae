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

#include "bankshap/monte_carlo.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "bankshap/detail/integer_kernel.hpp"
#include "bankshap/detail/parallel.hpp"
#include "bankshap/error.hpp"
#include "bankshap/exact.hpp"

namespace bankshap {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(x_, 256); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

template <class Int>
std::vector<detail::Wide<Int>> sample_block(const detail::IntView<Int>& g, std::uint64_t samples,
                                            std::uint64_t seed) {
  const std::size_t n = g.claims.size();
  std::vector<detail::Wide<Int>> acc(n, detail::Wide<Int>(0));
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), Player{0});
  std::mt19937_64 rng(seed);
  Int prefix;
  Int before;
  Int after;
  for (std::uint64_t m = 0; m < samples; ++m) {
    for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[uniform_below_or_equal(rng, i)]);
    prefix = 0;
    before = 0;
    for (Player p : order) {
      prefix += g.claims[p];
      after = g.primal(prefix);
      acc[p] += detail::Wide<Int>(after - before);
      std::swap(before, after);
    }
  }
  return acc;
}

}  // namespace

std::string_view to_string(PlanScope scope) {
  return scope == PlanScope::per_player ? "per_player" : "all_players";
}

std::string_view to_string(PlanBound bound) { return bound == PlanBound::general ? "general" : "half_estate"; }

SamplePlan plan_samples(std::size_t n, const Rational& epsilon, const Rational& delta, PlanScope scope,
                        PlanBound bound) {
  if (n == 0) throw ValidationError("no_players", "a plan needs n >= 1");
  if (epsilon <= 0) throw ValidationError("bad_epsilon", "epsilon must be positive");
  if (delta <= 0 || delta >= 1) throw ValidationError("bad_delta", "delta must lie in (0, 1)");

  const Rational players(static_cast<unsigned long>(n));
  const Rational log_arg = (scope == PlanScope::per_player ? Rational(2) : Rational(2) * players) / delta;
  // numerator / denominator with numerator rounded up and denominator down.
  const Rational factor = bound == PlanBound::general ? Rational(players * players) : Rational(2);
  const Rational denom = bound == PlanBound::general ? Rational(2 * epsilon * epsilon) : Rational(epsilon * epsilon);

  Mpfr log_value;
  Mpfr num;
  Mpfr den;
  Mpfr ratio;
  mpfr_set_q(log_value.get(), log_arg.get_mpq_t(), MPFR_RNDU);
  mpfr_log(log_value.get(), log_value.get(), MPFR_RNDU);
  mpfr_set_q(num.get(), factor.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(num.get(), num.get(), log_value.get(), MPFR_RNDU);
  mpfr_set_q(den.get(), denom.get_mpq_t(), MPFR_RNDD);
  mpfr_div(ratio.get(), num.get(), den.get(), MPFR_RNDU);

  Integer m;
  mpfr_get_z(m.get_mpz_t(), ratio.get(), MPFR_RNDU);
  if (m < 1) m = 1;
  if (!m.fits_ulong_p()) throw InstanceTooLarge("planned sample count bits", mpz_sizeinbase(m.get_mpz_t(), 2), 64);

  SamplePlan plan;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.scope = scope;
  plan.bound = bound;
  plan.samples = m.get_ui();
  return plan;
}

bool half_estate_applies(const Game& game) {
  const Game clipped = preprocess(game);
  return Rational(2) * clipped.estate() >= clipped.total_claims();
}

Game preprocess(const Game& game) {
  if (game.size() == 1) return game;
  std::vector<Rational> claims = game.claims();
  for (auto& w : claims)
    if (w > game.estate()) w = game.estate();
  return Game(std::move(claims), game.estate());
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t rank) {
  // splitmix64 advances its state by a fixed increment, so the (rank+1)-th
  // output can be produced directly.
  return splitmix64_mix(seed + (rank + 1) * kGolden);
}

std::uint64_t uniform_below_or_equal(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == ~std::uint64_t{0}) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % range;
  }
}

McResult estimate_shapley(const Game& game, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw ValidationError("bad_samples", "the estimator needs M >= 1");
  workers = std::max(1U, workers);
  const Game clipped = preprocess(game);
  const std::size_t n = clipped.size();

  McResult out;
  out.samples = samples;
  out.seed = seed;
  out.workers = workers;
  out.preprocessed_claims = clipped.claims();
  out.plan.samples = samples;

  const ScaledInstance& s = clipped.scaled();
  out.estimate = detail::dispatch(s, [&](const auto& g) {
    using Int = std::remove_cvref_t<decltype(g.estate)>;
    std::vector<std::vector<detail::Wide<Int>>> blocks(workers);
    detail::parallel_for(workers, workers, [&](std::size_t r) {
      const std::uint64_t count = samples / workers + (r < samples % workers ? 1 : 0);
      blocks[r] = sample_block(g, count, stream_seed(seed, r));
    });
    const Rational denom = Rational(s.scale) * Rational(Integer(std::to_string(samples)));
    PayoffVector est(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer total = 0;
      for (const auto& b : blocks) total += detail::to_integer(b[i]);
      est[i] = Rational(total) / denom;
    }
    return est;
  });
  return out;
}

McResult estimate_shapley(const Game& game, const SamplePlan& plan, std::uint64_t seed, unsigned workers) {
  McResult out = estimate_shapley(game, plan.samples, seed, workers);
  out.plan = plan;
  return out;
}

CoverageResult coverage_experiment(const Game& game, const PayoffVector& exact, const SamplePlan& plan,
                                   std::uint64_t trials, std::uint64_t seed) {
  const std::size_t n = game.size();
  if (exact.size() != n) throw ValidationError("size_mismatch", "exact payoff length differs from n");
  CoverageResult out;
  out.trials = trials;
  out.per_player.assign(n, 1.0);
  if (trials == 0) {
    out.vacuous = true;
    return out;
  }

  std::vector<std::uint64_t> player_hits(n, 0);
  std::uint64_t joint_hits = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const McResult r = estimate_shapley(game, plan.samples, stream_seed(seed, k));
    if (r.estimate.sum() == game.estate()) ++out.efficient_trials;
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational err = abs(Rational(r.estimate[i] - exact[i]));
      if (err < plan.epsilon * exact[i]) {
        ++player_hits[i];
      } else {
        all = false;
      }
    }
    if (all) ++joint_hits;
  }
  const auto frac = [&](std::uint64_t hits) { return static_cast<double>(hits) / static_cast<double>(trials); };
  for (std::size_t i = 0; i < n; ++i) out.per_player[i] = frac(player_hits[i]);
  out.joint = frac(joint_hits);
  out.coverage = plan.scope == PlanScope::all_players
                     ? out.joint
                     : *std::min_element(out.per_player.begin(), out.per_player.end());
  return out;
}

CoverageResult coverage_experiment(const Game& game, const SamplePlan& plan, std::uint64_t trials,
                                   std::uint64_t seed) {
  return coverage_experiment(game, shapley_coefficient(game).payoff, plan, trials, seed);
}

}  // namespace bankshap
