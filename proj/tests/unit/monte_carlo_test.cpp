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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "bankshap/error.hpp"
#include "bankshap/exact.hpp"
#include "bankshap/monte_carlo.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace bankshap {
namespace {

using testing_support::q;
using testing_support::to_game;

double as_double(const Rational& x) { return x.get_d(); }

TEST(PlanSamples, WorkedExamples) {
  const auto a = plan_samples(10, Rational(1, 10), Rational(1, 20), PlanScope::per_player, PlanBound::general);
  EXPECT_EQ(a.samples, 18445u);
  for (std::size_t n : {1, 3, 50})
    EXPECT_EQ(plan_samples(n, Rational(1, 5), Rational(1, 10), PlanScope::per_player, PlanBound::half_estate).samples,
              150u);
  for (auto bound : {PlanBound::general, PlanBound::half_estate})
    EXPECT_EQ(plan_samples(1, Rational(1, 10), Rational(1, 20), PlanScope::all_players, bound).samples,
              plan_samples(1, Rational(1, 10), Rational(1, 20), PlanScope::per_player, bound).samples);
}

TEST(PlanSamples, MatchesClosedForm) {
  // Long-double evaluation is accurate enough away from integer boundaries.
  for (std::size_t n : {2, 5, 17}) {
    for (auto scope : {PlanScope::per_player, PlanScope::all_players}) {
      const long double eps = 0.15L;
      const long double delta = 0.07L;
      const long double arg = (scope == PlanScope::per_player ? 2.0L : 2.0L * n) / delta;
      const long double general = n * n * std::log(arg) / (2 * eps * eps);
      const long double half = 2 * std::log(arg) / (eps * eps);
      EXPECT_EQ(plan_samples(n, Rational(3, 20), Rational(7, 100), scope, PlanBound::general).samples,
                static_cast<std::uint64_t>(std::ceil(general)));
      EXPECT_EQ(plan_samples(n, Rational(3, 20), Rational(7, 100), scope, PlanBound::half_estate).samples,
                static_cast<std::uint64_t>(std::ceil(half)));
    }
  }
}

TEST(PlanSamples, Monotone) {
  const std::vector<Rational> eps{Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(1, 2)};
  const std::vector<Rational> deltas{Rational(1, 100), Rational(1, 20), Rational(1, 10), Rational(1, 2)};
  for (auto bound : {PlanBound::general, PlanBound::half_estate})
    for (auto scope : {PlanScope::per_player, PlanScope::all_players})
      for (std::size_t n = 1; n < 12; ++n)
        for (std::size_t a = 0; a + 1 < eps.size(); ++a) {
          const auto m = plan_samples(n, eps[a], deltas[a], scope, bound).samples;
          EXPECT_GE(m, plan_samples(n, eps[a + 1], deltas[a], scope, bound).samples);
          EXPECT_GE(m, plan_samples(n, eps[a], deltas[a + 1], scope, bound).samples);
          EXPECT_LE(m, plan_samples(n + 1, eps[a], deltas[a], scope, bound).samples);
        }
}

TEST(PlanSamples, Validation) {
  EXPECT_THROW(plan_samples(3, Rational(0), Rational(1, 10), PlanScope::per_player, PlanBound::general), ValidationError);
  EXPECT_THROW(plan_samples(3, Rational(1, 10), Rational(0), PlanScope::per_player, PlanBound::general), ValidationError);
  EXPECT_THROW(plan_samples(3, Rational(1, 10), Rational(1), PlanScope::per_player, PlanBound::general), ValidationError);
  EXPECT_THROW(plan_samples(0, Rational(1, 10), Rational(1, 10), PlanScope::per_player, PlanBound::general), ValidationError);
}

TEST(HalfEstate, Applicability) {
  EXPECT_TRUE(half_estate_applies(Game::from_integers({2, 2, 2}, 3)));
  EXPECT_FALSE(half_estate_applies(Game::from_integers({3, 2, 1}, 2)));
  EXPECT_TRUE(half_estate_applies(Game::from_integers({3, 2, 1}, 4)));
}

TEST(Preprocess, WorkedExamples) {
  const Game a = preprocess(Game::from_integers({9, 2, 1}, 4));
  EXPECT_EQ(a.claims(), q({"4", "2", "1"}));
  EXPECT_EQ(a.estate(), 4);
  EXPECT_EQ(preprocess(Game::from_integers({3, 2, 1}, 4)).claims(), q({"3", "2", "1"}));
  const Game src = Game::from_integers({5, 5}, 2);
  const Game b = preprocess(src);
  EXPECT_EQ(b.claims(), q({"2", "2"}));
  for (std::uint64_t m = 0; m < 4; ++m) EXPECT_EQ(value(b, Coalition::from_mask(m)), value(src, Coalition::from_mask(m)));
}

TEST(Preprocess, KeepsCharacteristicFunction) {
  oracle::Gen gen(31);
  for (int rep = 0; rep < 40; ++rep) {
    const Game g = to_game(gen.game(static_cast<std::size_t>(gen.between(1, 12)), gen.coin()));
    const Game p = preprocess(g);
    // A lone claimant keeps its claim: clipping it would make E = W.
    if (g.size() > 1)
      for (Player i = 0; i < g.size(); ++i) EXPECT_EQ(p.claim(i), std::min(g.claim(i), g.estate()));
    for (std::uint64_t m = 0; m <= g.grand_coalition().mask(); ++m)
      ASSERT_EQ(value(p, Coalition::from_mask(m)), value(g, Coalition::from_mask(m)));
  }
}

TEST(StreamSeed, DistinctAndDeterministic) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t r = 0; r < 1000; ++r) seen.insert(stream_seed(42, r));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(stream_seed(42, 7), stream_seed(42, 7));
  EXPECT_NE(stream_seed(42, 7), stream_seed(43, 7));
}

TEST(UniformBelowOrEqual, StaysInRangeAndCoversIt) {
  std::mt19937_64 rng(5);
  EXPECT_EQ(uniform_below_or_equal(rng, 0), 0u);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const auto x = uniform_below_or_equal(rng, 6);
    ASSERT_LE(x, 6u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_LE(uniform_below_or_equal(rng, ~std::uint64_t{0}), ~std::uint64_t{0});
}

TEST(EstimateShapley, SingleSampleIsOnePermutation) {
  const Game g = Game::from_integers({3, 2, 1}, 4);
  oracle::Bg bg{g.claims(), g.estate()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = estimate_shapley(g, 1, seed);
    EXPECT_EQ(r.estimate.sum(), g.estate());
    // Some ordering must produce exactly this marginal vector.
    bool found = false;
    std::vector<Player> order{0, 1, 2};
    do {
      const Permutation pi(order);
      bool same = true;
      for (Player i = 0; i < 3; ++i) same = same && marginal(g, pi, i) == r.estimate[i];
      found = found || same;
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_TRUE(found) << testing_support::show(r.estimate.values());
  }
}

TEST(EstimateShapley, HalfEstateTarget) {
  const auto r = estimate_shapley(Game::from_integers({2, 2, 2}, 3), 10000, 99);
  EXPECT_EQ(r.samples, 10000u);
  for (Player i = 0; i < 3; ++i) EXPECT_NEAR(as_double(r.estimate[i]), 1.0, 0.1);
  EXPECT_EQ(r.estimate.sum(), 3);
}

TEST(EstimateShapley, ConvergesToOracle) {
  const auto r = estimate_shapley(Game::from_integers({3, 2, 1}, 4), 200000, 5);
  const std::vector<double> exact{13.0 / 6, 7.0 / 6, 2.0 / 3};
  for (Player i = 0; i < 3; ++i) EXPECT_LT(std::abs(as_double(r.estimate[i]) - exact[i]) / exact[i], 0.05);
}

TEST(EstimateShapley, DeterministicPerSeedAndWorkers) {
  const Game g = Game(q({"7/2", "3", "5/3", "4", "1"}), Rational(5));
  const auto a = estimate_shapley(g, 3001, 17, 1);
  const auto b = estimate_shapley(g, 3001, 17, 1);
  EXPECT_EQ(a.estimate, b.estimate);
  const auto c = estimate_shapley(g, 3001, 17, 3);
  const auto d = estimate_shapley(g, 3001, 17, 3);
  EXPECT_EQ(c.estimate, d.estimate);
  EXPECT_EQ(c.samples, 3001u);
  EXPECT_EQ(c.estimate.sum(), g.estate());
  EXPECT_NE(estimate_shapley(g, 3001, 18, 1).estimate, a.estimate);
}

TEST(EstimateShapley, RangeAndRecordedMetadata) {
  oracle::Gen gen(33);
  for (int rep = 0; rep < 20; ++rep) {
    const Game g = to_game(gen.game(static_cast<std::size_t>(gen.between(1, 9)), gen.coin()));
    const auto r = estimate_shapley(g, 50, static_cast<std::uint64_t>(rep));
    EXPECT_EQ(r.estimate.sum(), g.estate());
    EXPECT_EQ(r.generator, kGeneratorName);
    EXPECT_EQ(r.preprocessed_claims, preprocess(g).claims());
    for (Player i = 0; i < g.size(); ++i) {
      EXPECT_GE(r.estimate[i], 0);
      EXPECT_LE(r.estimate[i], std::min(g.claim(i), g.estate()));
    }
  }
  EXPECT_THROW(estimate_shapley(Game::from_integers({2, 2}, 1), 0, 1), ValidationError);
}

TEST(EstimateShapley, LastPositionMarginalIsClaimAfterPreprocessing) {
  // With one sample per seed, check every player's marginal when it comes last.
  const Game g = preprocess(Game::from_integers({9, 2, 4, 3}, 6));
  for (Player i = 0; i < g.size(); ++i) {
    std::vector<Player> order;
    for (Player p = 0; p < g.size(); ++p)
      if (p != i) order.push_back(p);
    order.push_back(i);
    EXPECT_EQ(marginal(g, Permutation(order), i), g.claim(i));
  }
}

TEST(EstimateShapley, Unbiased) {
  // Means over 100 independent runs of 10^4 samples against the exact value.
  const Game g = Game::from_integers({6, 3, 5, 2}, 7);
  const auto exact = shapley_coefficient(g).payoff;
  const int runs = 100;
  std::vector<double> mean(4, 0.0);
  std::vector<double> sq(4, 0.0);
  for (int k = 0; k < runs; ++k) {
    const auto r = estimate_shapley(g, 10000, stream_seed(2024, static_cast<std::uint64_t>(k)));
    for (Player i = 0; i < 4; ++i) {
      const double x = as_double(r.estimate[i]);
      mean[i] += x;
      sq[i] += x * x;
    }
  }
  for (Player i = 0; i < 4; ++i) {
    const double m = mean[i] / runs;
    const double var = (sq[i] - runs * m * m) / (runs - 1);
    const double z = (m - as_double(exact[i])) / std::sqrt(var / runs);
    EXPECT_LT(std::abs(z), 4.5) << "player " << i;
  }
}

TEST(Coverage, HalfEstatePlan) {
  const Game g = Game::from_integers({2, 2, 2}, 3);
  const auto plan = plan_samples(3, Rational(1, 5), Rational(1, 10), PlanScope::per_player, PlanBound::half_estate);
  const auto c = coverage_experiment(g, plan, 500, 1);
  EXPECT_EQ(c.trials, 500u);
  EXPECT_GE(c.coverage, 0.86);
  EXPECT_EQ(c.efficient_trials, 500u);
  EXPECT_FALSE(c.vacuous);
}

TEST(Coverage, InflatedPlanCoversAlmostAlways) {
  const Game g = Game::from_integers({3, 2, 1}, 4);
  auto plan = plan_samples(3, Rational(1, 5), Rational(1, 10), PlanScope::per_player, PlanBound::half_estate);
  plan.samples *= 100;
  const auto c = coverage_experiment(g, plan, 20, 3);
  EXPECT_GE(c.coverage, 0.99);
  EXPECT_GE(c.joint, 0.99);
}

TEST(Coverage, ZeroTrialsIsVacuous) {
  const auto plan = plan_samples(2, Rational(1, 5), Rational(1, 10), PlanScope::per_player, PlanBound::general);
  const auto c = coverage_experiment(Game::from_integers({2, 2}, 1), plan, 0, 1);
  EXPECT_TRUE(c.vacuous);
  EXPECT_EQ(c.coverage, 1.0);
}

}  // namespace
}  // namespace bankshap
