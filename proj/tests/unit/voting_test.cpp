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

#include "bankshap/error.hpp"
#include "bankshap/exact.hpp"
#include "bankshap/voting.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace bankshap {
namespace {

using testing_support::q;
using testing_support::to_game;

std::vector<std::int64_t> as_int(const std::vector<Rational>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.get_num().get_si());
  return out;
}

TEST(VotingGame, Validation) {
  EXPECT_THROW(VotingGame({}, 1), ValidationError);
  EXPECT_THROW(VotingGame({1, 0}, 1), ValidationError);
  EXPECT_THROW(VotingGame({1, 1}, 0), ValidationError);
  EXPECT_THROW(VotingGame({1, 1}, 3), ValidationError);
  EXPECT_NO_THROW(VotingGame({1, 1}, 2));
}

TEST(WvgValue, WorkedExamples) {
  EXPECT_EQ(wvg_value(VotingGame({1, 1, 1}, 2), Coalition::of({0, 1})), 1);
  EXPECT_EQ(wvg_value(VotingGame({1, 1, 1}, 2), Coalition()), 0);
  EXPECT_EQ(wvg_value(VotingGame({3, 2, 1}, 4), Coalition::of({0})), 0);
  EXPECT_EQ(wvg_value(VotingGame({3, 2, 1}, 4), Coalition::of({0, 2})), 1);
}

TEST(CountMatrix, WorkedExamples) {
  const std::vector<std::int64_t> w{3, 2, 1};
  const CountMatrix c = count_matrix(w, 2, 4);
  EXPECT_EQ(c.rows(), 3u);
  EXPECT_EQ(c.columns(), 4u);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t x = 0; x < 4; ++x) {
      const bool nonzero = (x == 0 && t == 0) || (x == 2 && t == 1) || (x == 3 && t == 1);
      EXPECT_EQ(c.at(x, t), nonzero ? 1u : 0u) << "w=" << x << " t=" << t;
    }

  const std::vector<std::int64_t> single{5};
  const CountMatrix one = count_matrix(single, 0, 7);
  EXPECT_EQ(one.at(0, 0), 1u);
  for (std::size_t x = 1; x < 7; ++x) EXPECT_EQ(one.at(x, 0), 0u);

  const std::vector<std::int64_t> equal{4, 4, 4, 4};
  const CountMatrix e = count_matrix(equal, 1, 4);
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(e.at(x, t), x == 0 && t == 0 ? 1u : 0u);
}

TEST(CountMatrix, MatchesSubsetEnumeration) {
  oracle::Gen gen(11);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen.between(1, 12));
    const auto w = as_int(gen.claims(n, true, 15));
    const auto estate = gen.between(1, 60);
    const auto excluded = static_cast<Player>(gen.between(0, static_cast<std::int64_t>(n) - 1));
    const CountMatrix c = count_matrix(w, excluded, estate);
    const auto ref = oracle::subset_counts(w, excluded);
    std::uint64_t mass = 0;
    for (std::size_t t = 0; t < n; ++t)
      for (std::int64_t x = 0; x < estate; ++x) {
        const auto it = ref.find({x, t});
        ASSERT_EQ(c.at(static_cast<std::size_t>(x), t), it == ref.end() ? 0u : it->second);
        ASSERT_EQ(c.count(static_cast<std::size_t>(x), t), c.at(static_cast<std::size_t>(x), t));
        mass += c.at(static_cast<std::size_t>(x), t);
      }
    EXPECT_EQ(c.at(0, 0), 1u);
    EXPECT_LE(mass, std::uint64_t{1} << (n - 1));
  }
}

TEST(CountMatrix, LargeCountsAreExact) {
  // 63 unit weights: c(31, 31) = C(62, 31), close to 2^60.
  const std::vector<std::int64_t> w(63, 1);
  const CountMatrix c = count_matrix(w, 0, 40);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 62, 31);
  EXPECT_EQ(c.count(31, 31), binom);
}

TEST(ShapleyShubik, WorkedExamples) {
  EXPECT_EQ(shapley_shubik(VotingGame({1, 1, 1}, 2)).values(), q({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(shapley_shubik(VotingGame({3, 2, 1}, 2)).values(), q({"1/2", "1/2", "0"}));
  EXPECT_EQ(shapley_shubik(VotingGame({3, 2, 1}, 3)).values(), q({"2/3", "1/6", "1/6"}));
  EXPECT_EQ(oracle::ss_index({3, 2, 1}, 2), q({"1/2", "1/2", "0"}));
  EXPECT_EQ(oracle::ss_index({3, 2, 1}, 3), q({"2/3", "1/6", "1/6"}));
}

TEST(ShapleyShubik, MatchesPivotCountingAndNormalises) {
  oracle::Gen gen(12);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen.between(1, 7));
    const auto w = as_int(gen.claims(n, true, 10));
    std::int64_t total = 0;
    for (auto x : w) total += x;
    const auto quota = gen.between(1, total);
    const auto phi = shapley_shubik(VotingGame(w, quota));
    EXPECT_EQ(phi.values(), oracle::ss_index(w, quota));
    EXPECT_EQ(phi.sum(), 1);
  }
}

TEST(ShapleyDp, WorkedExamples) {
  EXPECT_EQ(shapley_dp(Game::from_integers({3, 2, 1}, 4)).payoff.values(), q({"13/6", "7/6", "2/3"}));
  EXPECT_EQ(shapley_dp(Game::from_integers({2, 2, 2}, 3)).payoff.values(), q({"1", "1", "1"}));
  EXPECT_EQ(shapley_dp(Game::from_integers({1, 1}, 1)).payoff.values(), q({"1/2", "1/2"}));
  EXPECT_EQ(shapley_dp(Game::from_integers({9}, 4)).payoff.values(), q({"4"}));
}

TEST(ShapleyDp, WorkedDecomposition) {
  PayoffVector sum(3);
  for (std::int64_t quota = 1; quota <= 4; ++quota) sum += shapley_shubik(VotingGame({3, 2, 1}, quota));
  EXPECT_EQ(sum.values(), q({"13/6", "7/6", "2/3"}));
}

TEST(ShapleyDp, RejectsNonIntegerInstance) {
  try {
    shapley_dp(Game(q({"1", "1/2", "1"}), Rational(3, 2)));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "non_integer_instance");
  }
}

TEST(ShapleyDp, MatchesReferenceOnRandomIntegerInstances) {
  oracle::Gen gen(13);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen.between(1, 8));
    oracle::Bg bg;
    do {
      bg = gen.game(n, true, 12);
    } while (bg.estate > 30);
    const auto r = shapley_dp(to_game(bg));
    if (n <= 7) EXPECT_EQ(r.payoff.values(), oracle::bg_shapley(bg));
    EXPECT_EQ(r.payoff, shapley_permutation(to_game(bg)).payoff);
  }
}

TEST(ShapleyDp, QuotaSumDecomposition) {
  oracle::Gen gen(14);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen.between(1, 6));
    oracle::Bg bg;
    do {
      bg = gen.game(n, true, 8);
    } while (bg.estate > 12);
    const auto w = as_int(bg.claims);
    std::vector<oracle::Q> sum(n, 0);
    for (std::int64_t quota = 1; quota <= bg.estate.get_num().get_si(); ++quota) {
      const auto ss = oracle::ss_index(w, quota);
      for (std::size_t i = 0; i < n; ++i) sum[i] += ss[i];
    }
    EXPECT_EQ(shapley_dp(to_game(bg)).payoff.values(), sum);
  }
}

TEST(ShapleyDp, QuotaIncrementIsShapleyShubik) {
  oracle::Gen gen(15);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen.between(2, 7));
    const auto claims = gen.claims(n, true, 10);
    const auto w = as_int(claims);
    const auto total = oracle::total(claims).get_num().get_si();
    if (total < 3) continue;
    const auto e = gen.between(2, total - 1);
    PayoffVector diff = shapley_dp(Game(claims, Rational(static_cast<long>(e)))).payoff;
    diff -= shapley_dp(Game(claims, Rational(static_cast<long>(e - 1)))).payoff;
    EXPECT_EQ(diff, shapley_shubik(VotingGame(w, e)));
  }
}

TEST(ShapleyDp, WorkerCountDoesNotChangeResult) {
  oracle::Gen gen(16);
  for (int rep = 0; rep < 10; ++rep) {
    const Game g = to_game(gen.game(static_cast<std::size_t>(gen.between(1, 20)), true, 50));
    const auto one = shapley_dp(g, 1);
    for (unsigned w : {2U, 5U}) {
      const auto many = shapley_dp(g, w);
      EXPECT_EQ(many.payoff, one.payoff);
      EXPECT_EQ(many.steps, one.steps);
    }
  }
}

TEST(ShapleyDp, StepsScaleLinearlyWithEstate) {
  // Claims proportional to E keep the instance shape fixed.
  std::uint64_t previous = 0;
  for (std::int64_t e = 100; e <= 1600; e *= 2) {
    std::vector<long long> claims;
    for (long long k : {3, 4, 5, 3, 4, 6, 2, 5, 3, 4}) claims.push_back(e * k / 15);
    const auto r = shapley_dp(Game::from_integers(claims, e));
    if (previous != 0) {
      const double ratio = static_cast<double>(r.steps) / static_cast<double>(previous);
      EXPECT_GE(ratio, 1.8);
      EXPECT_LE(ratio, 2.2);
    }
    previous = r.steps;
  }
}

TEST(ScaleToInteger, WorkedExamples) {
  const ScaledGame a = scale_to_integer(Game(q({"1", "1/2", "1"}), Rational(3, 2)));
  EXPECT_EQ(a.scale, 2);
  EXPECT_EQ(a.game.claims(), q({"2", "1", "2"}));
  EXPECT_EQ(a.game.estate(), 3);

  const ScaledGame b = scale_to_integer(Game::from_integers({3, 2, 1}, 4));
  EXPECT_EQ(b.scale, 1);
  EXPECT_EQ(b.game.claims(), q({"3", "2", "1"}));

  const ScaledGame c = scale_to_integer(Game(q({"1/3", "1/3"}), Rational(1, 3)));
  EXPECT_EQ(c.scale, 3);
  EXPECT_EQ(c.game.claims(), q({"1", "1"}));
  EXPECT_EQ(c.game.estate(), 1);
  EXPECT_FALSE(c.estate_above_threshold);

  EXPECT_TRUE(scale_to_integer(Game::from_integers({30, 20}, 25), Integer(24)).estate_above_threshold);
}

TEST(ScaleToInteger, ScaledDpEqualsCoefficient) {
  oracle::Gen gen(17);
  for (int rep = 0; rep < 40; ++rep) {
    const Game g = to_game(gen.game(static_cast<std::size_t>(gen.between(1, 8)), false, 10));
    const ScaledGame s = scale_to_integer(g);
    PayoffVector phi = shapley_dp(s.game).payoff;
    for (Player i = 0; i < g.size(); ++i) phi[i] /= Rational(s.scale);
    EXPECT_EQ(phi, shapley_coefficient(g).payoff);
  }
}

}  // namespace
}  // namespace bankshap
