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

#include "bankshap/voting.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bankshap/detail/parallel.hpp"
#include "bankshap/error.hpp"

namespace bankshap {

namespace {

Integer from_u64(std::uint64_t x) {
  Integer r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
  return r;
}

std::vector<std::int64_t> integer_claims(const Game& game) {
  if (!game.is_integral())
    throw ValidationError("non_integer_instance",
                          "the dynamic program needs integer claims and estate; scale the instance first");
  const ScaledInstance& s = game.scaled();
  if (!s.fits_int64)
    throw InstanceTooLarge("total claim bits", mpz_sizeinbase(s.total.get_mpz_t(), 2), 62);
  return s.claims64;
}

}  // namespace

VotingGame::VotingGame(std::vector<std::int64_t> weights, std::int64_t quota)
    : weights_(std::move(weights)), quota_(quota) {
  if (weights_.empty()) throw ValidationError("no_players", "a voting game needs at least one player");
  if (weights_.size() > kMaxPlayers) throw ValidationError("too_many_players", "at most 64 players are supported");
  std::int64_t total = 0;
  for (auto w : weights_) {
    if (w <= 0) throw ValidationError("nonpositive_weight", "every weight must be positive");
    if (w > std::numeric_limits<std::int64_t>::max() - total)
      throw ValidationError("weight_overflow", "total weight does not fit in 64 bits");
    total += w;
  }
  if (quota_ <= 0 || quota_ > total)
    throw ValidationError("bad_quota", "quota must satisfy 0 < q <= " + std::to_string(total));
}

int wvg_value(const VotingGame& game, Coalition s) {
  if (!s.subset_of(Coalition::full(game.size())))
    throw ValidationError("bad_coalition", "coalition names a player outside the game");
  if (s.empty()) return 0;
  std::int64_t w = 0;
  for (Player i : s.members()) w += game.weights()[i];
  return w >= game.quota() ? 1 : 0;
}

Integer CountMatrix::count(std::size_t weight, std::size_t size) const { return from_u64(at(weight, size)); }

CountMatrix count_matrix(std::span<const std::int64_t> claims, Player excluded, std::int64_t estate,
                         std::uint64_t* steps, const DpLimits& limits) {
  const std::size_t n = claims.size();
  if (n == 0 || excluded >= n) throw ValidationError("bad_player", "excluded player out of range");
  if (n > kMaxPlayers) throw ValidationError("too_many_players", "at most 64 players are supported");
  if (estate < 1) throw ValidationError("nonpositive_estate", "the count matrix needs E >= 1");
  for (auto w : claims)
    if (w <= 0) throw ValidationError("nonpositive_claim", "every claim must be positive");
  const auto cols = static_cast<std::uint64_t>(estate);
  if (cols > limits.max_cells / n) throw InstanceTooLarge("count matrix cells", cols * n, limits.max_cells);

  CountMatrix c(excluded, n, static_cast<std::size_t>(cols));
  c.at(0, 0) = 1;
  std::uint64_t updates = 0;
  std::size_t added = 0;  // players folded in so far; bounds the reachable sizes
  for (std::size_t j = 0; j < n; ++j) {
    if (j == excluded) continue;
    const std::int64_t wj = claims[j];
    if (wj < estate) {
      const auto shift = static_cast<std::size_t>(wj);
      for (std::size_t t = added + 1; t-- > 0;) {
        for (std::size_t w = c.columns(); w-- > shift;) {
          c.at(w, t + 1) += c.at(w - shift, t);
          ++updates;
        }
      }
    }
    ++added;
  }
  if (steps) *steps += updates;
  return c;
}

PayoffVector shapley_shubik(const VotingGame& game) {
  const std::size_t n = game.size();
  const auto weights = shapley_weights(static_cast<unsigned>(n));
  const std::int64_t q = game.quota();
  PayoffVector phi(n);
  for (Player i = 0; i < n; ++i) {
    const CountMatrix c = count_matrix(game.weights(), i, q);
    const std::int64_t low = std::max<std::int64_t>(0, q - game.weights()[i]);
    Rational acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
      Integer swings = 0;
      for (auto w = static_cast<std::size_t>(low); w < c.columns(); ++w) swings += c.count(w, t);
      acc += weights[t] * Rational(swings);
    }
    phi[i] = acc;
  }
  return phi;
}

DpResult shapley_dp(const Game& game, unsigned workers, const DpLimits& limits) {
  const auto claims = integer_claims(game);
  const std::size_t n = game.size();
  const std::int64_t estate = game.scaled().estate64;
  const auto weights = shapley_weights(static_cast<unsigned>(n));

  DpResult out;
  out.payoff = PayoffVector(n);
  out.rows = n;
  out.columns = static_cast<std::size_t>(estate);
  std::vector<std::uint64_t> steps(n, 0);
  detail::parallel_for(workers, n, [&](std::size_t i) {
    const CountMatrix c = count_matrix(claims, i, estate, &steps[i], limits);
    Rational phi = 0;
    Integer inner;
    Integer cell;
    for (std::size_t t = 0; t < n; ++t) {
      inner = 0;
      for (std::size_t w = 0; w < c.columns(); ++w) {
        const std::uint64_t count = c.at(w, t);
        if (count == 0) continue;
        const auto reach = static_cast<unsigned long>(std::min<std::int64_t>(estate - static_cast<std::int64_t>(w), claims[i]));
        mpz_set_ui(cell.get_mpz_t(), static_cast<unsigned long>(count));
        mpz_addmul_ui(inner.get_mpz_t(), cell.get_mpz_t(), reach);
      }
      if (inner != 0) phi += weights[t] * Rational(inner);
    }
    out.payoff[i] = phi;
  });
  for (auto s : steps) out.steps += s;
  return out;
}

ScaledGame scale_to_integer(const Game& game, const Integer& threshold) {
  const ScaledInstance& s = game.scaled();
  std::vector<Rational> claims;
  claims.reserve(s.claims.size());
  for (const auto& c : s.claims) claims.emplace_back(c);
  Game scaled(std::move(claims), Rational(s.estate));
  return ScaledGame{std::move(scaled), s.scale, s.estate > threshold};
}

}  // namespace bankshap
