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

#include "bankshap/hardness.hpp"

#include <algorithm>
#include <limits>

#include "bankshap/error.hpp"
#include "bankshap/exact.hpp"

namespace bankshap {

void validate(const PartitionInstance& p) {
  if (p.values.empty()) throw ValidationError("empty_partition", "PARTITION needs at least one value");
  if (p.values.size() + 1 > kMaxPlayers)
    throw ValidationError("too_many_players", "the reduced game would exceed 64 players");
  std::int64_t total = 0;
  for (auto a : p.values) {
    if (a < 1) throw ValidationError("nonpositive_value", "PARTITION values must be positive integers");
    if (a > (std::numeric_limits<std::int64_t>::max() / 4 - total))
      throw ValidationError("value_overflow", "PARTITION values too large");
    total += a;
  }
}

bool partition_brute_force(const PartitionInstance& p, std::size_t limit) {
  validate(p);
  const std::size_t m = p.values.size();
  if (m > limit) throw InstanceTooLarge("PARTITION brute force size", m, limit);
  std::int64_t total = 0;
  for (auto a : p.values) total += a;
  if (total % 2 != 0) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) sum += p.values[i];
    if (2 * sum == total) return true;
  }
  return false;
}

bool is_shp_instance(const Game& game) {
  if (!game.is_integral() || game.size() < 2) return false;
  const auto& claims = game.claims();
  if (claims.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < claims.size(); ++i)
    if (claims[i].get_num() % 2 != 0) return false;
  const Integer total = game.total_claims().get_num();
  return game.estate().get_num() == total / 2;
}

ShpInstance as_shp_instance(const Game& game) {
  if (!is_shp_instance(game))
    throw ValidationError("not_shp_instance",
                          "expected even claims, a final claim of 1 and estate floor(W/2)");
  return ShpInstance{game};
}

ShpInstance reduce(const PartitionInstance& p) {
  validate(p);
  std::vector<long long> claims;
  claims.reserve(p.values.size() + 1);
  long long sum = 0;
  for (auto a : p.values) {
    claims.push_back(2 * a);
    sum += a;
  }
  claims.push_back(1);
  // W = 2 sum + 1 and w0 = sum + 1, so E = W - w0 = sum.
  return ShpInstance{Game::from_integers(claims, sum)};
}

ShpAnswer shp_answer_exact(const ShpInstance& s, std::size_t cap) {
  ExactLimits limits;
  limits.permutation_cap = cap;
  const auto phi = shapley_permutation(s.game, GameForm::primal, limits).payoff;
  ShpAnswer out;
  out.phi_last = phi[s.last_player()];
  out.answer = out.phi_last < Rational(1, 2);
  return out;
}

Rational reverse_pair_sum(const ShpInstance& s, const Permutation& pi) {
  const Player last = s.last_player();
  return marginal(s.game, pi, last) + marginal(s.game, pi.reverse(), last);
}

std::optional<Permutation> find_certificate(const ShpInstance& s, std::size_t cap) {
  const std::size_t n = s.game.size();
  if (n > cap) throw InstanceTooLarge("certificate search player count", n, cap);
  const Player last = s.last_player();
  const Coalition others = s.game.grand_coalition().without(last);

  // The pair sum depends only on the predecessor set S of the last player:
  // pi contributes v(S + n) - v(S), its reverse v(N - S) - v(N - S - n).
  std::optional<std::vector<Player>> best;
  for (std::uint64_t mask = 0; mask <= others.mask(); ++mask) {
    if ((mask & ~others.mask()) != 0) continue;
    const Coalition before = Coalition::from_mask(mask);
    const Coalition after = others - before;
    const Rational pair = value(s.game, before.with(last)) - value(s.game, before) +
                          value(s.game, after.with(last)) - value(s.game, after);
    if (pair >= 1) continue;
    auto members = before.members();
    if (!best || members < *best) best = std::move(members);
  }
  if (!best) return std::nullopt;

  std::vector<Player> order = *best;
  order.push_back(last);
  for (Player p = 0; p < last; ++p)
    if (!std::binary_search(best->begin(), best->end(), p)) order.push_back(p);
  return Permutation(std::move(order));
}

}  // namespace bankshap
