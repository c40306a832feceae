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

#include "bankshap/game.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bankshap/detail/integer_kernel.hpp"
#include "bankshap/error.hpp"

namespace bankshap {

namespace {

const Integer kInt64Headroom = Integer(1) << 62;

std::shared_ptr<const ScaledInstance> make_scaled(const std::vector<Rational>& claims,
                                                  const Rational& estate) {
  auto s = std::make_shared<ScaledInstance>();
  std::vector<Rational> all = claims;
  all.push_back(estate);
  s->scale = common_denominator(all);

  s->claims.reserve(claims.size());
  s->total = 0;
  for (const auto& w : claims) {
    Integer c = w.get_num() * (s->scale / w.get_den());
    s->total += c;
    s->claims.push_back(std::move(c));
  }
  s->estate = estate.get_num() * (s->scale / estate.get_den());
  s->deficit = s->total - s->estate;

  s->fits_int64 = s->total < kInt64Headroom;
  if (s->fits_int64) {
    s->claims64.reserve(claims.size());
    for (const auto& c : s->claims) s->claims64.push_back(c.get_si());
    s->estate64 = s->estate.get_si();
    s->deficit64 = s->deficit.get_si();
    s->total64 = s->total.get_si();
  }
  return s;
}

Rational sum_of(const std::vector<Rational>& xs) {
  Rational acc = 0;
  for (const auto& x : xs) acc += x;
  return acc;
}

}  // namespace

// -- Coalition ---------------------------------------------------------------

Coalition Coalition::of(std::initializer_list<Player> players) {
  Coalition c;
  for (Player p : players) c = c.with(p);
  return c;
}

std::vector<Player> Coalition::members() const {
  std::vector<Player> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Player>(std::countr_zero(m)));
  return out;
}

// -- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<Player> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (Player p : order_) {
    if (p >= order_.size() || seen[p])
      throw ValidationError("bad_permutation", "permutation is not a bijection on 0..n-1");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), Player{0});
  return Permutation(std::move(order));
}

std::size_t Permutation::position_of(Player i) const {
  const auto it = std::find(order_.begin(), order_.end(), i);
  if (it == order_.end()) throw ValidationError("bad_player", "player not in permutation");
  return static_cast<std::size_t>(it - order_.begin());
}

Permutation Permutation::reverse() const {
  Permutation r;
  r.order_.assign(order_.rbegin(), order_.rend());
  return r;
}

Coalition Permutation::predecessors(Player i) const {
  Coalition c;
  for (Player p : order_) {
    if (p == i) return c;
    c = c.with(p);
  }
  throw ValidationError("bad_player", "player not in permutation");
}

// -- PayoffVector ------------------------------------------------------------

Rational PayoffVector::sum() const { return sum_of(values_); }

PayoffVector& PayoffVector::operator+=(const PayoffVector& other) {
  if (other.size() != size()) throw ValidationError("size_mismatch", "payoff vectors differ in length");
  for (std::size_t i = 0; i < size(); ++i) values_[i] += other.values_[i];
  return *this;
}

PayoffVector& PayoffVector::operator-=(const PayoffVector& other) {
  if (other.size() != size()) throw ValidationError("size_mismatch", "payoff vectors differ in length");
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

// -- Game --------------------------------------------------------------------

Game::Game(std::vector<Rational> claims, Rational estate)
    : claims_(std::move(claims)), estate_(std::move(estate)) {
  if (claims_.empty()) throw ValidationError("no_players", "a game needs at least one claimant");
  if (claims_.size() > kMaxPlayers)
    throw ValidationError("too_many_players",
                          "at most " + std::to_string(kMaxPlayers) + " players are supported, got " +
                              std::to_string(claims_.size()));
  for (auto& w : claims_) {
    w.canonicalize();
    if (w <= 0) throw ValidationError("nonpositive_claim", "every claim must be positive");
  }
  estate_.canonicalize();
  if (estate_ <= 0) throw ValidationError("nonpositive_estate", "the estate must be positive");
  total_ = sum_of(claims_);
  if (estate_ >= total_)
    throw ValidationError("estate_not_deficient",
                          "the estate must be strictly smaller than the total claim (E < W)");
  deficit_ = total_ - estate_;
  scaled_ = make_scaled(claims_, estate_);
}

Game Game::from_integers(const std::vector<long long>& claims, long long estate) {
  std::vector<Rational> q;
  q.reserve(claims.size());
  for (long long c : claims) q.emplace_back(static_cast<long>(c));
  return Game(std::move(q), Rational(static_cast<long>(estate)));
}

bool Game::is_integral() const { return scaled_->scale == 1; }

Rational Game::weight(Coalition s) const {
  check(s);
  Rational w = 0;
  for (Player i : s.members()) w += claims_[i];
  return w;
}

void Game::check(Coalition s) const {
  if (!s.subset_of(grand_coalition()))
    throw ValidationError("bad_coalition", "coalition names a player outside 1.." + std::to_string(size()));
}

// -- characteristic functions ------------------------------------------------

Rational value(const Game& game, Coalition s) {
  Rational excess = game.weight(s) - game.deficit();
  return excess > 0 ? excess : Rational(0);
}

Rational dual_value(const Game& game, Coalition s) {
  Rational w = game.weight(s);
  return w < game.estate() ? w : game.estate();
}

Rational marginal(const Game& game, const Permutation& order, Player i, GameForm form) {
  if (order.size() != game.size())
    throw ValidationError("bad_permutation", "permutation length differs from player count");
  const Coalition before = order.predecessors(i);
  if (form == GameForm::primal) return value(game, before.with(i)) - value(game, before);
  return dual_value(game, before.with(i)) - dual_value(game, before);
}

// -- GameView ----------------------------------------------------------------

GameView::GameView(const Game& parent, Coalition members) : parent_(&parent), members_(members) {
  parent.check(members);
  if (members.empty()) throw ValidationError("empty_restriction", "cannot restrict a game to no players");
}

void GameView::check(Coalition s) const {
  if (!s.subset_of(members_))
    throw ValidationError("bad_coalition", "coalition is not inside the restricted player set");
}

Rational GameView::value(Coalition s) const {
  check(s);
  return bankshap::value(*parent_, s);
}

Rational GameView::dual_value(Coalition s) const {
  check(s);
  return bankshap::dual_value(*parent_, s);
}

GameView restrict(const Game& game, Coalition members) { return GameView(game, members); }

// -- allocations -------------------------------------------------------------

PayoffVector proportional_distribution(const Game& game) {
  PayoffVector y(game.size());
  const Rational ratio = game.estate() / game.total_claims();
  for (Player i = 0; i < game.size(); ++i) y[i] = ratio * game.claim(i);
  return y;
}

bool in_core(const Game& game, const PayoffVector& x, std::size_t limit) {
  const std::size_t n = game.size();
  if (n > limit) throw InstanceTooLarge("core check player count", n, limit);
  if (x.size() != n) return false;
  if (x.sum() != game.estate()) return false;

  // Bring the payoff to the game's integer scale so the walk stays integral.
  const ScaledInstance& s = game.scaled();
  std::vector<Rational> scaled_x;
  scaled_x.reserve(n);
  for (const auto& xi : x.values()) scaled_x.push_back(xi * Rational(s.scale));
  const Integer den = common_denominator(scaled_x);
  std::vector<Integer> xs;
  std::vector<Integer> ws;
  for (Player i = 0; i < n; ++i) {
    xs.push_back(scaled_x[i].get_num() * (den / scaled_x[i].get_den()));
    ws.push_back(s.claims[i] * den);
  }
  const Integer deficit = s.deficit * den;

  bool ok = true;
  Integer payoff = 0;
  std::uint64_t prev = 0;
  detail::gray_walk<Integer>(ws, 0, std::uint64_t{1} << n, [&](std::uint64_t mask, const Integer& w) {
    if (!ok) return;
    if (const std::uint64_t diff = mask ^ prev; diff != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(diff));
      if (mask & diff) {
        payoff += xs[i];
      } else {
        payoff -= xs[i];
      }
    }
    prev = mask;
    if (w > deficit ? payoff < w - deficit : payoff < 0) ok = false;
  });
  return ok;
}

bool check_supermodular(const Game& game, std::size_t limit) {
  const std::size_t n = game.size();
  if (n > limit) throw InstanceTooLarge("supermodularity check player count", n, limit);
  // Supermodularity is equivalent to increasing marginals: for every S and
  // distinct i, j outside S, v(S+i+j) - v(S+j) >= v(S+i) - v(S).
  return detail::dispatch(game.scaled(), [&](const auto& g) {
    using Int = std::remove_cvref_t<decltype(g.estate)>;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Int> v(count);
    detail::gray_walk<Int>(g.claims, 0, count, [&](std::uint64_t mask, const Int& w) { v[mask] = g.primal(w); });
    for (std::uint64_t s = 0; s < count; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bi = std::uint64_t{1} << i;
        if (s & bi) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          const std::uint64_t bj = std::uint64_t{1} << j;
          if (s & bj) continue;
          if (v[s | bi | bj] + v[s] < v[s | bi] + v[s | bj]) return false;
        }
      }
    }
    return true;
  });
}

}  // namespace bankshap
