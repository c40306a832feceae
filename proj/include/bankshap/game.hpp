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

#ifndef BANKSHAP_GAME_HPP
#define BANKSHAP_GAME_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

#include "bankshap/rational.hpp"

namespace bankshap {

/// Zero-based player index. All user-facing I/O is one-based.
using Player = std::size_t;

/// Largest player count representable by a Coalition.
inline constexpr std::size_t kMaxPlayers = 64;

/// Default cap for operations that enumerate all 2^n coalitions.
inline constexpr std::size_t kExhaustiveLimit = 20;

/// A set of players stored as a 64-bit mask; bit i is player i.
class Coalition {
 public:
  constexpr Coalition() = default;
  static constexpr Coalition from_mask(std::uint64_t mask) { return Coalition(mask); }
  static Coalition of(std::initializer_list<Player> players);
  static constexpr Coalition full(std::size_t n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(Player i) const { return i < 64 && ((mask_ >> i) & 1U) != 0; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Coalition with(Player i) const { return Coalition(mask_ | bit(i)); }
  constexpr Coalition without(Player i) const { return Coalition(mask_ & ~bit(i)); }

  /// Position of player i among the members listed in increasing order.
  constexpr std::size_t rank_of(Player i) const {
    return static_cast<std::size_t>(std::popcount(mask_ & (bit(i) - 1)));
  }

  std::vector<Player> members() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask_ | b.mask_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.mask_ & b.mask_); }
  /// Set difference a \ b.
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}
  static constexpr std::uint64_t bit(Player i) { return i < 64 ? std::uint64_t{1} << i : 0; }

  std::uint64_t mask_ = 0;
};

/// An ordering of players; position j holds order()[j].
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError{"bad_permutation"} unless `order` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Player> order);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  const std::vector<Player>& order() const { return order_; }
  Player operator[](std::size_t position) const { return order_[position]; }
  std::size_t position_of(Player i) const;

  Permutation reverse() const;
  /// Players strictly before i.
  Coalition predecessors(Player i) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Player> order_;
};

/// Per-player exact allocation.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(std::size_t n) : values_(n) {}
  explicit PayoffVector(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  Rational sum() const;

  PayoffVector& operator+=(const PayoffVector& other);
  PayoffVector& operator-=(const PayoffVector& other);
  friend bool operator==(const PayoffVector& a, const PayoffVector& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
};

/// Claims and estate brought to a common integer denominator. The game
/// scaled by `scale` has integer data; `fits_int64` marks the case where the
/// total claim is below 2^62 so that the 64-bit mirrors are usable.
struct ScaledInstance {
  Integer scale;
  std::vector<Integer> claims;
  Integer estate;
  Integer deficit;
  Integer total;

  bool fits_int64 = false;
  std::vector<std::int64_t> claims64;
  std::int64_t estate64 = 0;
  std::int64_t deficit64 = 0;
  std::int64_t total64 = 0;
};

/// Bankruptcy game BG[E; w]. Equivalently the rectified-linear game
/// ReL[w0; w] with deficit w0 = W - E. Immutable after construction.
class Game {
 public:
  /// Validates n >= 1, n <= 64, every claim > 0 and 0 < E < W; throws
  /// ValidationError otherwise.
  Game(std::vector<Rational> claims, Rational estate);
  static Game from_integers(const std::vector<long long>& claims, long long estate);

  std::size_t size() const { return claims_.size(); }
  const std::vector<Rational>& claims() const { return claims_; }
  const Rational& claim(Player i) const { return claims_[i]; }
  const Rational& estate() const { return estate_; }
  const Rational& total_claims() const { return total_; }
  const Rational& deficit() const { return deficit_; }
  Coalition grand_coalition() const { return Coalition::full(size()); }
  bool is_integral() const;

  Rational weight(Coalition s) const;
  /// Throws ValidationError{"bad_coalition"} when s names players >= n.
  void check(Coalition s) const;

  const ScaledInstance& scaled() const { return *scaled_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.claims_ == b.claims_ && a.estate_ == b.estate_;
  }

 private:
  std::vector<Rational> claims_;
  Rational estate_;
  Rational total_;
  Rational deficit_;
  std::shared_ptr<const ScaledInstance> scaled_;
};

/// Which characteristic function to evaluate: v or its dual v*.
enum class GameForm { primal, dual };

/// v(S) = max{0, E - w(N \ S)} = max{0, w(S) - w0}.
Rational value(const Game& game, Coalition s);
/// v*(S) = v(N) - v(N \ S) = min{E, w(S)}.
Rational dual_value(const Game& game, Coalition s);
/// Marginal contribution of i when joining its predecessors in `order`.
Rational marginal(const Game& game, const Permutation& order, Player i,
                  GameForm form = GameForm::primal);

/// A game restricted to a member set. Holds a pointer to its parent, so the
/// parent must outlive the view.
class GameView {
 public:
  GameView(const Game& parent, Coalition members);

  const Game& parent() const { return *parent_; }
  Coalition members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// Both formulas are the parent's, evaluated on subsets of members().
  Rational value(Coalition s) const;
  Rational dual_value(Coalition s) const;

 private:
  void check(Coalition s) const;

  const Game* parent_;
  Coalition members_;
};

/// Throws ValidationError{"empty_restriction"} for an empty member set.
GameView restrict(const Game& game, Coalition members);

/// y_i = E * w_i / W.
PayoffVector proportional_distribution(const Game& game);

/// Exhaustive core test: efficiency and coalitional rationality for all 2^n
/// coalitions.
bool in_core(const Game& game, const PayoffVector& x, std::size_t limit = kExhaustiveLimit);

/// Exhaustive supermodularity test.
bool check_supermodular(const Game& game, std::size_t limit = kExhaustiveLimit);

}  // namespace bankshap

#endif  // BANKSHAP_GAME_HPP
