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

#ifndef BANKSHAP_VOTING_HPP
#define BANKSHAP_VOTING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bankshap/game.hpp"

namespace bankshap {

/// Weighted voting game WVG[q; w]: S wins iff S is nonempty and w(S) >= q.
class VotingGame {
 public:
  /// Requires positive weights and 0 < q <= sum of weights.
  VotingGame(std::vector<std::int64_t> weights, std::int64_t quota);

  std::size_t size() const { return weights_.size(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t quota() const { return quota_; }

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t quota_;
};

int wvg_value(const VotingGame& game, Coalition s);

/// c_i(w, t): number of coalitions S of the other players with w(S) = w and
/// |S| = t, for 0 <= w < E and 0 <= t < n. Each count is bounded by 2^(n-1),
/// and n <= 64, so 64-bit cells cannot overflow.
class CountMatrix {
 public:
  CountMatrix(Player excluded, std::size_t players, std::size_t columns)
      : excluded_(excluded), rows_(players), columns_(columns), cells_(players * columns, 0) {}

  Player excluded_player() const { return excluded_; }
  /// Number of size classes t (= n).
  std::size_t rows() const { return rows_; }
  /// Number of weight classes w (= E).
  std::size_t columns() const { return columns_; }

  std::uint64_t at(std::size_t weight, std::size_t size) const { return cells_[size * columns_ + weight]; }
  std::uint64_t& at(std::size_t weight, std::size_t size) { return cells_[size * columns_ + weight]; }
  Integer count(std::size_t weight, std::size_t size) const;

 private:
  Player excluded_;
  std::size_t rows_;
  std::size_t columns_;
  std::vector<std::uint64_t> cells_;
};

struct DpLimits {
  /// Cap on rows * columns of a single count matrix.
  std::uint64_t max_cells = std::uint64_t{1} << 26;
};

/// Add-one-player subset-sum recurrence over every player except `excluded`,
/// truncated to weights below `estate`. `steps`, when given, is increased by
/// the number of cell updates performed.
CountMatrix count_matrix(std::span<const std::int64_t> claims, Player excluded, std::int64_t estate,
                         std::uint64_t* steps = nullptr, const DpLimits& limits = {});

/// Shapley-Shubik index of a weighted voting game, from the count matrices.
PayoffVector shapley_shubik(const VotingGame& game);

struct DpResult {
  PayoffVector payoff;
  std::uint64_t steps = 0;
  std::size_t rows = 0;
  std::size_t columns = 0;
};

/// Shapley value of an integer bankruptcy game through the quota-sum
/// decomposition: phi_i = sum_t t!(n-t-1)!/n! * sum_{w<E} min{E-w, w_i} c_i(w,t).
/// Throws ValidationError{"non_integer_instance"} unless claims and estate
/// are integers.
DpResult shapley_dp(const Game& game, unsigned workers = 1, const DpLimits& limits = {});

struct ScaledGame {
  Game game;
  Integer scale;
  /// True when the scaled estate is above the threshold; the DP is linear in it.
  bool estate_above_threshold = false;
};

inline const Integer kDefaultScaledEstateThreshold{10000000};

/// Multiplies claims and estate by the lcm of their denominators. The Shapley
/// value of the result is scale times the original one.
ScaledGame scale_to_integer(const Game& game, const Integer& threshold = kDefaultScaledEstateThreshold);

}  // namespace bankshap

#endif  // BANKSHAP_VOTING_HPP
