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

#ifndef BANKSHAP_HARDNESS_HPP
#define BANKSHAP_HARDNESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bankshap/game.hpp"

namespace bankshap {

/// PARTITION instance: positive integers a_1..a_m.
struct PartitionInstance {
  std::vector<std::int64_t> values;
};

/// Throws ValidationError unless m >= 1 and every a_i >= 1.
void validate(const PartitionInstance& p);

/// Plain subset enumeration; true iff some subset sums to half the total.
bool partition_brute_force(const PartitionInstance& p, std::size_t limit = 30);

/// Bankruptcy instance built from a PARTITION instance: claims 2a_1..2a_m, 1
/// and deficit sum(a) + 1, i.e. estate sum(a) = floor(W/2).
struct ShpInstance {
  Game game;

  Player last_player() const { return game.size() - 1; }
};

/// True iff the game has even claims except a final claim of 1 and estate floor(W/2).
bool is_shp_instance(const Game& game);
/// Wraps a game; throws ValidationError{"not_shp_instance"} if it is not one.
ShpInstance as_shp_instance(const Game& game);

ShpInstance reduce(const PartitionInstance& p);

struct ShpAnswer {
  bool answer = false;  // phi_n < 1/2
  Rational phi_last;
};

/// Exact phi_n by permutation enumeration (n <= cap).
ShpAnswer shp_answer_exact(const ShpInstance& s, std::size_t cap = 10);

/// Marginal contributions of the last player in pi and in its reverse.
Rational reverse_pair_sum(const ShpInstance& s, const Permutation& pi);

/// A permutation whose reverse pair sum for the last player is below 1, or
/// nothing when none exists. Searches predecessor sets of the last player
/// and returns the one whose sorted member list is lexicographically
/// smallest, ordered as: that set ascending, the last player, the rest ascending.
std::optional<Permutation> find_certificate(const ShpInstance& s, std::size_t cap = 10);

}  // namespace bankshap

#endif  // BANKSHAP_HARDNESS_HPP
