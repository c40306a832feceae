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

#ifndef BANKSHAP_EXACT_HPP
#define BANKSHAP_EXACT_HPP

#include <cstdint>
#include <string_view>

#include "bankshap/game.hpp"

namespace bankshap {

enum class ExactMethod { permutation, coefficient };

std::string_view to_string(ExactMethod method);

/// Player-count caps for the enumerative methods (n! and 2^n growth).
struct ExactLimits {
  std::size_t permutation_cap = 10;
  std::size_t coefficient_cap = 24;
};

struct ExactResult {
  PayoffVector payoff;
  ExactMethod method = ExactMethod::permutation;
  /// Permutations (permutation method) or coalitions (coefficient method) visited.
  std::uint64_t visited = 0;
};

/// Averages marginal contributions over all n! orderings, generated in
/// lexicographic order. This is the reference oracle for every other solver.
ExactResult shapley_permutation(const Game& game, GameForm form = GameForm::primal,
                                const ExactLimits& limits = {});

/// Weights every coalition marginal by |S|!(n-|S|-1)!/n!. The coalition walk
/// is split across `workers` threads; integer partial sums make the result
/// independent of the split.
ExactResult shapley_coefficient(const Game& game, GameForm form = GameForm::primal,
                                const ExactLimits& limits = {}, unsigned workers = 1);

/// Shapley value of the dual game v*; equal to the primal value by self-duality.
ExactResult shapley_of_dual(const Game& game, ExactMethod method, const ExactLimits& limits = {});

/// Shapley value of a restricted game by the coefficient method. Entry k
/// belongs to the k-th member of view.members() in increasing index order.
PayoffVector shapley_coefficient(const GameView& view, GameForm form = GameForm::primal,
                                 const ExactLimits& limits = {});

}  // namespace bankshap

#endif  // BANKSHAP_EXACT_HPP
