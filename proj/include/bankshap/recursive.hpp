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

#ifndef BANKSHAP_RECURSIVE_HPP
#define BANKSHAP_RECURSIVE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bankshap/game.hpp"

namespace bankshap {

/// Sub-coalition results of a memoised recursion. The entry for S holds one
/// value per member of S, in increasing player order. Entries are written
/// once and never modified.
class MemoTable {
 public:
  const std::vector<Rational>* find(Coalition s) const;
  /// Returns false (and keeps the old entry) if s is already present.
  bool insert(Coalition s, std::vector<Rational> values);
  std::size_t size() const { return entries_.size(); }
  /// All keys in increasing mask order.
  std::vector<Coalition> keys() const;

  /// Lookups answered from a stored entry / lookups that fell through to a
  /// synthesised base case.
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  void record_lookups(std::uint64_t hits, std::uint64_t misses) {
    hits_ += hits;
    misses_ += misses;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Rational>> entries_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

struct RecursionOptions {
  /// Maximum number of stored (non-base) states.
  std::uint64_t memo_cap = 4'000'000;
  /// Threads per cardinality layer.
  unsigned workers = 1;
  /// Keep every layer in the returned table; otherwise only the top entry survives.
  bool keep_memo = true;
};

struct RecursionStats {
  /// Distinct sub-coalitions evaluated through the recurrence (|S| >= 2,
  /// not covered by a base case). Equals the matching memo_state_counts entry.
  std::uint64_t states_computed = 0;
  std::uint64_t memo_hits = 0;
  /// Lookups answered by a synthesised base case (singletons, zero or claim vectors).
  std::uint64_t base_lookups = 0;
  std::size_t layers = 0;
};

struct RecursionResult {
  PayoffVector payoff;
  RecursionStats stats;
  MemoTable memo;
};

/// O'Neill's recursive completion: for |S| >= 2 and w(S) > w0,
///   phi_i[S] = (min{w_i, v(S)} + sum_{j in S, j != i} phi_i[S - j]) / |S|,
/// with phi[{k}] = v({k}) and phi[S] = 0 when w(S) <= w0. Evaluated bottom-up
/// by cardinality over the reachable states only.
RecursionResult shapley_oneill(const Game& game, const RecursionOptions& options = {});

/// The same completion on the dual game v*(S) = min{E, w(S)}:
///   phi_i[S] = (v*(S) - v*(S - i) + sum_{j != i} phi_i[S - j]) / |S|
/// for |S| >= 2 and w(S) > E, with phi[{k}] = min{E, w_k} and
/// phi[S] = (w_i) when w(S) <= E.
RecursionResult shapley_dual_recursive(const Game& game, const RecursionOptions& options = {});

/// Base-case vector for a coalition the recursion never stores: a singleton,
/// or |S| >= 2 with w(S) <= w0 (primal) resp. w(S) <= E (dual). Throws
/// ValidationError{"not_a_base_case"} otherwise.
std::vector<Rational> recursion_base_entry(const Game& game, GameForm form, Coalition s);

struct MemoStateCounts {
  /// #{S : |S| <= n-2, w(S) < E}: states of the primal recursion.
  std::uint64_t primal = 0;
  /// #{S : |S| >= 2, w(S) > E}: states of the dual recursion.
  std::uint64_t dual = 0;
};

/// Exhaustive up to `exhaustive_limit` players; integer instances beyond that
/// are counted with a subset-sum table over (size, weight <= E).
MemoStateCounts memo_state_counts(const Game& game, std::size_t exhaustive_limit = 24);

}  // namespace bankshap

#endif  // BANKSHAP_RECURSIVE_HPP
