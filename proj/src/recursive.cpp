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

#include "bankshap/recursive.hpp"

#include <algorithm>
#include <type_traits>
#include <unordered_set>

#include "bankshap/detail/integer_kernel.hpp"
#include "bankshap/detail/parallel.hpp"
#include "bankshap/error.hpp"

namespace bankshap {

namespace {

using detail::IntView;

// Recurrence data in the game's integer scale. A coalition is "stored" when
// the recurrence applies to it; everything else is a base case.
template <class Int>
struct Recurrence {
  const IntView<Int>& g;
  GameForm form;
  Rational unit;  // 1 / scale

  Int weight(std::uint64_t mask) const { return detail::subset_weight<Int>(g.claims, mask); }

  bool stored(std::uint64_t mask, const Int& w) const {
    if (std::popcount(mask) < 2) return false;
    return form == GameForm::primal ? w > g.deficit : w > g.estate;
  }

  Rational real(const Int& x) const { return Rational(detail::to_integer(x)) * unit; }

  // Base-case component for player i of a non-stored coalition.
  Rational base(std::uint64_t mask, Player i) const {
    if (std::popcount(mask) == 1) {
      const Int& wi = g.claims[i];
      return real(form == GameForm::primal ? g.primal(wi) : g.dual(wi));
    }
    return form == GameForm::primal ? Rational(0) : real(g.claims[i]);
  }

  Rational lead(std::uint64_t, const Int& w, Player i) const {
    if (form == GameForm::primal) {
      const Int v = g.primal(w);
      return real(g.claims[i] < v ? g.claims[i] : v);
    }
    const Int rest = w - g.claims[i];
    return real(Int(g.dual(w) - g.dual(rest)));
  }
};

template <class Int>
RecursionResult run(const Game& game, const IntView<Int>& g, GameForm form, const RecursionOptions& options) {
  const std::size_t n = game.size();
  const Recurrence<Int> rec{g, form, Rational(1) / Rational(game.scaled().scale)};
  const std::uint64_t full = game.grand_coalition().mask();

  RecursionResult out;
  out.payoff = PayoffVector(n);

  if (!rec.stored(full, g.total)) {
    for (Player i = 0; i < n; ++i) out.payoff[i] = rec.base(full, i);
    return out;
  }

  // Discover reachable stored states top-down, one cardinality layer at a time.
  // Every superset of a stored coalition is stored too, so this is exactly
  // {S : |S| >= 2, S stored}.
  std::vector<std::vector<std::uint64_t>> layers(n + 1);
  layers[n].push_back(full);
  std::uint64_t total_states = 1;
  for (std::size_t k = n; k > 2; --k) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t s : layers[k]) {
      for (std::uint64_t m = s; m != 0; m &= m - 1) {
        const std::uint64_t t = s & ~(m & -m);
        if (next.contains(t)) continue;
        if (rec.stored(t, rec.weight(t))) {
          next.insert(t);
          if (++total_states > options.memo_cap) throw MemoCapExceeded(total_states, options.memo_cap);
        }
      }
    }
    layers[k - 1].assign(next.begin(), next.end());
    std::sort(layers[k - 1].begin(), layers[k - 1].end());
  }

  MemoTable memo;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& layer = layers[k];
    if (layer.empty()) continue;
    ++out.stats.layers;
    std::vector<std::vector<Rational>> values(layer.size());
    std::vector<std::uint64_t> layer_hits(layer.size(), 0);
    std::vector<std::uint64_t> layer_misses(layer.size(), 0);
    detail::parallel_for(options.workers, layer.size(), [&](std::size_t idx) {
      const std::uint64_t s = layer[idx];
      const Int w = rec.weight(s);
      const Coalition sc = Coalition::from_mask(s);
      const auto members = sc.members();
      auto& phi = values[idx];
      phi.reserve(members.size());
      // Look each sub-coalition up once and reuse it for every member.
      std::vector<const std::vector<Rational>*> sub(members.size(), nullptr);
      for (std::size_t r = 0; r < members.size(); ++r) {
        sub[r] = memo.find(sc.without(members[r]));
        if (sub[r]) {
          ++layer_hits[idx];
        } else {
          ++layer_misses[idx];
        }
      }
      for (Player i : members) {
        Rational acc = rec.lead(s, w, i);
        for (std::size_t r = 0; r < members.size(); ++r) {
          const Player j = members[r];
          if (j == i) continue;
          const Coalition t = sc.without(j);
          acc += sub[r] ? (*sub[r])[t.rank_of(i)] : rec.base(t.mask(), i);
        }
        acc /= static_cast<unsigned long>(members.size());
        phi.push_back(std::move(acc));
      }
    });
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      hits += layer_hits[idx];
      misses += layer_misses[idx];
      memo.insert(Coalition::from_mask(layer[idx]), std::move(values[idx]));
    }
    out.stats.states_computed += layer.size();
    if (!options.keep_memo && k > 2) {
      // Layer k-1 is no longer needed once layer k exists.
      MemoTable trimmed;
      for (std::uint64_t s : layer) trimmed.insert(Coalition::from_mask(s), *memo.find(Coalition::from_mask(s)));
      memo = std::move(trimmed);
    }
  }

  out.payoff = PayoffVector(*memo.find(Coalition::from_mask(full)));
  memo.record_lookups(hits, misses);
  out.stats.memo_hits = hits;
  out.stats.base_lookups = misses;
  out.memo = std::move(memo);
  return out;
}

RecursionResult solve(const Game& game, GameForm form, const RecursionOptions& options) {
  return detail::dispatch(game.scaled(), [&](const auto& g) { return run(game, g, form, options); });
}

}  // namespace

const std::vector<Rational>* MemoTable::find(Coalition s) const {
  const auto it = entries_.find(s.mask());
  return it == entries_.end() ? nullptr : &it->second;
}

bool MemoTable::insert(Coalition s, std::vector<Rational> values) {
  return entries_.emplace(s.mask(), std::move(values)).second;
}

std::vector<Coalition> MemoTable::keys() const {
  std::vector<std::uint64_t> masks;
  masks.reserve(entries_.size());
  for (const auto& [mask, _] : entries_) masks.push_back(mask);
  std::sort(masks.begin(), masks.end());
  std::vector<Coalition> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(Coalition::from_mask(m));
  return out;
}

RecursionResult shapley_oneill(const Game& game, const RecursionOptions& options) {
  return solve(game, GameForm::primal, options);
}

RecursionResult shapley_dual_recursive(const Game& game, const RecursionOptions& options) {
  return solve(game, GameForm::dual, options);
}

std::vector<Rational> recursion_base_entry(const Game& game, GameForm form, Coalition s) {
  game.check(s);
  if (s.empty()) throw ValidationError("not_a_base_case", "the empty coalition has no entry");
  return detail::dispatch(game.scaled(), [&](const auto& g) {
    using Int = std::remove_cvref_t<decltype(g.estate)>;
    const Recurrence<Int> rec{g, form, Rational(1) / Rational(game.scaled().scale)};
    if (rec.stored(s.mask(), rec.weight(s.mask())))
      throw ValidationError("not_a_base_case", "coalition is handled by the recurrence");
    std::vector<Rational> out;
    for (Player i : s.members()) out.push_back(rec.base(s.mask(), i));
    return out;
  });
}

MemoStateCounts memo_state_counts(const Game& game, std::size_t exhaustive_limit) {
  const std::size_t n = game.size();
  MemoStateCounts out;
  if (n <= exhaustive_limit) {
    detail::dispatch(game.scaled(), [&](const auto& g) {
      using Int = std::remove_cvref_t<decltype(g.estate)>;
      detail::gray_walk<Int>(g.claims, 0, std::uint64_t{1} << n, [&](std::uint64_t mask, const Int& w) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size + 2 <= n && w < g.estate) ++out.primal;
        if (size >= 2 && w > g.estate) ++out.dual;
      });
    });
    return out;
  }

  if (!game.scaled().fits_int64)
    throw InstanceTooLarge("state counting player count (scaled claims beyond 64 bits)", n, exhaustive_limit);
  const std::int64_t estate = game.scaled().estate64;
  if (static_cast<std::uint64_t>(estate) + 1 > (std::uint64_t{1} << 26) / (n + 1))
    throw InstanceTooLarge("state counting table cells", (static_cast<std::uint64_t>(estate) + 1) * (n + 1),
                           std::uint64_t{1} << 26);

  // by_size[t][w] = #{S : |S| = t, w(S) = w} for w <= E.
  const auto cols = static_cast<std::size_t>(estate) + 1;
  std::vector<std::vector<std::uint64_t>> by_size(n + 1, std::vector<std::uint64_t>(cols, 0));
  by_size[0][0] = 1;
  std::size_t added = 0;
  for (std::int64_t wj : game.scaled().claims64) {
    if (wj < static_cast<std::int64_t>(cols)) {
      const auto shift = static_cast<std::size_t>(wj);
      for (std::size_t t = added + 1; t-- > 0;)
        for (std::size_t w = cols; w-- > shift;) by_size[t + 1][w] += by_size[t][w - shift];
    }
    ++added;
  }
  std::uint64_t small_light = 0;  // |S| >= 2 and w(S) <= E
  for (std::size_t t = 0; t <= n; ++t) {
    for (std::size_t w = 0; w < cols; ++w) {
      if (t + 2 <= n && w + 1 < cols) out.primal += by_size[t][w];
      if (t >= 2) small_light += by_size[t][w];
    }
  }
  // 2^n - n - 1 coalitions have two or more members (mod 2^64 for n = 64).
  const std::uint64_t pairs_and_up = (n >= 64 ? 0 : std::uint64_t{1} << n) - n - 1;
  out.dual = pairs_and_up - small_light;
  return out;
}

}  // namespace bankshap
