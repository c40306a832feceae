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

#include "bankshap/exact.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "bankshap/detail/integer_kernel.hpp"
#include "bankshap/detail/parallel.hpp"
#include "bankshap/error.hpp"

namespace bankshap {

namespace {

using detail::IntView;
using detail::Wide;

template <class Int>
std::vector<Wide<Int>> permutation_sums(const IntView<Int>& g, GameForm form, std::uint64_t& visited) {
  const std::size_t n = g.claims.size();
  std::vector<Wide<Int>> acc(n, Wide<Int>(0));
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), Player{0});
  visited = 0;
  Int prefix;
  Int before;
  Int after;
  do {
    prefix = 0;
    before = 0;
    for (Player p : order) {
      prefix += g.claims[p];
      after = g.value(form, prefix);
      acc[p] += Wide<Int>(after - before);
      std::swap(before, after);
    }
    ++visited;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc;
}

// acc[i][t] = sum over S not containing i with |S| = t of v(S + i) - v(S).
template <class Int>
std::vector<std::vector<Wide<Int>>> coefficient_sums(const IntView<Int>& g, GameForm form, unsigned workers) {
  const std::size_t n = g.claims.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, count));

  std::vector<std::vector<std::vector<Wide<Int>>>> partial(
      chunks, std::vector<std::vector<Wide<Int>>>(n, std::vector<Wide<Int>>(n, Wide<Int>(0))));
  detail::parallel_for(workers, chunks, [&](std::size_t c) {
    const std::uint64_t begin = count / chunks * c;
    const std::uint64_t end = c + 1 == chunks ? count : count / chunks * (c + 1);
    auto& acc = partial[c];
    Int joined;
    detail::gray_walk<Int>(g.claims, begin, end, [&](std::uint64_t mask, const Int& w) {
      const std::size_t t = static_cast<std::size_t>(std::popcount(mask));
      const Int base = g.value(form, w);
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) continue;
        joined = w + g.claims[i];
        acc[i][t] += Wide<Int>(g.value(form, joined) - base);
      }
    });
  });

  auto total = std::move(partial.front());
  for (std::size_t c = 1; c < chunks; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) total[i][t] += partial[c][i][t];
  return total;
}

template <class Int>
PayoffVector coefficient_payoff(const IntView<Int>& g, GameForm form, unsigned workers, const Integer& scale) {
  const std::size_t n = g.claims.size();
  const auto weights = shapley_weights(static_cast<unsigned>(n));
  const auto sums = coefficient_sums(g, form, workers);
  PayoffVector phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t t = 0; t < n; ++t) acc += weights[t] * Rational(detail::to_integer(sums[i][t]));
    phi[i] = acc / Rational(scale);
  }
  return phi;
}

void enforce(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) throw InstanceTooLarge(what, n, cap);
}

}  // namespace

std::string_view to_string(ExactMethod method) {
  return method == ExactMethod::permutation ? "permutation" : "coefficient";
}

ExactResult shapley_permutation(const Game& game, GameForm form, const ExactLimits& limits) {
  const std::size_t n = game.size();
  enforce(n, limits.permutation_cap, "permutation enumeration player count");
  ExactResult out;
  out.method = ExactMethod::permutation;
  const Integer scale = game.scaled().scale;
  out.payoff = detail::dispatch(game.scaled(), [&](const auto& g) {
    const auto sums = permutation_sums(g, form, out.visited);
    const Rational denom(factorial(static_cast<unsigned>(n)) * scale);
    PayoffVector phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = Rational(detail::to_integer(sums[i])) / denom;
    return phi;
  });
  return out;
}

ExactResult shapley_coefficient(const Game& game, GameForm form, const ExactLimits& limits, unsigned workers) {
  const std::size_t n = game.size();
  enforce(n, limits.coefficient_cap, "coefficient method player count");
  ExactResult out;
  out.method = ExactMethod::coefficient;
  out.visited = std::uint64_t{1} << n;
  out.payoff = detail::dispatch(game.scaled(),
                                [&](const auto& g) { return coefficient_payoff(g, form, workers, game.scaled().scale); });
  return out;
}

ExactResult shapley_of_dual(const Game& game, ExactMethod method, const ExactLimits& limits) {
  return method == ExactMethod::permutation ? shapley_permutation(game, GameForm::dual, limits)
                                            : shapley_coefficient(game, GameForm::dual, limits);
}

PayoffVector shapley_coefficient(const GameView& view, GameForm form, const ExactLimits& limits) {
  enforce(view.size(), limits.coefficient_cap, "coefficient method player count");
  const ScaledInstance& s = view.parent().scaled();
  const auto members = view.members().members();
  return detail::dispatch(s, [&](const auto& g) {
    using Int = std::remove_cvref_t<decltype(g.estate)>;
    std::vector<Int> local;
    local.reserve(members.size());
    for (Player p : members) local.push_back(g.claims[p]);
    const IntView<Int> sub{local, g.estate, g.deficit, g.total};
    return coefficient_payoff(sub, form, 1, s.scale);
  });
}

}  // namespace bankshap
