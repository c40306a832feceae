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

#ifndef BANKSHAP_TESTS_ORACLE_HPP
#define BANKSHAP_TESTS_ORACLE_HPP

// Reference computations for the tests. Everything here works on plain claim
// vectors and rationals and deliberately avoids the library's kernels.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using ValueFn = std::function<Q(std::uint64_t)>;

struct Bg {
  std::vector<Q> claims;
  Q estate;
};

inline Q frac(long num, long den) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

inline Q total(const std::vector<Q>& w) {
  Q s = 0;
  for (const auto& x : w) s += x;
  return s;
}

inline Q weight(const std::vector<Q>& w, std::uint64_t mask) {
  Q s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if ((mask >> i) & 1U) s += w[i];
  return s;
}

// v(S) = max{0, E - w(N \ S)}
inline Q bg_value(const Bg& g, std::uint64_t mask) {
  const std::uint64_t all = (std::uint64_t{1} << g.claims.size()) - 1;
  const Q rest = weight(g.claims, all & ~mask);
  const Q v = g.estate - rest;
  return v > 0 ? v : Q(0);
}

inline Q bg_dual_value(const Bg& g, std::uint64_t mask) {
  const Q w = weight(g.claims, mask);
  return w < g.estate ? w : g.estate;
}

// Average marginal contribution over all n! orderings.
inline std::vector<Q> shapley_by_orderings(std::size_t n, const ValueFn& v) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Q> phi(n, 0);
  mpz_class count = 0;
  do {
    std::uint64_t before = 0;
    Q prev = v(0);
    for (auto p : order) {
      before |= std::uint64_t{1} << p;
      const Q cur = v(before);
      phi[p] += cur - prev;
      prev = cur;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : phi) x /= Q(count);
  return phi;
}

inline std::vector<Q> bg_shapley(const Bg& g) {
  return shapley_by_orderings(g.claims.size(), [&](std::uint64_t m) { return bg_value(g, m); });
}

// Pivot counting: player p is pivotal when the running weight crosses q on p.
inline std::vector<Q> ss_index(const std::vector<std::int64_t>& w, std::int64_t q) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Q> phi(n, 0);
  mpz_class count = 0;
  do {
    std::int64_t run = 0;
    for (auto p : order) {
      if (run < q && run + w[p] >= q) phi[p] += 1;
      run += w[p];
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : phi) x /= Q(count);
  return phi;
}

// Number of subsets of the players other than `excluded` with weight w and size t.
inline std::map<std::pair<std::int64_t, std::size_t>, std::uint64_t> subset_counts(
    const std::vector<std::int64_t>& w, std::size_t excluded) {
  std::map<std::pair<std::int64_t, std::size_t>, std::uint64_t> out;
  const std::size_t n = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask >> excluded) & 1U) continue;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s += w[i];
    ++out[{s, static_cast<std::size_t>(__builtin_popcountll(mask))}];
  }
  return out;
}

// #{S : |S| <= n-2, w(S) < E} and #{S : |S| >= 2, w(S) > E}.
inline std::pair<std::uint64_t, std::uint64_t> state_counts(const Bg& g) {
  const std::size_t n = g.claims.size();
  std::uint64_t small = 0;
  std::uint64_t large = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const Q w = weight(g.claims, mask);
    if (size + 2 <= n && w < g.estate) ++small;
    if (size >= 2 && w > g.estate) ++large;
  }
  return {small, large};
}

inline bool supermodular_all_pairs(std::size_t n, const ValueFn& v) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Q> table(count);
  for (std::uint64_t m = 0; m < count; ++m) table[m] = v(m);
  for (std::uint64_t s = 0; s < count; ++s)
    for (std::uint64_t t = 0; t < count; ++t)
      if (table[s] + table[t] > table[s | t] + table[s & t]) return false;
  return true;
}

inline bool in_core(std::size_t n, const ValueFn& v, const std::vector<Q>& x) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  if (total(x) != v(all)) return false;
  for (std::uint64_t m = 0; m <= all; ++m) {
    Q s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s += x[i];
    if (s < v(m)) return false;
  }
  return true;
}

inline Q factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Q(f);
}

// Random instance generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return between(0, 1) == 1; }

  Q claim(bool integral, std::int64_t max = 20) {
    if (integral) return Q(static_cast<long>(between(1, max)));
    return frac(static_cast<long>(between(1, max)), static_cast<long>(between(1, 4)));
  }

  std::vector<Q> claims(std::size_t n, bool integral, std::int64_t max = 20) {
    std::vector<Q> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(claim(integral, max));
    return w;
  }

  // Uniform over a grid strictly inside (0, W).
  Q estate(const std::vector<Q>& w, bool integral) {
    const Q tot = total(w);
    if (integral) {
      const mpz_class W = tot.get_num();
      return Q(static_cast<long>(between(1, W.get_si() - 1)));
    }
    const std::int64_t den = between(2, 12);
    return tot * frac(static_cast<long>(between(1, den - 1)), static_cast<long>(den));
  }

  Bg game(std::size_t n, bool integral, std::int64_t max = 20) {
    Bg g;
    do {
      g.claims = claims(n, integral, max);
    } while (integral && total(g.claims) < 2);
    g.estate = estate(g.claims, integral);
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // BANKSHAP_TESTS_ORACLE_HPP
