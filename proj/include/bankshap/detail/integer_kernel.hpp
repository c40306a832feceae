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

#ifndef BANKSHAP_DETAIL_INTEGER_KERNEL_HPP
#define BANKSHAP_DETAIL_INTEGER_KERNEL_HPP

// Integer views of a scaled game. The hot loops are written once as templates
// over the integer type and instantiated for int64_t (with __int128
// accumulators) and for GMP integers when the scaled data is too large.

#include <bit>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>

#include "bankshap/game.hpp"

namespace bankshap::detail {

template <class Int>
struct IntView {
  std::span<const Int> claims;
  Int estate;
  Int deficit;
  Int total;

  Int primal(const Int& w) const { return w > deficit ? Int(w - deficit) : Int(0); }
  Int dual(const Int& w) const { return w < estate ? w : estate; }
  Int value(GameForm form, const Int& w) const { return form == GameForm::primal ? primal(w) : dual(w); }
};

template <class Int>
struct WideOf {
  using type = Integer;
};
template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};
template <class Int>
using Wide = typename WideOf<Int>::type;

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
inline Integer to_integer(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

/// Calls `f` with an IntView over the cheapest integer type that can hold the
/// scaled instance.
template <class F>
decltype(auto) dispatch(const ScaledInstance& s, F&& f) {
  if (s.fits_int64) {
    return std::forward<F>(f)(IntView<std::int64_t>{s.claims64, s.estate64, s.deficit64, s.total64});
  }
  return std::forward<F>(f)(IntView<Integer>{s.claims, s.estate, s.deficit, s.total});
}

template <class Int>
Int subset_weight(std::span<const Int> claims, std::uint64_t mask) {
  Int w(0);
  while (mask != 0) {
    w += claims[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return w;
}

/// Visits the coalitions g(k) = k ^ (k >> 1) for k in [begin, end) in Gray
/// order, maintaining the coalition weight incrementally. The callback gets
/// (mask, weight).
template <class Int, class F>
void gray_walk(std::span<const Int> claims, std::uint64_t begin, std::uint64_t end, F&& f) {
  if (begin >= end) return;
  std::uint64_t mask = begin ^ (begin >> 1);
  Int w = subset_weight(claims, mask);
  for (std::uint64_t k = begin;;) {
    f(mask, static_cast<const Int&>(w));
    if (++k == end) break;
    const auto flip = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t b = std::uint64_t{1} << flip;
    if (mask & b) {
      w -= claims[flip];
    } else {
      w += claims[flip];
    }
    mask ^= b;
  }
}

}  // namespace bankshap::detail

#endif  // BANKSHAP_DETAIL_INTEGER_KERNEL_HPP
