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

#ifndef BANKSHAP_TESTS_SUPPORT_HPP
#define BANKSHAP_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "bankshap/game.hpp"
#include "oracle.hpp"

namespace testing_support {

inline bankshap::Game to_game(const oracle::Bg& g) { return bankshap::Game(g.claims, g.estate); }

inline std::vector<bankshap::Rational> q(std::initializer_list<const char*> texts) {
  std::vector<bankshap::Rational> out;
  for (const char* t : texts) {
    bankshap::Rational r(t);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

inline std::string show(const std::vector<bankshap::Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s + ")";
}

}  // namespace testing_support

#endif  // BANKSHAP_TESTS_SUPPORT_HPP
