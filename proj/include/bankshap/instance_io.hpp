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

#ifndef BANKSHAP_INSTANCE_IO_HPP
#define BANKSHAP_INSTANCE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bankshap/game.hpp"

namespace bankshap {

/// Raw contents of an instance file:
///   {"claims": ["3", "2", "1"], "estate": "4"}
/// Values are integer or "p/q" strings (plain JSON integers are accepted
/// too). Weighted voting files carry "quota" and may omit "estate".
struct InstanceFile {
  std::vector<Rational> claims;
  std::optional<Rational> estate;
  std::optional<Rational> quota;
};

InstanceFile parse_instance(std::string_view json_text);
/// Throws IoError if the file cannot be read.
InstanceFile read_instance_file(const std::string& path);

/// Builds a validated Game; throws ValidationError{"missing_field"} without an estate.
Game to_game(const InstanceFile& file);

nlohmann::json game_to_json(const Game& game);
/// Canonical serialisation (rationals in lowest terms, compact JSON).
std::string write_instance(const Game& game);
Game parse_game(std::string_view json_text);

/// FNV-1a digest of the canonical serialisation, as 16 hex digits.
std::string instance_digest(const Game& game);

}  // namespace bankshap

#endif  // BANKSHAP_INSTANCE_IO_HPP
