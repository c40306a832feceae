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

#include "bankshap/instance_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bankshap/error.hpp"

namespace bankshap {

namespace {

Rational rational_field(const nlohmann::json& v, const char* field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw ValidationError("bad_rational", std::string("field '") + field +
                                            "' must hold integer or \"p/q\" strings, got " + v.dump());
}

std::optional<Rational> optional_field(const nlohmann::json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return rational_field(*it, field);
}

}  // namespace

InstanceFile parse_instance(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("bad_json", e.what());
  }
  if (!doc.is_object()) throw ValidationError("bad_json", "instance must be a JSON object");

  auto claims = doc.find("claims");
  if (claims == doc.end()) claims = doc.find("weights");
  if (claims == doc.end() || !claims->is_array())
    throw ValidationError("missing_field", "instance needs a \"claims\" array");

  InstanceFile out;
  for (const auto& c : *claims) out.claims.push_back(rational_field(c, "claims"));
  out.estate = optional_field(doc, "estate");
  out.quota = optional_field(doc, "quota");
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read instance file '" + path + "'");
  return parse_instance(buf.str());
}

Game to_game(const InstanceFile& file) {
  if (!file.estate) throw ValidationError("missing_field", "instance needs an \"estate\"");
  return Game(file.claims, *file.estate);
}

nlohmann::json game_to_json(const Game& game) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& w : game.claims()) claims.push_back(to_string(w));
  return {{"claims", claims}, {"estate", to_string(game.estate())}};
}

std::string write_instance(const Game& game) { return game_to_json(game).dump(); }

Game parse_game(std::string_view json_text) { return to_game(parse_instance(json_text)); }

std::string instance_digest(const Game& game) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : write_instance(game)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace bankshap
