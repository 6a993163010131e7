// Copyright 2026 The Authors.
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

#ifndef FLATMATCH_SRC_JSON_UTIL_HPP_
#define FLATMATCH_SRC_JSON_UTIL_HPP_

#include <algorithm>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "flatmatch/errors.hpp"

namespace flatmatch::detail {

inline nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line, "");
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& obj,
                                           const std::string& field) {
  if (!obj.is_object()) {
    throw ParseError("instance must be a JSON object", 0, "");
  }
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError("missing field '" + field + "'", 0, field);
  }
  return *it;
}

inline int require_int(const nlohmann::json& obj, const std::string& field) {
  const auto& v = require_field(obj, field);
  if (!v.is_number_integer()) {
    throw ParseError("field '" + field + "' must be an integer", 0, field);
  }
  return v.get<int>();
}

inline const nlohmann::json& require_array(const nlohmann::json& obj,
                                           const std::string& field) {
  const auto& v = require_field(obj, field);
  if (!v.is_array()) {
    throw ParseError("field '" + field + "' must be an array", 0, field);
  }
  return v;
}

// An array of integers, reported against `field` with the entry position.
inline std::vector<int> int_list(const nlohmann::json& arr,
                                 const std::string& field) {
  if (!arr.is_array()) {
    throw ParseError("entries of '" + field + "' must be arrays", 0, field);
  }
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ParseError("entries of '" + field + "' must hold integers", 0, field);
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace flatmatch::detail

#endif  // FLATMATCH_SRC_JSON_UTIL_HPP_
