/*
   Copyright 2026 diffop developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "diffop/json_io.hpp"

#include <cctype>

#include "diffop/error.hpp"
#include "diffop/parser.hpp"
#include "json.hpp"

namespace diffop {

namespace {

using nlohmann::json;

}  // namespace

std::string matrix_to_json(const OreMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  json out{{"size", m.size()}, {"rows", std::move(rows)}};
  return out.dump();
}

OreMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("invalid JSON", at);
  }
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("rows"))
    throw ParseError("a matrix needs \"size\" and \"rows\"", 0);
  if (!doc["size"].is_number_integer())
    throw ParseError("\"size\" must be an integer", 0);
  int n = doc["size"].get<int>();
  if (n < 1) throw ParseError("\"size\" must be at least 1", 0);
  const json& rows = doc["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("\"rows\" must hold exactly \"size\" rows", 0);
  OreMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("every row must hold exactly \"size\" entries", 0);
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_string())
        throw ParseError("matrix entries must be operator strings", 0);
      try {
        m.at(i, j) = parse_operator(row[j].get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError("malformed entry (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")",
                         e.position());
      }
    }
  }
  return m;
}

bool looks_like_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

}  // namespace diffop
