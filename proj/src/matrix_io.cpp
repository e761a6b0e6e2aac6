// Copyright 2026 The cosetsynth Authors
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

#include "cosetsynth/matrix_io.hpp"

#include <cmath>

#include "cosetsynth/error.hpp"
#include "json.hpp"

namespace cosetsynth {

using ordered_json = nlohmann::ordered_json;

std::string serialize_matrix(const Mat& m) {
  require_square(m, "serialize_matrix");
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["dim"] = m.rows();
  doc["data"] = std::move(rows);
  return doc.dump();
}

Mat parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "data")
      throw ParseError("matrix: unknown field '" + key + "'");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("matrix: 'dim' must be an integer");
  const auto dim = doc["dim"].get<long long>();
  if (dim <= 0) throw ParseError("matrix: 'dim' must be positive");
  if (!doc.contains("data") || !doc["data"].is_array())
    throw ParseError("matrix: 'data' must be an array");
  const auto& data = doc["data"];
  const auto n = static_cast<std::size_t>(dim);
  if (data.size() != n)
    throw ParseError("matrix: expected " + std::to_string(n) + " rows, got " +
                     std::to_string(data.size()));
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix: ragged or non-square row");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number())
        throw ParseError("matrix: entries must be [re, im] pairs");
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("matrix: non-finite entry");
      entries.emplace_back(re, im);
    }
  }
  return Mat(n, n, std::move(entries));
}

}  // namespace cosetsynth
