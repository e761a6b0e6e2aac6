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

#include "cosetsynth/sequence_io.hpp"

#include <cmath>
#include <set>

#include "cosetsynth/error.hpp"
#include "cosetsynth/pauli.hpp"
#include "json.hpp"

namespace cosetsynth {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key))
      throw ParseError(std::string(where) + ": unknown field '" + key + "'");
  }
}

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string(what) + " is not finite");
  return d;
}

Factor parse_factor(const json& f, int n_qubits) {
  if (!f.is_object()) throw ParseError("factor must be an object");
  if (!f.contains("kind") || !f["kind"].is_string())
    throw ParseError("factor: missing 'kind'");
  const auto kind = f["kind"].get<std::string>();
  std::string provenance;
  if (f.contains("provenance")) {
    if (!f["provenance"].is_string())
      throw ParseError("factor: 'provenance' must be a string");
    provenance = f["provenance"].get<std::string>();
  }
  if (kind == "pauli_exp") {
    reject_unknown(f, {"kind", "word", "angle", "provenance"}, "pauli_exp factor");
    if (!f.contains("word") || !f["word"].is_string())
      throw ParseError("pauli_exp factor: missing 'word'");
    if (!f.contains("angle")) throw ParseError("pauli_exp factor: missing 'angle'");
    auto word = f["word"].get<std::string>();
    try {
      validate_word(word);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (static_cast<int>(word.size()) != n_qubits)
      throw ParseError("pauli_exp factor: word '" + word + "' length differs from n_qubits");
    return Factor::pauli_exp(std::move(word), finite_number(f["angle"], "angle"),
                             std::move(provenance));
  }
  if (kind == "local") {
    reject_unknown(f, {"kind", "qubit", "log_coeffs", "provenance"}, "local factor");
    if (!f.contains("qubit") || !f["qubit"].is_number_integer())
      throw ParseError("local factor: 'qubit' must be an integer");
    const auto qubit = f["qubit"].get<long long>();
    if (qubit < 1 || qubit > n_qubits)
      throw ParseError("local factor: qubit out of range");
    if (!f.contains("log_coeffs") || !f["log_coeffs"].is_array() ||
        f["log_coeffs"].size() != 4)
      throw ParseError("local factor: 'log_coeffs' must hold four numbers");
    std::array<double, 4> c{};
    for (std::size_t k = 0; k < 4; ++k)
      c[k] = finite_number(f["log_coeffs"][k], "log_coeffs entry");
    return Factor::local(static_cast<int>(qubit), c, std::move(provenance));
  }
  throw ParseError("factor: unknown kind '" + kind + "'");
}

}  // namespace

std::string serialize_sequence(const GateSequence& seq) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : seq.factors) {
    ordered_json j;
    if (f.kind == FactorKind::kPauliExp) {
      j["kind"] = "pauli_exp";
      j["word"] = f.word;
      j["angle"] = f.angle;
    } else {
      j["kind"] = "local";
      j["qubit"] = f.qubit;
      j["log_coeffs"] = f.log_coeffs;
    }
    if (!f.provenance.empty()) j["provenance"] = f.provenance;
    factors.push_back(std::move(j));
  }
  ordered_json doc;
  doc["n_qubits"] = seq.n_qubits;
  doc["factors"] = std::move(factors);
  doc["order"] = "left-to-right";
  return doc.dump();
}

GateSequence parse_sequence(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("sequence: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("sequence: top level must be an object");
  reject_unknown(doc, {"n_qubits", "factors", "order"}, "sequence");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
    throw ParseError("sequence: 'n_qubits' must be an integer");
  const auto n = doc["n_qubits"].get<long long>();
  if (n < 1 || n > 16) throw ParseError("sequence: 'n_qubits' out of range");
  if (!doc.contains("order") || doc["order"] != "left-to-right")
    throw ParseError("sequence: 'order' must be \"left-to-right\"");
  if (!doc.contains("factors") || !doc["factors"].is_array())
    throw ParseError("sequence: 'factors' must be an array");
  GateSequence seq;
  seq.n_qubits = static_cast<int>(n);
  for (const auto& f : doc["factors"])
    seq.factors.push_back(parse_factor(f, seq.n_qubits));
  return seq;
}

}  // namespace cosetsynth
