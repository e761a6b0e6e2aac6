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

#pragma once

#include <string>
#include <string_view>

#include "cosetsynth/sequence.hpp"

namespace cosetsynth {

/**
 * Compact JSON, keys in schema order:
 *   {"n_qubits":n,"factors":[{"kind":"pauli_exp","word":"ZIZ","angle":0.78},
 *    {"kind":"local","qubit":2,"log_coeffs":[cI,cX,cY,cZ]}],
 *    "order":"left-to-right"}
 * Factors with a nonempty provenance carry an extra "provenance" string.
 * Doubles use shortest round-trip form, so parse(serialize(s)) == s.
 */
std::string serialize_sequence(const GateSequence& seq);

/** Rejects unknown fields, bad kinds, wrong word lengths and qubits out of
 * range with ParseError. */
GateSequence parse_sequence(std::string_view text);

}  // namespace cosetsynth
