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

#include <cstdint>
#include <string>
#include <string_view>

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

/** Quantum Fourier transform F_jk = w^{jk} / sqrt(N), w = exp(2 pi i / N),
 * N = 2^n, no bit reversal. `conjugate` selects w = exp(-2 pi i / N). */
Mat qft(int n_qubits, bool conjugate = false);

/**
 * Seeded pseudo-random unitary: modified Gram-Schmidt (two passes) over the
 * columns of a matrix of standard-normal complex entries. Entries come from
 * SplitMix64 and the Box-Muller transform, so a seed yields the same matrix
 * on every platform with IEEE doubles and a correctly rounded libm.
 */
Mat random_unitary(int n_qubits, std::uint64_t seed);

/** SplitMix64 (Steele, Lea, Flood constants). */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /** Uniform in (0, 1]: 53 random bits. */
  double uniform();

 private:
  std::uint64_t state_;
};

enum class GateName { kQft, kIdentity, kCnot, kSwap, kRandom };

struct GateSpec {
  GateName name = GateName::kIdentity;
  int n_qubits = 1;
  std::uint64_t seed = 0;
};

/** "qft", "identity", "cnot", "swap" or "random"; throws Error otherwise. */
GateName parse_gate_name(std::string_view name);

/**
 * Matrix for a gate description. cnot (control qubit 1) and swap are two-qubit gates and
 * reject any other n_qubits. Throws RangeError when n_qubits < 1.
 */
Mat named_gate(const GateSpec& spec);

}  // namespace cosetsynth
