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

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

enum class FactorKind { kPauliExp, kLocal };

/**
 * One synthesis output element.
 *
 * kPauliExp: exp(i * angle * P_word) on all qubits of the sequence.
 * kLocal:    exp(i * (cI s0 + cX s1 + cY s2 + cZ s3)) on qubit `qubit`
 *            (1-based, qubit 1 is the leftmost letter).
 */
struct Factor {
  FactorKind kind = FactorKind::kPauliExp;
  std::string word;
  double angle = 0.0;
  int qubit = 0;
  std::array<double, 4> log_coeffs{};
  std::string provenance;

  static Factor pauli_exp(std::string word, double angle,
                          std::string provenance = {});
  static Factor local(int qubit, std::array<double, 4> log_coeffs,
                      std::string provenance = {});

  bool operator==(const Factor&) const = default;
};

/**
 * Ordered factor list in operator-product order: factors.front() is the
 * leftmost matrix, so it acts last on a state.
 */
struct GateSequence {
  int n_qubits = 1;
  std::vector<Factor> factors;

  bool operator==(const GateSequence&) const = default;
};

/** Dense 2^n x 2^n matrix of a single factor. */
Mat factor_matrix(const Factor& f, int n_qubits);

/** Product of all factor matrices; the identity for an empty sequence.
 * Throws DimensionError on inconsistent word lengths or qubit indices. */
Mat evaluate(const GateSequence& seq);

/** `a` followed by `b`; evaluates to evaluate(a) * evaluate(b). */
GateSequence concat(const GateSequence& a, const GateSequence& b);

/** Sequence of the adjoint: reversed order, negated angles. */
GateSequence adjoint(const GateSequence& seq);

/**
 * Embeds `seq` into a register of `n_qubits`, mapping its qubit 1 to
 * qubit `first_qubit`.
 */
GateSequence embed(const GateSequence& seq, int n_qubits, int first_qubit);

/**
 * Rewrites every Pauli exponential heavier than `max_weight` with the
 * pi/4 conjugation rule
 *
 *   exp(i t P) = exp(-i pi/4 Q) exp(i t C) exp(i pi/4 Q),  C = -i P Q,
 *
 * where Q is a weight-2 word anticommuting with P that shares P's last
 * non-identity letter; C drops that letter, so each level lowers the weight
 * by one and adds two conjugators. The evaluated operator is unchanged.
 * Throws RangeError when max_weight < 1, or when max_weight == 1 and a
 * factor of weight >= 2 is present (the rule cannot go below weight 2).
 */
GateSequence reduce_weight(const GateSequence& seq, int max_weight);

struct VerifyReport {
  double distance = 0.0;
  bool pass = false;
};

/** Frobenius distance between evaluate(seq) and target. */
VerifyReport verify(const GateSequence& seq, const Mat& target, double tol);

struct SequenceStats {
  std::size_t total = 0;
  std::size_t pauli_exp = 0;
  std::size_t local = 0;
  /// Pauli-exponential weight -> count. Local factors are not included.
  std::map<std::size_t, std::size_t> weight_histogram;
  std::size_t max_weight = 0;
};

SequenceStats stats(const GateSequence& seq);

}  // namespace cosetsynth
