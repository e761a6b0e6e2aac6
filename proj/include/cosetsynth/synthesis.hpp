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
#include <span>
#include <string>
#include <vector>

#include "cosetsynth/error.hpp"
#include "cosetsynth/matrix.hpp"
#include "cosetsynth/pauli.hpp"
#include "cosetsynth/sequence.hpp"

namespace cosetsynth {

struct SynthConfig {
  /// Both subgroup residuals must fall below this to stop iterating.
  double tol_converge = 1e-10;
  int max_iter = 100;
  /// Final reconstruction distance accepted by synthesize.
  double tol_verify = 1e-8;
  /// Heaviest Pauli exponential left after weight reduction.
  int max_weight = 2;
  /// Pivoted restarts allowed after a singular block or a stalled iteration.
  int singular_retry_limit = 4;
  /// Extrapolate the geometric tail of the block factors once the residual
  /// ratio settles. Never changes the result beyond tol_converge, only the
  /// iteration count.
  bool extrapolate = true;
  std::uint64_t seed = 0;

  /** Throws RangeError on a nonpositive tolerance or budget. */
  void validate() const;
};

/** exp(i pi/4 Y (x) 1 (x) ... (x) 1) on n qubits. */
Mat pivot(int n_qubits);

/**
 * Native rotations multiplied onto a restarted input: the extraction then
 * runs on evaluate(left) . u . evaluate(right).
 */
struct Restart {
  GateSequence left;
  GateSequence right;
  bool empty() const { return left.factors.empty() && right.factors.empty(); }
  bool operator==(const Restart&) const = default;
};

Mat apply_restart(const Mat& u, const Restart& r);

/**
 * Rotations for the k-th restart (k >= 1) of an extraction on `u`.
 * Candidates are single factors exp(i a Y (x) P), a in {pi/4, pi/8}, P any
 * word of I and X letters, on the right and then on the left; the first is
 * the pivot itself. They are ranked by sigma_min of the upper-left block of
 * the rotated input, ties kept in candidate order, and the k-th best is
 * returned. When even that one leaves the block singular, products of two
 * such factors join the ranking: the X letters only shift column indices by
 * one XOR mask, and inputs such as permutations may need two.
 */
Restart restart_rotation(const Mat& u, int k);

/**
 * Result of the middle extraction. With V = pivot(n):
 *
 *   left . middle . right = apply_restart(input, restart),
 *   left = V . left_core . V^dag
 *
 * where left_core and right are block diagonal and the generator of
 * `middle` lies in the span of Y (x) anything. `restart` is empty unless
 * one happened.
 */
struct MiddleSplit {
  Mat left;
  Mat left_core;
  Mat middle;
  Mat right;
  int iterations = 0;
  /// Restarts after singular blocks, and the rotations of the last one.
  int pivots = 0;
  Restart restart;
  std::vector<IterationResidual> history;
};

/**
 * Alternating right/left coset decomposition with pivot conjugation:
 *   1. current = C . D (right form);           right := D . right
 *   2. C' = V^dag C V
 *   3. C' = D' . C'' (left form);              W1 = V D' V^dag, W2 = V C'' V^dag
 *   4. left := left . W1;                      current := W2
 *   5. stop once ||D - 1|| and ||W1 - 1|| are both <= tol_converge.
 * With cfg.extrapolate, once ||D_k - 1|| / ||D_(k-1) - 1|| settles at r the
 * remaining tail D_(k+1) D_(k+2) ... ~ exp(r/(1-r) log D_k) is moved from
 * `current` into `right` in one step (likewise on the left); the loop
 * invariant is exact either way.
 * A singular block restarts the whole extraction on a rotated input, at most
 * cfg.singular_retry_limit times (then SynthesisError). Exhausting
 * cfg.max_iter throws ConvergenceError with the residual history.
 */
MiddleSplit middle_extract(const Mat& u, const SynthConfig& cfg);

struct LocalIsolation {
  /// blockdiag(S2, S2^dag) = exp(i Z (x) h) for Hermitian h.
  Mat coset_half;
  /// blockdiag(S1, S1) = 1 (x) S1.
  Mat local;
  Mat s1;
  Mat s2;
};

/** Splits blockdiag(G1, G2) = coset_half . local. Throws StructureError when
 * the off-diagonal blocks carry more than 1e-8 of Frobenius mass. */
LocalIsolation isolate_local(const Mat& d);

/** {I, Z}-word coefficients of diag(lam) (Walsh-Hadamard transform). Only
 * nonzero coefficients are stored. */
PauliCoeffs diag_to_zstrings(std::span<const double> lam);

/**
 * Native rendering of exp(i sigma_axis (x) h) on k + 1 qubits, h Hermitian
 * on k qubits: with h = Q diag(lam) Q^dag, emits synthesize(Q) on qubits
 * 2..k+1, one commuting exponential per {I, Z} coefficient of lam prefixed by
 * the axis letter, then the adjoint of the Q sequence. A diagonal h skips the
 * basis change. Output is not weight-reduced.
 */
GateSequence lift_axis(char axis, const Mat& h, const SynthConfig& cfg);

/**
 * Generator of a factor tailored by the recursion (an isolated local unitary,
 * or the core h of a middle or coset-half term), expressed on the qubits
 * starting at `first_qubit`. Presented as U = exp(i sum_s c_s P_s).
 */
struct TailoredFactor {
  std::string provenance;
  int first_qubit = 1;
  PauliCoeffs generator;
};

struct SynthesisResult {
  GateSequence sequence;
  std::vector<TailoredFactor> tailored;
  /// Middle-extraction iterations summed over the whole recursion.
  int iterations = 0;
  /// Pivoted restarts summed over the whole recursion.
  int restarts = 0;
  /// ||evaluate(sequence) - u||_F.
  double distance = 0.0;
};

/**
 * Recursive synthesis of a 2^n x 2^n unitary into local factors and Pauli
 * exponentials of weight <= cfg.max_weight.
 *
 * n = 1 emits one local factor. For n >= 2 the input is split by
 * middle_extract into left . middle . right; the middle term is rendered by
 * lift_axis('Y', ...), each block-diagonal side by isolate_local into a
 * Z-axis coset half (lift_axis('Z', ...)) and a local unitary on qubits 2..n
 * that is synthesized recursively. The left side keeps its pivot
 * conjugators. Throws VerificationError if the result misses u by more than
 * cfg.tol_verify.
 */
SynthesisResult synthesize(const Mat& u, const SynthConfig& cfg);

/** Hermitian generator h with u = exp(i h), from the principal logarithm. */
Mat hermitian_generator(const Mat& u);

}  // namespace cosetsynth
