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

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

/**
 * Tensor word over {I, X, Y, Z} with a phase in {+1, +i, -1, -i}.
 *
 * The leftmost letter is qubit 1, the most significant tensor factor:
 * "XZ" is kron(sigma_x, sigma_z). Textual form is an optional phase prefix
 * ("+", "-", "+i", "-i") followed by the letters, e.g. "-IYZ".
 */
class PauliString {
 public:
  PauliString() = default;
  /** `word` must contain only I, X, Y, Z. Phase is i^phase_power. */
  explicit PauliString(std::string word, int phase_power = 0);

  /** Parses the textual form, phase prefix included. */
  static PauliString parse(std::string_view text);

  const std::string& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  std::size_t weight() const;
  /** Exponent k of the phase i^k, in 0..3. */
  int phase_power() const { return phase_power_; }
  Complex phase() const;

  /** Canonical text: "+1" phase is written without a prefix. */
  std::string to_string() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::string word_;
  int phase_power_ = 0;
};

/** Number of non-I letters. */
std::size_t word_weight(std::string_view word);
/** Throws Error unless `word` is a nonempty string over {I, X, Y, Z}. */
void validate_word(std::string_view word);

/** phase * kron of the single-qubit Paulis; dimension 2^n. */
Mat string_matrix(const PauliString& s);
Mat word_matrix(std::string_view word);

/** Product with exact phase tracking. Throws DimensionError on length
 * mismatch. */
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/** True when the two words anticommute. */
bool anticommutes(std::string_view a, std::string_view b);

/** All 4^n letter words on n qubits, in lexicographic I < X < Y < Z order. */
std::vector<std::string> all_words(int n_qubits);

/**
 * Real expansion of a Hermitian operator, H = sum_s c_s P_s. Absent words
 * have coefficient zero.
 */
struct PauliCoeffs {
  int n_qubits = 0;
  std::map<std::string, double> coeffs;

  double at(const std::string& word) const;
};

/**
 * c_s = Tr(P_s h) / 2^n over all 4^n words; only nonzero coefficients are
 * stored. Throws SymmetryError on non-Hermitian input and DimensionError on a
 * non power-of-two dimension.
 */
PauliCoeffs expand_generator(const Mat& h);

/** sum_s c_s P_s. */
Mat reconstruct(const PauliCoeffs& c);

/**
 * Word-pattern match. Letters match themselves; a trailing '*' matches any
 * remaining letters, so "Y*" is {Y} x anything.
 */
bool matches_pattern(std::string_view word, std::string_view pattern);

/** True iff every coefficient with |c_s| > tol matches one of `allowed`. */
bool support_subset(const PauliCoeffs& c, std::span<const std::string> allowed,
                    double tol);

/** Frobenius-weighted mass sqrt(sum |c_s|^2) of coefficients that match none
 * of `allowed`. */
double mass_outside(const PauliCoeffs& c, std::span<const std::string> allowed);

}  // namespace cosetsynth
