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

#include <stdexcept>
#include <string>
#include <vector>

namespace cosetsynth {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operand shapes are incompatible, or a dimension is not a power of two. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/**
 * A matrix that must be inverted is numerically singular.
 * Carries the estimated smallest singular value.
 */
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double sigma_min)
      : Error(what), sigma_min_(sigma_min) {}
  double sigma_min() const { return sigma_min_; }

 private:
  double sigma_min_;
};

/** Input expected to be Hermitian is not. */
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/** Input expected to be positive semidefinite has a negative eigenvalue. */
class DefinitenessError : public Error {
 public:
  DefinitenessError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/** Input expected to be unitary is not. Carries ||U^dag U - 1||_F. */
class UnitarityError : public Error {
 public:
  UnitarityError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/** Input expected to be a normal matrix is not. */
class NormalityError : public Error {
 public:
  using Error::Error;
};

/** A value lies outside the admissible range (e.g. singular value > 1). */
class RangeError : public Error {
 public:
  using Error::Error;
};

/** A matrix lacks the required block structure. */
class StructureError : public Error {
 public:
  using Error::Error;
};

/** Residuals of one middle-extraction iteration. */
struct IterationResidual {
  /// ||D - 1||_F of the right subgroup factor.
  double right = 0.0;
  /// ||W1 - 1||_F of the left subgroup factor.
  double left = 0.0;
  /// ||L . current . R - U||_F after the iteration.
  double reconstruction = 0.0;
};

/** The middle-extraction loop exhausted its iteration budget. */
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what,
                   std::vector<IterationResidual> history)
      : Error(what), history_(std::move(history)) {}
  const std::vector<IterationResidual>& history() const { return history_; }

 private:
  std::vector<IterationResidual> history_;
};

/** Synthesis could not proceed (e.g. singular blocks survived all retries). */
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/**
 * A synthesized sequence failed to reproduce its target. Never expected on
 * accepted inputs; indicates a bug.
 */
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, double distance)
      : Error(what), distance_(distance) {}
  double distance() const { return distance_; }

 private:
  double distance_;
};

/** Malformed matrix or sequence file. */
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosetsynth
