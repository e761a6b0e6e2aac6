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

#include "cosetsynth/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cosetsynth/error.hpp"

namespace cosetsynth {

namespace {

void require_qubits(int n, const char* context) {
  if (n < 1)
    throw RangeError(std::string(context) + ": n_qubits must be >= 1");
  if (n > 12)
    throw RangeError(std::string(context) + ": n_qubits must be <= 12");
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

Mat qft(int n_qubits, bool conjugate) {
  require_qubits(n_qubits, "qft");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  const double sign = conjugate ? -1.0 : 1.0;
  Mat f(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce the exponent mod N before taking cos/sin.
      const std::size_t e = (j * k) % dim;
      const double angle =
          sign * 2.0 * std::numbers::pi * static_cast<double>(e) /
          static_cast<double>(dim);
      f(j, k) = norm * Complex{std::cos(angle), std::sin(angle)};
    }
  }
  return f;
}

Mat random_unitary(int n_qubits, std::uint64_t seed) {
  require_qubits(n_qubits, "random_unitary");
  const std::size_t dim = std::size_t{1} << n_qubits;
  SplitMix64 rng(seed);
  // Row-major fill, one Box-Muller pair per complex entry.
  Mat a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double u1 = rng.uniform();
      const double u2 = rng.uniform();
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double phi = 2.0 * std::numbers::pi * u2;
      a(r, c) = Complex{radius * std::cos(phi), radius * std::sin(phi)};
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot{};
        for (std::size_t r = 0; r < dim; ++r) dot += std::conj(a(r, j)) * a(r, k);
        for (std::size_t r = 0; r < dim; ++r) a(r, k) -= dot * a(r, j);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(a(r, k));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) a(r, k) /= nrm;
  }
  return a;
}

GateName parse_gate_name(std::string_view name) {
  if (name == "qft") return GateName::kQft;
  if (name == "identity") return GateName::kIdentity;
  if (name == "cnot") return GateName::kCnot;
  if (name == "swap") return GateName::kSwap;
  if (name == "random") return GateName::kRandom;
  throw Error("unknown gate '" + std::string(name) + "'");
}

Mat named_gate(const GateSpec& spec) {
  require_qubits(spec.n_qubits, "named_gate");
  switch (spec.name) {
    case GateName::kQft:
      return qft(spec.n_qubits);
    case GateName::kRandom:
      return random_unitary(spec.n_qubits, spec.seed);
    case GateName::kIdentity:
      return Mat::identity(std::size_t{1} << spec.n_qubits);
    case GateName::kCnot:
    case GateName::kSwap:
      break;
  }
  if (spec.n_qubits != 2)
    throw RangeError("cnot and swap are two-qubit gates");
  if (spec.name == GateName::kCnot)
    return Mat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  return Mat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

}  // namespace cosetsynth
