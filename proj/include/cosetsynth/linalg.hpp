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

#include <vector>

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

/** Default singularity threshold for `lu_inverse`. */
inline constexpr double kSingularTol = 1e-10;

/**
 * Inverse by LU factorization with partial pivoting.
 * Throws SingularityError (carrying sigma_min) when the smallest singular
 * value is below `singular_tol`.
 */
Mat lu_inverse(const Mat& a, double singular_tol = kSingularTol);

struct HermitianEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the eigenvector of values[k].
  Mat vectors;
};

/**
 * Hermitian eigendecomposition by cyclic complex Jacobi sweeps.
 * h = Q diag(values) Q^dag. Eigenvectors inside a degenerate cluster are an
 * arbitrary orthonormal basis of the eigenspace.
 */
HermitianEigen herm_eig(const Mat& h);

struct Svd {
  Mat u;
  /// Descending, nonnegative; min(rows, cols) entries.
  std::vector<double> singular;
  Mat v;
};

/** a = u diag(s) v^dag via one-sided Jacobi; u and v are square unitaries. */
Svd svd(const Mat& a);

/** Smallest singular value. */
double sigma_min(const Mat& a);

/** Unitary polar factor W Z^dag of a square a = W S Z^dag. */
Mat polar_unitary(const Mat& a);

/** Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped. */
Mat psd_sqrt(const Mat& a);

/**
 * Principal logarithm of a unitary: anti-Hermitian, eigenphases in
 * (-pi, pi]. An eigenvalue within 1e-12 of -1 maps to phase +pi.
 */
Mat unitary_log(const Mat& u);

/**
 * exp(g) for normal g. Anti-Hermitian input is exponentiated through the
 * Hermitian eigendecomposition of i*g; other normal input through its Schur
 * form.
 */
Mat normal_exp(const Mat& g);

struct Schur {
  /// Upper triangular.
  Mat t;
  /// Unitary with a = z t z^dag.
  Mat z;
};

/** Complex Schur decomposition (Hessenberg reduction + shifted QR). */
Schur schur(const Mat& a);

}  // namespace cosetsynth
