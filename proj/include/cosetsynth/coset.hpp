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

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

/** Smallest admissible singular value of the top-left block U11. */
inline constexpr double kBlockSingularTol = 1e-8;

/**
 * One block canonical coset decomposition of a 2m x 2m unitary:
 *
 *   U = [[sqrt(1 - X^dag X), -X^dag], [X, sqrt(1 - X X^dag)]] . diag(V1, V2)
 *
 * for the right form, or diag(V1, V2) . coset for the left form.
 */
struct CosetFactors {
  /// 2m x 2m unitary with Hermitian PSD diagonal blocks.
  Mat coset;
  Mat v1;
  Mat v2;
  /// Lower-left block of `coset`.
  Mat x;

  /** blockdiag(v1, v2). */
  Mat subgroup() const;
};

/**
 * Right form, U = coset . blockdiag(V1, V2), with
 *   X  = U21 (1 - U21^dag U21)^{1/2} U11^{-1}
 *   V1 = (1 - X^dag X)^{1/2} U11 + X^dag U21
 *   V2 = (1 - X X^dag)^{1/2} U22 - X U12.
 * These equal the polar factors V1 = polar(U11), V2 = polar(U22) and
 * X = U21 V1^dag, which is how they are evaluated; coset = U diag(V1, V2)^dag.
 * Throws SingularityError when sigma_min(U11) < 1e-8; callers decide how to
 * recover.
 */
CosetFactors coset_right(const Mat& u);

/**
 * X by the literal formula U21 (1 - U21^dag U21)^{1/2} U11^{-1}. Loses
 * accuracy as sigma_min(U11) approaches the singular tolerance; kept as the
 * reference that coset_right's polar evaluation is checked against.
 */
Mat coset_x_reference(const Mat& u);

/** Left form, U = blockdiag(V1, V2) . coset, obtained by decomposing U^dag
 * with coset_right and taking adjoints. */
CosetFactors coset_left(const Mat& u);

/** The coset factor determined by its lower-left block x. */
Mat coset_from_x(const Mat& x);

/** [[0, -B^dag], [B, 0]]. */
Mat antiblock(const Mat& b);

/**
 * Generator B of the coset factor of x: with x = W sin(Theta) Z^dag,
 * B = W Theta Z^dag and exp(antiblock(B)) equals coset_from_x(x).
 * Singular values in (1, 1 + 1e-10] are clamped to 1; larger ones throw
 * RangeError.
 */
Mat coset_generator(const Mat& x);

/**
 * blockdiag(G1, G2) = blockdiag(S2, S2^dag) . blockdiag(S1, S1) with
 * S2 = (G1 G2^dag)^{1/2} (principal root) and S1 = S2^dag G1.
 */
struct SubgroupSplit {
  Mat s1;
  Mat s2;
};

SubgroupSplit subgroup_split(const Mat& g1, const Mat& g2);

}  // namespace cosetsynth
