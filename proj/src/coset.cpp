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

#include "cosetsynth/coset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cosetsynth/error.hpp"
#include "cosetsynth/linalg.hpp"

namespace cosetsynth {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kSineOvershoot = 1e-10;

std::size_t half_dim(const Mat& u, const char* context) {
  require_square(u, context);
  if (u.rows() % 2 != 0)
    throw DimensionError(std::string(context) + ": dimension must be even");
  return u.rows() / 2;
}

}  // namespace

Mat CosetFactors::subgroup() const { return blockdiag(v1, v2); }

Mat coset_from_x(const Mat& x) {
  require_square(x, "coset_from_x");
  const std::size_t m = x.rows();
  const Mat one = Mat::identity(m);
  const Mat xd = dagger(x);
  Mat c(2 * m, 2 * m);
  c.set_block(0, 0, psd_sqrt(one - xd * x));
  c.set_block(0, m, -xd);
  c.set_block(m, 0, x);
  c.set_block(m, m, psd_sqrt(one - x * xd));
  return c;
}

CosetFactors coset_right(const Mat& u) {
  const std::size_t m = half_dim(u, "coset_right");
  require_unitary(u, kUnitaryTol, "coset_right");
  const Mat u11 = u.block(0, 0, m, m);
  const Mat u12 = u.block(0, m, m, m);
  const Mat u21 = u.block(m, 0, m, m);
  const Mat u22 = u.block(m, m, m, m);

  const double smin = sigma_min(u11);
  if (smin < kBlockSingularTol) {
    throw SingularityError(
        "coset_right: top-left block is singular (sigma_min = " +
            std::to_string(smin) + ")",
        smin);
  }
  // With the cosine-sine form U11 = A c B^dag, U21 = C s B^dag, the blocks
  //   V1 = (1 - X^dag X)^{1/2} U11 + X^dag U21 = A B^dag
  //   X  = U21 (1 - U21^dag U21)^{1/2} U11^{-1} = U21 V1^dag
  // and likewise V2 = C D^dag from U22 = C c D^dag. All three come from
  // polar factors, so no inverse or square root of 1 - X^dag X is formed;
  // the coset factor U . diag(V1, V2)^dag then reproduces U to rounding.
  CosetFactors f;
  f.v1 = polar_unitary(u11);
  f.v2 = polar_unitary(u22);
  f.coset = u * blockdiag(dagger(f.v1), dagger(f.v2));
  f.x = u21 * dagger(f.v1);
  return f;
}

Mat coset_x_reference(const Mat& u) {
  const std::size_t m = half_dim(u, "coset_x_reference");
  require_unitary(u, kUnitaryTol, "coset_x_reference");
  const Mat u11 = u.block(0, 0, m, m);
  const Mat u21 = u.block(m, 0, m, m);
  return u21 * psd_sqrt(Mat::identity(m) - dagger(u21) * u21) *
         lu_inverse(u11, kBlockSingularTol);
}

CosetFactors coset_left(const Mat& u) {
  half_dim(u, "coset_left");
  // U^dag = C . diag(V1, V2)  =>  U = diag(V1^dag, V2^dag) . C^dag.
  CosetFactors r = coset_right(dagger(u));
  CosetFactors f;
  f.coset = dagger(r.coset);
  f.v1 = dagger(r.v1);
  f.v2 = dagger(r.v2);
  f.x = f.coset.block(r.x.rows(), 0, r.x.rows(), r.x.rows());
  return f;
}

Mat antiblock(const Mat& b) {
  require_square(b, "antiblock");
  const std::size_t m = b.rows();
  Mat g(2 * m, 2 * m);
  g.set_block(0, m, -dagger(b));
  g.set_block(m, 0, b);
  return g;
}

Mat coset_generator(const Mat& x) {
  require_square(x, "coset_generator");
  const Svd d = svd(x);
  std::vector<Complex> theta(d.singular.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const double s = d.singular[k];
    if (s > 1.0 + kSineOvershoot)
      throw RangeError("coset_generator: singular value " + std::to_string(s) +
                       " exceeds 1");
    theta[k] = std::asin(std::min(s, 1.0));
  }
  return d.u * Mat::diagonal(std::span<const Complex>(theta)) * dagger(d.v);
}

SubgroupSplit subgroup_split(const Mat& g1, const Mat& g2) {
  require_unitary(g1, kUnitaryTol, "subgroup_split");
  require_unitary(g2, kUnitaryTol, "subgroup_split");
  if (g1.rows() != g2.rows())
    throw DimensionError("subgroup_split: blocks differ in size");
  const Mat s2 = normal_exp(0.5 * unitary_log(g1 * dagger(g2)));
  return SubgroupSplit{dagger(s2) * g1, s2};
}

}  // namespace cosetsynth
