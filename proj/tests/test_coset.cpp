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

#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "cosetsynth/coset.hpp"
#include "cosetsynth/error.hpp"
#include "cosetsynth/gates.hpp"
#include "cosetsynth/linalg.hpp"
#include "cosetsynth/pauli.hpp"
#include "cosetsynth/synthesis.hpp"
#include "testutil.hpp"

namespace cosetsynth {
namespace test_coset {

// Random m x m generator block scaled so every coset angle stays below pi/2.
Mat random_block(std::size_t m, std::uint64_t seed, double scale) {
  SplitMix64 rng(seed);
  Mat b(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) b(r, c) = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
  const Svd d = svd(b);
  return (scale / d.singular.front()) * b;
}

bool is_psd_hermitian(const Mat& a) {
  if (hermiticity_defect(a) > 1e-10) return false;
  return herm_eig(0.5 * (a + dagger(a))).values.front() >= -1e-10;
}

TEST_CASE("coset_right on structured inputs") {
  GIVEN("a block-diagonal unitary") {
    const Mat a = random_unitary(1, 1), b = random_unitary(1, 2);
    const CosetFactors f = coset_right(blockdiag(a, b));
    CHECK(frobenius_norm(f.x) <= 1e-14);
    CHECK(frobenius_dist(f.coset, Mat::identity(4)) <= 1e-12);
    CHECK(frobenius_dist(f.v1, a) <= 1e-12);
    CHECK(frobenius_dist(f.v2, b) <= 1e-12);
  }
  GIVEN("a pure coset factor built from a generator") {
    const Mat b0 = random_block(2, 3, 1.2);
    const Mat c = normal_exp(antiblock(b0));
    const CosetFactors f = coset_right(c);
    CHECK(frobenius_dist(f.v1, Mat::identity(2)) <= 1e-10);
    CHECK(frobenius_dist(f.v2, Mat::identity(2)) <= 1e-10);
    THEN("the generator comes back") {
      CHECK(frobenius_dist(coset_generator(f.x), b0) <= 1e-10);
    }
    THEN("its left decomposition is trivial too") {
      const CosetFactors l = coset_left(c);
      CHECK(frobenius_dist(l.v1, Mat::identity(2)) <= 1e-10);
      CHECK(frobenius_dist(l.v2, Mat::identity(2)) <= 1e-10);
    }
  }
  GIVEN("SWAP") {
    try {
      coset_right(named_gate({GateName::kSwap, 2, 0}));
      FAIL("singular block accepted");
    } catch (const SingularityError& e) {
      CHECK(e.sigma_min() < 1e-8);
    }
  }
  GIVEN("a non-unitary matrix") {
    Mat m = random_unitary(2, 4);
    m(0, 0) += 1e-6;
    CHECK_THROWS_AS(coset_right(m), UnitarityError);
  }
}

TEST_CASE("coset factors satisfy their invariants") {
  for (int n = 2; n <= 4; ++n) {
    const int samples = n == 4 ? 20 : 50;
    for (int i = 0; i < samples; ++i) {
      const Mat u = random_unitary(n, 600 + 100 * static_cast<std::uint64_t>(n) + i);
      const std::size_t m = u.rows() / 2;
      const CosetFactors f = coset_right(u);
      CHECK(frobenius_dist(f.coset * f.subgroup(), u) <= 1e-10);
      CHECK(unitarity_defect(f.coset) <= 1e-10);
      CHECK(unitarity_defect(f.v1) <= 1e-10);
      CHECK(unitarity_defect(f.v2) <= 1e-10);
      const Mat one = Mat::identity(m);
      CHECK(frobenius_dist(f.coset.block(0, 0, m, m), psd_sqrt(one - dagger(f.x) * f.x)) <= 1e-10);
      CHECK(frobenius_dist(f.coset.block(m, m, m, m), psd_sqrt(one - f.x * dagger(f.x))) <= 1e-10);
      CHECK(frobenius_dist(f.coset.block(0, m, m, m), -1.0 * dagger(f.x)) <= 1e-10);
      CHECK(frobenius_dist(f.coset.block(m, 0, m, m), f.x) <= 1e-10);
      CHECK(is_psd_hermitian(f.coset.block(0, 0, m, m)));
      CHECK(is_psd_hermitian(f.coset.block(m, m, m, m)));
      CHECK(svd(f.x).singular.front() <= 1 + 1e-10);
      CHECK(frobenius_dist(normal_exp(antiblock(coset_generator(f.x))), f.coset) <= 1e-10);

      const CosetFactors l = coset_left(u);
      CHECK(frobenius_dist(l.subgroup() * l.coset, u) <= 1e-10);
    }
  }
}

TEST_CASE("the three forms of X agree") {
  for (int i = 0; i < 30; ++i) {
    const Mat u = random_unitary(2 + i % 2, 700 + static_cast<std::uint64_t>(i));
    const std::size_t m = u.rows() / 2;
    const Mat u11 = u.block(0, 0, m, m), u21 = u.block(m, 0, m, m);
    const Mat literal = coset_x_reference(u);
    const Mat alt = u21 * dagger(u11) * lu_inverse(psd_sqrt(u11 * dagger(u11)));
    CHECK(frobenius_dist(literal, alt) <= 1e-10);
    CHECK(frobenius_dist(literal, coset_right(u).x) <= 1e-10);
  }
}

TEST_CASE("left form is the dagger of the right form of U^dag") {
  const Mat u = random_unitary(3, 11);
  const CosetFactors l = coset_left(u);
  const CosetFactors r = coset_right(dagger(u));
  CHECK(l.coset == dagger(r.coset));
  CHECK(l.v1 == dagger(r.v1));
  CHECK(l.v2 == dagger(r.v2));
}

TEST_CASE("coset_generator") {
  CHECK(frobenius_norm(coset_generator(Mat(2, 2))) == 0.0);
  const Mat half = 0.5 * Mat::identity(2);
  CHECK(frobenius_dist(coset_generator(half), (std::numbers::pi / 6) * Mat::identity(2)) <= 1e-12);
  CHECK_NOTHROW(coset_generator((1 + 5e-11) * Mat::identity(2)));
  CHECK_THROWS_AS(coset_generator(1.001 * Mat::identity(2)), RangeError);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Mat b0 = random_block(4, 800 + s, 1.5);
    const Mat c = normal_exp(antiblock(b0));
    CHECK(frobenius_dist(coset_generator(c.block(4, 0, 4, 4)), b0) <= 1e-9);
  }
}

TEST_CASE("subgroup_split") {
  GIVEN("equal blocks") {
    const Mat g = random_unitary(2, 12);
    const SubgroupSplit s = subgroup_split(g, g);
    CHECK(frobenius_dist(s.s2, Mat::identity(4)) <= 1e-12);
    CHECK(frobenius_dist(s.s1, g) <= 1e-12);
  }
  GIVEN("opposite scalar phases") {
    const Complex e = std::polar(1.0, 0.4);
    const SubgroupSplit s = subgroup_split(e * Mat::identity(2), std::conj(e) * Mat::identity(2));
    CHECK(frobenius_dist(s.s2, e * Mat::identity(2)) <= 1e-12);
    CHECK(frobenius_dist(s.s1, Mat::identity(2)) <= 1e-12);
  }
  GIVEN("random blocks") {
    const std::vector<std::string> z_only{"Z*"};
    for (std::uint64_t i = 0; i < 30; ++i) {
      const int k = 1 + static_cast<int>(i % 3);
      const Mat g1 = random_unitary(k, 900 + 2 * i), g2 = random_unitary(k, 901 + 2 * i);
      const SubgroupSplit s = subgroup_split(g1, g2);
      const Mat half = blockdiag(s.s2, dagger(s.s2));
      CHECK(frobenius_dist(half * blockdiag(s.s1, s.s1), blockdiag(g1, g2)) <= 1e-10);
      CHECK(mass_outside(expand_generator(hermitian_generator(half)), z_only) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(subgroup_split(Mat{{1, 1}, {0, 1}}, Mat::identity(2)), UnitarityError);
}

}  // namespace test_coset
}  // namespace cosetsynth
