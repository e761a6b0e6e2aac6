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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cosetsynth {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/**
 * Dense complex matrix, row-major. Carrier of every unitary, block and
 * generator in the library. Entries are always finite: constructors that
 * accept external data reject NaN and Inf.
 */
class Mat {
 public:
  Mat() = default;

  /** Zero matrix. */
  Mat(std::size_t rows, std::size_t cols);

  /** Takes ownership of row-major `entries`; throws on size mismatch or
   * non-finite values. */
  Mat(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /** Row-by-row literal, e.g. `Mat{{1, 0}, {0, -1}}`. */
  Mat(std::initializer_list<std::initializer_list<Complex>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(std::span<const Complex> diag);
  static Mat diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }

  /** Copy of the `nr` x `nc` block starting at (r0, c0). */
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr,
            std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(Complex s);

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(Mat a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Complex s, Mat a);
Mat operator*(Mat a, Complex s);

/** Matrix product; throws DimensionError on inner-dimension mismatch. */
Mat multiply(const Mat& a, const Mat& b);
/** Conjugate transpose. */
Mat dagger(const Mat& a);
Complex trace(const Mat& a);
double frobenius_norm(const Mat& a);
/** ||a - b||_F. */
double frobenius_dist(const Mat& a, const Mat& b);

/** Kronecker product; dimensions multiply. */
Mat kron(const Mat& a, const Mat& b);
/** [[a, 0], [0, b]]. */
Mat blockdiag(const Mat& a, const Mat& b);

/** ||a^dag a - 1||_F. */
double unitarity_defect(const Mat& a);
/** ||a - a^dag||_F. */
double hermiticity_defect(const Mat& a);
/** Frobenius mass of the two off-diagonal half blocks of an even-sized
 * square matrix. */
double off_block_mass(const Mat& a);

/** Throws UnitarityError when ||a^dag a - 1||_F exceeds `tol`. */
void require_unitary(const Mat& a, double tol, const char* context);
void require_square(const Mat& a, const char* context);

/** Returns log2(dim) when dim is a positive power of two; throws
 * DimensionError otherwise. */
int qubit_count(std::size_t dim);

}  // namespace cosetsynth
