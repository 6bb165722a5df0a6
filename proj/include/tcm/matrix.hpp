// Copyright 2026 The tcm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tcm {

using Complex = std::complex<double>;

/// Absolute per-entry tolerance used by approximate comparisons.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-10;

  constexpr Tolerance() = default;
  explicit Tolerance(double abs_eps);

  [[nodiscard]] constexpr double abs_eps() const { return abs_eps_; }

 private:
  double abs_eps_ = kDefault;
};

/// Dense complex matrix, row-major, with at least one row and one column.
///
/// Element access through operator() is 0-based. The free functions that
/// mirror the mathematical notation (elementary, the generator builders)
/// take 1-based indices instead.
class Matrix {
 public:
  /// rows x cols matrix of zeros. Throws std::domain_error on a zero extent.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries; their count must be rows*cols and
  /// every entry must be finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  [[nodiscard]] std::span<Complex> data() { return entries_; }
  [[nodiscard]] std::span<const Complex> data() const { return entries_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex factor);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

  /// Exact entrywise equality.
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

Matrix identity(std::size_t n);
Matrix zeros(std::size_t rows, std::size_t cols);

/// r x r matrix with a single 1 at (i, j); i and j are 1-based.
Matrix elementary(std::size_t r, std::size_t i, std::size_t j);

/// Kronecker product. Block (i1, j1) of the result is a(i1, j1) * b, so the
/// composite row is i1 * b.rows() + i2 and the composite column is
/// j1 * b.cols() + j2. Throws std::length_error if the result extent
/// overflows.
Matrix kron(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix dagger(const Matrix& a);
Matrix transpose(const Matrix& a);
Complex trace(const Matrix& a);

/// Hilbert-Schmidt pairing trace(dagger(a) * b).
Complex hs_inner(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol = {});
bool is_hermitian(const Matrix& a, Tolerance tol = {});
bool all_finite(std::span<const Complex> values);

}  // namespace tcm
