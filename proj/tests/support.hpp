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

// Random inputs and brute-force oracles for the test suites. Nothing here
// calls into the kernels it is used to check; oracles are written from the
// index definitions with plain loops.

#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "tcm/matrix.hpp"

namespace tcm::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x7c3a11d5u);
  return engine;
}

inline Complex random_complex() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng()), u(rng())};
}

inline std::vector<Complex> random_vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = random_complex();
  return v;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, random_vector(rows * cols));
}

inline Matrix random_hermitian(std::size_t n) {
  Matrix m = random_matrix(n, n);
  Matrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return h;
}

inline std::size_t random_extent(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

/// Kronecker product straight from the block definition: entry at composite
/// row (i1, i2), column (j1, j2) is a[i1][j1] * b[i2][j2].
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  std::vector<Complex> e(a.rows() * b.rows() * a.cols() * b.cols());
  const std::size_t width = a.cols() * b.cols();
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          e[(i1 * b.rows() + i2) * width + j1 * b.cols() + j2] = a(i1, j1) * b(i2, j2);
  return Matrix(a.rows() * b.rows(), width, std::move(e));
}

inline Matrix matmul_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

inline double delta(std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; }

/// 2 sum_{i != j} delta(i,l1) delta(j,k1) delta(j,l2) delta(i,k2), evaluated
/// by a quadruple loop over (l1, l2, k1, k2), indices 0-based.
inline Matrix offdiag_delta_oracle(std::size_t n) {
  Matrix out(n * n, n * n);
  for (std::size_t l1 = 0; l1 < n; ++l1)
    for (std::size_t l2 = 0; l2 < n; ++l2)
      for (std::size_t k1 = 0; k1 < n; ++k1)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          double s = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (i != j) s += delta(i, l1) * delta(j, k1) * delta(j, l2) * delta(i, k2);
          out(l1 * n + l2, k1 * n + k2) = 2.0 * s;
        }
  return out;
}

/// -(2/n) delta(k1,l1) delta(k2,l2) + 2 sum_i delta(i,l1) delta(i,k1)
/// delta(i,l2) delta(i,k2), evaluated by a quadruple loop.
inline Matrix diagonal_delta_oracle(std::size_t n) {
  Matrix out(n * n, n * n);
  const double nn = static_cast<double>(n);
  for (std::size_t l1 = 0; l1 < n; ++l1)
    for (std::size_t l2 = 0; l2 < n; ++l2)
      for (std::size_t k1 = 0; k1 < n; ++k1)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          double s = -2.0 / nn * delta(k1, l1) * delta(k2, l2);
          for (std::size_t i = 0; i < n; ++i)
            s += 2.0 * delta(i, l1) * delta(i, k1) * delta(i, l2) * delta(i, k2);
          out(l1 * n + l2, k1 * n + k2) = s;
        }
  return out;
}

/// Swap matrix from its defining property: column c of U is U e_c, and for
/// e_c = e_{j1} (x) e_{j2} that is e_{j2} (x) e_{j1}. Builds both basis
/// vectors with kron_oracle and locates the one.
inline Matrix swap_oracle(std::size_t p, std::size_t q) {
  Matrix out(p * q, p * q);
  for (std::size_t j1 = 0; j1 < p; ++j1)
    for (std::size_t j2 = 0; j2 < q; ++j2) {
      Matrix a(p, 1), b(q, 1);
      a(j1, 0) = 1.0;
      b(j2, 0) = 1.0;
      const Matrix in = kron_oracle(a, b);
      const Matrix swapped = kron_oracle(b, a);
      std::size_t col = 0;
      while (in(col, 0) != Complex(1.0)) ++col;
      for (std::size_t r = 0; r < p * q; ++r) out(r, col) = swapped(r, 0);
    }
  return out;
}

/// Pauli matrices sigma_1..sigma_3 as listed entrywise.
inline Matrix pauli(int k) {
  const Complex i(0.0, 1.0);
  switch (k) {
    case 1: return Matrix(2, 2, {0, 1, 1, 0});
    case 2: return Matrix(2, 2, {0, -i, i, 0});
    default: return Matrix(2, 2, {1, 0, 0, -1});
  }
}

/// Classical Gell-Mann matrices lambda_1..lambda_8 as listed entrywise.
inline Matrix gell_mann(int k) {
  const Complex i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(3.0);
  switch (k) {
    case 1: return Matrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
    case 2: return Matrix(3, 3, {0, -i, 0, i, 0, 0, 0, 0, 0});
    case 3: return Matrix(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 0});
    case 4: return Matrix(3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0});
    case 5: return Matrix(3, 3, {0, 0, -i, 0, 0, 0, i, 0, 0});
    case 6: return Matrix(3, 3, {0, 0, 0, 0, 0, 1, 0, 1, 0});
    case 7: return Matrix(3, 3, {0, 0, 0, 0, 0, -i, 0, i, 0});
    default: return Matrix(3, 3, {s, 0, 0, 0, s, 0, 0, 0, -2 * s});
  }
}

}  // namespace tcm::testing
