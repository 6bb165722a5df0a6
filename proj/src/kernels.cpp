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

#include "tcm/kernels.hpp"

#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcm::kernels {
namespace {

using Index = std::int64_t;

// Per-row / per-cell bodies. The serial and parallel entry points below only
// differ in how the outer loop is scheduled.

void kron_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t row) {
  const std::size_t i1 = row / b.rows();
  const std::size_t i2 = row % b.rows();
  for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
    const Complex s = a(i1, j1);
    for (std::size_t j2 = 0; j2 < b.cols(); ++j2) out(row, j1 * b.cols() + j2) = s * b(i2, j2);
  }
}

void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t row) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Complex s = a(row, k);
    for (std::size_t c = 0; c < b.cols(); ++c) out(row, c) += s * b(k, c);
  }
}

void self_kron_row(std::span<const Matrix> factors, Matrix& out, std::size_t row) {
  const std::size_t n = factors.front().rows();
  const std::size_t i1 = row / n;
  const std::size_t i2 = row % n;
  for (const Matrix& f : factors) {
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const Complex s = f(i1, j1);
      if (s == Complex{}) continue;
      for (std::size_t j2 = 0; j2 < n; ++j2) out(row, j1 * n + j2) += s * f(i2, j2);
    }
  }
}

Complex project_cell(const FactorBasis& left, const FactorBasis& right, const Matrix& m,
                     std::size_t a, std::size_t b) {
  const std::size_t q = right.dim;
  Complex sum{};
  for (const Nonzero& x : left.elements[a]) {
    const Complex cx = std::conj(x.value);
    for (const Nonzero& y : right.elements[b]) {
      sum += cx * std::conj(y.value) * m(x.row * q + y.row, x.col * q + y.col);
    }
  }
  return sum / (left.norms_sq[a] * right.norms_sq[b]);
}

// S_a = sum_b grid[a][b] R_b, stored as a dense q x q block.
void right_partial_sum(const FactorBasis& right, std::span<const Complex> grid, std::size_t a,
                       std::span<Complex> block) {
  const std::size_t q = right.dim;
  const std::size_t width = right.elements.size();
  for (std::size_t b = 0; b < width; ++b) {
    const Complex g = grid[a * width + b];
    if (g == Complex{}) continue;
    for (const Nonzero& y : right.elements[b]) block[y.row * q + y.col] += g * y.value;
  }
}

struct BlockTerm {
  std::size_t a;
  Complex value;
};

// For every block (i1, j1) of the output, the left basis entries L_a(i1, j1)
// that are nonzero, in ascending a.
std::vector<std::vector<BlockTerm>> block_terms(const FactorBasis& left) {
  const std::size_t p = left.dim;
  std::vector<std::vector<BlockTerm>> terms(p * p);
  for (std::size_t a = 0; a < left.elements.size(); ++a)
    for (const Nonzero& x : left.elements[a]) terms[x.row * p + x.col].push_back({a, x.value});
  return terms;
}

void synthesize_block(const std::vector<BlockTerm>& terms, std::size_t block, std::size_t p,
                      std::size_t q, std::span<const Complex> partial, Matrix& out) {
  const std::size_t i1 = block / p;
  const std::size_t j1 = block % p;
  for (const BlockTerm& t : terms) {
    const Complex* s = partial.data() + t.a * q * q;
    for (std::size_t i2 = 0; i2 < q; ++i2)
      for (std::size_t j2 = 0; j2 < q; ++j2)
        out(i1 * q + i2, j1 * q + j2) += t.value * s[i2 * q + j2];
  }
}

void check_kron(const Matrix& a, const Matrix& b, const Matrix& out) {
  if (out.rows() != a.rows() * b.rows() || out.cols() != a.cols() * b.cols())
    throw std::domain_error("kron: output has the wrong shape");
}

void check_matmul(const Matrix& a, const Matrix& b, const Matrix& out) {
  if (a.cols() != b.rows() || out.rows() != a.rows() || out.cols() != b.cols())
    throw std::domain_error("matmul: incompatible shapes");
}

void check_self_kron(std::span<const Matrix> factors, const Matrix& out) {
  if (factors.empty()) return;
  const std::size_t n = factors.front().rows();
  for (const Matrix& f : factors)
    if (f.rows() != n || f.cols() != n)
      throw std::domain_error("self_kron_sum: factors must be square and equal-sized");
  if (out.rows() != n * n || out.cols() != n * n)
    throw std::domain_error("self_kron_sum: output has the wrong shape");
}

void check_product(const FactorBasis& left, const FactorBasis& right, std::size_t rows,
                   std::size_t cols) {
  const std::size_t dim = left.dim * right.dim;
  if (rows != dim || cols != dim)
    throw std::domain_error("product kernel: matrix is not (p*q) x (p*q)");
}

}  // namespace

std::vector<Nonzero> nonzeros(const Matrix& m) {
  std::vector<Nonzero> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != Complex{}) out.push_back({r, c, m(r, c)});
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void kron(const Matrix& a, const Matrix& b, Matrix& out) {
  check_kron(a, b, out);
  for (std::size_t r = 0; r < out.rows(); ++r) kron_row(a, b, out, r);
}

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  check_matmul(a, b, out);
  for (std::size_t r = 0; r < out.rows(); ++r) matmul_row(a, b, out, r);
}

void self_kron_sum(std::span<const Matrix> factors, Matrix& out) {
  check_self_kron(factors, out);
  if (factors.empty()) return;
  for (std::size_t r = 0; r < out.rows(); ++r) self_kron_row(factors, out, r);
}

void project_product(const FactorBasis& left, const FactorBasis& right, const Matrix& m,
                     std::span<Complex> grid) {
  check_product(left, right, m.rows(), m.cols());
  const std::size_t width = right.elements.size();
  for (std::size_t a = 0; a < left.elements.size(); ++a)
    for (std::size_t b = 0; b < width; ++b) grid[a * width + b] = project_cell(left, right, m, a, b);
}

void synthesize_product(const FactorBasis& left, const FactorBasis& right,
                        std::span<const Complex> grid, Matrix& out) {
  check_product(left, right, out.rows(), out.cols());
  const std::size_t p = left.dim;
  const std::size_t q = right.dim;
  std::vector<Complex> partial(left.elements.size() * q * q);
  for (std::size_t a = 0; a < left.elements.size(); ++a)
    right_partial_sum(right, grid, a, std::span(partial).subspan(a * q * q, q * q));
  const auto terms = block_terms(left);
  for (std::size_t blk = 0; blk < p * p; ++blk) synthesize_block(terms[blk], blk, p, q, partial, out);
}

}  // namespace serial

namespace parallel {

void kron(const Matrix& a, const Matrix& b, Matrix& out) {
  check_kron(a, b, out);
  const auto rows = static_cast<Index>(out.rows());
#pragma omp parallel for schedule(static)
  for (Index r = 0; r < rows; ++r) kron_row(a, b, out, static_cast<std::size_t>(r));
}

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  check_matmul(a, b, out);
  const auto rows = static_cast<Index>(out.rows());
#pragma omp parallel for schedule(static)
  for (Index r = 0; r < rows; ++r) matmul_row(a, b, out, static_cast<std::size_t>(r));
}

void self_kron_sum(std::span<const Matrix> factors, Matrix& out) {
  check_self_kron(factors, out);
  if (factors.empty()) return;
  const auto rows = static_cast<Index>(out.rows());
#pragma omp parallel for schedule(static)
  for (Index r = 0; r < rows; ++r) self_kron_row(factors, out, static_cast<std::size_t>(r));
}

void project_product(const FactorBasis& left, const FactorBasis& right, const Matrix& m,
                     std::span<Complex> grid) {
  check_product(left, right, m.rows(), m.cols());
  const std::size_t width = right.elements.size();
  const auto cells = static_cast<Index>(left.elements.size() * width);
#pragma omp parallel for schedule(dynamic, 16)
  for (Index cell = 0; cell < cells; ++cell) {
    const auto k = static_cast<std::size_t>(cell);
    grid[k] = project_cell(left, right, m, k / width, k % width);
  }
}

void synthesize_product(const FactorBasis& left, const FactorBasis& right,
                        std::span<const Complex> grid, Matrix& out) {
  check_product(left, right, out.rows(), out.cols());
  const std::size_t p = left.dim;
  const std::size_t q = right.dim;
  std::vector<Complex> partial(left.elements.size() * q * q);
  const auto count = static_cast<Index>(left.elements.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (Index a = 0; a < count; ++a) {
    const auto k = static_cast<std::size_t>(a);
    right_partial_sum(right, grid, k, std::span(partial).subspan(k * q * q, q * q));
  }
  const auto terms = block_terms(left);
  const auto blocks = static_cast<Index>(p * p);
#pragma omp parallel for schedule(dynamic, 1)
  for (Index blk = 0; blk < blocks; ++blk)
    synthesize_block(terms[static_cast<std::size_t>(blk)], static_cast<std::size_t>(blk), p, q,
                     partial, out);
}

}  // namespace parallel
}  // namespace tcm::kernels
