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

// Inner loops shared by the public operations.
//
// Every kernel exists twice: serial:: is the reference, parallel:: splits the
// outermost independent loop across OpenMP threads. Each output entry is
// accumulated in the same order by both variants, so their results are
// bitwise identical and the tests compare them with operator==.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tcm/matrix.hpp"

namespace tcm::kernels {

struct Nonzero {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Row-major list of the nonzero entries of m.
std::vector<Nonzero> nonzeros(const Matrix& m);

/// One factor of a product basis: the basis matrices of one tensor factor
/// with their Hilbert-Schmidt squared norms.
struct FactorBasis {
  std::size_t dim;
  std::vector<std::vector<Nonzero>> elements;
  std::vector<double> norms_sq;
};

namespace serial {

void kron(const Matrix& a, const Matrix& b, Matrix& out);
void matmul(const Matrix& a, const Matrix& b, Matrix& out);

/// out = sum_k kron(factors[k], factors[k]); out must be zero on entry.
void self_kron_sum(std::span<const Matrix> factors, Matrix& out);

/// grid[a * right.size + b] = <L_a (x) R_b, m> / (|L_a|^2 |R_b|^2).
void project_product(const FactorBasis& left, const FactorBasis& right, const Matrix& m,
                     std::span<Complex> grid);

/// out = sum_{a,b} grid[a * right.size + b] L_a (x) R_b; out must be zero on
/// entry.
void synthesize_product(const FactorBasis& left, const FactorBasis& right,
                        std::span<const Complex> grid, Matrix& out);

}  // namespace serial

namespace parallel {

void kron(const Matrix& a, const Matrix& b, Matrix& out);
void matmul(const Matrix& a, const Matrix& b, Matrix& out);
void self_kron_sum(std::span<const Matrix> factors, Matrix& out);
void project_product(const FactorBasis& left, const FactorBasis& right, const Matrix& m,
                     std::span<Complex> grid);
void synthesize_product(const FactorBasis& left, const FactorBasis& right,
                        std::span<const Complex> grid, Matrix& out);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace tcm::kernels
