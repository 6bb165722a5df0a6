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

#include "tcm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tcm/kernels.hpp"

namespace tcm {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::domain_error(std::string(what) + ": shape mismatch " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

std::size_t checked_mul(std::size_t x, std::size_t y) {
  if (y != 0 && x > std::numeric_limits<std::size_t>::max() / y) {
    throw std::length_error("matrix extent overflows size_t");
  }
  return x * y;
}

}  // namespace

Tolerance::Tolerance(double abs_eps) : abs_eps_(abs_eps) {
  if (!(abs_eps >= 0.0) || !std::isfinite(abs_eps)) {
    throw std::domain_error("tolerance must be a finite non-negative number");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw std::domain_error("matrix extents must be positive");
  }
  const std::size_t count = checked_mul(rows, cols);
  if (count > std::vector<Complex>().max_size()) {
    throw std::length_error("matrix too large");
  }
  entries_.assign(count, Complex{});
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::domain_error("matrix extents must be positive");
  }
  if (entries_.size() != checked_mul(rows, cols)) {
    throw std::domain_error("entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  if (!all_finite(entries_)) {
    throw std::domain_error("matrix entries must be finite");
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix elementary(std::size_t r, std::size_t i, std::size_t j) {
  if (i < 1 || i > r || j < 1 || j > r) {
    throw std::domain_error("elementary: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside 1.." + std::to_string(r));
  }
  Matrix m(r, r);
  m(i - 1, j - 1) = 1.0;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(checked_mul(a.rows(), b.rows()), checked_mul(a.cols(), b.cols()));
  kernels::parallel::kron(a, b, out);
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::domain_error("matmul: inner dimensions " + std::to_string(a.cols()) +
                            " and " + std::to_string(b.rows()) + " differ");
  }
  Matrix out(a.rows(), b.cols());
  kernels::parallel::matmul(a, b, out);
  return out;
}

Matrix dagger(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

Complex trace(const Matrix& a) {
  if (!a.is_square()) throw std::domain_error("trace: matrix is not square");
  Complex sum{};
  for (std::size_t k = 0; k < a.rows(); ++k) sum += a(k, k);
  return sum;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hs_inner");
  if (!a.is_square()) throw std::domain_error("hs_inner: matrices are not square");
  // trace(a^H b) is the entrywise sum of conj(a) * b; no product is formed.
  Complex sum{};
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) sum += std::conj(x[k]) * y[k];
  return sum;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  return worst;
}

bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol.abs_eps();
}

bool is_hermitian(const Matrix& a, Tolerance tol) {
  return a.is_square() && max_abs_diff(a, dagger(a)) <= tol.abs_eps();
}

bool all_finite(std::span<const Complex> values) {
  return std::all_of(values.begin(), values.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

}  // namespace tcm
