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

#include "tcm/gellmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tcm {
namespace {

void require_dimension(std::size_t n) {
  if (n < 2) throw std::domain_error("generator dimension must be >= 2, got " + std::to_string(n));
}

void require_pair(std::size_t n, std::size_t i, std::size_t j) {
  require_dimension(n);
  if (i < 1 || i >= j || j > n) {
    throw std::domain_error("generator pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") must satisfy 1 <= i < j <= " + std::to_string(n));
  }
}

}  // namespace

GeneratorLabel GeneratorLabel::symmetric(std::size_t i, std::size_t j) {
  return {GeneratorKind::kSymmetric, i, j, 0};
}

GeneratorLabel GeneratorLabel::antisymmetric(std::size_t i, std::size_t j) {
  return {GeneratorKind::kAntisymmetric, i, j, 0};
}

GeneratorLabel GeneratorLabel::diagonal(std::size_t d) { return {GeneratorKind::kDiagonal, 0, 0, d}; }

std::string GeneratorLabel::str() const {
  switch (kind) {
    case GeneratorKind::kSymmetric:
      return "S(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case GeneratorKind::kAntisymmetric:
      return "A(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case GeneratorKind::kDiagonal:
      return "D(" + std::to_string(d) + ")";
  }
  return "?";
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kSymmetric: return "symmetric";
    case GeneratorKind::kAntisymmetric: return "antisymmetric";
    case GeneratorKind::kDiagonal: return "diagonal";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  if (name == "symmetric") return GeneratorKind::kSymmetric;
  if (name == "antisymmetric") return GeneratorKind::kAntisymmetric;
  if (name == "diagonal") return GeneratorKind::kDiagonal;
  return std::nullopt;
}

Matrix symmetric_generator(std::size_t n, std::size_t i, std::size_t j) {
  require_pair(n, i, j);
  Matrix m(n, n);
  m(i - 1, j - 1) = 1.0;
  m(j - 1, i - 1) = 1.0;
  return m;
}

Matrix antisymmetric_generator(std::size_t n, std::size_t i, std::size_t j) {
  require_pair(n, i, j);
  Matrix m(n, n);
  m(i - 1, j - 1) = Complex(0.0, -1.0);
  m(j - 1, i - 1) = Complex(0.0, 1.0);
  return m;
}

Matrix diagonal_generator(std::size_t n, std::size_t d) {
  require_dimension(n);
  if (d < 1 || d > n - 1) {
    throw std::domain_error("diagonal generator index " + std::to_string(d) +
                            " must lie in 1.." + std::to_string(n - 1));
  }
  // Normalization 1/sqrt(C(d+1, 2)) makes trace(D^2) = (d + d^2) / C(d+1, 2) = 2.
  const auto dd = static_cast<double>(d);
  const double scale = 1.0 / std::sqrt(dd * (dd + 1.0) / 2.0);
  Matrix m(n, n);
  for (std::size_t k = 0; k < d; ++k) m(k, k) = scale;
  m(d, d) = -dd * scale;
  return m;
}

Matrix generator(std::size_t n, const GeneratorLabel& label) {
  switch (label.kind) {
    case GeneratorKind::kSymmetric: return symmetric_generator(n, label.i, label.j);
    case GeneratorKind::kAntisymmetric: return antisymmetric_generator(n, label.i, label.j);
    case GeneratorKind::kDiagonal: return diagonal_generator(n, label.d);
  }
  throw std::domain_error("unknown generator kind");
}

GellMannBasis::GellMannBasis(std::size_t n) : n_(n) {
  require_dimension(n);
  elements_.reserve(n * n - 1);
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      elements_.push_back({GeneratorLabel::symmetric(i, j), symmetric_generator(n, i, j)});
      elements_.push_back({GeneratorLabel::antisymmetric(i, j), antisymmetric_generator(n, i, j)});
    }
    elements_.push_back({GeneratorLabel::diagonal(j - 1), diagonal_generator(n, j - 1)});
  }
}

std::optional<std::size_t> GellMannBasis::index_of(const GeneratorLabel& label) const {
  // Position follows from the canonical walk: the group for larger index j
  // starts after (j-1)^2 - 1 generators.
  std::size_t j = 0;
  switch (label.kind) {
    case GeneratorKind::kSymmetric:
    case GeneratorKind::kAntisymmetric:
      if (label.i < 1 || label.i >= label.j || label.j > n_ || label.d != 0) return std::nullopt;
      j = label.j;
      return (j - 1) * (j - 1) - 1 + 2 * (label.i - 1) +
             (label.kind == GeneratorKind::kAntisymmetric ? 1 : 0);
    case GeneratorKind::kDiagonal:
      if (label.d < 1 || label.d > n_ - 1 || label.i != 0 || label.j != 0) return std::nullopt;
      j = label.d + 1;
      return j * j - 2;
  }
  return std::nullopt;
}

std::vector<Matrix> GellMannBasis::matrices() const {
  std::vector<Matrix> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.matrix);
  return out;
}

GellMannBasis basis(std::size_t n) { return GellMannBasis(n); }

std::shared_ptr<const GellMannBasis> shared_basis(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const GellMannBasis>> cache;
  require_dimension(n);
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const GellMannBasis>(n);
  return slot;
}

BasisCoefficients expand_in_basis(const Matrix& m, std::size_t n) {
  require_dimension(n);
  if (m.rows() != n || m.cols() != n) {
    throw std::domain_error("expand_in_basis: expected " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const auto b = shared_basis(n);
  BasisCoefficients out{n, trace(m) / static_cast<double>(n), {}};
  out.c.reserve(b->size());
  for (const auto& g : *b) out.c.push_back(hs_inner(g.matrix, m) / 2.0);
  return out;
}

Matrix reconstruct(const BasisCoefficients& coeffs) {
  require_dimension(coeffs.n);
  const auto b = shared_basis(coeffs.n);
  if (coeffs.c.size() != b->size()) {
    throw std::domain_error("reconstruct: expected " + std::to_string(b->size()) +
                            " coefficients, got " + std::to_string(coeffs.c.size()));
  }
  Matrix out = coeffs.c0 * identity(coeffs.n);
  for (std::size_t k = 0; k < b->size(); ++k) {
    if (coeffs.c[k] == Complex{}) continue;
    out += coeffs.c[k] * (*b)[k].matrix;
  }
  return out;
}

}  // namespace tcm
