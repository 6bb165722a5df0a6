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

// Generalized Gell-Mann matrices.
//
// For dimension n >= 2 there are n^2 - 1 traceless hermitian generators,
// normalized so that trace(G_a G_b) = 2 delta_ab. They come in three families:
//
//   S(i,j)  1 at (i,j) and (j,i)                     1 <= i < j <= n
//   A(i,j)  -i at (i,j), +i at (j,i)                 1 <= i < j <= n
//   D(d)    diag(1,..,1,-d,0,..,0) / sqrt(d(d+1)/2)  1 <= d <= n-1
//
// The canonical order walks j = 2..n, emitting S(i,j), A(i,j) for i < j and
// then D(j-1). At n = 2 this is (sigma_1, sigma_2, sigma_3) and at n = 3 it
// is the classical (lambda_1, ..., lambda_8).

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcm/matrix.hpp"

namespace tcm {

enum class GeneratorKind { kSymmetric, kAntisymmetric, kDiagonal };

/// Identity of one generator. Indices are 1-based; i and j are meaningful for
/// the pair families, d for the diagonal family, and unused fields are zero.
struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::kSymmetric;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t d = 0;

  static GeneratorLabel symmetric(std::size_t i, std::size_t j);
  static GeneratorLabel antisymmetric(std::size_t i, std::size_t j);
  static GeneratorLabel diagonal(std::size_t d);

  /// "S(1,2)", "A(1,2)" or "D(1)".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

std::string to_string(GeneratorKind kind);  // "symmetric", ...
std::optional<GeneratorKind> parse_generator_kind(const std::string& name);

Matrix symmetric_generator(std::size_t n, std::size_t i, std::size_t j);
Matrix antisymmetric_generator(std::size_t n, std::size_t i, std::size_t j);
Matrix diagonal_generator(std::size_t n, std::size_t d);

/// Dispatches on label.kind. Throws std::domain_error if the label does not
/// fit dimension n.
Matrix generator(std::size_t n, const GeneratorLabel& label);

struct Generator {
  GeneratorLabel label;
  Matrix matrix;
};

/// The n^2 - 1 generators of dimension n in canonical order.
class GellMannBasis {
 public:
  explicit GellMannBasis(std::size_t n);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }

  /// 0-based position in canonical order.
  const Generator& operator[](std::size_t k) const { return elements_[k]; }

  [[nodiscard]] auto begin() const { return elements_.begin(); }
  [[nodiscard]] auto end() const { return elements_.end(); }

  /// 0-based position of label, or nullopt if it is not a generator of this
  /// dimension.
  [[nodiscard]] std::optional<std::size_t> index_of(const GeneratorLabel& label) const;

  /// Matrices only, in canonical order.
  [[nodiscard]] std::vector<Matrix> matrices() const;

 private:
  std::size_t n_;
  std::vector<Generator> elements_;
};

/// Canonical basis of dimension n. Throws std::domain_error for n < 2.
GellMannBasis basis(std::size_t n);

/// Memoized basis(n). Safe to call from several threads.
std::shared_ptr<const GellMannBasis> shared_basis(std::size_t n);

/// Coefficients of a matrix over {I_n} followed by the canonical basis.
struct BasisCoefficients {
  std::size_t n = 0;
  Complex c0;
  std::vector<Complex> c;
};

/// Hilbert-Schmidt projection: c0 = trace(m) / n, c_k = <G_k, m> / 2.
/// m may be any complex n x n matrix.
BasisCoefficients expand_in_basis(const Matrix& m, std::size_t n);

/// c0 I_n + sum_k c_k G_k.
Matrix reconstruct(const BasisCoefficients& coeffs);

}  // namespace tcm
