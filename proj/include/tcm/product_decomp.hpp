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

// Decomposition of operators on C^p (x) C^q over the product basis
// {I_p, G^(p)_1, ...} (x) {I_q, G^(q)_1, ...}, and the swap identity
//
//   U_{n(x)n} = (1/n) I_n (x) I_n + (1/2) sum_k G_k (x) G_k.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tcm/gellmann.hpp"
#include "tcm/matrix.hpp"

namespace tcm {

/// p^2 x q^2 coefficient grid. Axis index 0 is the identity; index k >= 1 is
/// generator k-1 of the canonical basis of that factor.
class ProductCoefficients {
 public:
  ProductCoefficients(std::size_t p, std::size_t q);
  ProductCoefficients(std::size_t p, std::size_t q, std::vector<Complex> grid);

  [[nodiscard]] std::size_t p() const { return p_; }
  [[nodiscard]] std::size_t q() const { return q_; }
  [[nodiscard]] std::size_t rows() const { return p_ * p_; }
  [[nodiscard]] std::size_t cols() const { return q_ * q_; }

  Complex& operator()(std::size_t a, std::size_t b) { return grid_[a * cols() + b]; }
  const Complex& operator()(std::size_t a, std::size_t b) const { return grid_[a * cols() + b]; }

  [[nodiscard]] std::span<Complex> grid() { return grid_; }
  [[nodiscard]] std::span<const Complex> grid() const { return grid_; }

  friend bool operator==(const ProductCoefficients&, const ProductCoefficients&) = default;

 private:
  std::size_t p_;
  std::size_t q_;
  std::vector<Complex> grid_;
};

/// "I" for axis index 0, otherwise the generator label ("S(1,2)", ...).
std::string axis_label(std::size_t n, std::size_t index);

enum class Execution { kSerial, kParallel };

/// grid(a, b) = <A_a (x) B_b, m> / (|A_a|^2 |B_b|^2), with |I_n|^2 = n and
/// |G|^2 = 2. m must be (p*q) x (p*q). Each cell is an independent sum, so
/// both execution modes give bitwise identical grids.
ProductCoefficients decompose_product(const Matrix& m, std::size_t p, std::size_t q,
                                      Execution exec = Execution::kParallel);

/// sum_{a,b} grid(a, b) A_a (x) B_b.
Matrix reconstruct_product(const ProductCoefficients& c, Execution exec = Execution::kParallel);

/// 1/n at (0, 0), 1/2 at (k, k) for k >= 1, zero elsewhere.
ProductCoefficients swap_identity_coefficients(std::size_t n);

struct SwapIdentityReport {
  double max_error;
  bool pass;
};

/// Compares sum_k G_k (x) G_k against 2 U_{n(x)n} - (2/n) I entrywise.
SwapIdentityReport verify_swap_identity(std::size_t n, Tolerance tol = {});

/// Symmetric plus antisymmetric family: sum_{i<j} S(i,j)(x)S(i,j) + A(i,j)(x)A(i,j).
Matrix offdiag_family_sum(std::size_t n);

/// sum_{d=1}^{n-1} D(d) (x) D(d).
Matrix diagonal_family_sum(std::size_t n);

/// What offdiag_family_sum(n) must equal: 2 sum_{i != j} E_ij (x) E_ji.
Matrix offdiag_family_closed_form(std::size_t n);

/// What diagonal_family_sum(n) must equal: -(2/n) I + 2 sum_i E_ii (x) E_ii.
Matrix diagonal_family_closed_form(std::size_t n);

struct FamilyIdentityReport {
  double offdiag_error;
  double diagonal_error;
  /// |offdiag + diagonal - (2 U - (2/n) I)|_max
  double assembly_error;
  bool pass;
};

FamilyIdentityReport verify_family_identities(std::size_t n, Tolerance tol = {});

enum class SixTermExpression { kU32, kU23 };

/// Evaluates the six-term product expansion of U_{3(x)2} or U_{2(x)3} written
/// with Pauli and classical Gell-Mann matrices, term by term.
Matrix build_six_term_expression(SixTermExpression which);

}  // namespace tcm
