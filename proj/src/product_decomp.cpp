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

#include "tcm/product_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tcm/kernels.hpp"
#include "tcm/swap.hpp"

namespace tcm {
namespace {

void require_dimension(std::size_t n, const char* what) {
  if (n < 2) throw std::domain_error(std::string(what) + ": dimension must be >= 2");
}

kernels::FactorBasis factor_basis(std::size_t n) {
  const auto gens = shared_basis(n);
  kernels::FactorBasis fb{n, {}, {}};
  fb.elements.reserve(gens->size() + 1);
  fb.elements.push_back(kernels::nonzeros(identity(n)));
  fb.norms_sq.push_back(static_cast<double>(n));
  for (const auto& g : *gens) {
    fb.elements.push_back(kernels::nonzeros(g.matrix));
    fb.norms_sq.push_back(2.0);
  }
  return fb;
}

Matrix self_kron_sum(const std::vector<Matrix>& factors, std::size_t n) {
  Matrix out(n * n, n * n);
  kernels::parallel::self_kron_sum(factors, out);
  return out;
}

std::vector<Matrix> family(std::size_t n, bool diagonal) {
  const auto gens = shared_basis(n);
  std::vector<Matrix> out;
  for (const auto& g : *gens)
    if ((g.label.kind == GeneratorKind::kDiagonal) == diagonal) out.push_back(g.matrix);
  return out;
}

// 2 U_{n(x)n} - (2/n) I_{n^2}
Matrix swap_identity_target(std::size_t n) {
  Matrix target = 2.0 * dense(swap_by_formula(n, n));
  target -= (2.0 / static_cast<double>(n)) * identity(n * n);
  return target;
}

}  // namespace

ProductCoefficients::ProductCoefficients(std::size_t p, std::size_t q)
    : ProductCoefficients(p, q, std::vector<Complex>(p * p * q * q)) {}

ProductCoefficients::ProductCoefficients(std::size_t p, std::size_t q, std::vector<Complex> grid)
    : p_(p), q_(q), grid_(std::move(grid)) {
  require_dimension(p, "ProductCoefficients");
  require_dimension(q, "ProductCoefficients");
  if (grid_.size() != p * p * q * q) {
    throw std::domain_error("ProductCoefficients: grid has " + std::to_string(grid_.size()) +
                            " cells, expected " + std::to_string(p * p * q * q));
  }
}

std::string axis_label(std::size_t n, std::size_t index) {
  if (index == 0) return "I";
  return (*shared_basis(n))[index - 1].label.str();
}

ProductCoefficients decompose_product(const Matrix& m, std::size_t p, std::size_t q,
                                      Execution exec) {
  require_dimension(p, "decompose_product");
  require_dimension(q, "decompose_product");
  if (m.rows() != p * q || m.cols() != p * q) {
    throw std::domain_error("decompose_product: expected " + std::to_string(p * q) + "x" +
                            std::to_string(p * q) + " matrix, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  ProductCoefficients out(p, q);
  const auto left = factor_basis(p);
  const auto right = factor_basis(q);
  if (exec == Execution::kSerial)
    kernels::serial::project_product(left, right, m, out.grid());
  else
    kernels::parallel::project_product(left, right, m, out.grid());
  return out;
}

Matrix reconstruct_product(const ProductCoefficients& c, Execution exec) {
  Matrix out(c.p() * c.q(), c.p() * c.q());
  const auto left = factor_basis(c.p());
  const auto right = factor_basis(c.q());
  if (exec == Execution::kSerial)
    kernels::serial::synthesize_product(left, right, c.grid(), out);
  else
    kernels::parallel::synthesize_product(left, right, c.grid(), out);
  return out;
}

ProductCoefficients swap_identity_coefficients(std::size_t n) {
  require_dimension(n, "swap_identity_coefficients");
  ProductCoefficients out(n, n);
  out(0, 0) = 1.0 / static_cast<double>(n);
  for (std::size_t k = 1; k < n * n; ++k) out(k, k) = 0.5;
  return out;
}

SwapIdentityReport verify_swap_identity(std::size_t n, Tolerance tol) {
  require_dimension(n, "verify_swap_identity");
  const Matrix sum = self_kron_sum(shared_basis(n)->matrices(), n);
  const double err = max_abs_diff(sum, swap_identity_target(n));
  return {err, err <= tol.abs_eps()};
}

Matrix offdiag_family_sum(std::size_t n) {
  require_dimension(n, "offdiag_family_sum");
  return self_kron_sum(family(n, false), n);
}

Matrix diagonal_family_sum(std::size_t n) {
  require_dimension(n, "diagonal_family_sum");
  return self_kron_sum(family(n, true), n);
}

Matrix offdiag_family_closed_form(std::size_t n) {
  require_dimension(n, "offdiag_family_closed_form");
  Matrix out(n * n, n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) out += kron(elementary(n, i, j), elementary(n, j, i));
  return 2.0 * out;
}

Matrix diagonal_family_closed_form(std::size_t n) {
  require_dimension(n, "diagonal_family_closed_form");
  Matrix out(n * n, n * n);
  for (std::size_t i = 1; i <= n; ++i) out += kron(elementary(n, i, i), elementary(n, i, i));
  out *= 2.0;
  out -= (2.0 / static_cast<double>(n)) * identity(n * n);
  return out;
}

FamilyIdentityReport verify_family_identities(std::size_t n, Tolerance tol) {
  const Matrix off = offdiag_family_sum(n);
  const Matrix diag = diagonal_family_sum(n);
  FamilyIdentityReport r{};
  r.offdiag_error = max_abs_diff(off, offdiag_family_closed_form(n));
  r.diagonal_error = max_abs_diff(diag, diagonal_family_closed_form(n));
  r.assembly_error = max_abs_diff(off + diag, swap_identity_target(n));
  r.pass = std::max({r.offdiag_error, r.diagonal_error, r.assembly_error}) <= tol.abs_eps();
  return r;
}

Matrix build_six_term_expression(SixTermExpression which) {
  const Complex i(0.0, 1.0);
  const double r3 = std::sqrt(3.0);

  // Pauli and classical Gell-Mann matrices exactly as listed.
  const Matrix I2 = identity(2);
  const Matrix I3 = identity(3);
  const Matrix s1(2, 2, {0, 1, 1, 0});
  const Matrix s2(2, 2, {0, -i, i, 0});
  const Matrix s3(2, 2, {1, 0, 0, -1});
  const Matrix l1(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
  const Matrix l2(3, 3, {0, -i, 0, i, 0, 0, 0, 0, 0});
  const Matrix l3(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 0});
  const Matrix l6(3, 3, {0, 0, 0, 0, 0, 1, 0, 1, 0});
  const Matrix l7(3, 3, {0, 0, 0, 0, 0, -i, 0, i, 0});
  const Matrix l8 = (1.0 / r3) * Matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -2});

  const Matrix e11_3 = (1.0 / 3.0) * I3 + 0.5 * l3 + (r3 / 6.0) * l8;
  const Matrix e33_3 = (1.0 / 3.0) * I3 - (r3 / 3.0) * l8;
  const Matrix e12_3 = 0.5 * l1 + (i / 2.0) * l2;
  const Matrix e21_3 = 0.5 * l1 - (i / 2.0) * l2;
  const Matrix e23_3 = 0.5 * l6 + (i / 2.0) * l7;
  const Matrix e32_3 = 0.5 * l6 - (i / 2.0) * l7;

  const Matrix e11_2 = 0.5 * I2 + 0.5 * s3;
  const Matrix e22_2 = 0.5 * I2 - 0.5 * s3;
  const Matrix e12_2 = 0.5 * s1 + (i / 2.0) * s2;
  const Matrix e21_2 = 0.5 * s1 - (i / 2.0) * s2;

  if (which == SixTermExpression::kU32) {
    return kron(e11_3, e11_2) + kron(e12_3, e21_2) + kron(e23_3, e11_2) + kron(e21_3, e22_2) +
           kron(e32_3, e12_2) + kron(e33_3, e22_2);
  }
  return kron(e11_2, e11_3) + kron(e12_2, e21_3) + kron(e11_2, e32_3) + kron(e22_2, e12_3) +
         kron(e21_2, e23_3) + kron(e22_2, e33_3);
}

}  // namespace tcm
