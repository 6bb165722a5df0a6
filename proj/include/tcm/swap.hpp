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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tcm/matrix.hpp"

namespace tcm {

/// Tensor commutation matrix U_{p(x)q}: the pq x pq permutation matrix with
/// U (a (x) b) = b (x) a for every a in C^p and b in C^q.
///
/// Stored as an index map: perm[col] is the row of the single 1 in column
/// col (both 0-based).
class SwapMatrix {
 public:
  /// Throws std::domain_error unless perm is a bijection on [0, p*q).
  SwapMatrix(std::size_t p, std::size_t q, std::vector<std::size_t> perm);

  [[nodiscard]] std::size_t p() const { return p_; }
  [[nodiscard]] std::size_t q() const { return q_; }
  [[nodiscard]] std::size_t dim() const { return perm_.size(); }
  [[nodiscard]] std::span<const std::size_t> perm() const { return perm_; }

  /// 1-based (row, col) positions of the ones, ordered by row.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> positions() const;

  friend bool operator==(const SwapMatrix&, const SwapMatrix&) = default;

 private:
  std::size_t p_;
  std::size_t q_;
  std::vector<std::size_t> perm_;
};

/// Closed form: the entry at row (i1, i2), column (j1, j2) is
/// delta(i1, j2) * delta(i2, j1), i.e. perm[j1*q + j2] = j2*p + j1.
/// A factor of dimension 1 yields the identity.
SwapMatrix swap_by_formula(std::size_t p, std::size_t q);

/// Constructive walk: start at (1,1), then in each following column drop p
/// rows. When the next drop would leave the matrix, begin the next group one
/// row below the previous group's start. Group k (0-based) therefore starts
/// at row k+1 in column k*q+1; the walk checks those waypoints and throws
/// std::logic_error if it ever strays.
SwapMatrix swap_by_rule(std::size_t p, std::size_t q);

/// out[perm[c]] = v[c]. Throws std::domain_error unless v.size() == p*q.
std::vector<Complex> apply(const SwapMatrix& u, std::span<const Complex> v);

Matrix dense(const SwapMatrix& u);

}  // namespace tcm
