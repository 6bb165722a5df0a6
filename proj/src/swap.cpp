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

#include "tcm/swap.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace tcm {
namespace {

std::size_t checked_dim(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::domain_error("swap factor dimensions must be positive");
  if (p > std::numeric_limits<std::size_t>::max() / q)
    throw std::length_error("swap dimension p*q overflows size_t");
  return p * q;
}

}  // namespace

SwapMatrix::SwapMatrix(std::size_t p, std::size_t q, std::vector<std::size_t> perm)
    : p_(p), q_(q), perm_(std::move(perm)) {
  const std::size_t n = checked_dim(p, q);
  if (perm_.size() != n) {
    throw std::domain_error("swap permutation has length " + std::to_string(perm_.size()) +
                            ", expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t row : perm_) {
    if (row >= n || seen[row]) throw std::domain_error("swap index map is not a permutation");
    seen[row] = true;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> SwapMatrix::positions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out(perm_.size());
  for (std::size_t col = 0; col < perm_.size(); ++col) out[perm_[col]] = {perm_[col] + 1, col + 1};
  return out;
}

SwapMatrix swap_by_formula(std::size_t p, std::size_t q) {
  const std::size_t n = checked_dim(p, q);
  std::vector<std::size_t> perm(n);
  for (std::size_t j1 = 0; j1 < p; ++j1)
    for (std::size_t j2 = 0; j2 < q; ++j2) perm[j1 * q + j2] = j2 * p + j1;
  return SwapMatrix(p, q, std::move(perm));
}

SwapMatrix swap_by_rule(std::size_t p, std::size_t q) {
  const std::size_t n = checked_dim(p, q);
  std::vector<std::size_t> perm(n);

  // 1-based cursor, as the walk is described.
  std::size_t row = 1;
  std::size_t group_start = 1;
  for (std::size_t col = 1; col <= n; ++col) {
    if (row == group_start) {
      const std::size_t group = group_start - 1;
      if (col != group * q + 1) {
        throw std::logic_error("swap walk: group " + std::to_string(group) + " began in column " +
                               std::to_string(col) + ", expected " +
                               std::to_string(group * q + 1));
      }
    }
    perm[col - 1] = row - 1;
    if (row + p <= n) {
      row += p;
    } else {
      // Fewer than p rows remain below: the group is complete.
      ++group_start;
      row = group_start;
    }
  }
  if (perm[n - 1] != n - 1) throw std::logic_error("swap walk did not finish at (pq, pq)");
  return SwapMatrix(p, q, std::move(perm));
}

std::vector<Complex> apply(const SwapMatrix& u, std::span<const Complex> v) {
  if (v.size() != u.dim()) {
    throw std::domain_error("apply: vector length " + std::to_string(v.size()) +
                            " does not match swap dimension " + std::to_string(u.dim()));
  }
  std::vector<Complex> out(v.size());
  const auto perm = u.perm();
  for (std::size_t c = 0; c < v.size(); ++c) out[perm[c]] = v[c];
  return out;
}

Matrix dense(const SwapMatrix& u) {
  Matrix m(u.dim(), u.dim());
  const auto perm = u.perm();
  for (std::size_t c = 0; c < perm.size(); ++c) m(perm[c], c) = 1.0;
  return m;
}

}  // namespace tcm
