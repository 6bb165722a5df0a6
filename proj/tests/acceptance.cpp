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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schema_check.hpp"
#include "support.hpp"
#include "tcm/cli.hpp"
#include "tcm/gellmann.hpp"
#include "tcm/io.hpp"
#include "tcm/product_decomp.hpp"
#include "tcm/swap.hpp"

using namespace tcm;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// 1. U_{n(x)n} = (1/n) I + (1/2) sum_k G_k (x) G_k for n = 2..12.
Outcome swap_identity_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t n = 2; n <= 12; ++n) {
    Matrix rhs = (1.0 / static_cast<double>(n)) * identity(n * n);
    for (const auto& g : basis(n)) rhs += 0.5 * kron(g.matrix, g.matrix);
    worst = std::max(worst, max_abs_diff(dense(swap_by_formula(n, n)), rhs));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs < 30.0, "max error " + sci(worst) + ", " + sci(secs) + " s"};
}

// 2. Swap decompositions for n = 2 and n = 3.
Outcome introduction_formulas() {
  double worst = 0.0;
  for (std::size_t n : {2u, 3u}) {
    const auto c = decompose_product(dense(swap_by_formula(n, n)), n, n);
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t b = 0; b < c.cols(); ++b) {
        const double expect = a != b ? 0.0 : (a == 0 ? 1.0 / static_cast<double>(n) : 0.5);
        worst = std::max(worst, std::abs(c(a, b) - expect));
      }
  }
  return {worst <= 1e-12, "max coefficient error " + sci(worst)};
}

// 3. E11 in the Gell-Mann and Pauli bases.
Outcome elementary_expansions() {
  const auto e3 = expand_in_basis(elementary(3, 1, 1), 3);
  std::vector<Complex> want3(8);
  want3[2] = 0.5;
  want3[7] = std::sqrt(3.0) / 6.0;
  double worst = std::abs(e3.c0 - 1.0 / 3.0);
  for (std::size_t k = 0; k < 8; ++k) worst = std::max(worst, std::abs(e3.c[k] - want3[k]));

  const auto e2 = expand_in_basis(elementary(2, 1, 1), 2);
  const Complex want2[] = {0.0, 0.0, 0.5};
  worst = std::max(worst, std::abs(e2.c0 - 0.5));
  for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(e2.c[k] - want2[k]));
  return {worst <= 1e-12, "max coefficient error " + sci(worst)};
}

// 4. Six-term expressions and the U_{3x2} positions.
Outcome rectangular_identities() {
  const double e32 = max_abs_diff(build_six_term_expression(SixTermExpression::kU32), dense(swap_by_formula(3, 2)));
  const double e23 = max_abs_diff(build_six_term_expression(SixTermExpression::kU23), dense(swap_by_formula(2, 3)));
  const std::vector<std::pair<std::size_t, std::size_t>> want = {{1, 1}, {2, 3}, {3, 5},
                                                                 {4, 2}, {5, 4}, {6, 6}};
  const bool positions = swap_by_formula(3, 2).positions() == want;
  return {e32 <= 1e-12 && e23 <= 1e-12 && positions,
          "U32 " + sci(e32) + ", U23 " + sci(e23) + ", positions " + (positions ? "exact" : "WRONG")};
}

// 5. Constructive walk vs closed form.
Outcome construction_cross_check() {
  int agree = 0;
  for (std::size_t p = 2; p <= 8; ++p)
    for (std::size_t q = 2; q <= 8; ++q) agree += swap_by_rule(p, q) == swap_by_formula(p, q);
  return {agree == 49, std::to_string(agree) + "/49 cases identical"};
}

// 6. U (a (x) b) = b (x) a, exactly.
Outcome defining_property() {
  double worst = 0.0;
  int trials = 0;
  for (std::size_t p = 2; p <= 6; ++p)
    for (std::size_t q = 2; q <= 6; ++q) {
      const SwapMatrix u = swap_by_formula(p, q);
      for (int t = 0; t < 50; ++t, ++trials) {
        const Matrix a(p, 1, testing::random_vector(p));
        const Matrix b(q, 1, testing::random_vector(q));
        const Matrix ab = testing::kron_oracle(a, b);
        const Matrix ba = testing::kron_oracle(b, a);
        const auto out = apply(u, ab.data());
        worst = std::max(worst, max_abs_diff(Matrix(p * q, 1, out), ba));
      }
    }
  return {worst == 0.0, std::to_string(trials) + " trials, max error " + sci(worst)};
}

// 7. Basis well-formedness and the n = 2, 3 listings.
Outcome basis_well_formed() {
  double worst = 0.0;
  for (std::size_t n = 2; n <= 16; ++n) {
    const GellMannBasis b = basis(n);
    if (b.size() != n * n - 1) return {false, "wrong size at n=" + std::to_string(n)};
    for (std::size_t x = 0; x < b.size(); ++x) {
      worst = std::max(worst, max_abs_diff(b[x].matrix, dagger(b[x].matrix)));
      worst = std::max(worst, std::abs(trace(b[x].matrix)));
      for (std::size_t y = 0; y < b.size(); ++y)
        worst = std::max(worst, std::abs(hs_inner(b[x].matrix, b[y].matrix) - Complex(x == y ? 2.0 : 0.0)));
    }
  }
  double listing = 0.0;
  for (int k = 1; k <= 3; ++k) listing = std::max(listing, max_abs_diff(basis(2)[k - 1].matrix, testing::pauli(k)));
  for (int k = 1; k <= 8; ++k) listing = std::max(listing, max_abs_diff(basis(3)[k - 1].matrix, testing::gell_mann(k)));
  return {worst <= 1e-12 && listing <= 1e-12,
          "structure error " + sci(worst) + ", listing error " + sci(listing)};
}

// 8. Family sums vs index-loop oracles, and their assembly.
Outcome proof_identities() {
  double fam = 0.0, assembly = 0.0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const Matrix off = offdiag_family_sum(n);
    const Matrix diag = diagonal_family_sum(n);
    fam = std::max(fam, max_abs_diff(off, testing::offdiag_delta_oracle(n)));
    fam = std::max(fam, max_abs_diff(diag, testing::diagonal_delta_oracle(n)));
    Matrix target = 2.0 * dense(swap_by_formula(n, n));
    target -= (2.0 / static_cast<double>(n)) * identity(n * n);
    assembly = std::max(assembly, max_abs_diff(off + diag, target));
  }
  return {fam <= 1e-10 && assembly <= 1e-10,
          "family error " + sci(fam) + ", assembly error " + sci(assembly)};
}

// 9. Product decomposition round trip on 6x6 matrices.
Outcome round_trip() {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Matrix m = testing::random_matrix(6, 6);
    worst = std::max(worst, max_abs_diff(reconstruct_product(decompose_product(m, 3, 2)), m));
  }
  return {worst <= 1e-10, "100 matrices, max error " + sci(worst)};
}

// 10. CLI exit codes and JSON schema conformance, through the installed binary.
int run_binary(const std::string& args, const std::filesystem::path& stdout_file) {
  const std::string cmd = std::string("\"") + TCM_CLI_PATH + "\" " + args + " > \"" +
                          stdout_file.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_contract() {
  const auto dir = std::filesystem::temp_directory_path() / "tcm_acceptance";
  std::filesystem::create_directories(dir);
  const auto out = dir / "stdout.txt";
  std::vector<std::string> failures;

  ::unsetenv(cli::kToleranceEnv);
  if (run_binary("verify --n-max 8", out) != 0) failures.push_back("verify --n-max 8");
  if (run_binary("swap --p 3 --q 2 --method both", out) != 0) failures.push_back("swap both");

  const std::pair<const char*, const char*> malformed[] = {
      {"truncated.json", R"({"rows": 6, "cols": 6, "entries": [)"},
      {"wrong_shape.json", R"({"rows": 2, "cols": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})"},
      {"short.json", R"({"rows": 6, "cols": 6, "entries": [[1,0]]})"},
      {"bad_scalar.json", R"({"rows": 1, "cols": 1, "entries": [[1]]})"},
  };
  for (const auto& [name, text] : malformed) {
    std::ofstream(dir / name) << text;
    const std::string args = "decompose --p 2 --q 3 --input \"" + (dir / name).string() + "\"";
    if (run_binary(args, out) != 2) failures.push_back(std::string("malformed ") + name);
  }
  if (run_binary("decompose --p 2 --q 3 --input \"" + (dir / "absent.json").string() + "\"", out) != 2)
    failures.push_back("missing file");

  const auto schema =
      testing::SchemaChecker::from_file(std::string(TCM_SCHEMA_DIR) + "/tcm-output.schema.json");
  const char* json_commands[] = {
      "basis --n 3 --format json",
      "swap --p 3 --q 2 --method both --dense --format json",
      "decompose --p 3 --q 2 --format json",
      "verify --n-max 4 --format json",
  };
  int validated = 0;
  for (const char* args : json_commands) {
    if (run_binary(args, out) != 0) {
      failures.push_back(args);
      continue;
    }
    std::ifstream in(out);
    try {
      const auto problems = schema.violations(json::parse(in));
      if (problems.empty()) ++validated;
      else failures.push_back(std::string(args) + ": " + problems.front());
    } catch (const std::exception& e) {
      failures.push_back(std::string(args) + ": " + e.what());
    }
  }
  std::string detail = std::to_string(validated) + "/4 JSON documents valid";
  for (const auto& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "swap identity for n = 2..12", swap_identity_reproduction},
      {2, "U_{2x2} and U_{3x3} product coefficients", introduction_formulas},
      {3, "E11 expansions in Gell-Mann and Pauli bases", elementary_expansions},
      {4, "U_{3x2} / U_{2x3} six-term expressions", rectangular_identities},
      {5, "constructive walk equals closed form", construction_cross_check},
      {6, "U (a (x) b) = b (x) a", defining_property},
      {7, "basis hermitian, traceless, orthogonal", basis_well_formed},
      {8, "family-sum identities", proof_identities},
      {9, "product decomposition round trip", round_trip},
      {10, "CLI exit codes and JSON schema", cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o{false, ""};
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << "  " << c.title << "  ("
              << o.detail << ")\n";
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
