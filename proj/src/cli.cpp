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

#include "tcm/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcm/gellmann.hpp"
#include "tcm/io.hpp"
#include "tcm/product_decomp.hpp"
#include "tcm/swap.hpp"

namespace tcm::cli {
namespace {

using nlohmann::json;

// Thrown from command bodies for bad user input; mapped to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t require_at_least(long long value, long long lo, const char* flag) {
  if (value < lo) {
    throw UsageError(std::string(flag) + " must be >= " + std::to_string(lo) + ", got " +
                     std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void print_matrix_pretty(std::ostream& out, const Matrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const Complex& z : m.data()) {
    cells.push_back(io::pretty_complex(z));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      out << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    out << " ]\n";
  }
}

// ---------------------------------------------------------------- basis

struct BasisArgs {
  long long n = 0;
  std::string format = "pretty";
};

int cmd_basis(const BasisArgs& args, std::ostream& out) {
  const std::size_t n = require_at_least(args.n, 2, "--n");
  const GellMannBasis b = basis(n);

  if (args.format == "json") {
    json gens = json::array();
    for (std::size_t k = 0; k < b.size(); ++k) {
      const auto& label = b[k].label;
      json rec = {{"ordinal", k + 1}, {"kind", to_string(label.kind)}, {"label", label.str()}};
      if (label.kind == GeneratorKind::kDiagonal) {
        rec["d"] = label.d;
      } else {
        rec["i"] = label.i;
        rec["j"] = label.j;
      }
      rec["matrix"] = io::matrix_to_json(b[k].matrix);
      gens.push_back(std::move(rec));
    }
    out << json{{"command", "basis"}, {"n", n}, {"generators", std::move(gens)}}.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "ordinal,kind,i,j,d,row,col,re,im\n";
    for (std::size_t k = 0; k < b.size(); ++k) {
      const auto& [label, m] = b[k];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          out << k + 1 << ',' << to_string(label.kind) << ',' << label.i << ',' << label.j << ','
              << label.d << ',' << r + 1 << ',' << c + 1 << ',' << io::shortest(m(r, c).real())
              << ',' << io::shortest(m(r, c).imag()) << '\n';
    }
  } else {
    for (std::size_t k = 0; k < b.size(); ++k) {
      out << "G" << k + 1 << "  " << b[k].label.str() << "\n";
      print_matrix_pretty(out, b[k].matrix, "  ");
    }
  }
  return kSuccess;
}

// ----------------------------------------------------------------- swap

struct SwapArgs {
  long long p = 0;
  long long q = 0;
  std::string method = "formula";
  std::string format = "pretty";
  bool dense = false;
};

int cmd_swap(const SwapArgs& args, std::ostream& out, std::ostream& err) {
  const std::size_t p = require_at_least(args.p, 1, "--p");
  const std::size_t q = require_at_least(args.q, 1, "--q");

  std::optional<bool> agree;
  SwapMatrix u = args.method == "rule" ? swap_by_rule(p, q) : swap_by_formula(p, q);
  if (args.method == "both") {
    agree = swap_by_rule(p, q) == u;
    if (!*agree) {
      err << "error: rule and formula constructions of U_{" << p << "x" << q << "} differ\n";
      return kInconsistent;
    }
  }
  const auto positions = u.positions();

  if (args.format == "json") {
    json pos = json::array();
    for (const auto& [r, c] : positions) pos.push_back({r, c});
    json doc = {{"command", "swap"},    {"p", p},
                {"q", q},               {"method", args.method},
                {"dim", u.dim()},       {"positions", std::move(pos)}};
    if (agree) doc["agree"] = *agree;
    if (args.dense) doc["matrix"] = io::matrix_to_json(dense(u));
    out << doc.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "row,col\n";
    for (const auto& [r, c] : positions) out << r << ',' << c << '\n';
  } else {
    out << "U_{" << p << "x" << q << "}  " << u.dim() << "x" << u.dim() << "  method " << args.method
        << "\n";
    for (const auto& [r, c] : positions) out << "(" << r << "," << c << ")\n";
    if (agree) out << "rule and formula agree\n";
    if (args.dense) print_matrix_pretty(out, dense(u), "  ");
  }
  return kSuccess;
}

// ------------------------------------------------------------ decompose

struct DecomposeArgs {
  long long p = 0;
  long long q = 0;
  std::string input = "swap";
  std::string format = "pretty";
  double threshold = 1e-12;
};

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
  const std::size_t p = require_at_least(args.p, 2, "--p");
  const std::size_t q = require_at_least(args.q, 2, "--q");
  if (!(args.threshold >= 0.0)) throw UsageError("--threshold must be non-negative");

  Matrix m = [&] {
    if (args.input == "swap") return dense(swap_by_formula(p, q));
    try {
      return io::read_matrix_file(args.input);
    } catch (const io::InputError& e) {
      throw UsageError(e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(args.input + ": " + e.what());
    }
  }();
  if (m.rows() != p * q || m.cols() != p * q) {
    throw UsageError("input is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(p * q) + "x" + std::to_string(p * q));
  }

  const ProductCoefficients c = decompose_product(m, p, q);
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (std::size_t a = 0; a < c.rows(); ++a) row_labels.push_back(axis_label(p, a));
  for (std::size_t b = 0; b < c.cols(); ++b) col_labels.push_back(axis_label(q, b));

  struct Term {
    std::size_t a, b;
    Complex value;
  };
  std::vector<Term> terms;
  for (std::size_t a = 0; a < c.rows(); ++a)
    for (std::size_t b = 0; b < c.cols(); ++b)
      if (std::abs(c(a, b)) > args.threshold) terms.push_back({a, b, c(a, b)});

  if (args.format == "json") {
    json grid = json::array();
    for (std::size_t a = 0; a < c.rows(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < c.cols(); ++b) row.push_back(io::complex_to_json(c(a, b)));
      grid.push_back(std::move(row));
    }
    json listed = json::array();
    for (const Term& t : terms)
      listed.push_back({{"row", t.a},
                        {"col", t.b},
                        {"left", row_labels[t.a]},
                        {"right", col_labels[t.b]},
                        {"value", io::complex_to_json(t.value)}});
    out << json{{"command", "decompose"},  {"p", p},
                {"q", q},                  {"input", args.input},
                {"threshold", args.threshold}, {"row_labels", row_labels},
                {"col_labels", col_labels}, {"grid", std::move(grid)},
                {"terms", std::move(listed)}}
               .dump(2)
        << "\n";
  } else if (args.format == "csv") {
    out << "row,col,left,right,re,im\n";
    for (const Term& t : terms)
      out << t.a << ',' << t.b << ',' << csv_quote(row_labels[t.a]) << ','
          << csv_quote(col_labels[t.b]) << ',' << io::shortest(t.value.real()) << ','
          << io::shortest(t.value.imag()) << '\n';
  } else {
    out << "product decomposition over {I, G^(" << p << ")} x {I, G^(" << q << ")}: "
        << terms.size() << " terms above " << args.threshold << "\n";
    for (const Term& t : terms)
      out << "  " << row_labels[t.a] << " ⊗ " << col_labels[t.b] << ": "
          << io::pretty_complex(t.value) << "\n";
  }
  return kSuccess;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  long long n_max = 0;
  std::optional<double> tol;
  std::string format = "pretty";
};

double default_tolerance() {
  const char* env = std::getenv(kToleranceEnv);
  if (env == nullptr || *env == '\0') return Tolerance::kDefault;
  const auto value = io::parse_double(env);
  if (!value || *value < 0.0)
    throw UsageError(std::string(kToleranceEnv) + " is not a non-negative number: " + env);
  return *value;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const std::size_t n_max = require_at_least(args.n_max, 2, "--n-max");
  const double tol_value = args.tol ? *args.tol : default_tolerance();
  if (!(tol_value >= 0.0)) throw UsageError("--tol must be non-negative");
  const Tolerance tol(tol_value);

  bool all_pass = true;
  json results = json::array();
  std::ostringstream body;
  if (args.format == "csv") body << "n,identity_error,offdiag_error,diagonal_error,assembly_error,pass\n";
  for (std::size_t n = 2; n <= n_max; ++n) {
    const SwapIdentityReport thm = verify_swap_identity(n, tol);
    const FamilyIdentityReport fam = verify_family_identities(n, tol);
    const bool pass = thm.pass && fam.pass;
    all_pass = all_pass && pass;
    if (args.format == "json") {
      results.push_back({{"n", n},
                         {"identity_error", thm.max_error},
                         {"offdiag_error", fam.offdiag_error},
                         {"diagonal_error", fam.diagonal_error},
                         {"assembly_error", fam.assembly_error},
                         {"pass", pass}});
    } else if (args.format == "csv") {
      body << n << ',' << io::shortest(thm.max_error) << ',' << io::shortest(fam.offdiag_error)
           << ',' << io::shortest(fam.diagonal_error) << ',' << io::shortest(fam.assembly_error)
           << ',' << (pass ? "true" : "false") << '\n';
    } else {
      char line[192];
      std::snprintf(line, sizeof line,
                    "n=%-3zu identity %.3e  offdiag %.3e  diagonal %.3e  assembly %.3e  %s\n", n,
                    thm.max_error, fam.offdiag_error, fam.diagonal_error, fam.assembly_error,
                    pass ? "ok" : "FAIL");
      body << line;
    }
  }
  if (args.format == "json") {
    out << json{{"command", "verify"}, {"n_max", n_max},   {"tol", tol.abs_eps()},
                {"results", results},  {"pass", all_pass}}
               .dump(2)
        << "\n";
  } else {
    out << body.str();
    if (args.format == "pretty") out << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all_pass ? kSuccess : kVerificationFailed;
}

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor commutation matrices and generalized Gell-Mann decompositions", "tcm"};
  app.require_subcommand(1);

  BasisArgs basis_args;
  auto* basis_cmd = app.add_subcommand("basis", "Print the generalized Gell-Mann basis");
  basis_cmd->add_option("--n", basis_args.n, "Dimension (>= 2)")->required();
  add_format(basis_cmd, basis_args.format);

  SwapArgs swap_args;
  auto* swap_cmd = app.add_subcommand("swap", "Build the tensor commutation matrix U_{p x q}");
  swap_cmd->add_option("--p", swap_args.p, "First factor dimension (>= 1)")->required();
  swap_cmd->add_option("--q", swap_args.q, "Second factor dimension (>= 1)")->required();
  swap_cmd->add_option("--method", swap_args.method, "Construction")
      ->check(CLI::IsMember({"rule", "formula", "both"}))
      ->capture_default_str();
  swap_cmd->add_flag("--dense", swap_args.dense, "Also print the dense matrix");
  add_format(swap_cmd, swap_args.format);

  DecomposeArgs dec_args;
  auto* dec_cmd = app.add_subcommand("decompose", "Expand an operator over the product basis");
  dec_cmd->add_option("--p", dec_args.p, "First factor dimension (>= 2)")->required();
  dec_cmd->add_option("--q", dec_args.q, "Second factor dimension (>= 2)")->required();
  dec_cmd->add_option("--input", dec_args.input, "\"swap\" or a JSON matrix file")
      ->capture_default_str();
  dec_cmd->add_option("--threshold", dec_args.threshold, "Hide terms with modulus <= threshold")
      ->capture_default_str();
  add_format(dec_cmd, dec_args.format);

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Check the swap identity for n = 2..n-max");
  ver_cmd->add_option("--n-max", ver_args.n_max, "Largest dimension (>= 2)")->required();
  ver_cmd->add_option("--tol", ver_args.tol, "Absolute tolerance (default $TCM_TOLERANCE or 1e-10)");
  add_format(ver_cmd, ver_args.format);

  std::vector<const char*> argv{"tcm"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*basis_cmd) return cmd_basis(basis_args, out);
    if (*swap_cmd) return cmd_swap(swap_args, out, err);
    if (*dec_cmd) return cmd_decompose(dec_args, out);
    if (*ver_cmd) return cmd_verify(ver_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    // Includes a stray constructive walk and any violated internal contract.
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace tcm::cli
