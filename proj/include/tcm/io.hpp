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

// JSON and text encodings shared by the CLI. Layouts are documented in
// docs/schema.md.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tcm/matrix.hpp"

namespace tcm::io {

/// Malformed or misshapen user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [re, im]
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// {"rows": R, "cols": C, "entries": [[re, im], ...]} in row-major order.
nlohmann::json matrix_to_json(const Matrix& m);

/// Inverse of matrix_to_json. Throws InputError on any deviation.
Matrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix file. Throws InputError if it cannot be opened or parsed.
Matrix read_matrix_file(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly x.
std::string shortest(double x);

/// Ten significant digits, "0" for signed zero, e.g. "0.3333333333",
/// "-i", "0.5+0.5i".
std::string pretty_complex(Complex z);

/// Parses a whole string as a finite double; nullopt on trailing garbage.
std::optional<double> parse_double(const std::string& text);

}  // namespace tcm::io
