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

#include "tcm/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <vector>

namespace tcm::io {
namespace {

std::size_t positive_extent(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("matrix: missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw InputError(std::string("matrix: \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

std::string ten_digits(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex value must be a two-element array [re, im]");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InputError("complex value must be finite");
  return z;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Complex& z : m.data()) entries.push_back(complex_to_json(z));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("matrix: expected a JSON object");
  const std::size_t rows = positive_extent(j, "rows");
  const std::size_t cols = positive_extent(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw InputError("matrix: \"entries\" must be an array");
  const auto& entries = j.at("entries");
  if (entries.size() / cols != rows || entries.size() % cols != 0)
    throw InputError("matrix: " + std::to_string(entries.size()) + " entries for a " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(complex_from_json(e));
  return Matrix(rows, cols, std::move(values));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string pretty_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  auto imag_part = [](double v) {
    if (v == 1.0) return std::string("i");
    if (v == -1.0) return std::string("-i");
    return ten_digits(v) + "i";
  };
  if (im == 0.0) return ten_digits(re);
  if (re == 0.0) return imag_part(im);
  std::string s = ten_digits(re);
  if (im > 0.0) s += "+";
  return s + imag_part(im);
}

std::optional<double> parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace tcm::io
