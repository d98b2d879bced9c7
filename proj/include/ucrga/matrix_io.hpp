#pragma once

#include <charconv>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ucrga/dense_matrix.hpp"
#include "ucrga/error.hpp"

namespace ucrga {

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool parse_double(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

//
// Parses one matrix from comma-separated text. Each line is a row; LF or CRLF
// endings, optional whitespace around fields, scientific notation accepted.
// Blank lines at the end of the input are ignored.
//
inline DenseMatrix parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw EmptyInputError("empty matrix input");

  std::vector<double> data;
  std::size_t width = 0;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    std::vector<std::string_view> fields;
    std::string_view line = lines[r];
    std::size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      fields.push_back(detail::trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (r == 0) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw FormatError("line " + std::to_string(r + 1) + ": expected " + std::to_string(width) +
                            " fields, found " + std::to_string(fields.size()),
                        r + 1);
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double value = 0.0;
      if (!detail::parse_double(fields[c], value)) {
        throw FormatError("row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) +
                              ": cannot parse '" + std::string(fields[c]) + "' as a number",
                          r + 1, c + 1);
      }
      if (!std::isfinite(value)) {
        throw FormatError("row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) +
                              ": non-finite value",
                          r + 1, c + 1);
      }
      data.push_back(value);
    }
  }
  return DenseMatrix(lines.size(), width, std::move(data));
}

inline DenseMatrix parse_csv(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_csv(std::string_view(text));
}

// Full-precision CSV; parse_csv(write_csv(a)) == a.
inline void write_csv(std::ostream& out, const DenseMatrix& a) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
    os << '\n';
  }
  out << os.str();
}

// {"rows": m, "cols": n, "data": [row-major]}
inline nlohmann::json to_json(const DenseMatrix& a) {
  return nlohmann::json{{"rows", a.rows()},
                        {"cols", a.cols()},
                        {"data", std::vector<double>(a.data().begin(), a.data().end())}};
}

inline DenseMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("matrix JSON must be an object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw FormatError(std::string("matrix JSON is missing \"") + key + "\"");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw FormatError("matrix JSON \"rows\"/\"cols\" must be non-negative integers");
  }
  if (!j["data"].is_array()) throw FormatError("matrix JSON \"data\" must be an array");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& arr = j["data"];
  if (arr.empty() && rows * cols == 0) throw EmptyInputError("empty matrix input");
  std::vector<double> data;
  data.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_number()) {
      throw FormatError("matrix JSON data[" + std::to_string(k) + "] is not a number");
    }
    data.push_back(arr[k].get<double>());
  }
  if (data.size() != rows * cols) {
    throw FormatError("matrix JSON data has " + std::to_string(data.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  }
  return DenseMatrix(rows, cols, std::move(data));
}

inline DenseMatrix parse_json(std::string_view text) {
  if (detail::trim(text).empty()) throw EmptyInputError("empty matrix input");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace ucrga
