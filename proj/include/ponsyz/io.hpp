#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/mpoly.hpp"
#include "ponsyz/poncelet.hpp"
#include "ponsyz/syzygy.hpp"

namespace ponsyz {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace detail

/// System file: one form per line, `#` comments, and an optional
/// `# degree: n` header that every form is checked against.
inline std::vector<BinForm> parse_system_text(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<BinForm> forms;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = detail::trim(line.substr(1));
      constexpr std::string_view key = "degree:";
      if (body.substr(0, key.size()) == key) {
        detail::Scanner sc(body.substr(key.size()));
        degree = sc.small_integer();
        if (!sc.at_end()) sc.fail("trailing text after degree header");
      }
      continue;
    }
    try {
      forms.push_back(parse_form(line, degree));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!degree) degree = forms.back().degree();
  }
  if (forms.empty()) throw Error(ErrorKind::Parse, "system file contains no forms");
  return forms;
}

inline LinearSystem read_system_file(const std::string& path) {
  return LinearSystem(parse_system_text(detail::read_file(path)));
}

/// Comma-separated `a:b` pairs with integer or p/q entries.
inline std::vector<Param> parse_params(std::string_view text) {
  std::vector<Param> out;
  detail::Scanner sc(text);
  if (sc.at_end()) return out;
  auto signed_rational = [&sc]() {
    const bool negative = sc.consume('-');
    if (!negative) sc.consume('+');
    Rational q = sc.coefficient();
    return negative ? Rational(-q) : q;
  };
  while (true) {
    Rational a = signed_rational();
    if (!sc.consume(':')) sc.fail("expected ':' in parameter pair");
    Rational b = signed_rational();
    if (sgn(a) == 0 && sgn(b) == 0) sc.fail("parameter (0:0) is not a point");
    out.push_back({std::move(a), std::move(b)});
    if (sc.at_end()) break;
    if (!sc.consume(',')) sc.fail("expected ',' between parameter pairs");
  }
  return out;
}

/// Polynomial given either as a single expression or as a matrix (one row
/// per line, entries separated by commas) whose determinant is taken.
inline MPoly parse_polynomial_or_matrix(std::string_view text, std::size_t nvars) {
  std::vector<std::vector<MPoly>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    std::vector<MPoly> row;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      std::string_view cell = line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      row.push_back(parse_mpoly(cell, nvars));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::Parse, "no polynomial found");
  if (rows.size() == 1 && rows.front().size() == 1) return rows.front().front();
  PolyMatrix m(rows.size(), rows.front().size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::Parse, "comparison matrix must be square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  return poly_matrix_det(m);
}

}  // namespace ponsyz
