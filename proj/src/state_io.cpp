// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qdiscord/states.hpp"

namespace qdiscord {

namespace {

constexpr double kEntryConjugateTol = 1e-12;

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  // from_chars rejects a leading '+'; accept it for the real part.
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

void append_double(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

std::optional<cplx> parse_complex_token(std::string_view token) {
  double re = 0.0, im = 0.0;
  if (token.empty()) return std::nullopt;
  if (token.back() != 'j') {
    if (!parse_double(token, re)) return std::nullopt;
    return cplx(re, 0.0);
  }
  token.remove_suffix(1);
  // The imaginary part starts at the last sign that is neither leading nor
  // part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = token.size(); i-- > 1;) {
    const char ch = token[i];
    if ((ch == '+' || ch == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (!parse_double(token, im)) return std::nullopt;
    return cplx(0.0, im);
  }
  const std::string_view re_part = token.substr(0, split);
  std::string_view im_part = token.substr(split);
  if (!parse_double(re_part, re)) return std::nullopt;
  const bool negative = im_part.front() == '-';
  im_part.remove_prefix(1);
  if (im_part.empty() || im_part.front() == '+' || im_part.front() == '-') return std::nullopt;
  if (!parse_double(im_part, im)) return std::nullopt;
  return cplx(re, negative ? -im : im);
}

std::string format_complex(cplx z) {
  std::string s;
  append_double(s, z.real());
  s.push_back(std::signbit(z.imag()) ? '-' : '+');
  append_double(s, std::abs(z.imag()));
  s.push_back('j');
  return s;
}

ParsedState parse_density_matrix(std::string_view text) {
  CMat4 m;
  int rows = 0;
  int line_no = 0;
  int row_line[4] = {0, 0, 0, 0};
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (rows == 4) throw ParseError(line_no, "more than four data lines");
    if (tokens.size() != 4) {
      std::ostringstream msg;
      msg << "expected 4 entries, found " << tokens.size();
      throw ParseError(line_no, msg.str());
    }
    for (std::size_t col = 0; col < 4; ++col) {
      const auto z = parse_complex_token(tokens[col]);
      if (!z) throw ParseError(line_no, "malformed complex entry '" + std::string(tokens[col]) + "'");
      m(rows, col) = *z;
    }
    row_line[rows] = line_no;
    last_line = line_no;
    ++rows;
  }
  if (rows != 4) {
    std::ostringstream msg;
    msg << "expected 4 data lines, found " << rows;
    throw ParseError(line_no, msg.str());
  }

  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(m(i, i).imag()) > kEntryConjugateTol) {
      std::ostringstream msg;
      msg << "diagonal entry (" << i + 1 << "," << i + 1 << ") has a nonzero imaginary part";
      throw ParseError(row_line[i], msg.str());
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kEntryConjugateTol) {
        std::ostringstream msg;
        msg << "not Hermitian: entries (" << i + 1 << "," << j + 1 << ") and (" << j + 1 << "," << i + 1
            << ") are not complex conjugates";
        throw ParseError(row_line[j], msg.str());
      }
    }
  }

  double tr = 1.0;
  try {
    DensityMatrix4 rho = normalize_trace(m, tr);
    ParsedState out{rho, std::nullopt};
    if (std::abs(tr - 1.0) >= DensityMatrix4::kTraceTol) out.original_trace = tr;
    return out;
  } catch (const InvalidState& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string serialize_density_matrix(const DensityMatrix4& rho) {
  std::string out = "# two-qubit density matrix, rows/cols |00> |01> |10> |11>\n";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) out.push_back(' ');
      out += format_complex(rho(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

ResolvedState load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidState("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    ParsedState p = parse_density_matrix(buf.str());
    ResolvedState r{p.rho, path, {}};
    if (p.original_trace) {
      std::ostringstream note;
      note.precision(17);
      note << "trace " << *p.original_trace << " renormalized to 1";
      r.notes.push_back(note.str());
    }
    return r;
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

}  // namespace qdiscord
