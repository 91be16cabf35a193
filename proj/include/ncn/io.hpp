// Copyright 2026 The ncnsynth Authors
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

/**
 * @file
 * Text formats: "matv1" matrices, "ncnv1" circuits and "svec1" states.
 *
 *   matv1 <dim>
 *   <dim lines of dim entries, each formatted re+imj, e.g. 0.5-0.5j>
 *
 *   ncnv1 <width> <GENERAL|NCN> [ancilla=<idx>]
 *   NEG <q> <angle> | CSQN <c> <t> | CSQND <c> <t> | CNOT <c> <t>
 *   TOF <c1> <c2> <t> | H <q> | RY <q> <angle> | RZ <q> <angle>
 *   CNEG <c> <t> <angle> | U1Q <q> <8 floats> | CU1Q <c> <t> <8 floats>
 *
 *   svec1 <dim>
 *   <dim lines "re im">
 *
 * '#' starts a comment. Angles are radians; payload floats are the 2x2 matrix
 * in row-major order as re,im pairs. Qubit 0 is the most significant bit.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"

namespace ncn::io {

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto p = line.find('#'); p != std::string_view::npos) line = line.substr(0, p);
  return line;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double(std::string_view s, std::size_t line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("invalid number '" + std::string(s) + "'", line);
  }
  return v;
}

inline std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("invalid index '" + std::string(s) + "'", line);
  }
  return v;
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string_view>>>
tokenize_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    auto toks = split_ws(strip_comment(text.substr(start, end - start)));
    if (!toks.empty()) out.emplace_back(lineno, std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

/// Parses one "re+imj" entry. Also accepts a bare real ("0.5") or a bare
/// imaginary part ("-0.5j").
inline Complex parse_complex(std::string_view tok, std::size_t line = 0) {
  using detail::parse_double;
  if (tok.empty()) throw ParseError("empty complex entry", line);
  if (tok.back() != 'j' && tok.back() != 'J') return {parse_double(tok, line), 0.0};
  std::string_view body = tok.substr(0, tok.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_double(body, line)};
  }
  const double re = parse_double(body.substr(0, split), line);
  std::string_view im_part = body.substr(split);
  double im;
  if (im_part == "+") im = 1.0;
  else if (im_part == "-") im = -1.0;
  else im = parse_double(im_part, line);
  return {re, im};
}

inline std::string format_complex(Complex z) {
  std::string s = detail::format_double(z.real());
  if (std::signbit(z.imag())) {
    s += "-" + detail::format_double(-z.imag());
  } else {
    s += "+" + detail::format_double(z.imag());
  }
  return s + "j";
}

inline ComplexMatrix parse_matrix(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1);
  const auto &[hline, header] = lines.front();
  if (header.size() != 2 || header[0] != "matv1") {
    throw ParseError("expected header 'matv1 <dim>'", hline);
  }
  const std::size_t dim = detail::parse_index(header[1], hline);
  if (dim == 0) throw ParseError("matrix dimension must be positive", hline);
  if (lines.size() != dim + 1) {
    throw ParseError("expected " + std::to_string(dim) + " matrix rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().first);
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto &[ln, toks] = lines[r + 1];
    if (toks.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " entries, got " +
                           std::to_string(toks.size()),
                       ln);
    }
    for (auto t : toks) entries.push_back(parse_complex(t, ln));
  }
  return {dim, std::move(entries)};
}

inline std::string serialize_matrix(const ComplexMatrix &m) {
  std::ostringstream os;
  os << "matv1 " << m.dim() << '\n';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) os << ' ';
      os << format_complex(m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

inline Circuit parse_circuit(std::string_view text) {
  using detail::parse_double;
  using detail::parse_index;
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty circuit file", 1);
  const auto &[hline, header] = lines.front();
  if (header.size() < 3 || header.size() > 4 || header[0] != "ncnv1") {
    throw ParseError("expected header 'ncnv1 <width> <GENERAL|NCN> [ancilla=<idx>]'",
                     hline);
  }
  const std::size_t width = parse_index(header[1], hline);
  Dialect dialect;
  if (header[2] == "GENERAL") dialect = Dialect::kGeneral;
  else if (header[2] == "NCN") dialect = Dialect::kNcn;
  else throw ParseError("unknown dialect '" + std::string(header[2]) + "'", hline);
  std::optional<Qubit> ancilla;
  if (header.size() == 4) {
    constexpr std::string_view key = "ancilla=";
    if (!header[3].starts_with(key)) {
      throw ParseError("expected 'ancilla=<idx>'", hline);
    }
    ancilla = parse_index(header[3].substr(key.size()), hline);
  }
  std::optional<Circuit> circuit;
  try {
    circuit.emplace(width, dialect, ancilla);
  } catch (const ArityError &e) {
    throw ParseError(e.what(), hline);
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto &[ln, toks] = lines[i];
    auto kind = kind_from_mnemonic(toks[0]);
    if (!kind) throw ParseError("unknown gate '" + std::string(toks[0]) + "'", ln);
    const std::size_t nq = arity_of(*kind);
    const std::size_t nextra = has_angle(*kind) ? 1 : has_payload(*kind) ? 8 : 0;
    if (toks.size() != 1 + nq + nextra) {
      throw ArityError("line " + std::to_string(ln) + ": " +
                       std::string(toks[0]) + " expects " + std::to_string(nq) +
                       " qubit(s) and " + std::to_string(nextra) +
                       " parameter(s)");
    }
    std::vector<Qubit> qs;
    for (std::size_t j = 0; j < nq; ++j) qs.push_back(parse_index(toks[1 + j], ln));
    double angle = 0.0;
    Gate::Payload payload{};
    if (has_angle(*kind)) angle = parse_double(toks[1 + nq], ln);
    if (has_payload(*kind)) {
      for (std::size_t j = 0; j < 4; ++j) {
        payload[j] = {parse_double(toks[1 + nq + 2 * j], ln),
                      parse_double(toks[2 + nq + 2 * j], ln)};
      }
    }
    try {
      circuit->append(Gate::make(*kind, qs, angle, payload));
    } catch (const ArityError &e) {
      throw ArityError("line " + std::to_string(ln) + ": " + e.what());
    } catch (const DialectError &e) {
      throw DialectError("line " + std::to_string(ln) + ": " + e.what());
    } catch (const NonUnitaryError &e) {
      throw NonUnitaryError("line " + std::to_string(ln) + ": " + e.what(),
                            e.deviation());
    }
  }
  return std::move(*circuit);
}

inline std::string serialize_gate(const Gate &g) {
  std::ostringstream os;
  os << mnemonic(g.kind());
  for (Qubit q : g.qubits()) os << ' ' << q;
  if (has_angle(g.kind())) os << ' ' << detail::format_double(g.angle());
  if (has_payload(g.kind())) {
    for (const Complex &z : g.payload()) {
      os << ' ' << detail::format_double(z.real()) << ' '
         << detail::format_double(z.imag());
    }
  }
  return os.str();
}

inline std::string serialize_circuit(const Circuit &c) {
  std::ostringstream os;
  os << "ncnv1 " << c.width() << ' ' << dialect_name(c.dialect());
  if (c.ancilla()) os << " ancilla=" << *c.ancilla();
  os << '\n';
  for (const auto &g : c.gates()) os << serialize_gate(g) << '\n';
  return os.str();
}

inline StateVector parse_state(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty state file", 1);
  const auto &[hline, header] = lines.front();
  if (header.size() != 2 || header[0] != "svec1") {
    throw ParseError("expected header 'svec1 <dim>'", hline);
  }
  const std::size_t dim = detail::parse_index(header[1], hline);
  if (dim == 0 || lines.size() != dim + 1) {
    throw ParseError("expected " + std::to_string(dim) + " amplitude lines",
                     lines.back().first);
  }
  std::vector<Complex> amps;
  amps.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    const auto &[ln, toks] = lines[i];
    if (toks.size() != 2) throw ParseError("expected 're im'", ln);
    amps.emplace_back(detail::parse_double(toks[0], ln),
                      detail::parse_double(toks[1], ln));
  }
  return StateVector(std::move(amps));
}

inline std::string serialize_state(const StateVector &s) {
  std::ostringstream os;
  os << "svec1 " << s.dim() << '\n';
  for (const auto &z : s.amplitudes()) {
    os << detail::format_double(z.real()) << ' ' << detail::format_double(z.imag())
       << '\n';
  }
  return os.str();
}

/// Basis label over n bits, qubit 0 leftmost.
inline std::string bit_string(std::size_t index, std::size_t nbits) {
  std::string s(nbits, '0');
  for (std::size_t i = 0; i < nbits; ++i)
    if ((index >> (nbits - 1 - i)) & 1U) s[i] = '1';
  return s;
}

/// Two-column report: basis label, probability.
inline std::string format_probabilities(std::span<const double> probs,
                                        std::size_t nbits) {
  std::ostringstream os;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    os << bit_string(i, nbits) << ' ' << detail::format_double(probs[i]) << '\n';
  }
  return os.str();
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace ncn::io
