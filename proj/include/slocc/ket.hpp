// Copyright 2026 The slocc-invariants Authors.
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

#ifndef SLOCC_KET_HPP_
#define SLOCC_KET_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "slocc/state.hpp"

namespace slocc {

// Error raised on malformed ket expressions; `position` is the byte offset
// of the offending token within the input text.
class KetParseError : public std::runtime_error {
 public:
  KetParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Result of parsing a ket expression.
//
// `value` always holds the denoted state in floating-point form.  When every
// coefficient in the expression is a Gaussian rational scaled by at most one
// common square-free root k, the state is also available exactly as
// `numerator / sqrt(root)` where `numerator` carries Gaussian-rational
// amplitudes.  `root` is 1 whenever no radical is involved.
struct ParsedState {
  StateF value;
  std::optional<StateQ> numerator;
  unsigned root = 1;

  bool exact() const { return numerator.has_value(); }
  int qubits() const { return value.qubits; }
};

// Parses a ket expression such as "(|0000>+|1111>)/sqrt(2)" or
// "i|1> + 2|2> - |3>".
//
// Grammar (whitespace between tokens is ignored):
//   expr     := group | sum
//   group    := "(" sum ")" "/" root
//   sum      := term { ("+" | "-") term }
//   term     := [coeff ["*"]] ket | coeff
//   ket      := "|" (decimal | bits) ">"
//   coeff    := [sign] factor
//   factor   := number ["i"] ["/" root] | "i" ["/" root] | root
//   root     := "sqrt(" uint ")"
//   number   := uint ["/" uint] | decimal-literal
//
// A ket body consisting solely of the characters 0/1 is read as a bitstring
// when its length equals the declared qubit count (or, with no declared
// count, when its length is at least two); otherwise it is a decimal basis
// index.  Bitstrings fix the qubit count; with no declared count and no
// bitstrings, the count is inferred as max(2, bits needed for the largest
// index).  Decimal coefficient literals (e.g. "0.25", "1e-3") are accepted
// so that formatted floating states re-parse, but force the result onto the
// floating path only.
//
// Throws KetParseError on syntax errors, on basis indices exceeding 2^n - 1,
// on conflicting bitstring lengths, and when the expression denotes the zero
// state.
ParsedState parse_ket(const std::string& text,
                      std::optional<int> qubits = std::nullopt);

// Convenience wrapper returning only the floating-point state.
StateF parse_state(const std::string& text,
                   std::optional<int> qubits = std::nullopt);

// Formats a state canonically: terms in ascending basis-index order, with a
// single trailing "/sqrt(k)" factor when the amplitudes are recognized as
// rationals over a common square-free root, and 12-significant-digit
// decimals otherwise.  Basis labels use decimal indices when the qubit
// count is recoverable from the largest index, and length-n bitstrings
// otherwise.  The zero state prints as "0" (which deliberately does not
// re-parse: the zero expression is rejected by parse_ket).
std::string format_ket(const StateF& s);

// Exact formatting of `numerator / sqrt(root)`; the output re-parses to the
// identical exact state.
std::string format_ket(const StateQ& numerator, unsigned root = 1);

// Formats via the exact path when available, the floating path otherwise.
std::string format_ket(const ParsedState& s);

// Loads a state from a file holding one ket expression, optionally preceded
// by a line "qubits: n".
ParsedState load_ket_file(const std::string& path);

}  // namespace slocc

#endif  // SLOCC_KET_HPP_
