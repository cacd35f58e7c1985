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
//
// Exact count of degenerate SLOCC classes of n qubits.  A degenerate class
// is determined by an unordered grouping of the n qubits into k >= 2 factors
// together with a true-entanglement class per factor, so
//
//   d(n) = sum over partitions r1 <= ... <= rk of n (k >= 2) of
//          n! / (r1! ... rk!) * t(r1) ... t(rk) * 1 / (s1! ... sl!)
//
// where t(m) counts true m-qubit classes (t(1) = t(2) = 1, t(3) = 2; t(m)
// for m >= 4 is open) and s1..sl are the multiplicities of repeated part
// values.  Counts stay linear in the unknown t(m), so results are carried as
// an integer constant plus integer coefficients of t(m).

#ifndef SLOCC_CLASS_COUNT_HPP_
#define SLOCC_CLASS_COUNT_HPP_

#include <map>
#include <string>
#include <vector>

#include "slocc/rational.hpp"

namespace slocc {

/// A partition of n into k >= 2 non-decreasing positive parts.
struct Partition {
    std::vector<int> parts;           ///< non-decreasing, size >= 2
    std::vector<int> multiplicities;  ///< of each distinct value, in order
};

/// All partitions of n with at least two parts, in lexicographic order of
/// the non-decreasing part sequences.  Throws std::invalid_argument if n < 2.
std::vector<Partition> partitions(int n);

/**
 * A count that is linear in the unknown true-class counts t(m), m >= 4:
 * constant + sum over m of coeffs[m] * t(m).  Numeric results have empty
 * coeffs.
 */
struct ClassCount {
    BigInt constant{0};
    std::map<int, BigInt> coeffs;  ///< m -> coefficient of t(m), m >= 4

    [[nodiscard]] bool is_numeric() const { return coeffs.empty(); }

    /// "6*t(5) + 30*t(4) + 276" (descending m), or just the integer.
    [[nodiscard]] std::string to_string() const;
};

/**
 * The contribution of one partition: n!/(prod parts!) * prod t(part) *
 * 1/(prod multiplicities!).  Built-in t(1) = t(2) = 1 and t(3) = 2; `known_t`
 * supplies t(m) for m >= 4, and any remaining t(m) stays symbolic.  Throws
 * std::domain_error if two or more parts carry unknown t (the result would
 * not be linear; first reachable at n = 8 via 4+4).
 */
ClassCount partition_term(int n, const Partition& partition,
                          const std::map<int, BigInt>& known_t = {});

/**
 * d(n): the number of degenerate SLOCC classes of n qubits.  With
 * symbolic=false every t(m) appearing must be resolvable from the built-ins
 * or `known_t` (std::invalid_argument otherwise); with symbolic=true
 * unresolved t(m) remain as coefficients.  Throws std::invalid_argument if
 * n < 2.
 */
ClassCount degenerate_count(int n, const std::map<int, BigInt>& known_t = {},
                            bool symbolic = false);

}  // namespace slocc

#endif  // SLOCC_CLASS_COUNT_HPP_
