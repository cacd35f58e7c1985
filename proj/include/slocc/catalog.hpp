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
// Named four-qubit states and their class-property tables: the 28 true
// entanglement classes, the degenerate (product) classes, the parameterized
// families, and one conjectured additional true-entanglement state.
//
// Greek-letter class names are romanized: kappa4, lambda4, pi4, theta4,
// sigma4, rho4, xi4, epsilon4, chi4, psi4, phi4, mu4, varphi4 (phi-variant),
// vartheta4, tau4, varrho4, zeta4, iota4, upsilon4, omega4, varpi4.

#ifndef SLOCC_CATALOG_HPP_
#define SLOCC_CATALOG_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc/state.hpp"

namespace slocc {

// A cataloged state.  `state` is the floating view; `exact` carries the
// unnormalized integer (or Gaussian-integer) amplitudes whenever the printed
// form is rational.  `source` is the printed expression.
struct NamedState {
  std::string name;
  StateF state;
  std::optional<StateQ> exact;
  std::string source;
};

enum class DFlag { kZero, kOpt };

enum class Relation { kF9EqF10, kF1F2EqF9Sq, kF3F4EqF9Sq };

// Class-level facts: which invariants vanish on the whole class, which are
// "opt" (vanish for some states of the class but not others), the forced-zero
// F indices, the asserted nonzero pairs |F_i|+|F_j| != 0, equality relations,
// and the conditional properties #0..#5:
//   #0: F1F2=0 and F3F4=0  =>  exactly one of F9, F10 vanishes
//   #1: F1F2=0 and F3F4=0  =>  F9 = F10 = 0
//   #2: F1F2=0             =>  F9 = F10 != 0
//   #3: F3F4=0             =>  F9 = F10 != 0
//   #4: three of F1..F4 vanish  =>  |F9|+|F10| != 0 and F9F10 = 0
//   #5: three of F1..F4 vanish  =>  F9 != 0
struct ClassProperties {
  std::string name;
  bool iv_zero = false;
  bool f_positive = false;
  std::array<DFlag, 3> d_flags{DFlag::kZero, DFlag::kZero, DFlag::kZero};
  std::vector<int> f_zero_set;                        // 1-based indices
  std::vector<std::pair<int, int>> f_nonzero_pairs;   // 1-based index pairs
  std::vector<Relation> relations;
  std::vector<int> conditionals;                      // values 0..5
};

// Zero-pattern of the invariants evaluated at the canonical representative
// itself (per-state data, stronger than the class-level facts).
struct StatePattern {
  std::array<bool, 3> d_nonzero{false, false, false};
  std::vector<int> f_nonzero;  // 1-based indices with F_i != 0
};

// The 28 true-entanglement class names, in table order.
const std::vector<std::string>& class_names();

// Canonical representative of one of the 28 classes; exact amplitudes.
NamedState representative(const std::string& name);

// Class-level properties; accepts the 28 true classes and the degenerate
// rows: GHZ123xQ4, GHZ124xQ3, GHZ134xQ2, Q1xGHZ234, WxQ1..WxQ4,
// GHZ12xGHZ34, GHZ13xGHZ24, GHZ14xGHZ23, TwoQubitsOnly, Separable.
ClassProperties class_properties(const std::string& name);

// Names carrying class_properties rows, true classes first.
const std::vector<std::string>& property_class_names();

// Invariant zero-pattern at the canonical representative (28 classes only).
StatePattern state_pattern(const std::string& name);

// Degenerate (non-true-entanglement) product states.
//
//   kGhzTripleTimesQubit: 3-qubit GHZ on the other qubits, (s|0>+t|1>) on
//     qubit `pattern` (1..4).
//   kWTimesQubit: 3-qubit W on the other qubits, (s|0>+t|1>) on qubit
//     `pattern` (1..4).
//   kGhzPair: GHZ pair on qubits {1, pattern}, GHZ pair on the rest
//     (pattern in 2..4); s,t ignored.
//   kTwoQubitsOnly: (|00>+|11>) on the pair selected by `pattern` (1..6 for
//     12,13,14,23,24,34), (s|0>+t|1>) on the lower free qubit, |0> on the
//     other.
//   kSeparable: (s|0>+t|1>) on qubit 1, |0> elsewhere; pattern ignored.
enum class DegenerateKind {
  kGhzTripleTimesQubit,
  kWTimesQubit,
  kGhzPair,
  kTwoQubitsOnly,
  kSeparable,
};

StateF degenerate_state(DegenerateKind kind, Cplx s, Cplx t, int pattern);
StateQ degenerate_state_exact(DegenerateKind kind, const GaussianRational& s,
                              const GaussianRational& t, int pattern);

// The property-table row name covering a degenerate kind/pattern.
std::string degenerate_class_name(DegenerateKind kind, int pattern);

// Parameterized families with unnormalized printed amplitudes:
//   kLab3:      a(|0>+|15>) + (a+b)/2 (|5>+|10>) + (a-b)/2 (|6>+|9>)
//               + i/sqrt(2) (|1>+|2>+|7>+|11>)
//   kLa4:       a(|0>+|5>+|10>+|15>) + i|1> + |6> - i|11>
//   kLa203p1:   a(|0>+|15>) + |3> + |5> + |6>
enum class Family { kLab3, kLa4, kLa203p1 };

StateF family_state(Family family, Cplx a, Cplx b = Cplx(0.0, 0.0));

// The conjectured extra true-entanglement state
// (sqrt(2)|15> + |8> + |4> + |2> + |1>)/sqrt(6); floating amplitudes
// (normalized), since sqrt(2) is not expressible on the exact carrier.
NamedState conjecture_state();

}  // namespace slocc

#endif  // SLOCC_CATALOG_HPP_
