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
// Zero-pattern signatures of the four-qubit invariants, the three sufficient
// conditions for true entanglement, necessary-condition class matching, and
// the IV-based orbit separation test.

#ifndef SLOCC_CLASSIFIER_HPP_
#define SLOCC_CLASSIFIER_HPP_

#include <array>
#include <string>
#include <vector>

#include "slocc/state.hpp"

namespace slocc {

/// Zero threshold applied to invariant values of unit-norm states.
inline constexpr double kDefaultTolerance = 1e-9;

/**
 * Zero/nonzero pattern of IV, F1..F10, the aggregate F and D1..D3, plus the
 * three equality relations used by the class tables.  On the floating path
 * the state is normalized first and a value counts as zero iff its magnitude
 * is below `tolerance`; on the exact path flags are true zero tests and
 * `tolerance` is 0.
 */
struct Signature {
  bool exact = false;
  double tolerance = 0.0;
  bool iv_zero = false;
  bool f_aggregate_zero = false;
  std::array<bool, 10> fi_zero{};
  std::array<bool, 3> di_zero{};
  bool rel_f9_eq_f10 = false;
  bool rel_f1f2_eq_f9sq = false;
  bool rel_f3f4_eq_f9sq = false;
};

/// Floating signature; throws on the zero state.
Signature signature(const StateF& s, double tol = kDefaultTolerance);

/// Exact signature; throws on the zero state.
Signature signature(const StateQ& s);

/**
 * The three sufficient conditions for true (4-way) entanglement:
 *   (1) IV = 0 and some Di != 0
 *   (2) IV != 0 and some Fi != 0 for i in 1..8
 *   (3) IV != 0 and Di != 0 and Dj != 0 for distinct i, j
 * Checked in that order; the first hit is reported.  They are sufficient
 * only: kNotCertified does not mean the state is degenerate.
 */
enum class Certification {
  kNotCertified,
  kCondition1,
  kCondition2,
  kCondition3,
};

struct CertifyResult {
  Certification condition = Certification::kNotCertified;
  std::string witness;  ///< human-readable instantiation of the condition

  [[nodiscard]] bool certified() const {
    return condition != Certification::kNotCertified;
  }
};

CertifyResult certify_true_entanglement(const Signature& sig);

/**
 * Names of the catalog classes whose class-level facts are consistent with
 * `sig`: every forced-zero entry of the class is zero in `sig`, no forced
 * nonzero fact (IV, aggregate F, |Fi|+|Fj| pairs), equality relation, or
 * conditional property is contradicted.  "opt" entries never exclude.  This
 * is a necessary-condition filter: membership is NOT implied.  Per-Fi flags
 * are only slot-restricted semi-invariants, so their use here is heuristic.
 */
std::vector<std::string> match_classes(const Signature& sig);

/**
 * Orbit separation by the invariant IV alone: `provably_inequivalent` is set
 * iff exactly one of the two states has vanishing IV.  The vanishing of IV is
 * a full SLOCC orbit property; individual Fi/Di flags are not, and are never
 * consulted here.
 */
struct DistinguishResult {
  bool provably_inequivalent = false;
  std::string reason;  ///< set when provably inequivalent; else "undecided..."
};

DistinguishResult distinguish_states(const StateF& a, const StateF& b,
                                     double tol = kDefaultTolerance);
DistinguishResult distinguish_states(const StateQ& a, const StateQ& b);

}  // namespace slocc

#endif  // SLOCC_CLASSIFIER_HPP_
