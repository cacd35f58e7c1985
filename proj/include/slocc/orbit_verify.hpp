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
// Randomized verification of the class-level claims: orbit sampling over the
// catalog classes, zero-pattern and conditional-property checks, closed-form
// operator oracles for fifteen classes, and exact random-point testing of the
// nine transformation laws (plus a deliberately corrupted negative control).

#ifndef SLOCC_ORBIT_VERIFY_HPP_
#define SLOCC_ORBIT_VERIFY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slocc/state.hpp"

namespace slocc {

/// One failed assertion: the per-trial seed that produced it, the property
/// identifier, and the offending values rendered as text.
struct Violation {
  std::uint64_t seed = 0;
  std::string property;
  std::string values;
};

/// Witness pair for an "opt" class entry: a sample where the quantity
/// vanishes and one where it does not.
struct OptWitness {
  std::string quantity;  ///< e.g. "D1"
  std::optional<std::uint64_t> zero_seed;
  std::optional<std::uint64_t> nonzero_seed;

  [[nodiscard]] bool complete() const {
    return zero_seed.has_value() && nonzero_seed.has_value();
  }
};

struct OrbitSampleReport {
  std::string class_name;
  int samples = 0;
  std::vector<Violation> violations;
  std::vector<OptWitness> opt_witnesses;

  [[nodiscard]] bool passed() const {
    if (!violations.empty()) return false;
    for (const auto& w : opt_witnesses)
      if (!w.complete()) return false;
    return true;
  }
};

/// Random rational p/q with |p| <= 8, 1 <= q <= 8 (real part only).
GaussianRational random_rational_entry(std::mt19937_64& rng);

/// Invertible operator with random_rational_entry entries (det != 0).
LocalOperatorQ random_exact_operator(std::mt19937_64& rng);

/// One random_exact_operator per qubit slot.
LocalOperationQ random_exact_operation(int qubits, std::mt19937_64& rng);

/// Four-qubit state with Gaussian-integer amplitudes in [-9, 9] x [-9, 9]i,
/// resampled if identically zero.
StateQ random_exact_state(std::mt19937_64& rng);

/**
 * Deterministic orbit stream for any catalog class (true or degenerate):
 * sample k applies an operation drawn from seed + k to the class base state.
 * Sample 0 uses the identity operation, so the base state itself is always in
 * the stream; sample 1 applies [[1,1],[1,-1]] to the first qubit (identity
 * elsewhere), which supplies a vanishing-D witness for every "opt" D entry
 * whose representative value is nonzero.  Degenerate base states rotate the
 * qubit factor (s|0> + t|1>) through ten fixed exact (s, t) values and, for
 * the two-qubits-only class, the six entangled-pair placements.
 */
struct OrbitSample {
  std::uint64_t seed = 0;
  LocalOperationQ op;
  StateQ state;
};

std::vector<OrbitSample> sample_orbit(const std::string& class_name,
                                      int n_samples, std::uint64_t seed);

/// Floating mirror of sample_orbit, using continuous random operators; used
/// to validate the tolerance policy against the exact carrier.
struct OrbitSampleF {
  std::uint64_t seed = 0;
  LocalOperationF op;
  StateF state;
};

std::vector<OrbitSampleF> sample_orbit_floating(const std::string& class_name,
                                                int n_samples,
                                                std::uint64_t seed);

/**
 * Asserts the class-level facts (IV flag, aggregate-F flag, forced-zero
 * entries, equality relations, and untargeted conditionals) on every sample,
 * and searches the stream for zero/nonzero witnesses of every "opt" D entry.
 * Pair facts |Fi|+|Fj| != 0 are asserted on every sample for the degenerate
 * product rows; on the 28 true classes a random orbit member can land on the
 * common vanishing variety of both components (per-Fi values are only
 * slot-restricted semi-invariants), so there the pair must merely be realized
 * as nonzero by some sample — no witness is a violation.
 */
OrbitSampleReport verify_class_zero_pattern(const std::string& class_name,
                                            int n_samples, std::uint64_t seed);

/**
 * Conditional properties #0..#5.  Untargeted mode asserts consequents on
 * whichever samples happen to satisfy an antecedent.  Targeted mode forces
 * antecedents by zeroing specific operator entries (patterns taken from the
 * per-class case analyses) and asserts both the antecedent and the expected
 * consequent branch on every sample.
 */
OrbitSampleReport verify_conditionals(const std::string& class_name,
                                      bool targeted, int n_samples,
                                      std::uint64_t seed);

/// Classes with targeted conditional patterns encoded.
const std::vector<std::string>& targeted_conditional_class_names();

/**
 * Closed-form predictions of IV, F1..F10 and D1..D3 for the transformed
 * representative apply_local(rep, L), as functions of the operator entries.
 * The forms are stated for the unit-norm representative: with r = norm2 of
 * the stored (unnormalized) representative, direct evaluation satisfies
 *   iv(apply_local(rep, L)) == r   * prediction.iv
 *   F_i(apply_local(rep, L)) == r^2 * prediction.f[i]   (likewise D_i).
 * Entries of `f` without a printed closed form are nullopt; `d` entries not
 * printed are zero (the forms assert they vanish).
 */
struct OraclePrediction {
  std::optional<GaussianRational> iv;
  std::array<std::optional<GaussianRational>, 10> f;
  std::array<GaussianRational, 3> d;
};

/// The fifteen classes with implemented closed forms.
const std::vector<std::string>& oracle_class_names();

OraclePrediction appendix_a_oracle(const std::string& class_name,
                                   const LocalOperationQ& L);

/// Compares appendix_a_oracle against direct evaluation on `trials` random
/// exact operations.
OrbitSampleReport verify_appendix_oracle(const std::string& class_name,
                                         int trials, std::uint64_t seed);

/**
 * The nine transformation laws, tested as polynomial identities at random
 * exact points (random Gaussian-integer states, random rational operators):
 *   iv    — IV picks up the product of the four determinants
 *   f12/f34/f56/f78 — F-pair laws with the respective slot fixed to identity
 *   f910  — F9/F10 law with the first two slots fixed to identity
 *   d1/d2/d3 — D laws with their two designated slots fixed to identity
 * "iv_negative_control" is a deliberately corrupted IV law (one determinant
 * dropped) and is expected to FAIL.
 */
struct IdentityReport {
  std::string identity;
  int trials = 0;
  bool passed = false;
  std::string counterexample;  ///< empty when passed
};

const std::vector<std::string>& identity_names();

IdentityReport verify_identity(const std::string& identity, int trials,
                               std::uint64_t seed);

}  // namespace slocc

#endif  // SLOCC_ORBIT_VERIFY_HPP_
