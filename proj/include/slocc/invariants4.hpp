// Copyright 2026 The slocc-invariants Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file invariants4.hpp
 * Degree-2 invariant IV, the ten degree-4 semi-invariants F1..F10 with
 * their aggregate F, and the three degree-4 semi-invariants D1..D3 for
 * 4-qubit states, together with residuals of every transformation law.
 *
 * All polynomials are implemented once over a generic scalar carrier; the
 * exact carrier gives symbolic-strength zero tests, the floating carrier
 * speed.  Transformation laws are stated for |psi> = (alpha x beta x gamma
 * x delta)|psi'>, i.e. the primed state is the *input* and the law predicts
 * the invariant of the transformed state:
 *
 *   IV(L s)   = IV(s) * det(alpha) det(beta) det(gamma) det(delta)
 *   F1,F2:  alpha = I      ->  * det^2(beta) det^2(gamma) det^2(delta)
 *   F3,F4:  beta  = I      ->  * det^2(alpha) det^2(gamma) det^2(delta)
 *   F5,F6:  gamma = I      ->  * det^2(alpha) det^2(beta) det^2(delta)
 *   F7,F8:  delta = I      ->  * det^2(alpha) det^2(beta) det^2(gamma)
 *   F9,F10: alpha=beta=I   ->  * det^2(gamma) det^2(delta)
 *   D1: alpha=gamma=I      ->  * det^2(beta) det^2(delta)
 *   D2: alpha=beta=I       ->  * det^2(gamma) det^2(delta)
 *   D3: alpha=delta=I      ->  * det^2(beta) det^2(gamma)
 */
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "slocc/state.hpp"

namespace slocc {

namespace detail {
template <typename S>
void require_four_qubits(const PureState<S>& s) {
    if (s.qubits != 4 || s.amps.size() != 16)
        throw std::invalid_argument("invariant requires a 4-qubit state");
}
}  // namespace detail

/// Quadratic invariant IV (degree 2 in the amplitudes).
template <typename S>
S iv(const PureState<S>& s) {
    detail::require_four_qubits(s);
    const auto& a = s.amps;
    return (a[2] * a[13] - a[3] * a[12]) + (a[4] * a[11] - a[5] * a[10]) -
           (a[0] * a[15] - a[1] * a[14]) - (a[6] * a[9] - a[7] * a[8]);
}

/// The ten quartic semi-invariants F1..F10 (returned in index order).
template <typename S>
std::array<S, 10> f_components(const PureState<S>& s) {
    detail::require_four_qubits(s);
    const auto& a = s.amps;
    const S four{4};
    auto sq = [](const S& x) { return x * x; };
    std::array<S, 10> f;
    f[0] = sq(a[0] * a[7] - a[2] * a[5] + (a[1] * a[6] - a[3] * a[4])) -
           four * (a[2] * a[4] - a[0] * a[6]) * (a[3] * a[5] - a[1] * a[7]);
    f[1] = sq((a[8] * a[15] - a[11] * a[12]) + (a[9] * a[14] - a[10] * a[13])) -
           four * (a[11] * a[13] - a[9] * a[15]) * (a[10] * a[12] - a[8] * a[14]);
    f[2] = sq(a[0] * a[11] - a[2] * a[9] + (a[1] * a[10] - a[3] * a[8])) -
           four * (a[2] * a[8] - a[0] * a[10]) * (a[3] * a[9] - a[1] * a[11]);
    f[3] = sq(a[4] * a[15] - a[6] * a[13] + (a[5] * a[14] - a[7] * a[12])) -
           four * (a[6] * a[12] - a[4] * a[14]) * (a[7] * a[13] - a[5] * a[15]);
    f[4] = sq(a[0] * a[13] - a[4] * a[9] + (a[1] * a[12] - a[5] * a[8])) -
           four * (a[4] * a[8] - a[0] * a[12]) * (a[5] * a[9] - a[1] * a[13]);
    f[5] = sq(a[2] * a[15] - a[6] * a[11] + (a[3] * a[14] - a[7] * a[10])) -
           four * (a[6] * a[10] - a[2] * a[14]) * (a[7] * a[11] - a[3] * a[15]);
    f[6] = sq(a[0] * a[14] - a[4] * a[10] + (a[2] * a[12] - a[6] * a[8])) -
           four * (a[4] * a[8] - a[0] * a[12]) * (a[6] * a[10] - a[2] * a[14]);
    f[7] = sq(a[1] * a[15] - a[5] * a[11] + (a[3] * a[13] - a[7] * a[9])) -
           four * (a[5] * a[9] - a[1] * a[13]) * (a[7] * a[11] - a[3] * a[15]);
    f[8] = sq((a[0] * a[15] - a[2] * a[13]) + (a[1] * a[14] - a[3] * a[12])) -
           four * (a[0] * a[14] - a[2] * a[12]) * (a[1] * a[15] - a[3] * a[13]);
    f[9] = sq((a[4] * a[11] - a[7] * a[8]) + (a[5] * a[10] - a[6] * a[9])) -
           four * (a[7] * a[9] - a[5] * a[11]) * (a[6] * a[8] - a[4] * a[10]);
    return f;
}

/// The three quartic semi-invariants D1, D2, D3.
template <typename S>
std::array<S, 3> d_components(const PureState<S>& s) {
    detail::require_four_qubits(s);
    const auto& a = s.amps;
    std::array<S, 3> d;
    d[0] = (a[1] * a[4] - a[0] * a[5]) * (a[11] * a[14] - a[10] * a[15]) -
           (a[3] * a[6] - a[2] * a[7]) * (a[9] * a[12] - a[8] * a[13]);
    d[1] = (a[4] * a[7] - a[5] * a[6]) * (a[8] * a[11] - a[9] * a[10]) -
           (a[0] * a[3] - a[1] * a[2]) * (a[12] * a[15] - a[13] * a[14]);
    d[2] = (a[3] * a[5] - a[1] * a[7]) * (a[10] * a[12] - a[8] * a[14]) -
           (a[2] * a[4] - a[0] * a[6]) * (a[11] * a[13] - a[9] * a[15]);
    return d;
}

/// Aggregate F = 4 * sum of the ten magnitudes |Fi|.
template <typename S>
double f_aggregate(const PureState<S>& s) {
    double total = 0;
    for (const auto& fi : f_components(s)) total += std::abs(scalar_to_complex(fi));
    return 4.0 * total;
}

/// Exact test for F = 0 (true iff every Fi vanishes identically).
inline bool f_aggregate_is_zero(const StateQ& s) {
    for (const auto& fi : f_components(s))
        if (!fi.is_zero()) return false;
    return true;
}

/// All 4-qubit invariants of one state, bundled.
struct InvariantVector {
    Cplx iv{};
    std::array<Cplx, 10> f{};
    double f_aggregate = 0;
    std::array<Cplx, 3> d{};
};

inline InvariantVector invariant_vector(const StateF& s) {
    InvariantVector v;
    v.iv = iv(s);
    v.f = f_components(s);
    v.f_aggregate = f_aggregate(s);
    v.d = d_components(s);
    return v;
}

namespace detail {

template <typename S>
bool is_identity_op(const LocalOperator<S>& m) {
    return m.m1 == S{1} && m.m2 == S{0} && m.m3 == S{0} && m.m4 == S{1};
}

template <typename S>
void require_identity_slot(const LocalOperation<S>& op, int slot,
                           const char* law) {
    if (!is_identity_op(op.ops.at(static_cast<std::size_t>(slot))))
        throw std::invalid_argument(std::string(law) +
                                    " requires the identity in slot " +
                                    std::to_string(slot));
}

inline double residual_magnitude(const Cplx& diff) { return std::abs(diff); }
inline GaussianRational residual_magnitude(const GaussianRational& diff) {
    return diff;  // exact difference; zero iff the law holds exactly
}

template <typename S>
S det2(const LocalOperator<S>& m) {
    const S d = m.det();
    return d * d;
}

}  // namespace detail

/// Residual of the IV covariance law for general invertible L.
template <typename S>
auto residual_iv_covariance(const PureState<S>& s, const LocalOperation<S>& L) {
    detail::require_four_qubits(s);
    S factor{1};
    for (const auto& m : L.ops) factor = factor * m.det();
    const S diff = iv(apply_local(s, L)) - iv(s) * factor;
    return detail::residual_magnitude(diff);
}

/**
 * Residuals of the semi-invariance laws for the Fi pair attached to `slot`
 * (slot 0 -> F1,F2; 1 -> F3,F4; 2 -> F5,F6; 3 -> F7,F8).  The slot's
 * operator must be the identity; the factor is the product of the squared
 * determinants of the other three operators.
 */
template <typename S>
auto residual_f_semiinvariance(const PureState<S>& s,
                               const LocalOperation<S>& L, int slot) {
    detail::require_four_qubits(s);
    if (slot < 0 || slot > 3)
        throw std::invalid_argument("slot must be 0..3 (A..D)");
    detail::require_identity_slot(L, slot, "F pair law");
    S factor{1};
    for (int k = 0; k < 4; ++k)
        if (k != slot) factor = factor * detail::det2(L.ops[static_cast<std::size_t>(k)]);
    const auto before = f_components(s);
    const auto after = f_components(apply_local(s, L));
    const std::size_t i = static_cast<std::size_t>(2 * slot);
    return std::make_pair(
        detail::residual_magnitude(after[i] - before[i] * factor),
        detail::residual_magnitude(after[i + 1] - before[i + 1] * factor));
}

/// Residuals of the F9/F10 law (requires alpha = beta = I).
template <typename S>
auto residual_f910_semiinvariance(const PureState<S>& s,
                                  const LocalOperation<S>& L) {
    detail::require_four_qubits(s);
    detail::require_identity_slot(L, 0, "F9/F10 law");
    detail::require_identity_slot(L, 1, "F9/F10 law");
    const S factor = detail::det2(L.ops[2]) * detail::det2(L.ops[3]);
    const auto before = f_components(s);
    const auto after = f_components(apply_local(s, L));
    return std::make_pair(
        detail::residual_magnitude(after[8] - before[8] * factor),
        detail::residual_magnitude(after[9] - before[9] * factor));
}

/**
 * Residual of the Di law selected by `which` (1, 2 or 3).  Identity-slot
 * requirements and factors:
 *   D1: alpha=gamma=I, factor det^2(beta) det^2(delta)
 *   D2: alpha=beta=I,  factor det^2(gamma) det^2(delta)
 *   D3: alpha=delta=I, factor det^2(beta) det^2(gamma)
 */
template <typename S>
auto residual_d_semiinvariance(const PureState<S>& s,
                               const LocalOperation<S>& L, int which) {
    detail::require_four_qubits(s);
    int id_a = 0, id_b = 0, fa = 0, fb = 0;
    switch (which) {
        case 1: id_a = 0; id_b = 2; fa = 1; fb = 3; break;
        case 2: id_a = 0; id_b = 1; fa = 2; fb = 3; break;
        case 3: id_a = 0; id_b = 3; fa = 1; fb = 2; break;
        default: throw std::invalid_argument("which must be 1, 2 or 3");
    }
    detail::require_identity_slot(L, id_a, "D law");
    detail::require_identity_slot(L, id_b, "D law");
    const S factor = detail::det2(L.ops[static_cast<std::size_t>(fa)]) *
                     detail::det2(L.ops[static_cast<std::size_t>(fb)]);
    const auto before = d_components(s);
    const auto after = d_components(apply_local(s, L));
    const std::size_t i = static_cast<std::size_t>(which - 1);
    return detail::residual_magnitude(after[i] - before[i] * factor);
}

}  // namespace slocc
