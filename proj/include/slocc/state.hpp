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
 * @file state.hpp
 * Unnormalized n-qubit pure states over a generic scalar carrier, plus
 * invertible one-qubit operations acting slot-wise (the SLOCC group action).
 *
 * Basis convention: amplitude `amps[i]` multiplies |i> written in binary
 * with qubit 0 as the most significant bit.  For four qubits ABCD this
 * means |i> = |bit3 bit2 bit1 bit0> = |A B C D>.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slocc/rational.hpp"

namespace slocc {

inline constexpr int kMaxQubits = 8;

/// Dense unnormalized pure state on `qubits` qubits (2 <= qubits <= 8).
template <typename S>
struct PureState {
    int qubits = 0;
    std::vector<S> amps;  ///< size 2^qubits, basis-ordered

    [[nodiscard]] std::size_t dim() const { return amps.size(); }
};

using StateF = PureState<Cplx>;
using StateQ = PureState<GaussianRational>;

/// Invertible 2x2 operator with row-major entries [[m1, m2], [m3, m4]].
template <typename S>
struct LocalOperator {
    S m1{}, m2{}, m3{}, m4{};

    [[nodiscard]] S det() const { return m1 * m4 - m2 * m3; }

    static LocalOperator identity() {
        return {S{1}, S{0}, S{0}, S{1}};
    }

    friend LocalOperator operator*(const LocalOperator& a,
                                   const LocalOperator& b) {
        return {a.m1 * b.m1 + a.m2 * b.m3, a.m1 * b.m2 + a.m2 * b.m4,
                a.m3 * b.m1 + a.m4 * b.m3, a.m3 * b.m2 + a.m4 * b.m4};
    }
};

/// One invertible operator per qubit slot.
template <typename S>
struct LocalOperation {
    std::vector<LocalOperator<S>> ops;
};

using LocalOperatorF = LocalOperator<Cplx>;
using LocalOperatorQ = LocalOperator<GaussianRational>;
using LocalOperationF = LocalOperation<Cplx>;
using LocalOperationQ = LocalOperation<GaussianRational>;

/// Builds a state from sparse (basis index, amplitude) pairs.
template <typename S>
PureState<S> make_state(int qubits,
                        const std::vector<std::pair<std::size_t, S>>& terms) {
    if (qubits < 2 || qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 2 and 8");
    PureState<S> s;
    s.qubits = qubits;
    s.amps.assign(std::size_t{1} << qubits, S{0});
    for (const auto& [idx, amp] : terms) {
        if (idx >= s.dim())
            throw std::invalid_argument("basis index out of range");
        s.amps[idx] += amp;
    }
    return s;
}

/// Bit position (from the LSB) of qubit `k` in an `n`-qubit index.
inline int qubit_bit(int n, int k) { return n - 1 - k; }

/**
 * Applies one invertible operator per qubit: |psi'> = (M_0 x ... x M_{n-1})
 * |psi>.  Throws if the slot count mismatches or any operator is singular.
 */
template <typename S>
PureState<S> apply_local(const PureState<S>& s, const LocalOperation<S>& op) {
    if (static_cast<int>(op.ops.size()) != s.qubits)
        throw std::invalid_argument("operation must supply one 2x2 operator per qubit");
    for (const auto& m : op.ops)
        if (scalar_is_zero(m.det(), 0.0))
            throw std::invalid_argument("local operator is singular");
    PureState<S> out = s;
    for (int k = 0; k < s.qubits; ++k) {
        const auto& m = op.ops[static_cast<std::size_t>(k)];
        const std::size_t bit = std::size_t{1} << qubit_bit(s.qubits, k);
        for (std::size_t i = 0; i < out.dim(); ++i) {
            if (i & bit) continue;
            const S a0 = out.amps[i];
            const S a1 = out.amps[i | bit];
            out.amps[i] = m.m1 * a0 + m.m2 * a1;
            out.amps[i | bit] = m.m3 * a0 + m.m4 * a1;
        }
    }
    return out;
}

/**
 * Relabels qubits: `perm[q]` is the new position of qubit `q`.  The result
 * satisfies  out.amps[relabel(i)] == s.amps[i].
 */
template <typename S>
PureState<S> permute_qubits(const PureState<S>& s,
                            const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.qubits)
        throw std::invalid_argument("permutation size must equal qubit count");
    std::vector<int> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= s.qubits || seen[static_cast<std::size_t>(p)]++)
            throw std::invalid_argument("not a permutation of qubit labels");
    }
    PureState<S> out;
    out.qubits = s.qubits;
    out.amps.assign(s.dim(), S{0});
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t j = 0;
        for (int q = 0; q < s.qubits; ++q) {
            const std::size_t b = (i >> qubit_bit(s.qubits, q)) & 1U;
            j |= b << qubit_bit(s.qubits, perm[static_cast<std::size_t>(q)]);
        }
        out.amps[j] = s.amps[i];
    }
    return out;
}

/// Squared 2-norm.
inline double norm2(const StateF& s) {
    double t = 0;
    for (const auto& a : s.amps) t += std::norm(a);
    return t;
}
inline Rational norm2(const StateQ& s) {
    Rational t = 0;
    for (const auto& a : s.amps) t += a.norm2();
    return t;
}

/// Returns the unit-norm rescaling of `s`; throws on the zero state.
inline StateF normalize(const StateF& s) {
    const double n = std::sqrt(norm2(s));
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero state");
    StateF out = s;
    for (auto& a : out.amps) a /= n;
    return out;
}

/// Exact state downcast to the floating carrier.
inline StateF to_floating(const StateQ& s) {
    StateF out;
    out.qubits = s.qubits;
    out.amps.reserve(s.dim());
    for (const auto& a : s.amps) out.amps.push_back(a.to_complex());
    return out;
}

inline LocalOperatorF to_floating(const LocalOperatorQ& m) {
    return {m.m1.to_complex(), m.m2.to_complex(), m.m3.to_complex(),
            m.m4.to_complex()};
}

inline LocalOperationF to_floating(const LocalOperationQ& op) {
    LocalOperationF out;
    out.ops.reserve(op.ops.size());
    for (const auto& m : op.ops) out.ops.push_back(to_floating(m));
    return out;
}

template <typename S>
PureState<S> scale(const PureState<S>& s, const S& c) {
    PureState<S> out = s;
    for (auto& a : out.amps) a = a * c;
    return out;
}

/**
 * Tensor product placing `a`'s qubits before `b`'s qubits in the label
 * order (so `a` occupies the most significant index bits).
 */
template <typename S>
PureState<S> tensor(const PureState<S>& a, const PureState<S>& b) {
    PureState<S> out;
    out.qubits = a.qubits + b.qubits;
    if (out.qubits > kMaxQubits)
        throw std::invalid_argument("tensor product exceeds 8 qubits");
    out.amps.assign(std::size_t{1} << out.qubits, S{0});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out.amps[(i << b.qubits) | j] = a.amps[i] * b.amps[j];
    return out;
}

/**
 * Uniformly random invertible operator: entries have real and imaginary
 * parts drawn from U[-1, 1]; draws with |det| < det_min are rejected so the
 * operator stays comfortably invertible.
 */
inline LocalOperatorF random_invertible(std::mt19937_64& rng,
                                        double det_min = 0.1) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        LocalOperatorF m{{u(rng), u(rng)}, {u(rng), u(rng)},
                         {u(rng), u(rng)}, {u(rng), u(rng)}};
        if (std::abs(m.det()) >= det_min) return m;
    }
}

/// One random invertible operator per qubit.
inline LocalOperationF random_local_operation(int qubits, std::mt19937_64& rng,
                                              double det_min = 0.1) {
    LocalOperationF op;
    op.ops.reserve(static_cast<std::size_t>(qubits));
    for (int k = 0; k < qubits; ++k)
        op.ops.push_back(random_invertible(rng, det_min));
    return op;
}

/// Dense random state with amplitude parts drawn from U[-1, 1].
inline StateF random_state(int qubits, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    StateF s;
    s.qubits = qubits;
    s.amps.resize(std::size_t{1} << qubits);
    for (auto& a : s.amps) a = {u(rng), u(rng)};
    return s;
}

}  // namespace slocc
