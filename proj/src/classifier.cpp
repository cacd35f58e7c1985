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

#include "slocc/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slocc/catalog.hpp"
#include "slocc/invariants4.hpp"

namespace slocc {
namespace {

bool near_zero(double v, double tol) { return std::abs(v) < tol; }

// Relations are compared with relative tolerance max(tol, tol*|F9|).
bool rel_close(double a, double b, double f9_mag, double tol) {
    return std::abs(a - b) <= std::max(tol, tol * f9_mag);
}

std::string index_list(const char* prefix, const std::vector<int>& idx) {
    std::string out;
    for (int i : idx) {
        if (!out.empty()) out += ", ";
        out += prefix + std::to_string(i);
    }
    return out;
}

// Conditional antecedents/consequents evaluated on a signature.  The flags
// are 0-based internally; the table properties use 1-based F indices.
bool fz(const Signature& sig, int i) {
    return sig.fi_zero[static_cast<std::size_t>(i - 1)];
}

bool conditional_antecedent(const Signature& sig, int which) {
    switch (which) {
        case 0:
        case 1:
            // F1F2 = 0 and F3F4 = 0
            return (fz(sig, 1) || fz(sig, 2)) && (fz(sig, 3) || fz(sig, 4));
        case 2:  // F1F2 = 0
            return fz(sig, 1) || fz(sig, 2);
        case 3:  // F3F4 = 0
            return fz(sig, 3) || fz(sig, 4);
        case 4:
        case 5: {
            // three of F1..F4 vanish
            int zeros = 0;
            for (int i = 1; i <= 4; ++i) zeros += fz(sig, i) ? 1 : 0;
            return zeros >= 3;
        }
        default:
            throw std::invalid_argument("unknown conditional property");
    }
}

bool conditional_consequent(const Signature& sig, int which) {
    const bool z9 = fz(sig, 9);
    const bool z10 = fz(sig, 10);
    switch (which) {
        case 0:  // exactly one of F9, F10 vanishes
            return z9 != z10;
        case 1:  // F9 = F10 = 0
            return z9 && z10;
        case 2:
        case 3:  // F9 = F10 != 0
            return sig.rel_f9_eq_f10 && !z9 && !z10;
        case 4:  // |F9|+|F10| != 0 and F9 F10 = 0
            return (z9 != z10);
        case 5:  // F9 != 0
            return !z9;
        default:
            throw std::invalid_argument("unknown conditional property");
    }
}

bool matches(const Signature& sig, const ClassProperties& cls) {
    if (cls.iv_zero != sig.iv_zero) return false;
    if (cls.f_positive == sig.f_aggregate_zero) return false;
    for (int i : cls.f_zero_set)
        if (!fz(sig, i)) return false;
    for (int i = 0; i < 3; ++i) {
        if (cls.d_flags[static_cast<std::size_t>(i)] == DFlag::kZero &&
            !sig.di_zero[static_cast<std::size_t>(i)])
            return false;
    }
    for (const auto& [i, j] : cls.f_nonzero_pairs)
        if (fz(sig, i) && fz(sig, j)) return false;
    for (Relation r : cls.relations) {
        switch (r) {
            case Relation::kF9EqF10:
                if (!sig.rel_f9_eq_f10) return false;
                break;
            case Relation::kF1F2EqF9Sq:
                if (!sig.rel_f1f2_eq_f9sq) return false;
                break;
            case Relation::kF3F4EqF9Sq:
                if (!sig.rel_f3f4_eq_f9sq) return false;
                break;
        }
    }
    for (int c : cls.conditionals)
        if (conditional_antecedent(sig, c) && !conditional_consequent(sig, c))
            return false;
    return true;
}

}  // namespace

Signature signature(const StateF& s, double tol) {
    detail::require_four_qubits(s);
    const StateF unit = normalize(s);  // throws on the zero state
    const InvariantVector v = invariant_vector(unit);
    Signature sig;
    sig.exact = false;
    sig.tolerance = tol;
    sig.iv_zero = near_zero(std::abs(v.iv), tol);
    sig.f_aggregate_zero = near_zero(v.f_aggregate, tol);
    for (std::size_t i = 0; i < 10; ++i)
        sig.fi_zero[i] = near_zero(std::abs(v.f[i]), tol);
    for (std::size_t i = 0; i < 3; ++i)
        sig.di_zero[i] = near_zero(std::abs(v.d[i]), tol);
    const double f9_mag = std::abs(v.f[8]);
    sig.rel_f9_eq_f10 = std::abs(v.f[8] - v.f[9]) <= std::max(tol, tol * f9_mag);
    sig.rel_f1f2_eq_f9sq =
        rel_close(std::abs(v.f[0] * v.f[1] - v.f[8] * v.f[8]), 0.0, f9_mag, tol);
    sig.rel_f3f4_eq_f9sq =
        rel_close(std::abs(v.f[2] * v.f[3] - v.f[8] * v.f[8]), 0.0, f9_mag, tol);
    return sig;
}

Signature signature(const StateQ& s) {
    detail::require_four_qubits(s);
    if (norm2(s) == 0)
        throw std::invalid_argument("cannot classify the zero state");
    const GaussianRational ivv = iv(s);
    const auto f = f_components(s);
    const auto d = d_components(s);
    Signature sig;
    sig.exact = true;
    sig.tolerance = 0.0;
    sig.iv_zero = ivv.is_zero();
    sig.f_aggregate_zero = true;
    for (std::size_t i = 0; i < 10; ++i) {
        sig.fi_zero[i] = f[i].is_zero();
        sig.f_aggregate_zero = sig.f_aggregate_zero && sig.fi_zero[i];
    }
    for (std::size_t i = 0; i < 3; ++i) sig.di_zero[i] = d[i].is_zero();
    sig.rel_f9_eq_f10 = f[8] == f[9];
    sig.rel_f1f2_eq_f9sq = f[0] * f[1] == f[8] * f[8];
    sig.rel_f3f4_eq_f9sq = f[2] * f[3] == f[8] * f[8];
    return sig;
}

CertifyResult certify_true_entanglement(const Signature& sig) {
    CertifyResult out;
    std::vector<int> d_nonzero;
    for (int i = 0; i < 3; ++i)
        if (!sig.di_zero[static_cast<std::size_t>(i)])
            d_nonzero.push_back(i + 1);
    if (sig.iv_zero && !d_nonzero.empty()) {
        out.condition = Certification::kCondition1;
        out.witness = "condition (1): IV = 0 and " +
                      index_list("D", {d_nonzero.front()}) + " != 0";
        return out;
    }
    if (!sig.iv_zero) {
        for (int i = 1; i <= 8; ++i) {
            if (!fz(sig, i)) {
                out.condition = Certification::kCondition2;
                out.witness = "condition (2): IV != 0 and " +
                              index_list("F", {i}) + " != 0";
                return out;
            }
        }
        if (d_nonzero.size() >= 2) {
            out.condition = Certification::kCondition3;
            out.witness =
                "condition (3): IV != 0 and " +
                index_list("D", {d_nonzero[0], d_nonzero[1]}) + " != 0";
            return out;
        }
    }
    out.condition = Certification::kNotCertified;
    out.witness = "no sufficient condition fired";
    return out;
}

std::vector<std::string> match_classes(const Signature& sig) {
    std::vector<std::string> out;
    for (const std::string& name : property_class_names())
        if (matches(sig, class_properties(name))) out.push_back(name);
    return out;
}

namespace {

DistinguishResult distinguish_from_flags(bool a_zero, bool b_zero) {
    DistinguishResult out;
    if (a_zero != b_zero) {
        out.provably_inequivalent = true;
        out.reason = std::string("IV vanishes for the ") +
                     (a_zero ? "first" : "second") +
                     " state but not the other; the vanishing of IV is "
                     "preserved by every invertible local operation";
    } else {
        out.provably_inequivalent = false;
        out.reason = "undecided: IV is " +
                     std::string(a_zero ? "zero" : "nonzero") +
                     " for both states";
    }
    return out;
}

}  // namespace

DistinguishResult distinguish_states(const StateF& a, const StateF& b,
                                     double tol) {
    detail::require_four_qubits(a);
    detail::require_four_qubits(b);
    const double iv_a = std::abs(iv(normalize(a)));
    const double iv_b = std::abs(iv(normalize(b)));
    return distinguish_from_flags(near_zero(iv_a, tol), near_zero(iv_b, tol));
}

DistinguishResult distinguish_states(const StateQ& a, const StateQ& b) {
    detail::require_four_qubits(a);
    detail::require_four_qubits(b);
    if (norm2(a) == 0 || norm2(b) == 0)
        throw std::invalid_argument("cannot compare the zero state");
    return distinguish_from_flags(iv(a).is_zero(), iv(b).is_zero());
}

}  // namespace slocc
