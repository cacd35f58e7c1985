// Shared helpers for the unit tests: terse exact-state builders and
// normalization of catalog representatives by their exact squared norm.

#ifndef SLOCC_TESTS_TEST_UTIL_HPP_
#define SLOCC_TESTS_TEST_UTIL_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "slocc/catalog.hpp"
#include "slocc/invariants4.hpp"
#include "slocc/rational.hpp"
#include "slocc/state.hpp"

namespace slocc_test {

using slocc::GaussianRational;
using slocc::Rational;
using slocc::StateQ;

// 4-qubit exact state with amplitude +1 at each listed basis index.
inline StateQ support4(const std::vector<std::size_t>& indices) {
    std::vector<std::pair<std::size_t, GaussianRational>> terms;
    for (std::size_t i : indices) terms.emplace_back(i, GaussianRational(1));
    return slocc::make_state(4, terms);
}

// 4-qubit exact state from (index, integer amplitude) pairs.
inline StateQ sparse4(const std::vector<std::pair<std::size_t, int>>& terms) {
    std::vector<std::pair<std::size_t, GaussianRational>> t;
    for (const auto& [i, v] : terms) t.emplace_back(i, GaussianRational(v));
    return slocc::make_state(4, t);
}

inline Rational rat(const char* text) { return Rational(text); }

// Exact invariants of a catalog representative rescaled to unit norm:
// IV scales with 1/norm2, the degree-4 quantities with 1/norm2^2.
struct NormalizedInvariants {
    GaussianRational iv;
    std::array<GaussianRational, 10> f;
    std::array<GaussianRational, 3> d;
};

inline NormalizedInvariants normalized_invariants(const StateQ& numerator) {
    const GaussianRational r{slocc::norm2(numerator)};
    const GaussianRational r2 = r * r;
    NormalizedInvariants out;
    out.iv = slocc::iv(numerator) / r;
    const auto f = slocc::f_components(numerator);
    for (std::size_t i = 0; i < 10; ++i) out.f[i] = f[i] / r2;
    const auto d = slocc::d_components(numerator);
    for (std::size_t i = 0; i < 3; ++i) out.d[i] = d[i] / r2;
    return out;
}

}  // namespace slocc_test

#endif  // SLOCC_TESTS_TEST_UTIL_HPP_
