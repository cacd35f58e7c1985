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
// Generalized semi-invariant F for n qubits (2 <= n <= 8).
//
// F(s) = 4 * sum over index quadruples of |term|, where a quadruple is four
// basis-index pairs (i,j),(k,l),(p,q),(r,s) with
//
//   i<j, k<l, p<q, r<s, i<k<p<r,
//   i+j = k+l = p+q = r+s,   i^j = k^l = p^q = r^s  (bitwise XOR),
//
// and, with offset o = 1 when i+j is odd and o = 2 when i+j is even,
//
//   term = (a_i a_j + a_k a_l - a_p a_q - a_r a_s)^2
//          - 4 (a_i a_{j-o} - a_p a_{q-o}) (a_k a_{l+o} - a_r a_{s+o}).
//
// A quadruple contributes only when the shifted indices j-o, q-o, l+o, s+o
// all lie inside [0, 2^n).

#ifndef SLOCC_INVARIANTS_N_HPP_
#define SLOCC_INVARIANTS_N_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "slocc/invariants4.hpp"
#include "slocc/state.hpp"

namespace slocc {

// Four index pairs (i,j),(k,l),(p,q),(r,s) stored flat, plus the parity of
// the common pair sum (even selects offset 2, odd selects offset 1).
struct IndexQuadruple {
  std::array<std::uint16_t, 8> idx;  // i, j, k, l, p, q, r, s
  bool even_sum;

  std::uint16_t i() const { return idx[0]; }
  std::uint16_t j() const { return idx[1]; }
  std::uint16_t k() const { return idx[2]; }
  std::uint16_t l() const { return idx[3]; }
  std::uint16_t p() const { return idx[4]; }
  std::uint16_t q() const { return idx[5]; }
  std::uint16_t r() const { return idx[6]; }
  std::uint16_t s() const { return idx[7]; }
  int offset() const { return even_sum ? 2 : 1; }
  unsigned pair_sum() const { return unsigned{idx[0]} + idx[1]; }
  unsigned pair_xor() const { return unsigned{idx[0]} ^ idx[1]; }
};

namespace detail {

inline void require_qubit_range(int n) {
  if (n < 2 || n > kMaxQubits)
    throw std::invalid_argument("qubit count must be between 2 and 8");
}

}  // namespace detail

// Visits every contributing quadruple for n qubits in a deterministic
// ascending order: classes ordered by (pair sum, pair xor), and 4-subsets of
// each class's pair list (sorted by first index) in lexicographic order.
template <typename Visitor>
void visit_quadruples(int n, Visitor&& visit) {
  detail::require_qubit_range(n);
  const unsigned dim = 1u << n;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned sigma = 1; sigma <= 2 * dim - 3; ++sigma) {
    const unsigned o = (sigma % 2 != 0) ? 1 : 2;
    const bool even = (sigma % 2 == 0);
    for (unsigned chi = (sigma % 2 != 0) ? 1 : 2;
         chi <= std::min(sigma, dim - 1); chi += 2) {
      const unsigned c = (sigma - chi) / 2;
      if ((c & chi) != 0 || c + chi >= dim) continue;
      pairs.clear();
      for (unsigned sub = 0;; sub = (sub - chi) & chi) {
        const unsigned lo = c + sub;
        const unsigned hi = c + (chi ^ sub);
        if (lo < hi) pairs.emplace_back(lo, hi);
        if (sub == chi) break;
      }
      if (pairs.size() < 4) continue;
      std::sort(pairs.begin(), pairs.end());
      const std::size_t m = pairs.size();
      for (std::size_t a = 0; a + 3 < m; ++a) {
        if (pairs[a].second < o) continue;  // j - o in range
        for (std::size_t b = a + 1; b + 2 < m; ++b) {
          if (pairs[b].second + o >= dim) continue;  // l + o in range
          for (std::size_t e = b + 1; e + 1 < m; ++e) {
            if (pairs[e].second < o) continue;  // q - o in range
            for (std::size_t f = e + 1; f < m; ++f) {
              if (pairs[f].second + o >= dim) continue;  // s + o in range
              IndexQuadruple t;
              t.idx = {static_cast<std::uint16_t>(pairs[a].first),
                       static_cast<std::uint16_t>(pairs[a].second),
                       static_cast<std::uint16_t>(pairs[b].first),
                       static_cast<std::uint16_t>(pairs[b].second),
                       static_cast<std::uint16_t>(pairs[e].first),
                       static_cast<std::uint16_t>(pairs[e].second),
                       static_cast<std::uint16_t>(pairs[f].first),
                       static_cast<std::uint16_t>(pairs[f].second)};
              t.even_sum = even;
              visit(t);
            }
          }
        }
      }
    }
  }
}

// Materializes the quadruple list.  Counts: n=2 -> 0, n=3 -> 1, n=4 -> 78,
// n=5 -> 2560, n=6 -> 62160, n=7 -> 1311856.
inline std::vector<IndexQuadruple> enumerate_quadruples(int n) {
  std::vector<IndexQuadruple> out;
  visit_quadruples(n, [&](const IndexQuadruple& t) { out.push_back(t); });
  return out;
}

// Post-hoc validation of the defining constraints; used by tests.
inline bool quadruple_satisfies_constraints(const IndexQuadruple& t, int n) {
  const int dim = 1 << n;
  const auto& x = t.idx;
  for (int g = 0; g < 4; ++g)
    if (!(x[2 * g] < x[2 * g + 1])) return false;
  if (!(x[0] < x[2] && x[2] < x[4] && x[4] < x[6])) return false;
  const unsigned sigma = unsigned{x[0]} + x[1];
  const unsigned chi = unsigned{x[0]} ^ x[1];
  for (int g = 1; g < 4; ++g) {
    if (unsigned{x[2 * g]} + x[2 * g + 1] != sigma) return false;
    if ((unsigned{x[2 * g]} ^ x[2 * g + 1]) != chi) return false;
  }
  if (t.even_sum != (sigma % 2 == 0)) return false;
  const int o = t.offset();
  if (x[1] < o || x[5] < o) return false;
  if (x[3] + o >= dim || x[7] + o >= dim) return false;
  for (int g = 0; g < 8; ++g)
    if (x[g] >= dim) return false;
  return true;
}

// The contribution of one quadruple, in the state's scalar ring.
template <typename S>
S f_n_term(const PureState<S>& st, const IndexQuadruple& t) {
  const auto& a = st.amps;
  const int o = t.offset();
  const S big = a[t.i()] * a[t.j()] + a[t.k()] * a[t.l()] -
                a[t.p()] * a[t.q()] - a[t.r()] * a[t.s()];
  const S left = a[t.i()] * a[t.j() - o] - a[t.p()] * a[t.q() - o];
  const S right = a[t.k()] * a[t.l() + o] - a[t.r()] * a[t.s() + o];
  return big * big - S(4) * left * right;
}

namespace detail {

template <typename S>
std::vector<char> nonzero_mask(const PureState<S>& st) {
  std::vector<char> nz(st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i)
    nz[i] = !scalar_is_zero(st.amps[i], 0.0);
  return nz;
}

// Conservative structural test: false only when every monomial of the term
// is guaranteed zero by the sparsity pattern.
inline bool term_may_be_nonzero(const std::vector<char>& nz,
                                const IndexQuadruple& t) {
  const int o = t.offset();
  const bool square_part =
      (nz[t.i()] && nz[t.j()]) || (nz[t.k()] && nz[t.l()]) ||
      (nz[t.p()] && nz[t.q()]) || (nz[t.r()] && nz[t.s()]);
  const bool left = (nz[t.i()] && nz[t.j() - o]) || (nz[t.p()] && nz[t.q() - o]);
  const bool right =
      (nz[t.k()] && nz[t.l() + o]) || (nz[t.r()] && nz[t.s() + o]);
  return square_part || (left && right);
}

}  // namespace detail

// F for n qubits: 4 * sum of term magnitudes.  Exact on states whose
// amplitudes are small integers (all intermediate products stay integral).
template <typename S>
double f_n(const PureState<S>& st) {
  detail::require_qubit_range(st.qubits);
  const std::vector<char> nz = detail::nonzero_mask(st);
  double total = 0.0;
  visit_quadruples(st.qubits, [&](const IndexQuadruple& t) {
    if (!detail::term_may_be_nonzero(nz, t)) return;
    total += std::abs(scalar_to_complex(f_n_term(st, t)));
  });
  return 4.0 * total;
}

// Exact count of quadruples whose term is nonzero in the rational ring.
inline std::size_t f_n_nonzero_term_count(const StateQ& st) {
  detail::require_qubit_range(st.qubits);
  const std::vector<char> nz = detail::nonzero_mask(st);
  std::size_t count = 0;
  visit_quadruples(st.qubits, [&](const IndexQuadruple& t) {
    if (!detail::term_may_be_nonzero(nz, t)) return;
    if (!f_n_term(st, t).is_zero()) ++count;
  });
  return count;
}

// Exact vanishing test for F (every term is zero in the rational ring).
inline bool f_n_is_zero(const StateQ& st) {
  return f_n_nonzero_term_count(st) == 0;
}

// |GHZ> of n qubits, stored unnormalized: amplitude 1 at 0 and 2^n - 1.
inline StateQ ghz_n(int n) {
  detail::require_qubit_range(n);
  const std::vector<std::pair<std::size_t, GaussianRational>> entries = {
      {std::size_t{0}, GaussianRational(1)},
      {(std::size_t{1} << n) - 1, GaussianRational(1)}};
  return make_state(n, entries);
}

// |W> of n qubits, stored unnormalized: amplitude 1 at each index 2^j.
inline StateQ w_n(int n) {
  detail::require_qubit_range(n);
  std::vector<std::pair<std::size_t, GaussianRational>> entries;
  for (int j = 0; j < n; ++j)
    entries.emplace_back(std::size_t{1} << j, GaussianRational(1));
  return make_state(n, entries);
}

// Diagnostic for n = 4: the generalized F next to the four-qubit aggregate
// 4*sum|F_i|.  The two are reported side by side rather than assumed equal.
inline std::pair<double, double> f4_diagnostic(const StateF& s) {
  if (s.qubits != 4)
    throw std::invalid_argument("f4_diagnostic requires a 4-qubit state");
  return {f_n(s), f_aggregate(s)};
}

}  // namespace slocc

#endif  // SLOCC_INVARIANTS_N_HPP_
