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

#include "slocc/catalog.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace slocc {
namespace {

// Sparse integer amplitude pattern of a representative, plus its printed
// normalized form.
struct RepSpec {
    std::vector<std::pair<std::size_t, int>> amps;
    const char* source;
};

const std::map<std::string, RepSpec>& rep_table() {
    static const std::map<std::string, RepSpec> kTable = {
        {"GHZ", {{{0, 1}, {15, 1}}, "(|0> + |15>)/sqrt(2)"}},
        {"W", {{{1, 1}, {2, 1}, {4, 1}, {8, 1}}, "(|1> + |2> + |4> + |8>)/2"}},
        {"C4",
         {{{3, 1}, {5, 1}, {6, 1}, {9, 1}, {10, 1}, {12, 1}},
          "(|3> + |5> + |6> + |9> + |10> + |12>)/sqrt(6)"}},
        {"kappa4",
         {{{0, 1}, {3, 1}, {10, 1}, {15, -1}}, "(|0> + |3> + |10> - |15>)/2"}},
        {"E4",
         {{{0, 1}, {5, 1}, {9, 1}, {15, -1}}, "(|0> + |5> + |9> - |15>)/2"}},
        {"L4",
         {{{0, 1}, {3, 1}, {9, 1}, {15, -1}}, "(|0> + |3> + |9> - |15>)/2"}},
        {"H4", {{{3, 1}, {6, 1}, {12, 1}}, "(|3> + |6> + |12>)/sqrt(3)"}},
        {"lambda4", {{{5, 1}, {6, 1}, {10, 1}}, "(|5> + |6> + |10>)/sqrt(3)"}},
        {"M4", {{{3, 1}, {5, 1}, {12, 1}}, "(|3> + |5> + |12>)/sqrt(3)"}},
        {"pi4",
         {{{0, 1}, {3, 1}, {5, 1}, {6, 1}, {10, 1}, {15, 1}},
          "(|0> + |3> + |5> + |6> + |10> + |15>)/sqrt(6)"}},
        {"theta4",
         {{{0, 1}, {5, 1}, {6, 1}, {10, 1}, {12, 1}, {15, 1}},
          "(|0> + |5> + |6> + |10> + |12> + |15>)/sqrt(6)"}},
        {"sigma4",
         {{{0, 1}, {3, 1}, {9, 1}, {10, 1}, {12, 1}, {15, 1}},
          "(|0> + |3> + |9> + |10> + |12> + |15>)/sqrt(6)"}},
        {"rho4",
         {{{0, 1}, {3, 1}, {6, 1}, {10, 1}, {12, 1}, {15, 1}},
          "(|0> + |3> + |6> + |10> + |12> + |15>)/sqrt(6)"}},
        {"xi4",
         {{{0, 1}, {6, 1}, {9, 1}, {10, 1}, {12, 1}, {15, 1}},
          "(|0> + |6> + |9> + |10> + |12> + |15>)/sqrt(6)"}},
        {"epsilon4",
         {{{0, 1}, {3, 1}, {6, 1}, {9, 1}, {10, 1}, {15, 1}},
          "(|0> + |3> + |6> + |9> + |10> + |15>)/sqrt(6)"}},
        {"chi4",
         {{{0, 1}, {3, 1}, {6, 1}, {10, 1}, {12, 1}, {15, -1}},
          "(|0> + |3> + |6> + |10> + |12> - |15>)/sqrt(6)"}},
        {"psi4",
         {{{0, 1}, {5, 1}, {10, 1}, {15, -1}}, "(|0> + |5> + |10> - |15>)/2"}},
        {"phi4",
         {{{0, 1}, {3, 1}, {12, 1}, {15, -1}}, "(|0> + |3> + |12> - |15>)/2"}},
        {"mu4",
         {{{0, 1}, {6, 1}, {9, 1}, {15, -1}}, "(|0> + |6> + |9> - |15>)/2"}},
        {"varphi4", {{{1, 1}, {6, 1}, {11, 1}}, "(|1> + |6> + |11>)/sqrt(3)"}},
        {"vartheta4",
         {{{2, 1}, {5, 1}, {11, 1}}, "(|2> + |5> + |11>)/sqrt(3)"}},
        {"tau4", {{{1, 1}, {7, 1}, {10, 1}}, "(|1> + |7> + |10>)/sqrt(3)"}},
        {"varrho4", {{{2, 1}, {7, 1}, {9, 1}}, "(|2> + |7> + |9>)/sqrt(3)"}},
        {"zeta4", {{{0, 1}, {11, 1}, {12, 1}}, "(|0> + |11> + |12>)/sqrt(3)"}},
        {"iota4", {{{0, 1}, {3, 1}, {13, 1}}, "(|0> + |3> + |13>)/sqrt(3)"}},
        {"upsilon4",
         {{{2, 1}, {5, 1}, {9, 1}, {11, 1}}, "(|2> + |5> + |9> + |11>)/2"}},
        {"omega4",
         {{{0, 1}, {5, 1}, {8, 1}, {14, 1}}, "(|0> + |5> + |8> + |14>)/2"}},
        {"varpi4",
         {{{2, 1}, {5, 1}, {8, 1}, {12, 1}}, "(|2> + |5> + |8> + |12>)/2"}},
    };
    return kTable;
}

StateQ sparse_exact(const std::vector<std::pair<std::size_t, int>>& amps) {
    std::vector<std::pair<std::size_t, GaussianRational>> terms;
    terms.reserve(amps.size());
    for (const auto& [idx, v] : amps)
        terms.emplace_back(idx, GaussianRational(v));
    return make_state<GaussianRational>(4, terms);
}

std::vector<int> all_f_indices() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

// Shorthand builders for the property table.
ClassProperties props(std::string name, bool iv_zero, bool f_positive,
                      std::array<DFlag, 3> d, std::vector<int> zero,
                      std::vector<std::pair<int, int>> pairs,
                      std::vector<Relation> rels, std::vector<int> conds) {
    ClassProperties p;
    p.name = std::move(name);
    p.iv_zero = iv_zero;
    p.f_positive = f_positive;
    p.d_flags = d;
    p.f_zero_set = std::move(zero);
    p.f_nonzero_pairs = std::move(pairs);
    p.relations = std::move(rels);
    p.conditionals = std::move(conds);
    return p;
}

constexpr DFlag kZ = DFlag::kZero;
constexpr DFlag kO = DFlag::kOpt;

const std::map<std::string, ClassProperties>& property_table() {
    static const std::map<std::string, ClassProperties> kTable = [] {
        std::map<std::string, ClassProperties> t;
        auto add = [&t](ClassProperties p) { t.emplace(p.name, std::move(p)); };
        // True entanglement classes with IV != 0 (all have F > 0).
        add(props("GHZ", false, true, {kZ, kZ, kZ}, {}, {}, {}, {0}));
        add(props("C4", false, true, {kO, kO, kO}, {}, {}, {}, {4}));
        add(props("kappa4", false, true, {kO, kO, kZ}, {}, {}, {}, {0}));
        add(props("E4", false, true, {kO, kZ, kO}, {}, {}, {}, {0}));
        add(props("L4", false, true, {kZ, kO, kO}, {}, {}, {}, {0}));
        add(props("H4", false, true, {kO, kZ, kZ}, {}, {}, {}, {0}));
        add(props("lambda4", false, true, {kZ, kO, kZ}, {}, {}, {}, {0}));
        add(props("M4", false, true, {kZ, kZ, kO}, {}, {}, {}, {0}));
        add(props("pi4", false, true, {kO, kZ, kZ}, {3, 4, 7, 8},
                  {{1, 2}, {5, 6}}, {}, {2}));
        add(props("theta4", false, true, {kO, kZ, kZ}, {1, 2, 5, 6},
                  {{3, 4}, {7, 8}}, {}, {3}));
        add(props("sigma4", false, true, {kZ, kO, kZ}, {5, 6, 7, 8},
                  {{1, 2}, {3, 4}}, {}, {1}));
        add(props("rho4", false, true, {kZ, kO, kZ}, {1, 2, 3, 4, 9, 10},
                  {{5, 6}, {7, 8}}, {}, {}));
        add(props("xi4", false, true, {kZ, kZ, kO}, {3, 4, 5, 6},
                  {{1, 2}, {7, 8}}, {}, {2}));
        add(props("epsilon4", false, true, {kZ, kZ, kO}, {1, 2, 7, 8},
                  {{3, 4}, {5, 6}}, {}, {3}));
        // True entanglement classes with IV = 0.
        add(props("W", true, false, {kZ, kZ, kZ}, all_f_indices(), {}, {},
                  {}));
        add(props("chi4", true, true, {kO, kO, kO}, {}, {{5, 6}, {7, 8}}, {},
                  {0}));
        add(props("upsilon4", true, true, {kZ, kO, kO}, {5, 6},
                  {{1, 2}, {3, 4}, {7, 8}}, {}, {1}));
        add(props("varpi4", true, true, {kO, kZ, kO}, {3, 4},
                  {{1, 2}, {5, 6}, {7, 8}},
                  {Relation::kF9EqF10, Relation::kF1F2EqF9Sq}, {}));
        add(props("psi4", true, true, {kO, kZ, kZ}, {}, {},
                  {Relation::kF9EqF10}, {5}));
        add(props("phi4", true, true, {kZ, kO, kZ}, {}, {}, {}, {0}));
        add(props("mu4", true, true, {kZ, kZ, kO}, {}, {},
                  {Relation::kF9EqF10}, {5}));
        add(props("varphi4", true, true, {kO, kZ, kZ}, {3, 4, 7, 8},
                  {{1, 2}, {5, 6}},
                  {Relation::kF9EqF10, Relation::kF1F2EqF9Sq}, {}));
        add(props("zeta4", true, true, {kZ, kO, kZ}, {5, 6, 7, 8},
                  {{1, 2}, {3, 4}}, {}, {1}));
        add(props("vartheta4", true, true, {kZ, kZ, kO}, {3, 4, 5, 6},
                  {{1, 2}, {7, 8}},
                  {Relation::kF9EqF10, Relation::kF1F2EqF9Sq}, {}));
        add(props("tau4", true, true, {kZ, kZ, kZ}, {1, 2, 7, 8},
                  {{3, 4}, {5, 6}},
                  {Relation::kF9EqF10, Relation::kF3F4EqF9Sq}, {}));
        add(props("varrho4", true, true, {kZ, kZ, kZ}, {1, 2, 5, 6},
                  {{3, 4}, {7, 8}},
                  {Relation::kF9EqF10, Relation::kF3F4EqF9Sq}, {}));
        add(props("iota4", true, true, {kZ, kZ, kZ}, {1, 2, 3, 4, 9, 10},
                  {{5, 6}, {7, 8}}, {}, {}));
        add(props("omega4", true, true, {kZ, kZ, kZ}, {1, 2},
                  {{3, 4}, {5, 6}, {7, 8}},
                  {Relation::kF9EqF10, Relation::kF3F4EqF9Sq}, {}));
        // Degenerate (product) classes.
        add(props("GHZ123xQ4", true, true, {kZ, kZ, kZ},
                  {1, 2, 3, 4, 5, 6, 9, 10}, {{7, 8}}, {}, {}));
        add(props("GHZ124xQ3", true, true, {kZ, kZ, kZ},
                  {1, 2, 3, 4, 7, 8, 9, 10}, {{5, 6}}, {}, {}));
        add(props("GHZ134xQ2", true, true, {kZ, kZ, kZ}, {1, 2, 5, 6, 7, 8},
                  {{3, 4}}, {Relation::kF9EqF10, Relation::kF3F4EqF9Sq}, {}));
        add(props("Q1xGHZ234", true, true, {kZ, kZ, kZ}, {3, 4, 5, 6, 7, 8},
                  {{1, 2}}, {Relation::kF9EqF10, Relation::kF1F2EqF9Sq}, {}));
        for (const char* w : {"WxQ1", "WxQ2", "WxQ3", "WxQ4"})
            add(props(w, true, false, {kZ, kZ, kZ}, all_f_indices(), {}, {},
                      {}));
        add(props("GHZ12xGHZ34", false, false, {kZ, kO, kZ}, all_f_indices(),
                  {}, {}, {}));
        add(props("GHZ13xGHZ24", false, true, {kO, kZ, kZ},
                  {1, 2, 3, 4, 5, 6, 7, 8}, {{9, 10}}, {Relation::kF9EqF10},
                  {}));
        add(props("GHZ14xGHZ23", false, true, {kZ, kZ, kO},
                  {1, 2, 3, 4, 5, 6, 7, 8}, {{9, 10}}, {Relation::kF9EqF10},
                  {}));
        add(props("TwoQubitsOnly", true, false, {kZ, kZ, kZ}, all_f_indices(),
                  {}, {}, {}));
        add(props("Separable", true, false, {kZ, kZ, kZ}, all_f_indices(), {},
                  {}, {}));
        return t;
    }();
    return kTable;
}

// Zero-patterns at the canonical representatives.  Two cells differ from the
// printed tables; both were re-derived by exact evaluation of the invariant
// polynomials at the representative:
//   - lambda4: the table prints D2 != 0, but D2(|5>+|6>+|10>) = 0 exactly
//     (the class-level flag for lambda4 is "opt", so the class row is
//     unaffected).
//   - psi4: the table prints F nonzero at {3,4,9,10}, but F3 and F4 vanish
//     exactly at |0>+|5>+|10>-|15>; the nonzero set is {9,10}.
const std::map<std::string, StatePattern>& pattern_table() {
    static const std::map<std::string, StatePattern> kTable = [] {
        std::map<std::string, StatePattern> t;
        auto add = [&t](const char* name, std::array<bool, 3> d,
                        std::vector<int> f) {
            t.emplace(name, StatePattern{d, std::move(f)});
        };
        add("GHZ", {false, false, false}, {9});
        add("W", {false, false, false}, {});
        add("C4", {true, true, true}, {9});
        add("kappa4", {false, false, false}, {9});
        add("E4", {false, false, false}, {9});
        add("L4", {false, false, false}, {9});
        add("H4", {false, false, false}, {9});
        add("lambda4", {false, false, false}, {10});
        add("M4", {false, false, false}, {9});
        add("pi4", {true, false, false}, {1, 6, 9, 10});
        add("theta4", {true, false, false}, {4, 7, 9, 10});
        add("sigma4", {false, true, false}, {2, 3});
        add("rho4", {false, true, false}, {6, 7});
        add("xi4", {false, false, true}, {2, 7, 9, 10});
        add("epsilon4", {false, false, true}, {3, 6, 9, 10});
        add("chi4", {false, true, false}, {6, 7, 9});
        add("upsilon4", {false, false, false}, {1, 3, 8});
        add("varpi4", {false, false, false}, {1, 5, 7});
        add("psi4", {true, false, false}, {9, 10});
        add("phi4", {false, true, false}, {9});
        add("mu4", {false, false, true}, {9, 10});
        add("varphi4", {false, false, false}, {1, 6});
        add("zeta4", {false, false, false}, {2, 3});
        add("vartheta4", {false, false, false}, {1, 8});
        add("tau4", {false, false, false}, {3, 6});
        add("varrho4", {false, false, false}, {3, 8});
        add("iota4", {false, false, false}, {5, 8});
        add("omega4", {false, false, false}, {4, 5, 7});
        return t;
    }();
    return kTable;
}

template <typename S>
PureState<S> single_qubit(const S& s, const S& t) {
    PureState<S> q;
    q.qubits = 1;
    q.amps = {s, t};
    return q;
}

// Permutation that sends qubit 3 (the LSB factor) to 0-based position `pos`
// and keeps the remaining three qubits in their original order.
std::vector<int> lsb_to_position(int pos) {
    std::vector<int> perm;
    int next = 0;
    for (int q = 0; q < 3; ++q) {
        if (next == pos) ++next;
        perm.push_back(next++);
    }
    perm.push_back(pos);
    return perm;
}

template <typename S>
PureState<S> degenerate_state_impl(DegenerateKind kind, const S& s, const S& t,
                                   int pattern) {
    if (scalar_is_zero(s, 0.0) && scalar_is_zero(t, 0.0))
        throw std::invalid_argument("qubit factor must not be the zero state");
    const S one{1};
    const S zero{0};
    switch (kind) {
        case DegenerateKind::kGhzTripleTimesQubit:
        case DegenerateKind::kWTimesQubit: {
            if (pattern < 1 || pattern > 4)
                throw std::invalid_argument(
                    "qubit position must be between 1 and 4");
            const bool ghz = kind == DegenerateKind::kGhzTripleTimesQubit;
            const auto triple =
                ghz ? make_state<S>(3, {{0, one}, {7, one}})
                    : make_state<S>(3, {{1, one}, {2, one}, {4, one}});
            const auto full = tensor(triple, single_qubit(s, t));
            return permute_qubits(full, lsb_to_position(pattern - 1));
        }
        case DegenerateKind::kGhzPair: {
            if (pattern < 2 || pattern > 4)
                throw std::invalid_argument(
                    "GHZ-pair partner of qubit 1 must be 2, 3 or 4");
            const auto pair = make_state<S>(2, {{0, one}, {3, one}});
            const auto full = tensor(pair, pair);
            if (pattern == 2) return full;
            // Qubits (0,1) hold the first pair; send qubit 1 to the partner
            // position and fill the second pair into the remaining slots.
            const std::vector<int> perm =
                pattern == 3 ? std::vector<int>{0, 2, 1, 3}
                             : std::vector<int>{0, 3, 1, 2};
            return permute_qubits(full, perm);
        }
        case DegenerateKind::kTwoQubitsOnly: {
            static const std::array<std::pair<int, int>, 6> kPairs = {
                {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
            if (pattern < 1 || pattern > 6)
                throw std::invalid_argument(
                    "entangled-pair selector must be between 1 and 6");
            const auto [a, b] = kPairs[static_cast<std::size_t>(pattern - 1)];
            const auto bell = make_state<S>(2, {{0, one}, {3, one}});
            const auto full =
                tensor(tensor(bell, single_qubit(s, t)), single_qubit(one, zero));
            std::vector<int> free_slots;
            for (int q = 1; q <= 4; ++q)
                if (q != a && q != b) free_slots.push_back(q - 1);
            return permute_qubits(
                full, {a - 1, b - 1, free_slots[0], free_slots[1]});
        }
        case DegenerateKind::kSeparable: {
            const auto rest = make_state<S>(3, {{0, one}});
            return tensor(single_qubit(s, t), rest);
        }
    }
    throw std::invalid_argument("unknown degenerate kind");
}

}  // namespace

const std::vector<std::string>& class_names() {
    static const std::vector<std::string> kNames = {
        "GHZ",     "W",       "C4",        "kappa4", "E4",      "L4",
        "H4",      "lambda4", "M4",        "pi4",    "theta4",  "sigma4",
        "rho4",    "xi4",     "epsilon4",  "chi4",   "psi4",    "phi4",
        "mu4",     "varphi4", "vartheta4", "tau4",   "varrho4", "zeta4",
        "iota4",   "upsilon4", "omega4",   "varpi4"};
    return kNames;
}

NamedState representative(const std::string& name) {
    const auto& table = rep_table();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown class name: " + name);
    NamedState out;
    out.name = name;
    out.exact = sparse_exact(it->second.amps);
    out.state = to_floating(*out.exact);
    out.source = it->second.source;
    return out;
}

ClassProperties class_properties(const std::string& name) {
    const auto& table = property_table();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown class name: " + name);
    return it->second;
}

const std::vector<std::string>& property_class_names() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> names = class_names();
        for (const char* d :
             {"GHZ123xQ4", "GHZ124xQ3", "GHZ134xQ2", "Q1xGHZ234", "WxQ1",
              "WxQ2", "WxQ3", "WxQ4", "GHZ12xGHZ34", "GHZ13xGHZ24",
              "GHZ14xGHZ23", "TwoQubitsOnly", "Separable"})
            names.emplace_back(d);
        return names;
    }();
    return kNames;
}

StatePattern state_pattern(const std::string& name) {
    const auto& table = pattern_table();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown class name: " + name);
    return it->second;
}

StateF degenerate_state(DegenerateKind kind, Cplx s, Cplx t, int pattern) {
    return degenerate_state_impl<Cplx>(kind, s, t, pattern);
}

StateQ degenerate_state_exact(DegenerateKind kind, const GaussianRational& s,
                              const GaussianRational& t, int pattern) {
    return degenerate_state_impl<GaussianRational>(kind, s, t, pattern);
}

std::string degenerate_class_name(DegenerateKind kind, int pattern) {
    switch (kind) {
        case DegenerateKind::kGhzTripleTimesQubit:
            switch (pattern) {
                case 1: return "Q1xGHZ234";
                case 2: return "GHZ134xQ2";
                case 3: return "GHZ124xQ3";
                case 4: return "GHZ123xQ4";
                default: break;
            }
            break;
        case DegenerateKind::kWTimesQubit:
            if (pattern >= 1 && pattern <= 4)
                return "WxQ" + std::to_string(pattern);
            break;
        case DegenerateKind::kGhzPair:
            switch (pattern) {
                case 2: return "GHZ12xGHZ34";
                case 3: return "GHZ13xGHZ24";
                case 4: return "GHZ14xGHZ23";
                default: break;
            }
            break;
        case DegenerateKind::kTwoQubitsOnly:
            if (pattern >= 1 && pattern <= 6) return "TwoQubitsOnly";
            break;
        case DegenerateKind::kSeparable:
            return "Separable";
    }
    throw std::invalid_argument("unknown degenerate kind/pattern");
}

StateF family_state(Family family, Cplx a, Cplx b) {
    switch (family) {
        case Family::kLab3: {
            const Cplx half_sum = (a + b) / 2.0;
            const Cplx half_diff = (a - b) / 2.0;
            const Cplx w(0.0, 1.0 / std::sqrt(2.0));
            return make_state<Cplx>(
                4, {{0, a},
                    {15, a},
                    {5, half_sum},
                    {10, half_sum},
                    {6, half_diff},
                    {9, half_diff},
                    {1, w},
                    {2, w},
                    {7, w},
                    {11, w}});
        }
        case Family::kLa4: {
            const Cplx i(0.0, 1.0);
            return make_state<Cplx>(4, {{0, a},
                                        {5, a},
                                        {10, a},
                                        {15, a},
                                        {1, i},
                                        {6, Cplx(1.0)},
                                        {11, -i}});
        }
        case Family::kLa203p1:
            return make_state<Cplx>(4, {{0, a},
                                        {15, a},
                                        {3, Cplx(1.0)},
                                        {5, Cplx(1.0)},
                                        {6, Cplx(1.0)}});
    }
    throw std::invalid_argument("unknown family");
}

NamedState conjecture_state() {
    NamedState out;
    out.name = "conjecture";
    out.source = "(sqrt(2)|15> + |8> + |4> + |2> + |1>)/sqrt(6)";
    const double c = 1.0 / std::sqrt(6.0);
    out.state = make_state<Cplx>(4, {{1, Cplx(c)},
                                     {2, Cplx(c)},
                                     {4, Cplx(c)},
                                     {8, Cplx(c)},
                                     {15, Cplx(std::sqrt(2.0) * c)}});
    out.exact = std::nullopt;
    return out;
}

}  // namespace slocc
