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

#include "slocc/class_count.hpp"

#include <stdexcept>

namespace slocc {

namespace {

BigInt factorial(int n) {
    BigInt f{1};
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// t(m) for the known small cases; 0 if unknown.
bool builtin_t(int m, BigInt* value) {
    switch (m) {
        case 1:
        case 2:
            *value = 1;
            return true;
        case 3:
            *value = 2;
            return true;
        default:
            return false;
    }
}

void gather(int remaining, int min_part, bool allow_full,
            std::vector<int>* current, std::vector<Partition>* out) {
    if (remaining == 0) {
        if (current->size() >= 2) {
            Partition p;
            p.parts = *current;
            int run = 0;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                ++run;
                if (i + 1 == p.parts.size() || p.parts[i + 1] != p.parts[i]) {
                    p.multiplicities.push_back(run);
                    run = 0;
                }
            }
            out->push_back(std::move(p));
        }
        return;
    }
    for (int v = min_part; v <= remaining; ++v) {
        if (!allow_full && current->empty() && v == remaining)
            continue;  // would be the one-part partition
        current->push_back(v);
        gather(remaining - v, v, allow_full, current, out);
        current->pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 2) throw std::invalid_argument("partitions: n must be >= 2");
    std::vector<Partition> out;
    std::vector<int> current;
    gather(n, 1, /*allow_full=*/false, &current, &out);
    return out;
}

ClassCount partition_term(int n, const Partition& partition,
                          const std::map<int, BigInt>& known_t) {
    // Number of ways to split n labeled qubits into unordered groups of
    // these sizes: the multinomial divided by permutations of equal sizes.
    BigInt denominator{1};
    for (const int r : partition.parts) denominator *= factorial(r);
    for (const int s : partition.multiplicities) denominator *= factorial(s);
    const BigInt numerator = factorial(n);
    if (numerator % denominator != 0)
        throw std::logic_error("grouping count must be an integer");
    const BigInt ways = numerator / denominator;

    BigInt known_product{1};
    int unknown_m = 0;
    for (const int r : partition.parts) {
        BigInt t;
        if (builtin_t(r, &t)) {
            known_product *= t;
            continue;
        }
        const auto it = known_t.find(r);
        if (it != known_t.end()) {
            known_product *= it->second;
            continue;
        }
        if (unknown_m != 0)
            throw std::domain_error(
                "partition term is nonlinear in unknown t(m): parts " +
                std::to_string(unknown_m) + " and " + std::to_string(r));
        unknown_m = r;
    }

    ClassCount term;
    if (unknown_m == 0) {
        term.constant = ways * known_product;
    } else {
        term.coeffs[unknown_m] = ways * known_product;
    }
    return term;
}

ClassCount degenerate_count(int n, const std::map<int, BigInt>& known_t,
                            bool symbolic) {
    ClassCount total;
    for (const Partition& p : partitions(n)) {
        const ClassCount term = partition_term(n, p, known_t);
        if (!symbolic && !term.is_numeric())
            throw std::invalid_argument(
                "degenerate_count: missing t(" +
                std::to_string(term.coeffs.begin()->first) +
                ") in numeric mode");
        total.constant += term.constant;
        for (const auto& [m, coeff] : term.coeffs) total.coeffs[m] += coeff;
    }
    return total;
}

std::string ClassCount::to_string() const {
    if (coeffs.empty()) return constant.str();
    std::string out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str() + "*t(" + std::to_string(it->first) + ")";
    }
    if (constant != 0) out += " + " + constant.str();
    return out;
}

}  // namespace slocc
