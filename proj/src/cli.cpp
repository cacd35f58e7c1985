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
// Command-line driver; the surface is documented in include/slocc/cli.hpp.

#include "slocc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "slocc/catalog.hpp"
#include "slocc/class_count.hpp"
#include "slocc/classifier.hpp"
#include "slocc/invariants4.hpp"
#include "slocc/invariants_n.hpp"
#include "slocc/ket.hpp"
#include "slocc/orbit_verify.hpp"
#include "slocc/rational.hpp"
#include "slocc/state.hpp"

namespace slocc {
namespace {

// Problem with the request detected after flag parsing (bad state argument,
// unknown class name, inconsistent options, ...).  Mapped to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kHumanDigits = 12;
constexpr int kMachineDigits = 17;

// Keeps the derived randomized streams (untargeted / targeted conditionals)
// disjoint from the base stream for any sample count below the stride.
constexpr std::uint64_t kSeedStride = 1000003;

// ---------------------------------------------------------------------------
// Formatting helpers

std::string fmt_double(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::string fmt_cplx(const Cplx& v, int digits) {
    if (v.imag() == 0.0) return fmt_double(v.real(), digits);
    std::ostringstream os;
    os << fmt_double(v.real(), digits);
    if (!(v.imag() < 0.0)) os << "+";
    os << fmt_double(v.imag(), digits) << " i";
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    if (v.empty()) return "none";
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (int x : v) parts.push_back(std::to_string(x));
    return join(parts, ",");
}

std::string relation_text(Relation r) {
    switch (r) {
        case Relation::kF9EqF10: return "F9=F10";
        case Relation::kF1F2EqF9Sq: return "F1*F2=F9^2";
        case Relation::kF3F4EqF9Sq: return "F3*F4=F9^2";
    }
    return "?";
}

std::string conditional_text(int c) {
    switch (c) {
        case 0: return "F1F2=0 and F3F4=0 => exactly one of F9,F10 = 0";
        case 1: return "F1F2=0 and F3F4=0 => F9 = F10 = 0";
        case 2: return "F1F2=0 => F9 = F10 != 0";
        case 3: return "F3F4=0 => F9 = F10 != 0";
        case 4: return "three of F1..F4 = 0 => |F9|+|F10| != 0 and F9F10 = 0";
        case 5: return "three of F1..F4 = 0 => F9 != 0";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Report plumbing shared by the verify subcommands

void print_header(std::ostream& out, bool machine, const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    if (machine) {
        for (const auto& [key, value] : fields)
            out << "meta\t" << key << '\t' << value << '\n';
    } else {
        out << command;
        for (const auto& [key, value] : fields) out << "  " << key << "=" << value;
        out << "\n";
    }
}

void status_line(std::ostream& out, bool machine, const std::string& subject,
                 const std::string& property, bool ok,
                 const std::string& fail_word = "FAIL") {
    if (machine) {
        out << subject << '\t' << property << '\t' << (ok ? "ok" : fail_word)
            << '\n';
    } else {
        out << "  " << std::left << std::setw(14) << subject << ' '
            << std::setw(24) << property << ' ' << (ok ? "ok" : fail_word)
            << '\n';
    }
}

void print_violations(std::ostream& out, const std::vector<Violation>& vs,
                      std::size_t limit = 3) {
    for (std::size_t i = 0; i < vs.size() && i < limit; ++i) {
        out << "      sample " << vs[i].seed << ": " << vs[i].property;
        if (!vs[i].values.empty()) out << ": " << vs[i].values;
        out << '\n';
    }
    if (vs.size() > limit) out << "      ... " << vs.size() - limit << " more\n";
}

void print_incomplete_witnesses(std::ostream& out, const OrbitSampleReport& rep) {
    for (const auto& w : rep.opt_witnesses) {
        if (w.complete()) continue;
        out << "      " << w.quantity << ": no "
            << (!w.zero_seed.has_value() ? "vanishing" : "non-vanishing")
            << " sample found\n";
    }
}

void print_result(std::ostream& out, bool machine, int failures) {
    if (machine) {
        out << "meta\tresult\t" << (failures == 0 ? "ok" : "FAIL") << '\n';
    } else if (failures == 0) {
        out << "result: all checks passed\n";
    } else {
        out << "result: " << failures << " check(s) FAILED\n";
    }
}

// ---------------------------------------------------------------------------
// State arguments

ParsedState load_state_arg(const std::string& arg, std::optional<int> qubits) {
    if (!arg.empty() && arg.front() == '@') {
        ParsedState ps = load_ket_file(arg.substr(1));
        if (qubits.has_value() && *qubits != ps.qubits())
            throw UsageError("--qubits " + std::to_string(*qubits) +
                             " conflicts with '" + arg + "' (" +
                             std::to_string(ps.qubits()) + " qubits)");
        return ps;
    }
    return parse_ket(arg, qubits);
}

void require_four_qubit_arg(const ParsedState& ps, const std::string& command) {
    if (ps.qubits() != 4)
        throw UsageError(command + " requires a 4-qubit state; parsed " +
                         std::to_string(ps.qubits()) +
                         " qubits (declare --qubits 4 or use bitstring kets)");
}

const StateQ& exact_numerator(const ParsedState& ps, const std::string& command) {
    if (!ps.exact())
        throw UsageError(command +
                         " --exact requires amplitudes of the form p/q + r/s i "
                         "over at most one common sqrt(); rerun without --exact");
    return *ps.numerator;
}

// ---------------------------------------------------------------------------
// compute

int cmd_compute(const ParsedState& ps, bool exact, bool machine,
                std::ostream& out) {
    require_four_qubit_arg(ps, "compute");
    const int digits = machine ? kMachineDigits : kHumanDigits;

    struct Row {
        std::string key;
        std::string label;
        std::string value;
    };
    std::vector<Row> rows;
    rows.push_back({"carrier", "carrier", exact ? "exact" : "floating"});

    if (exact) {
        const StateQ& num = exact_numerator(ps, "compute");
        const long root = static_cast<long>(ps.root);
        const GaussianRational iv_scale{Rational(1, root)};
        const GaussianRational fd_scale{Rational(1, root * root)};

        rows.push_back({"iv", "IV", to_string(iv(num) * iv_scale)});
        const auto fs = f_components(num);
        for (int i = 0; i < 10; ++i) {
            const std::string n = std::to_string(i + 1);
            rows.push_back({"f" + n, "F" + n, to_string(fs[i] * fd_scale)});
        }
        // The aggregate sums absolute values, so it has no rational form; it
        // is reported as floating together with an exact zero flag.
        const double agg = f_aggregate(num) / static_cast<double>(root * root);
        rows.push_back({"f_aggregate", "F (4*sum|Fi|)", fmt_double(agg, digits)});
        rows.push_back({"f_aggregate_zero_exact", "F exactly zero",
                        f_aggregate_is_zero(num) ? "yes" : "no"});
        const auto ds = d_components(num);
        for (int i = 0; i < 3; ++i) {
            const std::string n = std::to_string(i + 1);
            rows.push_back({"d" + n, "D" + n, to_string(ds[i] * fd_scale)});
        }
    } else {
        const InvariantVector v = invariant_vector(ps.value);
        rows.push_back({"iv", "IV", fmt_cplx(v.iv, digits)});
        for (int i = 0; i < 10; ++i) {
            const std::string n = std::to_string(i + 1);
            rows.push_back({"f" + n, "F" + n, fmt_cplx(v.f[i], digits)});
        }
        rows.push_back(
            {"f_aggregate", "F (4*sum|Fi|)", fmt_double(v.f_aggregate, digits)});
        for (int i = 0; i < 3; ++i) {
            const std::string n = std::to_string(i + 1);
            rows.push_back({"d" + n, "D" + n, fmt_cplx(v.d[i], digits)});
        }
    }

    if (machine) {
        for (const Row& r : rows) out << r.key << '\t' << r.value << '\n';
    } else {
        out << "state: " << format_ket(ps) << "\n";
        for (const Row& r : rows) {
            if (r.key == "carrier")
                out << r.label << ": " << r.value << "\n";
            else
                out << r.label << " = " << r.value << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const ParsedState& ps, bool exact, double tol, bool machine,
                 std::ostream& out) {
    require_four_qubit_arg(ps, "classify");
    const Signature sig = exact ? signature(exact_numerator(ps, "classify"))
                                : signature(ps.value, tol);
    const CertifyResult cert = certify_true_entanglement(sig);
    const std::vector<std::string> matches = match_classes(sig);

    std::vector<int> f_zero;
    std::vector<int> d_zero;
    for (int i = 0; i < 10; ++i)
        if (sig.fi_zero[static_cast<std::size_t>(i)]) f_zero.push_back(i + 1);
    for (int i = 0; i < 3; ++i)
        if (sig.di_zero[static_cast<std::size_t>(i)]) d_zero.push_back(i + 1);

    int condition = 0;
    switch (cert.condition) {
        case Certification::kCondition1: condition = 1; break;
        case Certification::kCondition2: condition = 2; break;
        case Certification::kCondition3: condition = 3; break;
        case Certification::kNotCertified: condition = 0; break;
    }

    if (machine) {
        out << "carrier\t" << (sig.exact ? "exact" : "floating") << '\n';
        if (!sig.exact)
            out << "tolerance\t" << fmt_double(sig.tolerance, kMachineDigits)
                << '\n';
        out << "iv_zero\t" << (sig.iv_zero ? 1 : 0) << '\n';
        out << "f_aggregate_zero\t" << (sig.f_aggregate_zero ? 1 : 0) << '\n';
        out << "f_zero\t" << join_ints(f_zero) << '\n';
        out << "d_zero\t" << join_ints(d_zero) << '\n';
        out << "rel_f9_eq_f10\t" << (sig.rel_f9_eq_f10 ? 1 : 0) << '\n';
        out << "rel_f1f2_eq_f9sq\t" << (sig.rel_f1f2_eq_f9sq ? 1 : 0) << '\n';
        out << "rel_f3f4_eq_f9sq\t" << (sig.rel_f3f4_eq_f9sq ? 1 : 0) << '\n';
        out << "certified\t" << condition << '\n';
        if (cert.certified()) out << "witness\t" << cert.witness << '\n';
        out << "matches\t" << (matches.empty() ? "none" : join(matches, ","))
            << '\n';
    } else {
        out << "state: " << format_ket(ps) << "\n";
        out << "carrier: " << (sig.exact ? "exact" : "floating");
        if (!sig.exact)
            out << " (tolerance " << fmt_double(sig.tolerance, 6) << ")";
        out << "\n";
        out << "IV: " << (sig.iv_zero ? "zero" : "nonzero") << "\n";
        out << "aggregate F: " << (sig.f_aggregate_zero ? "zero" : "positive")
            << "\n";
        out << "F zero at: " << join_ints(f_zero) << "\n";
        out << "D zero at: " << join_ints(d_zero) << "\n";
        out << "F9 = F10: " << (sig.rel_f9_eq_f10 ? "yes" : "no") << "\n";
        out << "F1*F2 = F9^2: " << (sig.rel_f1f2_eq_f9sq ? "yes" : "no") << "\n";
        out << "F3*F4 = F9^2: " << (sig.rel_f3f4_eq_f9sq ? "yes" : "no") << "\n";
        if (cert.certified())
            out << "true entanglement: certified — " << cert.witness << "\n";
        else
            out << "true entanglement: not certified (the three conditions are "
                   "sufficient only)\n";
        out << "consistent classes: "
            << (matches.empty() ? "none" : join(matches, ", ")) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog_list(bool machine, std::ostream& out) {
    for (const std::string& name : class_names()) {
        const NamedState rep = representative(name);
        const std::string expr =
            rep.exact.has_value() ? format_ket(*rep.exact) : format_ket(rep.state);
        if (machine)
            out << name << '\t' << expr << '\n';
        else
            out << std::left << std::setw(12) << name << "  " << expr << "\n";
    }
    return kExitOk;
}

int cmd_catalog_show(const std::string& name, bool machine, std::ostream& out) {
    const auto& known = property_class_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
        throw UsageError("unknown class name: " + name);

    const ClassProperties props = class_properties(name);
    const auto& reps = class_names();
    const bool has_rep =
        std::find(reps.begin(), reps.end(), name) != reps.end();

    std::optional<NamedState> rep;
    std::optional<StatePattern> pattern;
    if (has_rep) {
        rep = representative(name);
        pattern = state_pattern(name);
    }

    std::vector<std::string> pair_texts;
    std::vector<std::string> pair_keys;
    for (const auto& [i, j] : props.f_nonzero_pairs) {
        pair_texts.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                             ")");
        pair_keys.push_back(std::to_string(i) + "-" + std::to_string(j));
    }
    std::vector<std::string> relation_texts;
    for (Relation r : props.relations) relation_texts.push_back(relation_text(r));
    std::vector<int> rep_d_nonzero;
    std::vector<int> rep_f_nonzero;
    if (pattern.has_value()) {
        for (int i = 0; i < 3; ++i)
            if (pattern->d_nonzero[static_cast<std::size_t>(i)])
                rep_d_nonzero.push_back(i + 1);
        rep_f_nonzero = pattern->f_nonzero;
    }

    if (machine) {
        out << "name\t" << props.name << '\n';
        if (rep.has_value()) {
            const std::string expr = rep->exact.has_value()
                                         ? format_ket(*rep->exact)
                                         : format_ket(rep->state);
            out << "expression\t" << expr << '\n';
        }
        out << "iv_zero\t" << (props.iv_zero ? 1 : 0) << '\n';
        out << "f_positive\t" << (props.f_positive ? 1 : 0) << '\n';
        for (int i = 0; i < 3; ++i)
            out << "d" << i + 1 << '\t'
                << (props.d_flags[static_cast<std::size_t>(i)] == DFlag::kZero
                        ? "zero"
                        : "opt")
                << '\n';
        out << "f_zero\t" << join_ints(props.f_zero_set) << '\n';
        out << "f_pairs\t" << (pair_keys.empty() ? "none" : join(pair_keys, ","))
            << '\n';
        out << "relations\t"
            << (relation_texts.empty() ? "none" : join(relation_texts, ","))
            << '\n';
        out << "conditionals\t" << join_ints(props.conditionals) << '\n';
        if (pattern.has_value()) {
            out << "rep_d_nonzero\t" << join_ints(rep_d_nonzero) << '\n';
            out << "rep_f_nonzero\t" << join_ints(rep_f_nonzero) << '\n';
        }
    } else {
        out << "name: " << props.name << "\n";
        if (rep.has_value()) {
            const std::string expr = rep->exact.has_value()
                                         ? format_ket(*rep->exact)
                                         : format_ket(rep->state);
            out << "expression: " << expr << "\n";
        }
        out << "IV: " << (props.iv_zero ? "zero" : "nonzero") << "\n";
        out << "aggregate F: " << (props.f_positive ? "positive" : "zero")
            << "\n";
        out << "D flags:";
        for (int i = 0; i < 3; ++i)
            out << (i == 0 ? " " : ", ") << "D" << i + 1 << " "
                << (props.d_flags[static_cast<std::size_t>(i)] == DFlag::kZero
                        ? "zero"
                        : "opt");
        out << "\n";
        out << "F forced zero: " << join_ints(props.f_zero_set) << "\n";
        out << "F nonzero pairs: "
            << (pair_texts.empty() ? "none" : join(pair_texts, ", ")) << "\n";
        out << "relations: "
            << (relation_texts.empty() ? "none" : join(relation_texts, ", "))
            << "\n";
        if (props.conditionals.empty()) {
            out << "conditionals: none\n";
        } else {
            for (int c : props.conditionals)
                out << "conditional #" << c << ": " << conditional_text(c)
                    << "\n";
        }
        if (pattern.has_value()) {
            out << "representative D nonzero: " << join_ints(rep_d_nonzero)
                << "\n";
            out << "representative F nonzero: " << join_ints(rep_f_nonzero)
                << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// match

int cmd_match(const ParsedState& a, const ParsedState& b, bool exact,
              double tol, bool machine, std::ostream& out) {
    require_four_qubit_arg(a, "match");
    require_four_qubit_arg(b, "match");
    const DistinguishResult r =
        exact ? distinguish_states(exact_numerator(a, "match"),
                                   exact_numerator(b, "match"))
              : distinguish_states(a.value, b.value, tol);

    if (machine) {
        out << "verdict\t" << (r.provably_inequivalent ? "inequivalent" : "undecided")
            << '\n';
        out << "reason\t" << r.reason << '\n';
    } else {
        out << "state A: " << format_ket(a) << "\n";
        out << "state B: " << format_ket(b) << "\n";
        out << "verdict: "
            << (r.provably_inequivalent ? "provably SLOCC-inequivalent"
                                        : "undecided")
            << "\n";
        out << "reason: " << r.reason << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify tables

void check_float_sample(const ClassProperties& props, const Signature& sig,
                        std::uint64_t seed, std::vector<Violation>* out) {
    auto add = [&](const std::string& property, const std::string& values) {
        out->push_back(Violation{seed, property, values});
    };
    if (sig.iv_zero != props.iv_zero)
        add("IV flag", std::string("expected ") +
                           (props.iv_zero ? "zero" : "nonzero"));
    if (sig.f_aggregate_zero == props.f_positive)
        add("aggregate F flag",
            std::string("expected ") + (props.f_positive ? "positive" : "zero"));
    for (int idx : props.f_zero_set)
        if (!sig.fi_zero[static_cast<std::size_t>(idx - 1)])
            add("F" + std::to_string(idx), "expected zero");
    for (int i = 0; i < 3; ++i)
        if (props.d_flags[static_cast<std::size_t>(i)] == DFlag::kZero &&
            !sig.di_zero[static_cast<std::size_t>(i)])
            add("D" + std::to_string(i + 1), "expected zero");
    for (const auto& [i, j] : props.f_nonzero_pairs)
        if (sig.fi_zero[static_cast<std::size_t>(i - 1)] &&
            sig.fi_zero[static_cast<std::size_t>(j - 1)])
            add("|F" + std::to_string(i) + "|+|F" + std::to_string(j) + "|",
                "expected nonzero");
    for (Relation r : props.relations) {
        const bool holds = r == Relation::kF9EqF10      ? sig.rel_f9_eq_f10
                           : r == Relation::kF1F2EqF9Sq ? sig.rel_f1f2_eq_f9sq
                                                        : sig.rel_f3f4_eq_f9sq;
        if (!holds) add(relation_text(r), "relation violated");
    }
}

struct TablesArgs {
    int samples = 100;
    std::uint64_t seed = 1;
    bool use_float = false;
    double tolerance = kDefaultTolerance;
    std::string class_filter;
    bool machine = false;
};

int cmd_verify_tables(const TablesArgs& a, std::ostream& out) {
    std::vector<std::string> classes;
    const auto& all = property_class_names();
    if (!a.class_filter.empty()) {
        if (std::find(all.begin(), all.end(), a.class_filter) == all.end())
            throw UsageError("unknown class name: " + a.class_filter);
        classes.push_back(a.class_filter);
    } else {
        classes = all;
    }

    print_header(out, a.machine, "verify tables",
                 {{"samples", std::to_string(a.samples)},
                  {"seed", std::to_string(a.seed)},
                  {"carrier", a.use_float ? "floating" : "exact"}});

    int failures = 0;
    const auto& targeted = targeted_conditional_class_names();
    for (const std::string& cls : classes) {
        const ClassProperties props = class_properties(cls);

        if (a.use_float) {
            std::vector<Violation> bad;
            for (const OrbitSampleF& smp :
                 sample_orbit_floating(cls, a.samples, a.seed))
                check_float_sample(props, signature(smp.state, a.tolerance),
                                   smp.seed, &bad);
            const bool ok = bad.empty();
            failures += ok ? 0 : 1;
            status_line(out, a.machine, cls, "zero_pattern", ok);
            if (!ok && !a.machine) print_violations(out, bad);
            continue;
        }

        const OrbitSampleReport zp =
            verify_class_zero_pattern(cls, a.samples, a.seed);
        const bool zp_ok = zp.violations.empty();
        failures += zp_ok ? 0 : 1;
        status_line(out, a.machine, cls, "zero_pattern", zp_ok);
        if (!zp_ok && !a.machine) print_violations(out, zp.violations);

        if (!zp.opt_witnesses.empty()) {
            const bool wit_ok = std::all_of(
                zp.opt_witnesses.begin(), zp.opt_witnesses.end(),
                [](const OptWitness& w) { return w.complete(); });
            failures += wit_ok ? 0 : 1;
            status_line(out, a.machine, cls, "opt_witnesses", wit_ok,
                        "incomplete");
            if (!wit_ok && !a.machine) print_incomplete_witnesses(out, zp);
        }

        if (!props.conditionals.empty()) {
            const OrbitSampleReport cu = verify_conditionals(
                cls, /*targeted=*/false, a.samples, a.seed + kSeedStride);
            const bool cu_ok = cu.passed();
            failures += cu_ok ? 0 : 1;
            status_line(out, a.machine, cls, "conditionals", cu_ok);
            if (!cu_ok && !a.machine) print_violations(out, cu.violations);
        }

        if (std::find(targeted.begin(), targeted.end(), cls) != targeted.end()) {
            const OrbitSampleReport ct = verify_conditionals(
                cls, /*targeted=*/true, a.samples, a.seed + 2 * kSeedStride);
            const bool ct_ok = ct.passed();
            failures += ct_ok ? 0 : 1;
            status_line(out, a.machine, cls, "targeted_conditionals", ct_ok);
            if (!ct_ok && !a.machine) print_violations(out, ct.violations);
        }
    }

    print_result(out, a.machine, failures);
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// verify identities

struct IdentitiesArgs {
    int trials = 50;
    std::uint64_t seed = 1;
    std::string identity_filter;
    bool machine = false;
};

int cmd_verify_identities(const IdentitiesArgs& a, std::ostream& out) {
    std::vector<std::string> names;
    const auto& all = identity_names();
    if (!a.identity_filter.empty()) {
        if (std::find(all.begin(), all.end(), a.identity_filter) == all.end())
            throw UsageError("unknown identity: " + a.identity_filter);
        names.push_back(a.identity_filter);
    } else {
        names = all;
    }

    print_header(out, a.machine, "verify identities",
                 {{"trials", std::to_string(a.trials)},
                  {"seed", std::to_string(a.seed)}});

    int failures = 0;
    for (const std::string& id : names) {
        const IdentityReport rep = verify_identity(id, a.trials, a.seed);
        const bool expect_fail = id == "iv_negative_control";
        const bool ok = expect_fail ? !rep.passed : rep.passed;
        failures += ok ? 0 : 1;
        status_line(out, a.machine, id,
                    expect_fail ? "fails_as_expected" : "zero_residual", ok);
        if (!ok && !a.machine) {
            if (expect_fail)
                out << "      corrupted law unexpectedly held on every trial\n";
            else
                out << "      " << rep.counterexample << "\n";
        }
    }

    print_result(out, a.machine, failures);
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// verify oracles

struct OraclesArgs {
    int trials = 100;
    std::uint64_t seed = 1;
    std::string class_filter;
    bool machine = false;
};

int cmd_verify_oracles(const OraclesArgs& a, std::ostream& out) {
    std::vector<std::string> classes;
    const auto& all = oracle_class_names();
    if (!a.class_filter.empty()) {
        if (std::find(all.begin(), all.end(), a.class_filter) == all.end())
            throw UsageError("no closed-form oracle for class: " +
                             a.class_filter);
        classes.push_back(a.class_filter);
    } else {
        classes = all;
    }

    print_header(out, a.machine, "verify oracles",
                 {{"trials", std::to_string(a.trials)},
                  {"seed", std::to_string(a.seed)}});

    int failures = 0;
    for (const std::string& cls : classes) {
        const OrbitSampleReport rep = verify_appendix_oracle(cls, a.trials, a.seed);
        const bool ok = rep.passed();
        failures += ok ? 0 : 1;
        status_line(out, a.machine, cls, "closed_form", ok);
        if (!ok && !a.machine) print_violations(out, rep.violations);
    }

    print_result(out, a.machine, failures);
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(int n, const std::vector<std::string>& t_args, bool symbolic,
              bool machine, std::ostream& out) {
    std::map<int, BigInt> known;
    for (const std::string& tok : t_args) {
        const std::size_t eq = tok.find('=');
        bool valid = eq != std::string::npos && eq > 0;
        int m = 0;
        BigInt value;
        if (valid) {
            try {
                std::size_t used = 0;
                m = std::stoi(tok.substr(0, eq), &used);
                valid = used == eq;
                if (valid) value = BigInt(tok.substr(eq + 1));
            } catch (const std::exception&) {
                valid = false;
            }
        }
        if (!valid)
            throw UsageError("invalid --t argument '" + tok +
                             "'; expected m=value (e.g. --t 4=28)");
        known[m] = value;
    }

    ClassCount result;
    try {
        result = degenerate_count(n, known, symbolic);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    if (machine)
        out << "d(" << n << ")\t" << result.to_string() << '\n';
    else
        out << result.to_string() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// nf

int cmd_nf(const ParsedState& ps, bool machine, std::ostream& out) {
    const int n = ps.qubits();
    if (n < 2 || n > 8)
        throw UsageError("nf supports 2..8 qubits; parsed " +
                         std::to_string(n) + " qubits");
    const int digits = machine ? kMachineDigits : kHumanDigits;
    const double value = f_n(ps.value);
    std::optional<bool> exact_zero;
    if (ps.exact()) exact_zero = f_n_is_zero(*ps.numerator);

    if (machine) {
        out << "qubits\t" << n << '\n';
        out << "f\t" << fmt_double(value, digits) << '\n';
        if (exact_zero.has_value())
            out << "f_zero_exact\t" << (*exact_zero ? 1 : 0) << '\n';
        if (n == 4) {
            const auto [fn, aggregate] = f4_diagnostic(ps.value);
            (void)fn;
            out << "f_aggregate\t" << fmt_double(aggregate, digits) << '\n';
        }
    } else {
        out << "state: " << format_ket(ps) << "\n";
        out << "qubits: " << n << "\n";
        out << "f = " << fmt_double(value, digits);
        if (exact_zero.has_value())
            out << (*exact_zero ? "  (exactly zero)" : "  (exactly nonzero)");
        out << "\n";
        if (n == 4) {
            const auto [fn, aggregate] = f4_diagnostic(ps.value);
            (void)fn;
            out << "four-qubit aggregate F = " << fmt_double(aggregate, digits)
                << "  (reported side by side; not assumed equal to f)\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Entry point

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "SLOCC invariants, entanglement class tables, and randomized exact "
        "verification for four-qubit pure states"};
    app.name("sloccinv");
    app.require_subcommand(1);

    // compute
    std::string compute_state;
    bool compute_exact = false;
    bool compute_machine = false;
    std::optional<int> compute_qubits;
    CLI::App* compute = app.add_subcommand(
        "compute", "Evaluate IV, F1..F10, the aggregate F, and D1..D3");
    compute->add_option("state", compute_state, "ket expression or @file")
        ->required();
    compute->add_flag("--exact", compute_exact,
                      "evaluate on the exact Gaussian-rational carrier");
    compute->add_flag("--machine", compute_machine, "emit key<TAB>value lines");
    compute->add_option("--qubits", compute_qubits,
                        "declared qubit count for inline expressions");

    // classify
    std::string classify_state;
    bool classify_exact = false;
    bool classify_machine = false;
    double classify_tol = kDefaultTolerance;
    std::optional<int> classify_qubits;
    CLI::App* classify = app.add_subcommand(
        "classify",
        "Zero-pattern signature, certification verdict, and consistent classes");
    classify->add_option("state", classify_state, "ket expression or @file")
        ->required();
    classify->add_flag("--exact", classify_exact,
                       "use exact zero tests instead of the tolerance");
    classify->add_option("--tolerance", classify_tol,
                         "zero threshold after unit normalization")
        ->capture_default_str();
    classify->add_flag("--machine", classify_machine,
                       "emit key<TAB>value lines");
    classify->add_option("--qubits", classify_qubits,
                         "declared qubit count for inline expressions");

    // catalog
    CLI::App* catalog = app.add_subcommand(
        "catalog", "Canonical class states and their encoded properties");
    catalog->require_subcommand(1);
    bool catalog_list_machine = false;
    CLI::App* catalog_list = catalog->add_subcommand(
        "list", "Names and expressions of the 28 canonical states");
    catalog_list->add_flag("--machine", catalog_list_machine,
                           "emit name<TAB>expression lines");
    std::string catalog_show_name;
    bool catalog_show_machine = false;
    CLI::App* catalog_show = catalog->add_subcommand(
        "show", "Canonical data and property row of one class");
    catalog_show->add_option("name", catalog_show_name, "class name")
        ->required();
    catalog_show->add_flag("--machine", catalog_show_machine,
                           "emit key<TAB>value lines");

    // match
    std::vector<std::string> match_states;
    bool match_exact = false;
    bool match_machine = false;
    double match_tol = kDefaultTolerance;
    std::optional<int> match_qubits;
    CLI::App* match_cmd = app.add_subcommand(
        "match", "IV-based SLOCC orbit separation test for two states");
    match_cmd
        ->add_option("states", match_states,
                     "two ket expressions or @file paths")
        ->required()
        ->expected(2);
    match_cmd->add_flag("--exact", match_exact,
                        "use exact zero tests instead of the tolerance");
    match_cmd
        ->add_option("--tolerance", match_tol,
                     "zero threshold after unit normalization")
        ->capture_default_str();
    match_cmd->add_flag("--machine", match_machine, "emit key<TAB>value lines");
    match_cmd->add_option("--qubits", match_qubits,
                          "declared qubit count for inline expressions");

    // verify
    CLI::App* verify = app.add_subcommand(
        "verify",
        "Randomized exact verification of tables, laws, and closed forms");
    verify->require_subcommand(1);

    TablesArgs tables_args;
    CLI::App* verify_tables = verify->add_subcommand(
        "tables",
        "Class-table zero patterns, opt witnesses, and conditional properties");
    verify_tables
        ->add_option("--samples", tables_args.samples, "orbit samples per class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_tables
        ->add_option("--seed", tables_args.seed,
                     "RNG seed, echoed in the output header")
        ->capture_default_str();
    bool tables_exact_flag = false;
    CLI::Option* opt_exact = verify_tables->add_flag(
        "--exact", tables_exact_flag, "exact Gaussian-rational carrier (default)");
    CLI::Option* opt_float = verify_tables->add_flag(
        "--float", tables_args.use_float,
        "floating carrier, validating the zero-tolerance policy");
    opt_exact->excludes(opt_float);
    verify_tables
        ->add_option("--tolerance", tables_args.tolerance,
                     "zero threshold for --float")
        ->capture_default_str();
    verify_tables->add_option("--class", tables_args.class_filter,
                              "restrict to one class");
    verify_tables->add_flag("--machine", tables_args.machine,
                            "emit class<TAB>property<TAB>status lines");

    IdentitiesArgs identities_args;
    CLI::App* verify_identities = verify->add_subcommand(
        "identities",
        "Transformation-law identities at random exact points, plus a "
        "negative control");
    verify_identities
        ->add_option("--trials", identities_args.trials, "trials per identity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_identities
        ->add_option("--seed", identities_args.seed,
                     "RNG seed, echoed in the output header")
        ->capture_default_str();
    verify_identities->add_option("--identity",
                                  identities_args.identity_filter,
                                  "restrict to one law");
    verify_identities->add_flag("--machine", identities_args.machine,
                                "emit identity<TAB>property<TAB>status lines");

    OraclesArgs oracles_args;
    CLI::App* verify_oracles = verify->add_subcommand(
        "oracles",
        "Closed-form invariant predictions against direct evaluation");
    verify_oracles
        ->add_option("--trials", oracles_args.trials,
                     "random operations per class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_oracles
        ->add_option("--seed", oracles_args.seed,
                     "RNG seed, echoed in the output header")
        ->capture_default_str();
    verify_oracles->add_option("--class", oracles_args.class_filter,
                               "restrict to one oracle class");
    verify_oracles->add_flag("--machine", oracles_args.machine,
                             "emit class<TAB>property<TAB>status lines");

    // count
    int count_n = 0;
    std::vector<std::string> count_t;
    bool count_symbolic = false;
    bool count_machine = false;
    CLI::App* count = app.add_subcommand(
        "count", "Number of degenerate SLOCC classes of n qubits");
    count->add_option("n", count_n, "total number of qubits (n >= 2)")
        ->required();
    count->add_option("--t", count_t,
                      "known true-class count as m=value (repeatable)");
    count->add_flag("--symbolic", count_symbolic,
                    "leave unknown t(m) symbolic in the output");
    count->add_flag("--machine", count_machine, "emit key<TAB>value lines");

    // nf
    std::string nf_state;
    bool nf_machine = false;
    std::optional<int> nf_qubits;
    CLI::App* nf = app.add_subcommand(
        "nf", "Generalized n-qubit invariant f (2 <= n <= 8)");
    nf->add_option("state", nf_state, "ket expression or @file")->required();
    nf->add_flag("--machine", nf_machine, "emit key<TAB>value lines");
    nf->add_option("--qubits", nf_qubits,
                   "declared qubit count for inline expressions");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("sloccinv");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(load_state_arg(compute_state, compute_qubits),
                               compute_exact, compute_machine, out);
        if (classify->parsed())
            return cmd_classify(load_state_arg(classify_state, classify_qubits),
                                classify_exact, classify_tol, classify_machine,
                                out);
        if (catalog->parsed()) {
            if (catalog_list->parsed())
                return cmd_catalog_list(catalog_list_machine, out);
            return cmd_catalog_show(catalog_show_name, catalog_show_machine,
                                    out);
        }
        if (match_cmd->parsed())
            return cmd_match(load_state_arg(match_states[0], match_qubits),
                             load_state_arg(match_states[1], match_qubits),
                             match_exact, match_tol, match_machine, out);
        if (verify->parsed()) {
            if (verify_tables->parsed())
                return cmd_verify_tables(tables_args, out);
            if (verify_identities->parsed())
                return cmd_verify_identities(identities_args, out);
            return cmd_verify_oracles(oracles_args, out);
        }
        if (count->parsed())
            return cmd_count(count_n, count_t, count_symbolic, count_machine,
                             out);
        if (nf->parsed())
            return cmd_nf(load_state_arg(nf_state, nf_qubits), nf_machine, out);
    } catch (const KetParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    err << "error: no subcommand selected\n";
    return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    return run_impl(args, out, err);
}

int run_cli(const std::vector<std::string>& args) {
    return run_impl(args, std::cout, std::cerr);
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_impl(args, std::cout, std::cerr);
}

}  // namespace slocc
