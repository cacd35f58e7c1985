#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slocc/catalog.hpp"
#include "slocc/invariants4.hpp"
#include "slocc/state.hpp"
#include "test_util.hpp"

using slocc::ClassProperties;
using slocc::Cplx;
using slocc::DegenerateKind;
using slocc::DFlag;
using slocc::GaussianRational;
using slocc::NamedState;
using slocc::Rational;
using slocc::StateF;
using slocc::StateQ;
using slocc_test::sparse4;
using slocc_test::support4;

namespace {

std::set<std::size_t> support_of(const StateQ& s) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!s.amps[i].is_zero()) out.insert(i);
    return out;
}

std::set<std::size_t> support_of(const StateF& s, double tol = 1e-12) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (std::abs(s.amps[i]) > tol) out.insert(i);
    return out;
}

}  // namespace

TEST_CASE("the catalog lists 28 true-entanglement classes in table order") {
    const auto& names = slocc::class_names();
    CHECK(names.size() == 28);
    CHECK(names[0] == "GHZ");
    CHECK(names[1] == "W");
    CHECK(names[2] == "C4");
    CHECK(std::count(names.begin(), names.end(), "varpi4") == 1);
    CHECK(std::count(names.begin(), names.end(), "iota4") == 1);
}

TEST_CASE("canonical representatives carry exact amplitudes") {
    for (const auto& name : slocc::class_names()) {
        CAPTURE(name);
        const NamedState rep = slocc::representative(name);
        REQUIRE(rep.exact.has_value());
        CHECK(rep.name == name);
        CHECK(rep.state.qubits == 4);
        CHECK_FALSE(rep.source.empty());
        // The floating view mirrors the unnormalized exact numerator.
        const StateF mirror = slocc::to_floating(*rep.exact);
        for (std::size_t i = 0; i < 16; ++i)
            CHECK(std::abs(rep.state.amps[i] - mirror.amps[i]) < 1e-12);
    }
}

TEST_CASE("representative amplitude patterns match the printed forms") {
    CHECK(support_of(*slocc::representative("C4").exact) ==
          std::set<std::size_t>{3, 5, 6, 9, 10, 12});
    for (std::size_t i : {3u, 5u, 6u, 9u, 10u, 12u})
        CHECK(slocc::representative("C4").exact->amps[i] == GaussianRational(1));

    CHECK(support_of(*slocc::representative("omega4").exact) ==
          std::set<std::size_t>{0, 5, 8, 14});

    const StateQ kappa = *slocc::representative("kappa4").exact;
    CHECK(kappa.amps == sparse4({{0, 1}, {3, 1}, {10, 1}, {15, -1}}).amps);
}

TEST_CASE("representatives reproduce the per-state zero patterns") {
    // The encoded per-state tables list which D components and which F
    // components are nonzero at each canonical representative; the evaluated
    // invariants must agree exactly.
    for (const auto& name : slocc::class_names()) {
        CAPTURE(name);
        const StateQ rep = *slocc::representative(name).exact;
        const slocc::StatePattern pat = slocc::state_pattern(name);

        const auto d = slocc::d_components(rep);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(!d[i].is_zero() == pat.d_nonzero[i]);

        const auto f = slocc::f_components(rep);
        std::vector<int> f_nonzero;
        for (int i = 0; i < 10; ++i)
            if (!f[static_cast<std::size_t>(i)].is_zero())
                f_nonzero.push_back(i + 1);
        CHECK(f_nonzero == pat.f_nonzero);
    }
}

TEST_CASE("class-level facts hold at the representatives") {
    for (const auto& name : slocc::class_names()) {
        CAPTURE(name);
        const StateQ rep = *slocc::representative(name).exact;
        const ClassProperties props = slocc::class_properties(name);
        CHECK(props.name == name);
        CHECK(slocc::iv(rep).is_zero() == props.iv_zero);
        CHECK(slocc::f_aggregate_is_zero(rep) == !props.f_positive);
        const auto f = slocc::f_components(rep);
        for (int idx : props.f_zero_set)
            CHECK(f[static_cast<std::size_t>(idx - 1)].is_zero());
        const auto d = slocc::d_components(rep);
        for (std::size_t i = 0; i < 3; ++i)
            if (props.d_flags[i] == DFlag::kZero) CHECK(d[i].is_zero());
    }
}

TEST_CASE("forced-zero entries never collide with asserted nonzero pairs") {
    for (const auto& name : slocc::property_class_names()) {
        CAPTURE(name);
        const ClassProperties props = slocc::class_properties(name);
        for (const auto& [a, b] : props.f_nonzero_pairs) {
            CHECK(std::count(props.f_zero_set.begin(), props.f_zero_set.end(),
                             a) == 0);
            CHECK(std::count(props.f_zero_set.begin(), props.f_zero_set.end(),
                             b) == 0);
        }
    }
}

TEST_CASE("property rows cover the true classes and the degenerate rows") {
    const auto& rows = slocc::property_class_names();
    CHECK(rows.size() == 41);
    for (std::size_t i = 0; i < 28; ++i)
        CHECK(rows[i] == slocc::class_names()[i]);
    for (const char* degenerate :
         {"GHZ123xQ4", "Q1xGHZ234", "WxQ1", "WxQ4", "GHZ12xGHZ34",
          "GHZ13xGHZ24", "GHZ14xGHZ23", "TwoQubitsOnly", "Separable"})
        CHECK(std::count(rows.begin(), rows.end(), degenerate) == 1);
}

TEST_CASE("selected property rows match the published tables") {
    const ClassProperties kappa = slocc::class_properties("kappa4");
    CHECK(kappa.d_flags[0] == DFlag::kOpt);
    CHECK(kappa.d_flags[1] == DFlag::kOpt);
    CHECK(kappa.d_flags[2] == DFlag::kZero);
    CHECK_FALSE(kappa.iv_zero);
    CHECK(kappa.conditionals == std::vector<int>{0});

    const ClassProperties rho = slocc::class_properties("rho4");
    CHECK(rho.f_zero_set == std::vector<int>{1, 2, 3, 4, 9, 10});
    CHECK(rho.f_nonzero_pairs ==
          std::vector<std::pair<int, int>>{{5, 6}, {7, 8}});

    const ClassProperties pair = slocc::class_properties("GHZ12xGHZ34");
    CHECK_FALSE(pair.iv_zero);
    CHECK_FALSE(pair.f_positive);
    CHECK(pair.f_zero_set.size() == 10);
    CHECK(pair.d_flags[0] == DFlag::kZero);
    CHECK(pair.d_flags[1] == DFlag::kOpt);
    CHECK(pair.d_flags[2] == DFlag::kZero);

    const ClassProperties w = slocc::class_properties("W");
    CHECK(w.iv_zero);
    CHECK_FALSE(w.f_positive);
}

TEST_CASE("degenerate product states have the stated supports") {
    // GHZ pair on qubits {1,2} times GHZ pair on {3,4}.
    const StateQ pair = slocc::degenerate_state_exact(
        DegenerateKind::kGhzPair, GaussianRational(1), GaussianRational(0), 2);
    CHECK(support_of(pair) == std::set<std::size_t>{0, 3, 12, 15});
    for (std::size_t i : {0u, 3u, 12u, 15u})
        CHECK(pair.amps[i] == GaussianRational(1));

    // GHZ on qubits {1,2,3} times (1|0> + 0|1>) on qubit 4.
    const StateQ triple = slocc::degenerate_state_exact(
        DegenerateKind::kGhzTripleTimesQubit, GaussianRational(1),
        GaussianRational(0), 4);
    CHECK(support_of(triple) == std::set<std::size_t>{0, 14});

    // W on qubits {2,3,4} times (1|0> + 0|1>) on qubit 1.
    const StateQ w3 = slocc::degenerate_state_exact(
        DegenerateKind::kWTimesQubit, GaussianRational(1), GaussianRational(0),
        1);
    CHECK(support_of(w3) == std::set<std::size_t>{1, 2, 4});

    // Entangled pair on {1,2}, qubit factor on 3, |0> on 4.
    const StateQ two = slocc::degenerate_state_exact(
        DegenerateKind::kTwoQubitsOnly, GaussianRational(1),
        GaussianRational(1), 1);
    CHECK(support_of(two) == std::set<std::size_t>{0, 2, 12, 14});

    const StateQ sep = slocc::degenerate_state_exact(
        DegenerateKind::kSeparable, GaussianRational(2), GaussianRational(3),
        1);
    CHECK(support_of(sep) == std::set<std::size_t>{0, 8});
}

TEST_CASE("degenerate floating and exact constructors agree") {
    for (const DegenerateKind kind :
         {DegenerateKind::kGhzTripleTimesQubit, DegenerateKind::kWTimesQubit,
          DegenerateKind::kGhzPair, DegenerateKind::kTwoQubitsOnly,
          DegenerateKind::kSeparable}) {
        const int pattern = kind == DegenerateKind::kGhzPair ? 2 : 1;
        const StateQ exact = slocc::degenerate_state_exact(
            kind, GaussianRational{Rational(2, 3)}, GaussianRational{0, 1},
            pattern);
        const StateF floating = slocc::degenerate_state(
            kind, Cplx(2.0 / 3.0, 0.0), Cplx(0.0, 1.0), pattern);
        const StateF mirror = slocc::to_floating(exact);
        for (std::size_t i = 0; i < 16; ++i)
            CHECK(std::abs(floating.amps[i] - mirror.amps[i]) < 1e-12);
    }
}

TEST_CASE("degenerate kinds map onto their property-table rows") {
    CHECK(slocc::degenerate_class_name(DegenerateKind::kGhzPair, 2) ==
          "GHZ12xGHZ34");
    CHECK(slocc::degenerate_class_name(DegenerateKind::kGhzPair, 3) ==
          "GHZ13xGHZ24");
    CHECK(slocc::degenerate_class_name(DegenerateKind::kGhzPair, 4) ==
          "GHZ14xGHZ23");
    CHECK(slocc::degenerate_class_name(
              DegenerateKind::kGhzTripleTimesQubit, 4) == "GHZ123xQ4");
    CHECK(slocc::degenerate_class_name(DegenerateKind::kWTimesQubit, 1) ==
          "WxQ1");
    CHECK(slocc::degenerate_class_name(DegenerateKind::kTwoQubitsOnly, 3) ==
          "TwoQubitsOnly");
    CHECK(slocc::degenerate_class_name(DegenerateKind::kSeparable, 1) ==
          "Separable");
}

TEST_CASE("parameterized families produce the printed patterns") {
    // a(|0>+|15>) + |3> + |5> + |6> at a = 0 collapses to {3, 5, 6}.
    const StateF f0 = slocc::family_state(slocc::Family::kLa203p1, Cplx{});
    CHECK(support_of(f0) == std::set<std::size_t>{3, 5, 6});

    // At a = 2 the quadratic invariant is -4 on the unnormalized state.
    const StateF f2 =
        slocc::family_state(slocc::Family::kLa203p1, Cplx(2.0, 0.0));
    CHECK(slocc::iv(f2).real() == doctest::Approx(-4.0));
    CHECK(std::abs(slocc::iv(f2).imag()) < 1e-12);

    // a = b = 0 leaves only the i/sqrt(2) tail on {1, 2, 7, 11}.
    const StateF ab0 = slocc::family_state(slocc::Family::kLab3, Cplx{}, Cplx{});
    CHECK(support_of(ab0) == std::set<std::size_t>{1, 2, 7, 11});
    const Cplx expected(0.0, 1.0 / std::sqrt(2.0));
    for (std::size_t i : {1u, 2u, 7u, 11u})
        CHECK(std::abs(ab0.amps[i] - expected) < 1e-12);

    // a(|0>+|5>+|10>+|15>) + i|1> + |6> - i|11> at a = 1.
    const StateF la4 = slocc::family_state(slocc::Family::kLa4, Cplx(1.0, 0.0));
    CHECK(support_of(la4) ==
          std::set<std::size_t>{0, 1, 5, 6, 10, 11, 15});
    CHECK(std::abs(la4.amps[1] - Cplx(0.0, 1.0)) < 1e-12);
    CHECK(std::abs(la4.amps[11] - Cplx(0.0, -1.0)) < 1e-12);
}

TEST_CASE("the conjectured state is unit norm with vanishing IV") {
    const NamedState c = slocc::conjecture_state();
    CHECK(c.name == "conjecture");
    CHECK_FALSE(c.exact.has_value());  // sqrt(2) amplitude is irrational
    CHECK(slocc::norm2(c.state) == doctest::Approx(1.0));
    CHECK(std::abs(slocc::iv(c.state)) < 1e-12);
    CHECK(support_of(c.state) == std::set<std::size_t>{1, 2, 4, 8, 15});
}

TEST_CASE("unknown names are rejected everywhere") {
    CHECK_THROWS_AS(slocc::representative("nope"), std::invalid_argument);
    CHECK_THROWS_AS(slocc::class_properties("nope"), std::invalid_argument);
    CHECK_THROWS_AS(slocc::state_pattern("nope"), std::invalid_argument);
    // Per-state patterns exist only for the 28 true classes.
    CHECK_THROWS_AS(slocc::state_pattern("Separable"), std::invalid_argument);
    CHECK_THROWS_AS(
        slocc::degenerate_state_exact(DegenerateKind::kGhzPair,
                                      GaussianRational(1), GaussianRational(0),
                                      7),
        std::invalid_argument);
}
