#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "slocc/catalog.hpp"
#include "slocc/classifier.hpp"
#include "slocc/orbit_verify.hpp"
#include "slocc/state.hpp"
#include "test_util.hpp"

using slocc::Certification;
using slocc::GaussianRational;
using slocc::Signature;
using slocc::StateF;
using slocc::StateQ;
using slocc_test::support4;

namespace {

Signature rep_signature(const std::string& name) {
    return slocc::signature(*slocc::representative(name).exact);
}

bool contains(const std::vector<std::string>& names, const std::string& n) {
    return std::count(names.begin(), names.end(), n) > 0;
}

}  // namespace

TEST_CASE("exact signature of GHZ") {
    const Signature sig = rep_signature("GHZ");
    CHECK(sig.exact);
    CHECK(sig.tolerance == 0.0);
    CHECK_FALSE(sig.iv_zero);
    CHECK_FALSE(sig.f_aggregate_zero);
    for (int i = 0; i < 10; ++i)
        CHECK(sig.fi_zero[static_cast<std::size_t>(i)] == (i != 8));
    for (bool dz : sig.di_zero) CHECK(dz);
    CHECK_FALSE(sig.rel_f9_eq_f10);  // F9 = 1/4, F10 = 0
}

TEST_CASE("exact signature of W: everything vanishes") {
    const Signature sig = rep_signature("W");
    CHECK(sig.iv_zero);
    CHECK(sig.f_aggregate_zero);
    for (bool fz : sig.fi_zero) CHECK(fz);
    for (bool dz : sig.di_zero) CHECK(dz);
    // All relations hold trivially at zero.
    CHECK(sig.rel_f9_eq_f10);
    CHECK(sig.rel_f1f2_eq_f9sq);
    CHECK(sig.rel_f3f4_eq_f9sq);
}

TEST_CASE("exact signature of varpi4 satisfies its equality relations") {
    const Signature sig = rep_signature("varpi4");
    CHECK(sig.rel_f9_eq_f10);
    CHECK(sig.rel_f1f2_eq_f9sq);
    CHECK(sig.rel_f3f4_eq_f9sq);
}

TEST_CASE("floating signatures agree with exact ones on representatives") {
    for (const char* name : {"GHZ", "C4", "pi4", "rho4", "psi4"}) {
        CAPTURE(name);
        const Signature exact = rep_signature(name);
        const Signature floating =
            slocc::signature(slocc::representative(name).state);
        CHECK_FALSE(floating.exact);
        CHECK(floating.tolerance == slocc::kDefaultTolerance);
        CHECK(floating.iv_zero == exact.iv_zero);
        CHECK(floating.f_aggregate_zero == exact.f_aggregate_zero);
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(floating.fi_zero[i] == exact.fi_zero[i]);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(floating.di_zero[i] == exact.di_zero[i]);
    }
}

TEST_CASE("signature rejects the zero state") {
    StateQ zq;
    zq.qubits = 4;
    zq.amps.assign(16, GaussianRational{});
    CHECK_THROWS_AS(slocc::signature(zq), std::invalid_argument);

    StateF zf;
    zf.qubits = 4;
    zf.amps.assign(16, slocc::Cplx{});
    CHECK_THROWS_AS(slocc::signature(zf), std::invalid_argument);
}

TEST_CASE("certification fires the documented condition per class") {
    // C4: IV != 0 but F1..F8 all vanish, so only the two-D condition fires.
    const auto c4 = slocc::certify_true_entanglement(rep_signature("C4"));
    CHECK(c4.condition == Certification::kCondition3);
    CHECK(c4.certified());

    // psi4: IV = 0 with D1 != 0.
    const auto psi = slocc::certify_true_entanglement(rep_signature("psi4"));
    CHECK(psi.condition == Certification::kCondition1);

    // pi4: IV != 0 and F1 != 0.
    const auto pi = slocc::certify_true_entanglement(rep_signature("pi4"));
    CHECK(pi.condition == Certification::kCondition2);
    CHECK(pi.witness.find("F1") != std::string::npos);

    // GHZ satisfies none of the three sufficient conditions.
    const auto ghz = slocc::certify_true_entanglement(rep_signature("GHZ"));
    CHECK(ghz.condition == Certification::kNotCertified);
    CHECK_FALSE(ghz.certified());

    // A product basis state is never certified.
    const auto basis =
        slocc::certify_true_entanglement(slocc::signature(support4({0})));
    CHECK_FALSE(basis.certified());
}

TEST_CASE("match_classes keeps the true class and filters contradictions") {
    CHECK(contains(slocc::match_classes(rep_signature("rho4")), "rho4"));

    const auto w_matches = slocc::match_classes(rep_signature("W"));
    CHECK(contains(w_matches, "W"));
    CHECK(contains(w_matches, "WxQ1"));
    CHECK(contains(w_matches, "Separable"));
    CHECK(contains(w_matches, "TwoQubitsOnly"));
    CHECK_FALSE(contains(w_matches, "GHZ"));

    // IV != 0 with F = 0 singles out the GHZ-pair rows among the product
    // tables; the 1-2/3-4 pairing is the only consistent one for this state.
    const StateQ pair = slocc::degenerate_state_exact(
        slocc::DegenerateKind::kGhzPair, GaussianRational(1),
        GaussianRational(0), 2);
    const auto pair_matches = slocc::match_classes(slocc::signature(pair));
    CHECK(pair_matches == std::vector<std::string>{"GHZ12xGHZ34"});
}

TEST_CASE("match_classes contains the class on orbit samples") {
    for (const char* name : {"GHZ", "C4", "chi4"}) {
        CAPTURE(name);
        for (const auto& sample : slocc::sample_orbit(name, 10, 7)) {
            const auto matches = slocc::match_classes(slocc::signature(sample.state));
            CHECK(contains(matches, name));
        }
    }
}

TEST_CASE("distinguish_states separates orbits by vanishing IV only") {
    const StateF ghz = slocc::representative("GHZ").state;
    const StateF w = slocc::representative("W").state;
    const StateF c4 = slocc::representative("C4").state;

    const auto gw = slocc::distinguish_states(ghz, w);
    CHECK(gw.provably_inequivalent);
    CHECK(gw.reason.find("IV") != std::string::npos);

    const auto gc = slocc::distinguish_states(ghz, c4);
    CHECK_FALSE(gc.provably_inequivalent);
    CHECK(gc.reason.find("undecided") != std::string::npos);

    // Exact overload.
    const auto exact = slocc::distinguish_states(
        *slocc::representative("GHZ").exact, *slocc::representative("W").exact);
    CHECK(exact.provably_inequivalent);
}

TEST_CASE("distinguish_states is sound under random local operations") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const StateF s = slocc::random_state(4, rng);
        const auto op = slocc::random_local_operation(4, rng);
        const auto verdict =
            slocc::distinguish_states(s, slocc::apply_local(s, op));
        CHECK_FALSE(verdict.provably_inequivalent);
    }
    // Exact carrier: same soundness at exact random points.
    for (int trial = 0; trial < 10; ++trial) {
        const StateQ s = slocc::random_exact_state(rng);
        const auto op = slocc::random_exact_operation(4, rng);
        const auto verdict =
            slocc::distinguish_states(s, slocc::apply_local(s, op));
        CHECK_FALSE(verdict.provably_inequivalent);
    }
}
