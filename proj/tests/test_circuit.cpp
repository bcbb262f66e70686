#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tse/circuit.hpp"
#include "tse/models.hpp"

#include <random>

using namespace tse;

namespace {

RVec random_params(int count, std::uint64_t seed, double scale = 0.7) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);
    RVec p(count);
    for (int i = 0; i < count; ++i) p(i) = u(rng);
    return p;
}

} // namespace

TEST_CASE("1D TFI builder shape: N=16 -> 24 layers, 16 params, 8 slots") {
    Circuit c = build_hva_tfi_1d(16, InitialStateKind::plus_all);
    CHECK(c.depth() == 24);
    CHECK(c.num_params == 16);
    CHECK(c.num_slots() == 8);
    CHECK(c.translation_covariant);
    CHECK_THROWS(build_hva_tfi_1d(7, InitialStateKind::plus_all));
}

TEST_CASE("zero parameters act as the identity") {
    Circuit c = build_hva_tfi_1d(6, InitialStateKind::ghz_odd);
    StateVector out = run(c, RVec::Zero(c.num_params));
    StateVector init = StateVector::ghz_odd(6);
    CHECK((out.amps - init.amps).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("up_to_layer zero returns the initial state") {
    Circuit c = build_hva_tfi_1d(6, InitialStateKind::plus_all);
    RVec p = random_params(c.num_params, 1);
    StateVector out = run(c, p, 0);
    CHECK((out.amps - StateVector::plus_all(6).amps).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("inserted identity gate changes nothing") {
    Circuit c = build_hva_tfi_1d(6, InitialStateKind::plus_all);
    RVec p = random_params(c.num_params, 2);
    Insertion ins{c.insertion_slots[1], PauliString()};
    StateVector a = run(c, p);
    StateVector b = run(c, p, std::nullopt, &ins);
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("1D TFI circuit commutes with translation, also with insertions") {
    const int n = 8;
    auto [lat, ham] = build_model(ModelKind::tfi_chain, n, 1, 1.0);
    Circuit c = build_hva_tfi_1d(n, InitialStateKind::plus_all);
    RVec p = random_params(c.num_params, 3);

    StateVector tu = translate(run(c, p), lat.translations[0]);
    StateVector ut = run(c, p); // initial state is translation invariant
    CHECK((tu.amps - ut.amps).cwiseAbs().maxCoeff() < 1e-12);

    // perturbation at site j equals the translated perturbation at site 0
    PauliString g0 = PauliString::parse("Y0");
    for (int slot : {c.insertion_slots[0], c.insertion_slots.back()}) {
        Insertion at0{slot, g0};
        StateVector shifted = translate(run(c, p, std::nullopt, &at0), lat.translations[0]);
        Insertion at1{slot, g0.mapped(lat.translations[0])};
        StateVector direct = run(c, p, std::nullopt, &at1);
        CHECK((shifted.amps - direct.amps).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("parity covariance of the TFI builders") {
    const int n = 6;
    Circuit c = build_hva_tfi_1d(n, InitialStateKind::plus_all);
    RVec p = random_params(c.num_params, 4);
    PauliSum par = parity_operator(n);
    StateVector a = apply_pauli_sum(run(c, p), par);
    // parity-even initial state: U P |psi0> = U |psi0>
    StateVector b = run(c, p);
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("2D TFI builder shape: 4x4 -> depth 40, 16 params, 8 slots") {
    Circuit c = build_hva_tfi_2d(4, 4);
    CHECK(c.depth() == 40);
    CHECK(c.num_params == 16);
    CHECK(c.num_slots() == 8);
    StateVector out = run(c, RVec::Zero(16), 5);
    CHECK((out.amps - StateVector::plus_all(16).amps).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("2D TFI circuit commutes with both translations (2x4 case)") {
    auto [lat, ham] = build_model(ModelKind::tfi_square, 2, 4, 3.0);
    Circuit c = build_hva_tfi_2d(2, 4);
    RVec p = random_params(c.num_params, 5);
    StateVector u = run(c, p);
    for (const auto& t : lat.translations) {
        StateVector tu = translate(u, t);
        CHECK((tu.amps - u.amps).cwiseAbs().maxCoeff() < 1e-12);
    }
    PauliString g0 = PauliString::parse("Z0");
    Insertion at0{c.insertion_slots[2], g0};
    StateVector shifted = translate(run(c, p, std::nullopt, &at0), lat.translations[1]);
    Insertion moved{c.insertion_slots[2], g0.mapped(lat.translations[1])};
    CHECK((shifted.amps - run(c, p, std::nullopt, &moved).amps).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Heisenberg chain builder: N=16, D=32 -> 256 params, dimer start") {
    Circuit c = build_hva_heisenberg_chain(16);
    CHECK(c.depth() == 32);
    CHECK(c.num_params == 256);
    CHECK(c.num_slots() == 32);
    for (const auto& layer : c.layers) CHECK(layer.gates.size() == 8);
}

TEST_CASE("Heisenberg circuit keeps the singlet sector and conserves Sz") {
    const int n = 6;
    Circuit c = build_hva_heisenberg_chain(n, 6);
    RVec p = random_params(c.num_params, 6);

    StateVector zero_out = run(c, RVec::Zero(c.num_params));
    CHECK(expect_pauli_sum(zero_out, total_spin_squared(n)) == doctest::Approx(0.0).epsilon(1e-10));

    StateVector out = run(c, p);
    CHECK(expect_pauli_sum(out, total_spin_squared(n)) == doctest::Approx(0.0).epsilon(1e-10));

    PauliSum ztot;
    for (int i = 0; i < n; ++i) ztot.push_back(PauliString::parse("Z" + std::to_string(i)));
    CHECK(expect_pauli_sum(out, ztot) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("kagome builder: depth 64, singlet preserved for any parameters") {
    auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
    Circuit c = build_hva_kagome(lat);
    CHECK(c.depth() == 64);
    CHECK(c.num_slots() == 16);
    CHECK(c.num_params == 64 * 6);

    StateVector at_zero = run(c, RVec::Zero(c.num_params));
    CHECK(expect_pauli_sum(at_zero, ham.terms) == doctest::Approx(-18.0).epsilon(1e-10));

    Circuit small = build_hva_kagome(lat, 2);
    RVec p = random_params(small.num_params, 7);
    StateVector out = run(small, p);
    CHECK(expect_pauli_sum(out, total_spin_squared(12)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("determinism: identical inputs give bit-identical outputs") {
    Circuit c = build_hva_tfi_1d(8, InitialStateKind::plus_all);
    RVec p = random_params(c.num_params, 8);
    Insertion ins{c.insertion_slots[2], PauliString::parse("X3")};
    StateVector a = run(c, p, std::nullopt, &ins);
    StateVector b = run(c, p, std::nullopt, &ins);
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("run rejects bad slots and placements") {
    Circuit c = build_hva_tfi_1d(6, InitialStateKind::plus_all);
    RVec p = RVec::Zero(c.num_params);
    Insertion bad_slot{c.depth() + 1, PauliString::parse("X0")};
    CHECK_THROWS(run(c, p, std::nullopt, &bad_slot));
    Insertion bad_site{0, PauliString::parse("X9")};
    CHECK_THROWS(run(c, p, std::nullopt, &bad_site));
    CHECK_THROWS(run(c, RVec::Zero(c.num_params + 1)));
}
