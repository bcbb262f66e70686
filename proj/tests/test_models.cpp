#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tse/models.hpp"
#include "tse/statevector.hpp"

#include <set>

using namespace tse;

namespace {

double commutator_norm(const PauliSum& h, const PauliSum& sym, const StateVector& psi) {
    StateVector hs = apply_pauli_sum(apply_pauli_sum(psi, sym), h);
    StateVector sh = apply_pauli_sum(apply_pauli_sum(psi, h), sym);
    return (hs.amps - sh.amps).norm();
}

double translation_commutator_norm(const PauliSum& h, const std::vector<int>& perm, const StateVector& psi) {
    StateVector ht = apply_pauli_sum(translate(psi, perm), h);
    StateVector th = translate(apply_pauli_sum(psi, h), perm);
    return (ht.amps - th.amps).norm();
}

} // namespace

TEST_CASE("chain TFI term content") {
    auto [lat, ham] = build_model(ModelKind::tfi_chain, 4, 1, 1.0);
    CHECK(lat.num_sites == 4);
    CHECK(lat.bonds.size() == 4);
    int zz = 0, x = 0;
    for (const auto& t : ham.terms) {
        if (t.weight() == 2) {
            CHECK(t.coeff.real() == doctest::Approx(-1.0));
            ++zz;
        } else {
            CHECK(t.coeff.real() == doctest::Approx(-1.0));
            ++x;
        }
    }
    CHECK(zz == 4);
    CHECK(x == 4);
    CHECK_THROWS(build_model(ModelKind::tfi_chain, 2, 1, 1.0));
}

TEST_CASE("square TFI counts at 4x4, g=3") {
    auto [lat, ham] = build_model(ModelKind::tfi_square, 4, 4, 3.0);
    CHECK(lat.num_sites == 16);
    CHECK(lat.bonds.size() == 32);
    int zz = 0, x = 0;
    for (const auto& t : ham.terms) {
        if (t.weight() == 2) ++zz;
        if (t.weight() == 1) {
            CHECK(t.coeff.real() == doctest::Approx(-3.0));
            ++x;
        }
    }
    CHECK(zz == 32);
    CHECK(x == 16);
}

TEST_CASE("kagome torus has 12 sites, 24 distinct bonds, 72 terms") {
    auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
    CHECK(lat.num_sites == 12);
    CHECK(lat.bonds.size() == 24);
    std::set<std::pair<int, int>> pairs;
    for (const auto& b : lat.bonds) {
        CHECK(b.a != b.b);
        pairs.insert({std::min(b.a, b.b), std::max(b.a, b.b)});
    }
    CHECK(pairs.size() == 24); // no duplicated bonds on the 2x2 torus
    CHECK(ham.terms.size() == 72);
    // coordination number 4 everywhere
    std::vector<int> deg(12, 0);
    for (const auto& b : lat.bonds) {
        ++deg[b.a];
        ++deg[b.b];
    }
    for (int d : deg) CHECK(d == 4);
    CHECK_THROWS(build_model(ModelKind::kagome_heisenberg, 3, 2, 0.0));
}

TEST_CASE("kagome translations commute and geometry matches the cell vectors") {
    auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
    auto txy = compose_permutations(lat.translations[0], lat.translations[1]);
    auto tyx = compose_permutations(lat.translations[1], lat.translations[0]);
    CHECK(txy == tyx);
    for (auto& t : lat.translations) {
        auto sq = compose_permutations(t, t);
        for (int i = 0; i < lat.num_sites; ++i) CHECK(sq[i] == i); // order two on the 2x2 torus
    }
}

TEST_CASE("parity operator eigenstates") {
    const int n = 4;
    PauliSum par = parity_operator(n);
    StateVector plus = StateVector::plus_all(n);
    StateVector p_plus = apply_pauli_sum(plus, par);
    CHECK((p_plus.amps - plus.amps).norm() < 1e-14);

    StateVector ghz = StateVector::ghz_odd(n);
    StateVector p_ghz = apply_pauli_sum(ghz, par);
    CHECK((p_ghz.amps + ghz.amps).norm() < 1e-14);

    StateVector zeros = StateVector::computational(n, 0);
    StateVector flipped = apply_pauli_sum(zeros, par);
    CHECK(std::abs(flipped.amps(15) - 1.0) < 1e-14);
}

TEST_CASE("total spin squared on small states") {
    StateVector singlet = StateVector::dimer_covering(2, {{0, 1}});
    CHECK(expect_pauli_sum(singlet, total_spin_squared(2)) == doctest::Approx(0.0).epsilon(1e-12));
    StateVector triplet = StateVector::computational(2, 0);
    CHECK(expect_pauli_sum(triplet, total_spin_squared(2)) == doctest::Approx(2.0));
    StateVector dimers = StateVector::dimer_covering(4, {{0, 1}, {2, 3}});
    CHECK(expect_pauli_sum(dimers, total_spin_squared(4)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("symmetries commute with the Hamiltonians") {
    {
        auto [lat, ham] = build_model(ModelKind::tfi_chain, 6, 1, 1.3);
        StateVector psi = StateVector::random_state(6, 3);
        CHECK(commutator_norm(ham.terms, parity_operator(6), psi) < 1e-10);
        CHECK(translation_commutator_norm(ham.terms, lat.translations[0], psi) < 1e-10);
    }
    {
        auto [lat, ham] = build_model(ModelKind::tfi_square, 2, 4, 2.0);
        StateVector psi = StateVector::random_state(8, 4);
        CHECK(commutator_norm(ham.terms, parity_operator(8), psi) < 1e-10);
        for (const auto& t : lat.translations)
            CHECK(translation_commutator_norm(ham.terms, t, psi) < 1e-10);
    }
    {
        auto [lat, ham] = build_model(ModelKind::heisenberg_chain, 6, 1, 0.0);
        StateVector psi = StateVector::random_state(6, 5);
        CHECK(commutator_norm(ham.terms, total_spin_squared(6), psi) < 1e-9);
        CHECK(translation_commutator_norm(ham.terms, lat.translations[0], psi) < 1e-10);
    }
    {
        auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
        StateVector psi = StateVector::random_state(12, 6);
        CHECK(commutator_norm(ham.terms, total_spin_squared(12), psi) < 1e-9);
        for (const auto& t : lat.translations)
            CHECK(translation_commutator_norm(ham.terms, t, psi) < 1e-10);
    }
}

TEST_CASE("disjoint bond layers form perfect matchings for kagome") {
    auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
    auto layers = disjoint_bond_layers(lat, 4);
    CHECK(layers.size() == 4);
    for (const auto& layer : layers) {
        CHECK(layer.size() == 6);
        std::set<int> sites;
        for (int b : layer) {
            sites.insert(lat.bonds[b].a);
            sites.insert(lat.bonds[b].b);
        }
        CHECK(sites.size() == 12);
    }
}

TEST_CASE("kagome dimer covering is a perfect matching of lattice bonds") {
    auto [lat, ham] = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0);
    auto dimers = kagome_dimer_covering(lat);
    CHECK(dimers.size() == 6);
    std::set<int> covered;
    std::set<std::pair<int, int>> bond_set;
    for (const auto& b : lat.bonds) bond_set.insert({std::min(b.a, b.b), std::max(b.a, b.b)});
    for (auto [a, b] : dimers) {
        CHECK(bond_set.count({a, b}) == 1);
        covered.insert(a);
        covered.insert(b);
    }
    CHECK(covered.size() == 12);
    // energy of the covering state: -3 per covered bond
    auto heis = build_model(ModelKind::kagome_heisenberg, 2, 2, 0.0).second;
    StateVector init = StateVector::dimer_covering(12, dimers);
    CHECK(expect_pauli_sum(init, heis.terms) == doctest::Approx(-18.0).epsilon(1e-10));
}
