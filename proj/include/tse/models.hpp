#pragma once

#include "tse/pauli.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tse {

enum class LatticeKind { chain, square, kagome };

struct Bond {
    int a = 0;
    int b = 0;
    int orientation = 0; // 0 = x / chain, 1 = y, kagome uses 0..2
};

// Periodic lattice with its translation permutations. translations[d][s] is
// the site one unit along direction d from site s; conjugating an operator at
// site s by the matching translate() moves it to translations[d][s].
struct Lattice {
    LatticeKind kind = LatticeKind::chain;
    int num_sites = 0;
    int length_x = 0;
    int length_y = 1;
    std::vector<std::array<double, 2>> site_coords;
    std::vector<Bond> bonds;
    std::vector<std::vector<int>> translations;

    int num_momentum_sectors() const { return length_x * length_y; }
};

struct Hamiltonian {
    PauliSum terms;
    double g = 0.0;
};

enum class ModelKind { tfi_chain, tfi_square, heisenberg_chain, kagome_heisenberg };

ModelKind model_kind_from_string(const std::string& s);
std::string to_string(ModelKind kind);

// Periodic model builders. Sign conventions: ferromagnetic Ising
// (-ZZ, -g X), antiferromagnetic Heisenberg (+XX +YY +ZZ).
std::pair<Lattice, Hamiltonian> build_model(ModelKind kind, int length_x, int length_y, double g);

// Global spin-flip parity, prod_i X_i.
PauliSum parity_operator(int num_sites);

// Total spin squared, (sum_i S_i)^2 with S = sigma/2; eigenvalues S(S+1).
PauliSum total_spin_squared(int num_sites);

// Perfect nearest-neighbor dimer covering used as the kagome initial state.
std::vector<std::pair<int, int>> kagome_dimer_covering(const Lattice& lattice);

// Partition of the bond list into layers of pairwise disjoint bonds, the gate
// schedule of one circuit cycle. Deterministic greedy/backtracking coloring.
std::vector<std::vector<int>> disjoint_bond_layers(const Lattice& lattice, int num_layers);

std::vector<int> compose_permutations(const std::vector<int>& first, const std::vector<int>& second);
std::vector<int> power_permutation(const std::vector<int>& perm, int exponent);

} // namespace tse
