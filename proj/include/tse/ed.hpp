#pragma once

#include "tse/models.hpp"
#include "tse/statevector.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tse {

struct SectorKey {
    int m1 = -1;      // momentum index along x, -1 when unused
    int m2 = -1;      // momentum index along y
    int parity = 0;   // +1 / -1, 0 when unresolved
    int popcount = -1; // number of set bits (fixes total Sz), -1 when unresolved

    bool operator==(const SectorKey&) const = default;
};

struct EdOptions {
    bool use_parity = false;
    bool use_sz = false;
    std::optional<int> sz_popcount; // restrict to one magnetization block
    int levels_per_sector = -1;     // -1 = full spectrum
    bool want_vectors = false;
    // Reuse E(-K) = E(K) for real Hamiltonians instead of re-diagonalizing.
    bool exploit_conjugation = true;
};

// One symmetry block: sparse Bloch-basis columns over computational states
// plus the block spectrum. `vectors` is only filled on request.
struct EdSector {
    SectorKey key;
    std::vector<double> energies;
    std::vector<std::vector<std::pair<std::uint64_t, cxd>>> basis_cols;
    Mat vectors;
    std::optional<double> spin_of(int level) const; // filled by label pass
    std::vector<double> spin_expectations;          // <S^2> per kept level, optional
};

// Momentum-blocked (optionally parity- and Sz-blocked) dense exact
// diagonalization. Checks numerically that each requested symmetry commutes
// with H before building blocks.
std::vector<EdSector> ed_sector_spectrum(const PauliSum& hamiltonian, const Lattice& lattice,
                                         const EdOptions& options);

// Reconstructs a full statevector from a sector eigenvector.
StateVector ed_state(const EdSector& sector, int level, int num_qubits);

// <S^2> for every kept level of every sector (requires vectors).
void ed_attach_spin_labels(std::vector<EdSector>& sectors, int num_qubits);

// Dense full diagonalization, test oracle for small N.
std::vector<double> dense_spectrum(const PauliSum& hamiltonian, int num_qubits);

} // namespace tse
