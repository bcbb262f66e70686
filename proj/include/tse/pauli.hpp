#pragma once

#include "tse/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tse {

enum class PauliOp : std::uint8_t { X, Y, Z };

char pauli_char(PauliOp op);

// A weighted Pauli string: coeff * prod_q sigma_{letters[q]}(q), identity on
// every qubit not listed. An empty letter map is the identity operator.
struct PauliString {
    std::map<int, PauliOp> letters;
    cxd coeff{1.0, 0.0};

    PauliString() = default;
    PauliString(std::map<int, PauliOp> l, cxd c) : letters(std::move(l)), coeff(c) {}

    // Parse e.g. "X0 Z3" or "Y2". Empty string is the identity.
    static PauliString parse(const std::string& text, cxd coeff = 1.0);

    bool is_identity() const { return letters.empty(); }
    int weight() const { return static_cast<int>(letters.size()); }
    int max_qubit() const { return letters.empty() ? -1 : letters.rbegin()->first; }
    int count_yz() const;

    // Relabel sites: qubit q -> site_map[q]. Used for lattice translations.
    PauliString mapped(const std::vector<int>& site_map) const;

    std::string to_string() const;
};

using PauliSum = std::vector<PauliString>;

// Bit-mask compiled form for fast kernels. Convention everywhere in this
// project: qubit q <-> bit q of the basis-state index (qubit 0 = LSB).
struct CompiledPauli {
    std::uint64_t flip_mask = 0;  // X and Y letters flip these bits
    std::uint64_t phase_mask = 0; // Y and Z letters read these bits for signs
    cxd scale{1.0, 0.0};          // coeff * i^{#Y}
};

CompiledPauli compile_pauli(const PauliString& p, int num_qubits);

bool pauli_sum_is_hermitian(const PauliSum& sum, double tol = 1e-12);

} // namespace tse
