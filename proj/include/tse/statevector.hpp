#pragma once

#include "tse/pauli.hpp"
#include "tse/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tse {

// Dense N-qubit state. amps(i) is the amplitude of the computational basis
// state whose bit q equals ((i >> q) & 1), i.e. qubit 0 is the least
// significant bit of the index.
struct StateVector {
    int num_qubits = 0;
    Vec amps;

    StateVector() = default;
    explicit StateVector(int n) : num_qubits(n), amps(Vec::Zero(std::int64_t(1) << n)) {}

    std::int64_t dim() const { return amps.size(); }
    double norm() const { return amps.norm(); }
    void normalize();

    static StateVector computational(int n, std::uint64_t bits);
    static StateVector plus_all(int n);
    // (|0...0> - |1...1>)/sqrt(2)
    static StateVector ghz_odd(int n);
    // Product of singlets (|01> - |10>)/sqrt(2) on the given (a, b) pairs,
    // with the "0" on qubit a. Pairs must cover every qubit exactly once.
    static StateVector dimer_covering(int n, const std::vector<std::pair<int, int>>& bonds);
    static StateVector random_state(int n, std::uint64_t seed);
};

// Dense gate on up to 4 qubits. Row/column bit t of `matrix` corresponds to
// support[t], so support[0] is the least significant bit of the gate-local
// index.
struct LocalGate {
    std::vector<int> support;
    Mat matrix;
    bool unitary = true;
};

LocalGate identity_gate(const std::vector<int>& support);
// Haar-ish random unitary (QR of a Gaussian matrix), for tests.
LocalGate random_unitary_gate(const std::vector<int>& support, std::uint64_t seed);

void apply_gate_in_place(StateVector& state, const LocalGate& gate);
StateVector apply_gate(const StateVector& state, const LocalGate& gate);

cxd inner(const StateVector& a, const StateVector& b);

// <state| sum_t P_t |state>, requires real coefficients and a normalized
// state; the imaginary residue must stay below 1e-10.
double expect_pauli_sum(const StateVector& state, const PauliSum& terms);
cxd expect_pauli_string(const StateVector& state, const PauliString& term);

StateVector apply_pauli_sum(const StateVector& state, const PauliSum& terms);
void accumulate_pauli_string(const StateVector& in, const PauliString& term, StateVector& out);
// In-place special case for a single string with |coeff| = 1 (a unitary).
void apply_pauli_string_in_place(StateVector& state, const PauliString& term);

// Site relabeling: the amplitude of basis state b moves to the basis state
// whose bit permutation[q] equals bit q of b. permutation must be a bijection.
StateVector translate(const StateVector& state, const std::vector<int>& permutation);

} // namespace tse
