#pragma once

#include "tse/models.hpp"
#include "tse/statevector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tse {

// One parametrized gate, exp(-i theta/2 * generator) with theta bound through
// param_index. The generator is a Hermitian Pauli sum on `support`; its
// eigendecomposition is precomputed so gate matrices are cheap to form.
struct GateSpec {
    std::vector<int> support;
    PauliSum generator;
    int param_index = 0;
    Mat gen_evecs;  // 2^w x 2^w
    RVec gen_evals; // ascending
};

struct Layer {
    std::vector<GateSpec> gates;
};

enum class InitialStateKind { plus_all, ghz_odd, dimer_covering };

InitialStateKind initial_state_from_string(const std::string& s);
std::string to_string(InitialStateKind k);

struct Circuit {
    int num_qubits = 0;
    int num_params = 0;
    std::vector<Layer> layers;
    InitialStateKind init_kind = InitialStateKind::plus_all;
    std::vector<std::pair<int, int>> init_dimer_bonds;
    // Slot s means "insert the perturbation after insertion_slots[s] layers".
    std::vector<int> insertion_slots;
    bool translation_covariant = false;
    std::string builder_name;

    int depth() const { return static_cast<int>(layers.size()); }
    int num_slots() const { return static_cast<int>(insertion_slots.size()); }
};

// A perturbation gate spliced into the circuit: a Pauli string on absolute
// qubits (unit modulus coefficient), applied after `layers_before` layers.
struct Insertion {
    int layers_before = 0;
    PauliString op;
};

StateVector initial_state(const Circuit& circuit);

StateVector run(const Circuit& circuit, const RVec& params,
                std::optional<int> up_to_layer = std::nullopt,
                const Insertion* insertion = nullptr);

LocalGate gate_matrix(const GateSpec& gate, double theta);
// d/dtheta exp(-i theta/2 G) = (-i/2) G * U; applies G as a dense local gate.
LocalGate generator_gate(const GateSpec& gate);

// D = 3N/2 alternating-bond ansatz: N/2 blocks of [ZZ even, ZZ odd, X], the
// two ZZ layers of a block share one parameter. One insertion slot per block,
// between the ZZ pair and the X layer. share_translation = false gives every
// gate its own parameter (breaks covariance; mostly useful in tests).
Circuit build_hva_tfi_1d(int n, InitialStateKind init, bool share_translation = true);

// D = 5N/2 ansatz on the periodic square lattice: blocks of [4 disjoint ZZ
// sublayers, X], one shared ZZ parameter per block. Slot before each X layer.
Circuit build_hva_tfi_2d(int length_x, int length_y);

// Alternating even/odd bond Heisenberg gates, every gate its own parameter,
// default depth 2N single layers, slot after every layer, dimer initial state.
Circuit build_hva_heisenberg_chain(int n, int depth_layers = -1, int slot_every = 1);

// Repetitions of the 4-layer disjoint-bond cycle, independent parameters,
// slot after each cycle by default, dimer-covering initial state.
Circuit build_hva_kagome(const Lattice& lattice, int repetitions = 16, int slot_every_layers = 4);

} // namespace tse
