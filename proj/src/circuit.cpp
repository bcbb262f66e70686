#include "tse/circuit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tse {

namespace {

Mat dense_on_support(const PauliSum& sum, const std::vector<int>& support) {
    std::vector<int> local(64, -1);
    for (size_t i = 0; i < support.size(); ++i) local[support[i]] = static_cast<int>(i);
    const std::int64_t d = std::int64_t(1) << support.size();
    Mat m = Mat::Zero(d, d);
    for (const auto& term : sum) {
        PauliString mapped;
        mapped.coeff = term.coeff;
        for (const auto& [q, op] : term.letters) {
            if (q >= static_cast<int>(local.size()) || local[q] < 0)
                throw std::invalid_argument("generator term outside gate support");
            mapped.letters[local[q]] = op;
        }
        const CompiledPauli c = compile_pauli(mapped, static_cast<int>(support.size()));
        for (std::int64_t col = 0; col < d; ++col) {
            const double sign =
                (std::popcount(static_cast<std::uint64_t>(col) & c.phase_mask) & 1) ? -1.0 : 1.0;
            m(col ^ static_cast<std::int64_t>(c.flip_mask), col) += c.scale * sign;
        }
    }
    return m;
}

GateSpec make_gate(std::vector<int> support, PauliSum generator, int param_index) {
    GateSpec g;
    g.support = std::move(support);
    g.generator = std::move(generator);
    g.param_index = param_index;
    Mat dense = dense_on_support(g.generator, g.support);
    Eigen::SelfAdjointEigenSolver<Mat> es((dense + dense.adjoint()) / 2.0);
    g.gen_evecs = es.eigenvectors();
    g.gen_evals = es.eigenvalues();
    return g;
}

PauliSum zz_generator(int a, int b) {
    PauliString p;
    p.letters[a] = PauliOp::Z;
    p.letters[b] = PauliOp::Z;
    return {p};
}

PauliSum x_generator(int q) {
    PauliString p;
    p.letters[q] = PauliOp::X;
    return {p};
}

PauliSum heisenberg_generator(int a, int b) {
    PauliSum sum;
    for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
        PauliString p;
        p.letters[a] = op;
        p.letters[b] = op;
        sum.push_back(p);
    }
    return sum;
}

} // namespace

InitialStateKind initial_state_from_string(const std::string& s) {
    if (s == "plus_all") return InitialStateKind::plus_all;
    if (s == "ghz_odd") return InitialStateKind::ghz_odd;
    if (s == "dimer_covering") return InitialStateKind::dimer_covering;
    throw std::invalid_argument("unknown initial state '" + s + "'");
}

std::string to_string(InitialStateKind k) {
    switch (k) {
        case InitialStateKind::plus_all: return "plus_all";
        case InitialStateKind::ghz_odd: return "ghz_odd";
        case InitialStateKind::dimer_covering: return "dimer_covering";
    }
    return "?";
}

StateVector initial_state(const Circuit& circuit) {
    switch (circuit.init_kind) {
        case InitialStateKind::plus_all: return StateVector::plus_all(circuit.num_qubits);
        case InitialStateKind::ghz_odd: return StateVector::ghz_odd(circuit.num_qubits);
        case InitialStateKind::dimer_covering:
            return StateVector::dimer_covering(circuit.num_qubits, circuit.init_dimer_bonds);
    }
    throw std::logic_error("bad initial state kind");
}

LocalGate gate_matrix(const GateSpec& gate, double theta) {
    LocalGate g;
    g.support = gate.support;
    const std::int64_t d = gate.gen_evals.size();
    Vec phases(d);
    for (std::int64_t i = 0; i < d; ++i) phases(i) = std::exp(cxd(0.0, -0.5 * theta * gate.gen_evals(i)));
    g.matrix = gate.gen_evecs * phases.asDiagonal() * gate.gen_evecs.adjoint();
    return g;
}

LocalGate generator_gate(const GateSpec& gate) {
    LocalGate g;
    g.support = gate.support;
    g.matrix = gate.gen_evecs * gate.gen_evals.cast<cxd>().asDiagonal() * gate.gen_evecs.adjoint();
    g.unitary = false;
    return g;
}

StateVector run(const Circuit& circuit, const RVec& params, std::optional<int> up_to_layer,
                const Insertion* insertion) {
    if (params.size() != circuit.num_params)
        throw std::invalid_argument("run: parameter count mismatch");
    const int depth = up_to_layer.value_or(circuit.depth());
    if (depth < 0 || depth > circuit.depth())
        throw std::invalid_argument("run: up_to_layer out of range");
    if (insertion) {
        if (insertion->layers_before < 0 || insertion->layers_before > depth)
            throw std::invalid_argument("run: insertion slot out of range");
        if (std::abs(std::abs(insertion->op.coeff) - 1.0) > 1e-12)
            throw std::invalid_argument("run: inserted Pauli gate must have unit modulus coefficient");
    }
    StateVector state = initial_state(circuit);
    for (int l = 0; l < depth; ++l) {
        if (insertion && insertion->layers_before == l)
            apply_pauli_string_in_place(state, insertion->op);
        for (const auto& gate : circuit.layers[l].gates)
            apply_gate_in_place(state, gate_matrix(gate, params(gate.param_index)));
    }
    if (insertion && insertion->layers_before == depth)
        apply_pauli_string_in_place(state, insertion->op);
    return state;
}

Circuit build_hva_tfi_1d(int n, InitialStateKind init, bool share_translation) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("build_hva_tfi_1d: N must be even and >= 4");
    if (init == InitialStateKind::dimer_covering)
        throw std::invalid_argument("build_hva_tfi_1d: initial state must be plus_all or ghz_odd");
    Circuit c;
    c.num_qubits = n;
    c.init_kind = init;
    c.translation_covariant = share_translation;
    c.builder_name = "hva_tfi_1d";
    const int blocks = n / 2;
    int next_param = 0;
    for (int b = 0; b < blocks; ++b) {
        const int beta = share_translation ? next_param++ : -1;
        Layer zz_even, zz_odd, x_layer;
        for (int i = 0; i < n; i += 2)
            zz_even.gates.push_back(
                make_gate({i, (i + 1) % n}, zz_generator(i, (i + 1) % n), share_translation ? beta : next_param++));
        for (int i = 1; i < n; i += 2)
            zz_odd.gates.push_back(
                make_gate({i, (i + 1) % n}, zz_generator(i, (i + 1) % n), share_translation ? beta : next_param++));
        const int gamma = share_translation ? next_param++ : -1;
        for (int i = 0; i < n; ++i)
            x_layer.gates.push_back(make_gate({i}, x_generator(i), share_translation ? gamma : next_param++));
        c.layers.push_back(std::move(zz_even));
        c.layers.push_back(std::move(zz_odd));
        c.insertion_slots.push_back(static_cast<int>(c.layers.size()));
        c.layers.push_back(std::move(x_layer));
    }
    c.num_params = next_param;
    return c;
}

Circuit build_hva_tfi_2d(int length_x, int length_y) {
    if (length_x % 2 != 0 || length_y % 2 != 0 || length_x < 2 || length_y < 2)
        throw std::invalid_argument("build_hva_tfi_2d: L_x and L_y must be even");
    auto [lat, ham] = build_model(ModelKind::tfi_square, length_x, length_y, 1.0);
    const auto colorings = disjoint_bond_layers(lat, 4);
    Circuit c;
    c.num_qubits = lat.num_sites;
    c.init_kind = InitialStateKind::plus_all;
    c.translation_covariant = true;
    c.builder_name = "hva_tfi_2d";
    const int blocks = lat.num_sites / 2; // depth 5 per block -> D = 5N/2
    int next_param = 0;
    for (int b = 0; b < blocks; ++b) {
        const int beta = next_param++;
        for (const auto& layer_bonds : colorings) {
            Layer zz;
            for (int bond_idx : layer_bonds) {
                const Bond& bd = lat.bonds[bond_idx];
                zz.gates.push_back(make_gate({bd.a, bd.b}, zz_generator(bd.a, bd.b), beta));
            }
            c.layers.push_back(std::move(zz));
        }
        c.insertion_slots.push_back(static_cast<int>(c.layers.size()));
        const int gamma = next_param++;
        Layer x_layer;
        for (int i = 0; i < lat.num_sites; ++i)
            x_layer.gates.push_back(make_gate({i}, x_generator(i), gamma));
        c.layers.push_back(std::move(x_layer));
    }
    c.num_params = next_param;
    return c;
}

Circuit build_hva_heisenberg_chain(int n, int depth_layers, int slot_every) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("build_hva_heisenberg_chain: N must be even and >= 4");
    if (depth_layers < 0) depth_layers = 2 * n;
    if (slot_every < 1) throw std::invalid_argument("slot_every must be >= 1");
    Circuit c;
    c.num_qubits = n;
    c.init_kind = InitialStateKind::dimer_covering;
    for (int i = 0; i < n; i += 2) c.init_dimer_bonds.push_back({i, i + 1});
    c.translation_covariant = false;
    c.builder_name = "hva_heisenberg_chain";
    int next_param = 0;
    for (int l = 0; l < depth_layers; ++l) {
        Layer layer;
        const int start = (l % 2 == 0) ? 0 : 1;
        for (int i = start; i < n; i += 2) {
            const int a = i % n, b = (i + 1) % n;
            layer.gates.push_back(make_gate({a, b}, heisenberg_generator(a, b), next_param++));
        }
        c.layers.push_back(std::move(layer));
        if ((l + 1) % slot_every == 0) c.insertion_slots.push_back(l + 1);
    }
    c.num_params = next_param;
    return c;
}

Circuit build_hva_kagome(const Lattice& lattice, int repetitions, int slot_every_layers) {
    if (lattice.kind != LatticeKind::kagome)
        throw std::invalid_argument("build_hva_kagome: kagome lattice expected");
    const auto cycle = disjoint_bond_layers(lattice, 4);
    Circuit c;
    c.num_qubits = lattice.num_sites;
    c.init_kind = InitialStateKind::dimer_covering;
    c.init_dimer_bonds = kagome_dimer_covering(lattice);
    c.translation_covariant = false;
    c.builder_name = "hva_kagome";
    int next_param = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
        for (const auto& layer_bonds : cycle) {
            Layer layer;
            for (int bond_idx : layer_bonds) {
                const Bond& bd = lattice.bonds[bond_idx];
                layer.gates.push_back(make_gate({bd.a, bd.b}, heisenberg_generator(bd.a, bd.b), next_param++));
            }
            c.layers.push_back(std::move(layer));
            if (static_cast<int>(c.layers.size()) % slot_every_layers == 0)
                c.insertion_slots.push_back(static_cast<int>(c.layers.size()));
        }
    }
    c.num_params = next_param;
    return c;
}

} // namespace tse
