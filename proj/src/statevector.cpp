#include "tse/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace tse {

char pauli_char(PauliOp op) {
    switch (op) {
        case PauliOp::X: return 'X';
        case PauliOp::Y: return 'Y';
        case PauliOp::Z: return 'Z';
    }
    return '?';
}

PauliString PauliString::parse(const std::string& text, cxd coeff) {
    PauliString out;
    out.coeff = coeff;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') { ++i; continue; }
        char c = text[i];
        PauliOp op;
        if (c == 'X') op = PauliOp::X;
        else if (c == 'Y') op = PauliOp::Y;
        else if (c == 'Z') op = PauliOp::Z;
        else throw std::invalid_argument("PauliString::parse: bad letter '" + std::string(1, c) + "'");
        ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(text[j])) ++j;
        if (j == i) throw std::invalid_argument("PauliString::parse: missing qubit index");
        int q = std::stoi(text.substr(i, j - i));
        if (out.letters.count(q)) throw std::invalid_argument("PauliString::parse: repeated qubit");
        out.letters[q] = op;
        i = j;
    }
    return out;
}

int PauliString::count_yz() const {
    int n = 0;
    for (const auto& [q, op] : letters)
        if (op != PauliOp::X) ++n;
    return n;
}

PauliString PauliString::mapped(const std::vector<int>& site_map) const {
    PauliString out;
    out.coeff = coeff;
    for (const auto& [q, op] : letters) {
        if (q < 0 || q >= static_cast<int>(site_map.size()))
            throw std::out_of_range("PauliString::mapped: site out of range");
        out.letters[site_map[q]] = op;
    }
    return out;
}

std::string PauliString::to_string() const {
    if (letters.empty()) return "I";
    std::string s;
    for (const auto& [q, op] : letters) {
        if (!s.empty()) s += ' ';
        s += pauli_char(op);
        s += std::to_string(q);
    }
    return s;
}

CompiledPauli compile_pauli(const PauliString& p, int num_qubits) {
    CompiledPauli c;
    int ny = 0;
    for (const auto& [q, op] : p.letters) {
        if (q < 0 || q >= num_qubits)
            throw std::out_of_range("pauli qubit " + std::to_string(q) + " out of range for N=" +
                                    std::to_string(num_qubits));
        const std::uint64_t bit = std::uint64_t(1) << q;
        switch (op) {
            case PauliOp::X: c.flip_mask |= bit; break;
            case PauliOp::Y: c.flip_mask |= bit; c.phase_mask |= bit; ++ny; break;
            case PauliOp::Z: c.phase_mask |= bit; break;
        }
    }
    static const cxd ipow[4] = {cxd(1, 0), cxd(0, 1), cxd(-1, 0), cxd(0, -1)};
    c.scale = p.coeff * ipow[ny & 3];
    return c;
}

bool pauli_sum_is_hermitian(const PauliSum& sum, double tol) {
    for (const auto& t : sum)
        if (std::abs(t.coeff.imag()) > tol) return false;
    return true;
}

void StateVector::normalize() {
    const double n = norm();
    if (n <= 0.0) throw std::runtime_error("cannot normalize a zero state");
    amps /= n;
}

StateVector StateVector::computational(int n, std::uint64_t bits) {
    StateVector s(n);
    s.amps(static_cast<std::int64_t>(bits)) = 1.0;
    return s;
}

StateVector StateVector::plus_all(int n) {
    StateVector s(n);
    s.amps.setConstant(1.0 / std::sqrt(static_cast<double>(s.dim())));
    return s;
}

StateVector StateVector::ghz_odd(int n) {
    StateVector s(n);
    const double r = 1.0 / std::sqrt(2.0);
    s.amps(0) = r;
    s.amps(s.dim() - 1) = -r;
    return s;
}

StateVector StateVector::dimer_covering(int n, const std::vector<std::pair<int, int>>& bonds) {
    if (static_cast<int>(bonds.size()) * 2 != n)
        throw std::invalid_argument("dimer covering must pair every qubit exactly once");
    std::vector<bool> seen(n, false);
    for (auto [a, b] : bonds) {
        if (a < 0 || a >= n || b < 0 || b >= n || seen[a] || seen[b] || a == b)
            throw std::invalid_argument("dimer covering is not a perfect matching");
        seen[a] = seen[b] = true;
    }
    StateVector s(n);
    const int nb = static_cast<int>(bonds.size());
    const double scale = std::pow(std::sqrt(0.5), nb);
    // Each dimer contributes |0_a 1_b> - |1_a 0_b>.
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t(1) << nb); ++pattern) {
        std::uint64_t idx = 0;
        int sign = 1;
        for (int k = 0; k < nb; ++k) {
            if ((pattern >> k) & 1) {
                idx |= std::uint64_t(1) << bonds[k].first;
                sign = -sign;
            } else {
                idx |= std::uint64_t(1) << bonds[k].second;
            }
        }
        s.amps(static_cast<std::int64_t>(idx)) = sign * scale;
    }
    return s;
}

StateVector StateVector::random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::normal_distribution<double> g;
    StateVector s(n);
    for (std::int64_t i = 0; i < s.dim(); ++i) s.amps(i) = cxd(g(rng), g(rng));
    s.normalize();
    return s;
}

LocalGate identity_gate(const std::vector<int>& support) {
    LocalGate g;
    g.support = support;
    const std::int64_t d = std::int64_t(1) << support.size();
    g.matrix = Mat::Identity(d, d);
    return g;
}

LocalGate random_unitary_gate(const std::vector<int>& support, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::normal_distribution<double> gauss;
    const std::int64_t d = std::int64_t(1) << support.size();
    Mat a(d, d);
    for (std::int64_t j = 0; j < d; ++j)
        for (std::int64_t i = 0; i < d; ++i) a(i, j) = cxd(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::int64_t i = 0; i < d; ++i) {
        cxd rd = r(i, i);
        q.col(i) *= (rd == cxd(0) ? cxd(1) : rd / std::abs(rd));
    }
    LocalGate g;
    g.support = support;
    g.matrix = q;
    return g;
}

namespace {

void check_support(const StateVector& state, const std::vector<int>& support) {
    if (support.empty() || support.size() > 4)
        throw std::invalid_argument("gate width must be between 1 and 4");
    for (size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] >= state.num_qubits)
            throw std::out_of_range("gate support index out of range");
        for (size_t j = i + 1; j < support.size(); ++j)
            if (support[i] == support[j]) throw std::invalid_argument("duplicate gate support index");
    }
}

} // namespace

void apply_gate_in_place(StateVector& state, const LocalGate& gate) {
    check_support(state, gate.support);
    const int w = static_cast<int>(gate.support.size());
    const std::int64_t gd = std::int64_t(1) << w;
    if (gate.matrix.rows() != gd || gate.matrix.cols() != gd)
        throw std::invalid_argument("gate matrix size does not match support width");

    // Offsets of each gate-local index within a block of fixed non-support bits.
    std::array<std::int64_t, 16> offs{};
    for (std::int64_t t = 0; t < gd; ++t) {
        std::int64_t o = 0;
        for (int b = 0; b < w; ++b)
            if ((t >> b) & 1) o |= std::int64_t(1) << gate.support[b];
        offs[static_cast<size_t>(t)] = o;
    }
    std::uint64_t support_mask = 0;
    for (int q : gate.support) support_mask |= std::uint64_t(1) << q;

    const std::int64_t dim = state.dim();
    cxd* a = state.amps.data();
    const Mat& m = gate.matrix;
    std::array<cxd, 16> x, y;
    // Iterate over indices whose support bits are all zero.
    for (std::int64_t base = 0; base < dim; base = ((base | support_mask) + 1) & ~support_mask) {
        for (std::int64_t t = 0; t < gd; ++t) x[static_cast<size_t>(t)] = a[base + offs[static_cast<size_t>(t)]];
        for (std::int64_t r = 0; r < gd; ++r) {
            cxd acc = 0;
            for (std::int64_t c = 0; c < gd; ++c) acc += m(r, c) * x[static_cast<size_t>(c)];
            y[static_cast<size_t>(r)] = acc;
        }
        for (std::int64_t t = 0; t < gd; ++t) a[base + offs[static_cast<size_t>(t)]] = y[static_cast<size_t>(t)];
    }
}

StateVector apply_gate(const StateVector& state, const LocalGate& gate) {
    StateVector out = state;
    apply_gate_in_place(out, gate);
    return out;
}

cxd inner(const StateVector& a, const StateVector& b) {
    if (a.num_qubits != b.num_qubits)
        throw std::invalid_argument("inner: dimension mismatch");
    return a.amps.dot(b.amps);
}

cxd expect_pauli_string(const StateVector& state, const PauliString& term) {
    const CompiledPauli c = compile_pauli(term, state.num_qubits);
    const std::int64_t dim = state.dim();
    const cxd* a = state.amps.data();
    cxd acc = 0;
    for (std::int64_t i = 0; i < dim; ++i) {
        const double sign = (std::popcount(static_cast<std::uint64_t>(i) & c.phase_mask) & 1) ? -1.0 : 1.0;
        acc += std::conj(a[i ^ static_cast<std::int64_t>(c.flip_mask)]) * (sign * a[i]);
    }
    return c.scale * acc;
}

double expect_pauli_sum(const StateVector& state, const PauliSum& terms) {
    if (std::abs(state.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("expect_pauli_sum: state is not normalized");
    if (!pauli_sum_is_hermitian(terms))
        throw std::invalid_argument("expect_pauli_sum: coefficients must be real");
    cxd acc = 0;
    for (const auto& t : terms) acc += expect_pauli_string(state, t);
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("expect_pauli_sum: imaginary residue " + std::to_string(acc.imag()));
    return acc.real();
}

void accumulate_pauli_string(const StateVector& in, const PauliString& term, StateVector& out) {
    const CompiledPauli c = compile_pauli(term, in.num_qubits);
    const std::int64_t dim = in.dim();
    const cxd* a = in.amps.data();
    cxd* o = out.amps.data();
    for (std::int64_t i = 0; i < dim; ++i) {
        const double sign = (std::popcount(static_cast<std::uint64_t>(i) & c.phase_mask) & 1) ? -1.0 : 1.0;
        o[i ^ static_cast<std::int64_t>(c.flip_mask)] += c.scale * sign * a[i];
    }
}

StateVector apply_pauli_sum(const StateVector& state, const PauliSum& terms) {
    StateVector out(state.num_qubits);
    for (const auto& t : terms) accumulate_pauli_string(state, t, out);
    return out;
}

void apply_pauli_string_in_place(StateVector& state, const PauliString& term) {
    const CompiledPauli c = compile_pauli(term, state.num_qubits);
    const std::int64_t dim = state.dim();
    cxd* a = state.amps.data();
    if (c.flip_mask == 0) {
        for (std::int64_t i = 0; i < dim; ++i) {
            const double sign = (std::popcount(static_cast<std::uint64_t>(i) & c.phase_mask) & 1) ? -1.0 : 1.0;
            a[i] *= c.scale * sign;
        }
        return;
    }
    const std::int64_t flip = static_cast<std::int64_t>(c.flip_mask);
    for (std::int64_t i = 0; i < dim; ++i) {
        const std::int64_t j = i ^ flip;
        if (j < i) continue;
        const double si = (std::popcount(static_cast<std::uint64_t>(i) & c.phase_mask) & 1) ? -1.0 : 1.0;
        const double sj = (std::popcount(static_cast<std::uint64_t>(j) & c.phase_mask) & 1) ? -1.0 : 1.0;
        const cxd ai = a[i];
        a[i] = c.scale * sj * a[j];
        a[j] = c.scale * si * ai;
    }
}

StateVector translate(const StateVector& state, const std::vector<int>& permutation) {
    const int n = state.num_qubits;
    if (static_cast<int>(permutation.size()) != n)
        throw std::invalid_argument("translate: permutation size mismatch");
    std::vector<bool> hit(n, false);
    for (int p : permutation) {
        if (p < 0 || p >= n || hit[p]) throw std::invalid_argument("translate: not a bijection");
        hit[p] = true;
    }
    StateVector out(n);
    const std::int64_t dim = state.dim();
    const cxd* a = state.amps.data();
    cxd* o = out.amps.data();
    for (std::int64_t i = 0; i < dim; ++i) {
        std::int64_t j = 0;
        for (int q = 0; q < n; ++q)
            if ((i >> q) & 1) j |= std::int64_t(1) << permutation[q];
        o[j] = a[i];
    }
    return out;
}

} // namespace tse
