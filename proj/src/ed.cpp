#include "tse/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace tse {

namespace {

struct GroupElement {
    int shift_x = 0, shift_y = 0;
    std::vector<std::uint32_t> state_map; // bit-permutation action on basis states
};

std::vector<std::uint32_t> state_map_of_permutation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    const std::uint32_t dim = std::uint32_t(1) << n;
    std::vector<std::uint32_t> map(dim);
    for (std::uint32_t s = 0; s < dim; ++s) {
        std::uint32_t t = 0;
        for (int q = 0; q < n; ++q)
            if ((s >> q) & 1) t |= std::uint32_t(1) << perm[q];
        map[s] = t;
    }
    return map;
}

std::vector<GroupElement> translation_group(const Lattice& lat) {
    std::vector<GroupElement> group;
    const int lx = lat.length_x, ly = lat.translations.size() > 1 ? lat.length_y : 1;
    for (int b = 0; b < ly; ++b)
        for (int a = 0; a < lx; ++a) {
            auto perm = power_permutation(lat.translations[0], a);
            if (lat.translations.size() > 1)
                perm = compose_permutations(perm, power_permutation(lat.translations[1], b));
            group.push_back({a, b, state_map_of_permutation(perm)});
        }
    return group;
}

bool hamiltonian_is_real(const PauliSum& h, int n) {
    for (const auto& t : h) {
        const CompiledPauli c = compile_pauli(t, n);
        if (std::abs(c.scale.imag()) > 1e-14) return false;
    }
    return true;
}

void check_commutes(const PauliSum& h, const PauliSum& sym, int n, const char* name) {
    StateVector psi = StateVector::random_state(n, 0x5eedull);
    StateVector hs = apply_pauli_sum(apply_pauli_sum(psi, sym), h);
    StateVector sh = apply_pauli_sum(apply_pauli_sum(psi, h), sym);
    if ((hs.amps - sh.amps).norm() > 1e-10)
        throw std::invalid_argument(std::string("requested symmetry does not commute with H: ") + name);
}

void check_translation_commutes(const PauliSum& h, const Lattice& lat, int n) {
    StateVector psi = StateVector::random_state(n, 0x7eedull);
    for (const auto& t : lat.translations) {
        StateVector ht = apply_pauli_sum(translate(psi, t), h);
        StateVector th = translate(apply_pauli_sum(psi, h), t);
        if ((ht.amps - th.amps).norm() > 1e-10)
            throw std::invalid_argument("requested symmetry does not commute with H: translation");
    }
}

using SparseCol = std::vector<std::pair<std::uint64_t, cxd>>;

struct BlockBasis {
    std::vector<SparseCol> cols;
    // per-state lookup over the full 2^N register
    std::vector<std::int32_t> col_of_state;
    std::vector<cxd> coeff_of_state;
};

// Momentum-projected orbit basis for one (m1, m2) sector, optionally
// restricted to a fixed popcount.
BlockBasis momentum_basis(const std::vector<GroupElement>& group, int n, int lx, int ly, int m1,
                          int m2, std::optional<int> popcount) {
    const std::uint32_t dim = std::uint32_t(1) << n;
    BlockBasis basis;
    basis.col_of_state.assign(dim, -1);
    basis.coeff_of_state.assign(dim, cxd(0));
    std::vector<bool> visited(dim, false);

    std::vector<cxd> char_table(group.size());
    for (size_t gi = 0; gi < group.size(); ++gi) {
        const double phase = 2.0 * kPi * (double(m1 * group[gi].shift_x) / lx + double(m2 * group[gi].shift_y) / ly);
        char_table[gi] = std::exp(cxd(0.0, phase));
    }

    std::vector<std::pair<std::uint32_t, cxd>> scratch;
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (visited[s]) continue;
        if (popcount && std::popcount(s) != *popcount) {
            visited[s] = true;
            continue;
        }
        // accumulate sum_g chi(g) |g(s)>
        scratch.clear();
        for (size_t gi = 0; gi < group.size(); ++gi) {
            const std::uint32_t t = group[gi].state_map[s];
            bool found = false;
            for (auto& [u, c] : scratch)
                if (u == t) {
                    c += char_table[gi];
                    found = true;
                    break;
                }
            if (!found) scratch.push_back({t, char_table[gi]});
        }
        double norm2 = 0;
        for (auto& [u, c] : scratch) {
            visited[u] = true;
            norm2 += std::norm(c);
        }
        if (norm2 < 1e-12) continue; // momentum incompatible with this orbit
        const double inv = 1.0 / std::sqrt(norm2);
        SparseCol col;
        col.reserve(scratch.size());
        for (auto& [u, c] : scratch)
            if (std::abs(c) > 1e-12) col.push_back({u, c * inv});
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        const std::int32_t idx = static_cast<std::int32_t>(basis.cols.size());
        for (auto& [u, c] : col) {
            basis.col_of_state[u] = idx;
            basis.coeff_of_state[u] = c;
        }
        basis.cols.push_back(std::move(col));
    }
    return basis;
}

// Splits a momentum block into parity-even and parity-odd sub-bases by
// pairing each column with its global-spin-flip partner.
std::pair<BlockBasis, BlockBasis> parity_split(const BlockBasis& in, int n) {
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    BlockBasis even, odd;
    const std::uint32_t dim = std::uint32_t(1) << n;
    even.col_of_state.assign(dim, -1);
    even.coeff_of_state.assign(dim, cxd(0));
    odd.col_of_state.assign(dim, -1);
    odd.coeff_of_state.assign(dim, cxd(0));

    auto push = [](BlockBasis& b, SparseCol col) {
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        const std::int32_t idx = static_cast<std::int32_t>(b.cols.size());
        for (auto& [u, c] : col) {
            b.col_of_state[u] = idx;
            b.coeff_of_state[u] = c;
        }
        b.cols.push_back(std::move(col));
    };

    std::vector<bool> done(in.cols.size(), false);
    for (size_t j = 0; j < in.cols.size(); ++j) {
        if (done[j]) continue;
        // P col_j, entrywise bit flip
        SparseCol flipped;
        for (auto& [u, c] : in.cols[j]) flipped.push_back({u ^ full, c});
        const std::int32_t jp = in.col_of_state[flipped.front().first];
        if (jp < 0) throw std::logic_error("parity partner missing from momentum block");
        // phase between P col_j and col_jp
        cxd phi = 0;
        for (auto& [u, c] : flipped) phi += std::conj(in.coeff_of_state[u]) * c;
        if (std::abs(std::abs(phi) - 1.0) > 1e-9)
            throw std::logic_error("parity does not map basis columns onto each other");
        if (static_cast<size_t>(jp) == j) {
            done[j] = true;
            if (phi.real() > 0) push(even, in.cols[j]);
            else push(odd, in.cols[j]);
            continue;
        }
        done[j] = done[jp] = true;
        const double r = 1.0 / std::sqrt(2.0);
        SparseCol plus, minus;
        for (auto& [u, c] : in.cols[j]) {
            plus.push_back({u, c * r});
            minus.push_back({u, c * r});
        }
        for (auto& [u, c] : in.cols[jp]) {
            plus.push_back({u, phi * c * r});
            minus.push_back({u, -phi * c * r});
        }
        push(even, std::move(plus));
        push(odd, std::move(minus));
    }
    return {std::move(even), std::move(odd)};
}

Mat block_operator(const BlockBasis& basis, const std::vector<CompiledPauli>& terms) {
    const std::int64_t dim = static_cast<std::int64_t>(basis.cols.size());
    Mat h = Mat::Zero(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
        for (const auto& term : terms) {
            for (const auto& [u, c] : basis.cols[j]) {
                const std::uint64_t v = u ^ term.flip_mask;
                const double sign = (std::popcount(u & term.phase_mask) & 1) ? -1.0 : 1.0;
                const std::int32_t i = basis.col_of_state[v];
                if (i < 0) continue; // projected out of this block
                h(i, j) += std::conj(basis.coeff_of_state[v]) * term.scale * sign * c;
            }
        }
    }
    return h;
}

struct BlockSolve {
    std::vector<double> energies;
    Mat vectors;
};

BlockSolve solve_block(const Mat& h_raw, bool want_vectors, int keep) {
    Mat h = (h_raw + h_raw.adjoint()) / 2.0;
    const std::int64_t dim = h.rows();
    BlockSolve out;
    if (dim == 0) return out;
    const bool real_block = h.imag().cwiseAbs().maxCoeff() < 1e-12;
    const int decompose = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    RVec evals;
    Mat evecs;
    if (real_block) {
        Eigen::SelfAdjointEigenSolver<RMat> es(h.real(), decompose);
        evals = es.eigenvalues();
        if (want_vectors) evecs = es.eigenvectors().cast<cxd>();
    } else {
        Eigen::SelfAdjointEigenSolver<Mat> es(h, decompose);
        evals = es.eigenvalues();
        if (want_vectors) evecs = es.eigenvectors();
    }
    const std::int64_t n_keep = (keep < 0) ? dim : std::min<std::int64_t>(keep, dim);
    out.energies.assign(evals.data(), evals.data() + n_keep);
    if (want_vectors) out.vectors = evecs.leftCols(n_keep);
    return out;
}

} // namespace

std::vector<EdSector> ed_sector_spectrum(const PauliSum& hamiltonian, const Lattice& lattice,
                                         const EdOptions& options) {
    const int n = lattice.num_sites;
    if (n > 16) throw std::invalid_argument("ed_sector_spectrum: N <= 16 required for dense blocks");
    check_translation_commutes(hamiltonian, lattice, n);
    if (options.use_parity) check_commutes(hamiltonian, parity_operator(n), n, "parity");
    if (options.use_sz) {
        PauliSum ztot;
        for (int i = 0; i < n; ++i) {
            PauliString z;
            z.letters[i] = PauliOp::Z;
            ztot.push_back(z);
        }
        check_commutes(hamiltonian, ztot, n, "Sz");
    }

    const auto group = translation_group(lattice);
    std::vector<CompiledPauli> terms;
    terms.reserve(hamiltonian.size());
    for (const auto& t : hamiltonian) terms.push_back(compile_pauli(t, n));

    const int lx = lattice.length_x;
    const int ly = lattice.translations.size() > 1 ? lattice.length_y : 1;
    const bool conj_ok = options.exploit_conjugation && !options.want_vectors && hamiltonian_is_real(hamiltonian, n);

    std::vector<int> popcounts;
    if (options.use_sz) {
        if (options.sz_popcount) popcounts.push_back(*options.sz_popcount);
        else
            for (int p = 0; p <= n; ++p) popcounts.push_back(p);
    } else {
        popcounts.push_back(-1);
    }

    std::vector<EdSector> sectors;
    for (int pc : popcounts) {
        // index of a sector in `sectors` for momentum (m1, m2), parity slot
        std::vector<std::vector<int>> slot(lx * ly);
        for (int m2 = 0; m2 < ly; ++m2) {
            for (int m1 = 0; m1 < lx; ++m1) {
                const int cm1 = (lx - m1) % lx, cm2 = (ly - m2) % ly;
                const bool self_conj = (cm1 == m1 && cm2 == m2);
                if (conj_ok && !self_conj && (cm2 < m2 || (cm2 == m2 && cm1 < m1))) {
                    // conjugate partner already solved; copy its energies
                    const auto& src_ids = slot[cm2 * lx + cm1];
                    for (int sid : src_ids) {
                        EdSector copy;
                        copy.key = sectors[sid].key;
                        copy.key.m1 = m1;
                        copy.key.m2 = (ly > 1) ? m2 : -1;
                        copy.energies = sectors[sid].energies;
                        slot[m2 * lx + m1].push_back(static_cast<int>(sectors.size()));
                        sectors.push_back(std::move(copy));
                    }
                    continue;
                }
                BlockBasis base = momentum_basis(group, n, lx, ly, m1, m2,
                                                 pc >= 0 ? std::optional<int>(pc) : std::nullopt);
                std::vector<std::pair<int, BlockBasis>> blocks;
                if (options.use_parity) {
                    auto [even, odd] = parity_split(base, n);
                    blocks.push_back({+1, std::move(even)});
                    blocks.push_back({-1, std::move(odd)});
                } else {
                    blocks.push_back({0, std::move(base)});
                }
                for (auto& [par, basis] : blocks) {
                    Mat h = block_operator(basis, terms);
                    BlockSolve sol = solve_block(h, options.want_vectors, options.levels_per_sector);
                    EdSector sec;
                    sec.key.m1 = m1;
                    sec.key.m2 = (ly > 1) ? m2 : -1;
                    sec.key.parity = par;
                    sec.key.popcount = pc;
                    sec.energies = std::move(sol.energies);
                    if (options.want_vectors) {
                        sec.vectors = std::move(sol.vectors);
                        sec.basis_cols = std::move(basis.cols);
                    }
                    slot[m2 * lx + m1].push_back(static_cast<int>(sectors.size()));
                    sectors.push_back(std::move(sec));
                }
            }
        }
    }
    return sectors;
}

StateVector ed_state(const EdSector& sector, int level, int num_qubits) {
    if (sector.vectors.size() == 0)
        throw std::invalid_argument("ed_state: sector was solved without eigenvectors");
    if (level < 0 || level >= sector.vectors.cols()) throw std::out_of_range("ed_state: level out of range");
    StateVector out(num_qubits);
    for (size_t j = 0; j < sector.basis_cols.size(); ++j) {
        const cxd w = sector.vectors(static_cast<std::int64_t>(j), level);
        if (std::abs(w) < 1e-300) continue;
        for (const auto& [u, c] : sector.basis_cols[j]) out.amps(static_cast<std::int64_t>(u)) += w * c;
    }
    return out;
}

void ed_attach_spin_labels(std::vector<EdSector>& sectors, int num_qubits) {
    const PauliSum s2 = total_spin_squared(num_qubits);
    for (auto& sec : sectors) {
        if (sec.vectors.size() == 0) continue;
        sec.spin_expectations.clear();
        for (int l = 0; l < sec.vectors.cols(); ++l) {
            StateVector psi = ed_state(sec, l, num_qubits);
            psi.normalize();
            sec.spin_expectations.push_back(expect_pauli_sum(psi, s2));
        }
    }
}

std::optional<double> EdSector::spin_of(int level) const {
    if (level < 0 || level >= static_cast<int>(spin_expectations.size())) return std::nullopt;
    const double v = spin_expectations[level];
    const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * v));
    const double snapped = std::round(2.0 * s) / 2.0;
    if (std::abs(snapped * (snapped + 1.0) - v) > 0.05) return std::nullopt;
    return snapped;
}

std::vector<double> dense_spectrum(const PauliSum& hamiltonian, int num_qubits) {
    const std::int64_t dim = std::int64_t(1) << num_qubits;
    Mat h = Mat::Zero(dim, dim);
    for (const auto& term : hamiltonian) {
        const CompiledPauli c = compile_pauli(term, num_qubits);
        for (std::int64_t col = 0; col < dim; ++col) {
            const double sign =
                (std::popcount(static_cast<std::uint64_t>(col) & c.phase_mask) & 1) ? -1.0 : 1.0;
            h(col ^ static_cast<std::int64_t>(c.flip_mask), col) += c.scale * sign;
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> es((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    return out;
}

} // namespace tse
