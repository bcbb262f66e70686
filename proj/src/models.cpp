#include "tse/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace tse {

namespace {

PauliString two_site(PauliOp op_a, int a, PauliOp op_b, int b, double coeff) {
    PauliString p;
    p.letters[a] = op_a;
    p.letters[b] = op_b;
    p.coeff = coeff;
    return p;
}

PauliString one_site(PauliOp op, int q, double coeff) {
    PauliString p;
    p.letters[q] = op;
    p.coeff = coeff;
    return p;
}

Lattice make_chain(int n) {
    if (n < 3) throw std::invalid_argument("chain needs N >= 3 (shorter PBC chains double-count bonds)");
    Lattice lat;
    lat.kind = LatticeKind::chain;
    lat.num_sites = n;
    lat.length_x = n;
    lat.length_y = 1;
    for (int i = 0; i < n; ++i) lat.site_coords.push_back({static_cast<double>(i), 0.0});
    for (int i = 0; i < n; ++i) lat.bonds.push_back({i, (i + 1) % n, 0});
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    lat.translations.push_back(shift);
    return lat;
}

Lattice make_square(int lx, int ly) {
    if (lx < 2 || ly < 2) throw std::invalid_argument("square lattice needs L_x, L_y >= 2");
    Lattice lat;
    lat.kind = LatticeKind::square;
    lat.num_sites = lx * ly;
    lat.length_x = lx;
    lat.length_y = ly;
    auto site = [&](int x, int y) { return ((y % ly + ly) % ly) * lx + ((x % lx + lx) % lx); };
    for (int y = 0; y < ly; ++y)
        for (int x = 0; x < lx; ++x) lat.site_coords.push_back({static_cast<double>(x), static_cast<double>(y)});
    for (int y = 0; y < ly; ++y)
        for (int x = 0; x < lx; ++x) {
            lat.bonds.push_back({site(x, y), site(x + 1, y), 0});
            lat.bonds.push_back({site(x, y), site(x, y + 1), 1});
        }
    std::vector<int> tx(lat.num_sites), ty(lat.num_sites);
    for (int y = 0; y < ly; ++y)
        for (int x = 0; x < lx; ++x) {
            tx[site(x, y)] = site(x + 1, y);
            ty[site(x, y)] = site(x, y + 1);
        }
    lat.translations = {tx, ty};
    return lat;
}

// Kagome torus: 3-site unit cells on a parallelogram spanned by
// a_x = (1,0) and a_y = (1/2, sqrt(3)/2); sublattice offsets 0 at the cell
// origin, 1 at a_x/2, 2 at a_y/2. Site index = (cy*Lx + cx)*3 + sublattice.
Lattice make_kagome(int lx, int ly) {
    if (lx != 2 || ly != 2) throw std::invalid_argument("only the 12-site 2x2 kagome torus is supported");
    Lattice lat;
    lat.kind = LatticeKind::kagome;
    lat.length_x = lx;
    lat.length_y = ly;
    lat.num_sites = 3 * lx * ly;
    auto site = [&](int cx, int cy, int s) {
        return ((((cy % ly) + ly) % ly) * lx + (((cx % lx) + lx) % lx)) * 3 + s;
    };
    const double ax[2] = {1.0, 0.0};
    const double ay[2] = {0.5, std::sqrt(3.0) / 2.0};
    for (int cy = 0; cy < ly; ++cy)
        for (int cx = 0; cx < lx; ++cx) {
            const double ox = cx * ax[0] + cy * ay[0];
            const double oy = cx * ax[1] + cy * ay[1];
            lat.site_coords.push_back({ox, oy});
            lat.site_coords.push_back({ox + ax[0] / 2, oy + ax[1] / 2});
            lat.site_coords.push_back({ox + ay[0] / 2, oy + ay[1] / 2});
        }
    // Up triangle inside each cell, down triangle between cells. Orientation
    // tags the bond direction: 0 along a_x, 1 along a_y, 2 along a_y - a_x.
    for (int cy = 0; cy < ly; ++cy)
        for (int cx = 0; cx < lx; ++cx) {
            lat.bonds.push_back({site(cx, cy, 0), site(cx, cy, 1), 0});
            lat.bonds.push_back({site(cx, cy, 0), site(cx, cy, 2), 1});
            lat.bonds.push_back({site(cx, cy, 1), site(cx, cy, 2), 2});
            lat.bonds.push_back({site(cx, cy, 1), site(cx + 1, cy, 0), 0});
            lat.bonds.push_back({site(cx, cy, 2), site(cx, cy + 1, 0), 1});
            lat.bonds.push_back({site(cx, cy, 1), site(cx + 1, cy - 1, 2), 2});
        }
    std::vector<int> tx(lat.num_sites), ty(lat.num_sites);
    for (int cy = 0; cy < ly; ++cy)
        for (int cx = 0; cx < lx; ++cx)
            for (int s = 0; s < 3; ++s) {
                tx[site(cx, cy, s)] = site(cx + 1, cy, s);
                ty[site(cx, cy, s)] = site(cx, cy + 1, s);
            }
    lat.translations = {tx, ty};
    return lat;
}

void add_heisenberg_bond(PauliSum& terms, int a, int b) {
    terms.push_back(two_site(PauliOp::X, a, PauliOp::X, b, 1.0));
    terms.push_back(two_site(PauliOp::Y, a, PauliOp::Y, b, 1.0));
    terms.push_back(two_site(PauliOp::Z, a, PauliOp::Z, b, 1.0));
}

} // namespace

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "tfi_chain") return ModelKind::tfi_chain;
    if (s == "tfi_square") return ModelKind::tfi_square;
    if (s == "heisenberg_chain") return ModelKind::heisenberg_chain;
    if (s == "kagome_heisenberg") return ModelKind::kagome_heisenberg;
    throw std::invalid_argument("unknown model kind '" + s + "'");
}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::tfi_chain: return "tfi_chain";
        case ModelKind::tfi_square: return "tfi_square";
        case ModelKind::heisenberg_chain: return "heisenberg_chain";
        case ModelKind::kagome_heisenberg: return "kagome_heisenberg";
    }
    return "?";
}

std::pair<Lattice, Hamiltonian> build_model(ModelKind kind, int length_x, int length_y, double g) {
    Hamiltonian ham;
    ham.g = g;
    switch (kind) {
        case ModelKind::tfi_chain: {
            Lattice lat = make_chain(length_x);
            for (const auto& b : lat.bonds)
                ham.terms.push_back(two_site(PauliOp::Z, b.a, PauliOp::Z, b.b, -1.0));
            for (int i = 0; i < lat.num_sites; ++i) ham.terms.push_back(one_site(PauliOp::X, i, -g));
            return {std::move(lat), std::move(ham)};
        }
        case ModelKind::tfi_square: {
            Lattice lat = make_square(length_x, length_y);
            for (const auto& b : lat.bonds)
                ham.terms.push_back(two_site(PauliOp::Z, b.a, PauliOp::Z, b.b, -1.0));
            for (int i = 0; i < lat.num_sites; ++i) ham.terms.push_back(one_site(PauliOp::X, i, -g));
            return {std::move(lat), std::move(ham)};
        }
        case ModelKind::heisenberg_chain: {
            Lattice lat = make_chain(length_x);
            for (const auto& b : lat.bonds) add_heisenberg_bond(ham.terms, b.a, b.b);
            return {std::move(lat), std::move(ham)};
        }
        case ModelKind::kagome_heisenberg: {
            Lattice lat = make_kagome(length_x, length_y);
            for (const auto& b : lat.bonds) add_heisenberg_bond(ham.terms, b.a, b.b);
            return {std::move(lat), std::move(ham)};
        }
    }
    throw std::invalid_argument("unhandled model kind");
}

PauliSum parity_operator(int num_sites) {
    if (num_sites < 1) throw std::invalid_argument("parity_operator: N >= 1 required");
    PauliString p;
    p.coeff = 1.0;
    for (int i = 0; i < num_sites; ++i) p.letters[i] = PauliOp::X;
    return {p};
}

PauliSum total_spin_squared(int num_sites) {
    if (num_sites < 1) throw std::invalid_argument("total_spin_squared: N >= 1 required");
    PauliSum terms;
    PauliString ident;
    ident.coeff = 3.0 * num_sites / 4.0;
    terms.push_back(ident);
    for (int i = 0; i < num_sites; ++i)
        for (int j = i + 1; j < num_sites; ++j) {
            terms.push_back(two_site(PauliOp::X, i, PauliOp::X, j, 0.5));
            terms.push_back(two_site(PauliOp::Y, i, PauliOp::Y, j, 0.5));
            terms.push_back(two_site(PauliOp::Z, i, PauliOp::Z, j, 0.5));
        }
    return terms;
}

std::vector<std::vector<int>> disjoint_bond_layers(const Lattice& lattice, int num_layers) {
    const int nb = static_cast<int>(lattice.bonds.size());
    std::vector<int> color(nb, -1);
    std::vector<std::set<int>> used(lattice.num_sites);
    // Backtracking over bonds in stored order; first solution is deterministic.
    std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == nb) return true;
        const Bond& b = lattice.bonds[i];
        for (int c = 0; c < num_layers; ++c) {
            if (used[b.a].count(c) || used[b.b].count(c)) continue;
            color[i] = c;
            used[b.a].insert(c);
            used[b.b].insert(c);
            if (assign(i + 1)) return true;
            used[b.a].erase(c);
            used[b.b].erase(c);
            color[i] = -1;
        }
        return false;
    };
    if (!assign(0)) throw std::runtime_error("no disjoint bond layering with the requested layer count");
    std::vector<std::vector<int>> layers(num_layers);
    for (int i = 0; i < nb; ++i) layers[color[i]].push_back(i);
    return layers;
}

std::vector<std::pair<int, int>> kagome_dimer_covering(const Lattice& lattice) {
    if (lattice.kind != LatticeKind::kagome)
        throw std::invalid_argument("kagome_dimer_covering: kagome lattice expected");
    const int n = lattice.num_sites;
    std::vector<bool> covered(n, false);
    std::vector<std::pair<int, int>> dimers;
    // First perfect matching in bond order; deterministic.
    std::function<bool()> match = [&]() -> bool {
        int s = 0;
        while (s < n && covered[s]) ++s;
        if (s == n) return true;
        for (const auto& b : lattice.bonds) {
            int u = -1;
            if (b.a == s && !covered[b.b]) u = b.b;
            if (b.b == s && !covered[b.a]) u = b.a;
            if (u < 0) continue;
            covered[s] = covered[u] = true;
            dimers.push_back({std::min(s, u), std::max(s, u)});
            if (match()) return true;
            covered[s] = covered[u] = false;
            dimers.pop_back();
        }
        return false;
    };
    if (!match()) throw std::runtime_error("kagome cluster has no perfect dimer covering");
    return dimers;
}

std::vector<int> compose_permutations(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(first.size());
    for (size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

std::vector<int> power_permutation(const std::vector<int>& perm, int exponent) {
    if (exponent < 0) throw std::invalid_argument("power_permutation: exponent must be >= 0");
    const int n = static_cast<int>(perm.size());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    while (exponent-- > 0) out = compose_permutations(out, perm);
    return out;
}

} // namespace tse
