#include "tse/free_fermion.hpp"

#include "tse/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tse {

double tfi_dispersion(double g, double k) {
    const double a = g - std::cos(k);
    const double b = std::sin(k);
    return 2.0 * std::sqrt(a * a + b * b);
}

namespace {

// Momenta are tracked in integer units of pi/N (so ABC modes are odd
// integers, PBC modes even), making total momentum exact.
struct Mode {
    int units;
    double energy;
};

void enumerate_subsets(const std::vector<Mode>& modes, int max_take, int parity_mod2,
                       const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t next) {
        if ((static_cast<int>(chosen.size()) & 1) == parity_mod2 &&
            static_cast<int>(chosen.size()) <= max_take)
            emit(chosen);
        if (static_cast<int>(chosen.size()) >= max_take || next >= modes.size()) return;
        for (size_t i = next; i < modes.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<FermionLevel> tfi_fermion_spectrum(int n, double g, int parity, int max_quasiparticles) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("tfi_fermion_spectrum: N must be even");
    if (g <= 0) throw std::invalid_argument("tfi_fermion_spectrum: g > 0 required");
    if (parity != +1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");

    std::vector<FermionLevel> levels;
    const int two_n = 2 * n;

    if (parity == +1) {
        // antiperiodic grid, k = 2 pi (m + 1/2) / N
        std::vector<Mode> modes;
        double vacuum = 0.0;
        for (int m = 0; m < n; ++m) {
            const int units = 2 * m + 1; // k in units of pi/N
            const double k = kPi * units / n;
            const double e = tfi_dispersion(g, k);
            modes.push_back({units, e});
            vacuum -= 0.5 * e;
        }
        enumerate_subsets(modes, max_quasiparticles, 0, [&](const std::vector<int>& idx) {
            FermionLevel lvl;
            lvl.parity = +1;
            lvl.energy = vacuum;
            int units = 0;
            for (int i : idx) {
                lvl.energy += modes[i].energy;
                units += modes[i].units;
                lvl.occupied_momenta.push_back(kPi * modes[i].units / n);
            }
            lvl.n_bogoliubov = static_cast<int>(idx.size());
            units = ((units % two_n) + two_n) % two_n;
            if (units % 2 != 0) throw std::logic_error("even-sector momentum off the integer grid");
            lvl.momentum_m = units / 2;
            levels.push_back(std::move(lvl));
        });
    } else {
        // periodic grid; k = 0 and k = pi decouple with signed energies
        const double e0 = 2.0 * g - 2.0;
        const double epi = 2.0 * g + 2.0;
        std::vector<Mode> modes;
        double offset = -0.5 * (e0 + epi);
        for (int m = 1; m < n; ++m) {
            if (m == n / 2) continue;
            const int units = 2 * m;
            const double k = kPi * units / n;
            const double e = tfi_dispersion(g, k);
            modes.push_back({units, e});
            offset -= 0.5 * e;
        }
        for (int n0 = 0; n0 <= 1; ++n0)
            for (int npi = 0; npi <= 1; ++npi) {
                const int need_mod2 = (1 - ((n0 + npi) % 2) + 2) % 2; // total count odd
                if (n0 + npi > max_quasiparticles) continue;
                enumerate_subsets(
                    modes, max_quasiparticles - n0 - npi, need_mod2, [&](const std::vector<int>& idx) {
                        FermionLevel lvl;
                        lvl.parity = -1;
                        lvl.n_zero = n0;
                        lvl.n_pi = npi;
                        lvl.n_bogoliubov = static_cast<int>(idx.size());
                        lvl.energy = offset + n0 * e0 + npi * epi;
                        int units = npi * n; // k = pi contributes n units
                        for (int i : idx) {
                            lvl.energy += modes[i].energy;
                            units += modes[i].units;
                            lvl.occupied_momenta.push_back(kPi * modes[i].units / n);
                        }
                        if (npi) lvl.occupied_momenta.push_back(kPi);
                        if (n0) lvl.occupied_momenta.push_back(0.0);
                        units = ((units % two_n) + two_n) % two_n;
                        if (units % 2 != 0) throw std::logic_error("odd-sector momentum off the integer grid");
                        lvl.momentum_m = units / 2;
                        levels.push_back(std::move(lvl));
                    });
            }
    }
    std::sort(levels.begin(), levels.end(),
              [](const FermionLevel& a, const FermionLevel& b) { return a.energy < b.energy; });
    return levels;
}

ThreeFermionType classify_3fermion(const FermionLevel& level) {
    if (level.quasiparticles() != 3)
        throw std::invalid_argument("classify_3fermion: level does not have 3 quasiparticles");
    const int nb = level.n_bogoliubov, n0 = level.n_zero, npi = level.n_pi;
    if ((nb == 2 && n0 == 1 && npi == 0) || (nb == 1 && n0 == 1 && npi == 1))
        return ThreeFermionType::type_I;
    if ((nb == 2 && n0 == 0 && npi == 1) || (nb == 3 && n0 == 0 && npi == 0))
        return ThreeFermionType::type_II;
    throw std::logic_error("unreachable 3-fermion occupation tuple");
}

std::string to_string(ThreeFermionType type) {
    return type == ThreeFermionType::type_I ? "type_I" : "type_II";
}

std::string fermion_level_tag(const FermionLevel& level) {
    const int q = level.quasiparticles();
    if (q == 0) return "vac";
    if (level.parity == -1 && q == 1 && level.n_zero == 1) return "vac"; // odd ground state (0,1,0)
    if (q == 3 && level.parity == -1)
        return classify_3fermion(level) == ThreeFermionType::type_I ? "3f-I" : "3f-II";
    return std::to_string(q) + "f";
}

} // namespace tse
