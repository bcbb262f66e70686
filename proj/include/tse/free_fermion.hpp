#pragma once

#include <string>
#include <vector>

namespace tse {

// One many-body level of the periodic transverse-field Ising chain in the
// fermion picture. Momentum is stored as an integer index m, K = 2 pi m / N.
// occupation = (n_B, n_0, n_pi): paired Bogoliubov modes and the two unpaired
// k = 0, pi modes (odd parity only).
struct FermionLevel {
    double energy = 0.0;
    int momentum_m = 0;
    int parity = +1;
    int n_bogoliubov = 0;
    int n_zero = 0;
    int n_pi = 0;
    std::vector<double> occupied_momenta;

    int quasiparticles() const { return n_bogoliubov + n_zero + n_pi; }
};

enum class ThreeFermionType { type_I, type_II };

// Bogoliubov dispersion, epsilon_k = 2 sqrt((g - cos k)^2 + sin^2 k).
double tfi_dispersion(double g, double k);

// All levels of one parity sector with at most `max_quasiparticles` occupied
// modes, sorted by energy. Even parity uses the antiperiodic momentum grid
// k = 2 pi (m + 1/2) / N; odd parity uses the periodic grid with the unpaired
// k = 0 (energy 2g - 2) and k = pi (energy 2g + 2) modes, ground state
// occupying k = 0.
std::vector<FermionLevel> tfi_fermion_spectrum(int n, double g, int parity, int max_quasiparticles);

ThreeFermionType classify_3fermion(const FermionLevel& level);

std::string to_string(ThreeFermionType type);

// Occupation-class tag used in reports: "vac", "1f", "2f", "3f-I", "3f-II",
// "4f", ... The odd-sector ground state (0,1,0) is tagged "vac".
std::string fermion_level_tag(const FermionLevel& level);

} // namespace tse
