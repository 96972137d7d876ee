// observables.hpp — stored energy, ergotropy, and passive-state computation
// from density matrices or Gaussian moment states.

#pragma once

#include <span>
#include <vector>

#include "qho/fock.hpp"
#include "qho/trajectory.hpp"

namespace qho {

// Descending populations paired with ascending level energies; the energy of
// the resulting passive state is the part of the stored energy no cyclic
// unitary can extract.
struct PassiveDecomposition {
    std::vector<double> populations;      // lambda_i, descending, sum 1
    std::vector<double> level_energies;   // epsilon_i, ascending
    double passive_energy = 0.0;          // sum_i lambda_i epsilon_i
};

// <n> of one mode; works for any composite size.
double mode_occupation(const DensityState& state, std::string_view mode);

// omega0 <b†b>; the battery is the second mode of a two-mode system.
double battery_energy(const DensityState& state, double omega0 = 1.0);
double battery_energy(const MomentState& m, double omega0 = 1.0);

PassiveDecomposition passive_state(const CMatrix& rho_b, std::span<const double> level_energies);

// Maximum cyclic-unitary work: E_B minus the passive energy of the reduced
// battery state on the ladder epsilon_n = n * omega0.
double ergotropy(const DensityState& state, double omega0 = 1.0);

// Gaussian shortcut, valid because the dynamics maps vacuum into displaced
// thermal states: W = omega0 (occ_bb - n_eff) with n_eff = occ_bb - |<b>|^2.
double ergotropy(const MomentState& m, double omega0 = 1.0);

// tr(rho a_mode)
Complex first_moment(const DensityState& state, std::string_view mode);

}  // namespace qho
