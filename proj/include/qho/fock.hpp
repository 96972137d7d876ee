// fock.hpp — truncated Fock-space ladder operators, canonical states, and the
// charger-battery Hamiltonians (lab frame, rotating frame, single-mode form).

#pragma once

#include <utility>
#include <vector>

#include "qho/linalg.hpp"
#include "qho/system.hpp"

namespace qho {

// All rates and frequencies are expressed in units of the oscillator
// frequency omega0 (so omega0 is normally 1.0).
struct ModelParams {
    double omega0 = 1.0;     // charger/battery frequency
    double omega_f = 1.0;    // drive (laser) frequency
    double g = 0.0;          // charger-battery coupling
    double F = 0.0;          // drive amplitude
    double gamma_A = 0.0;    // charger dissipation rate
    double gamma_B = 0.0;    // battery dissipation rate
    double n_thermal = 0.0;  // mean bath occupation N(T) seen by the charger

    // Derived detunings, never stored: local and supermode (global).
    double delta() const { return omega0 - omega_f; }
    double Delta() const { return delta() - g; }

    void validate() const;
};

struct DensityState {
    CMatrix rho;
    CompositeSystem system;

    // Hermitian within 1e-10, unit trace within 1e-8; with check_positivity,
    // min eigenvalue >= -1e-8.
    void validate(bool check_positivity = false) const;
};

// Thrown when a requested state or evolution cannot be represented at the
// configured Fock truncation.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a[n-1, n] = sqrt(n); requires d >= 2.
CMatrix annihilation(int d);

// Lift a single-mode operator into the composite space (identity elsewhere).
CMatrix embed(const CMatrix& op, const CompositeSystem& system, std::string_view mode);

DensityState vacuum_state(const CompositeSystem& system);

// One amplitude per mode, in mode order. Truncation adequacy requires
// |alpha|^2 + 4|alpha| + 6 <= d for each mode.
DensityState coherent_state(const CompositeSystem& system, const std::vector<Complex>& alphas);

// One mean occupation per mode, in mode order; p_n ∝ (nbar/(1+nbar))^n.
DensityState thermal_state(const CompositeSystem& system, const std::vector<double>& nbars);

// omega0(a†a + b†b) + g(ab† + a†b) + F(a e^{i omega_f t} + a† e^{-i omega_f t})
CMatrix build_hamiltonian_lab(const ModelParams& params, const CompositeSystem& system, double t);

// delta(a†a + b†b) + g(ab† + a†b) + F(a + a†), time independent
CMatrix build_hamiltonian_rotating(const ModelParams& params, const CompositeSystem& system);

// delta a†a + F(a + a†) on a single mode
CMatrix build_hamiltonian_simple(const ModelParams& params, const CompositeSystem& system);

// (omega_plus, omega_minus) = (omega0 + g, omega0 - g)
std::pair<double, double> supermode_frequencies(const ModelParams& params);

// Mean photon number 1/(e^{omega_e/kT} - 1) of a bath mode; 0 at kT = 0.
double planck_occupation(double omega_e, double kT);

}  // namespace qho
