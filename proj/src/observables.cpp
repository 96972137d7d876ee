#include "qho/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qho {

namespace {

const Mode& battery_mode(const CompositeSystem& system) {
    if (system.mode_count() != 2) {
        throw std::invalid_argument("battery observable: needs a two-mode (charger, battery) system");
    }
    return system.modes()[1];
}

}  // namespace

double mode_occupation(const DensityState& state, std::string_view mode) {
    const std::size_t k = state.system.mode_index(mode);
    const int dk = state.system.modes()[k].dim;
    Eigen::Index pre = 1, post = 1;
    for (std::size_t m = 0; m < k; ++m) pre *= state.system.modes()[m].dim;
    for (std::size_t m = k + 1; m < state.system.mode_count(); ++m) post *= state.system.modes()[m].dim;

    // Number operators are diagonal in the Fock basis.
    double occ = 0.0;
    for (Eigen::Index p = 0; p < pre; ++p) {
        for (Eigen::Index n = 0; n < dk; ++n) {
            const Eigen::Index base = (p * dk + n) * post;
            for (Eigen::Index q = 0; q < post; ++q) {
                occ += static_cast<double>(n) * state.rho(base + q, base + q).real();
            }
        }
    }
    return occ;
}

double battery_energy(const DensityState& state, double omega0) {
    return omega0 * mode_occupation(state, battery_mode(state.system).id);
}

double battery_energy(const MomentState& m, double omega0) {
    return omega0 * m.occ(1, 1).real();
}

PassiveDecomposition passive_state(const CMatrix& rho_b, std::span<const double> level_energies) {
    if (rho_b.rows() != rho_b.cols()) {
        throw std::invalid_argument("passive_state: density matrix must be square");
    }
    if (static_cast<std::size_t>(rho_b.rows()) != level_energies.size()) {
        throw std::invalid_argument("passive_state: one level energy per dimension required");
    }
    const double scale = std::max(1.0, max_abs(rho_b));
    if (max_abs(rho_b - rho_b.adjoint()) > 1e-8 * scale) {
        throw std::invalid_argument("passive_state: density matrix not Hermitian");
    }
    if (std::abs(rho_b.trace().real() - 1.0) > 1e-6) {
        throw std::invalid_argument("passive_state: density matrix trace deviates from 1");
    }

    const HermitianEig eig = hermitian_eig(hermitize(rho_b));

    PassiveDecomposition out;
    const std::size_t n = level_energies.size();
    out.populations.resize(n);
    // Solver returns ascending eigenvalues; equal values keep their original
    // ordering under stable_sort (tie handling is cosmetic for the energy).
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return eig.eigenvalues(static_cast<Eigen::Index>(i)) > eig.eigenvalues(static_cast<Eigen::Index>(j));
    });
    for (std::size_t i = 0; i < n; ++i) {
        out.populations[i] = eig.eigenvalues(static_cast<Eigen::Index>(idx[i]));
    }
    out.level_energies.assign(level_energies.begin(), level_energies.end());
    std::sort(out.level_energies.begin(), out.level_energies.end());

    out.passive_energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.passive_energy += out.populations[i] * out.level_energies[i];
    }
    return out;
}

double ergotropy(const DensityState& state, double omega0) {
    const Mode& b = battery_mode(state.system);
    const CMatrix rho_b = hermitize(partial_trace(state.rho, state.system, b.id));

    std::vector<double> levels(static_cast<std::size_t>(b.dim));
    for (int n = 0; n < b.dim; ++n) levels[static_cast<std::size_t>(n)] = omega0 * n;

    const PassiveDecomposition passive = passive_state(rho_b, levels);
    const double e_b = battery_energy(state, omega0);
    const double w = e_b - passive.passive_energy;
    // Exact arithmetic guarantees 0 <= W <= E_B; clamp roundoff residue.
    return std::clamp(w, 0.0, std::max(e_b, 0.0));
}

double ergotropy(const MomentState& m, double omega0) {
    const double occ_bb = m.occ(1, 1).real();
    const double n_eff = occ_bb - std::norm(m.mean_b);
    const double w = omega0 * (occ_bb - std::max(n_eff, 0.0));
    return std::clamp(w, 0.0, std::max(omega0 * occ_bb, 0.0));
}

Complex first_moment(const DensityState& state, std::string_view mode) {
    const std::size_t k = state.system.mode_index(mode);
    const CMatrix a = embed(annihilation(state.system.modes()[k].dim), state.system, mode);
    return (state.rho * a).trace();
}

}  // namespace qho
