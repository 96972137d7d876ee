#include "qho/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qho {

namespace {

void require_two_modes(const CompositeSystem& system, const char* who) {
    if (system.mode_count() != 2) {
        throw std::invalid_argument(std::string(who) + ": needs a two-mode (charger, battery) system");
    }
}

// Coupled-model operator pair in the composite space, charger first.
struct ModePair {
    CMatrix a;
    CMatrix b;
};

ModePair charger_battery_ops(const CompositeSystem& system) {
    const auto& modes = system.modes();
    return {embed(annihilation(modes[0].dim), system, modes[0].id),
            embed(annihilation(modes[1].dim), system, modes[1].id)};
}

}  // namespace

void ModelParams::validate() const {
    if (g < 0.0) throw std::invalid_argument("ModelParams: g must be >= 0");
    if (F < 0.0) throw std::invalid_argument("ModelParams: F must be >= 0");
    if (gamma_A < 0.0) throw std::invalid_argument("ModelParams: gamma_A must be >= 0");
    if (gamma_B < 0.0) throw std::invalid_argument("ModelParams: gamma_B must be >= 0");
    if (n_thermal < 0.0) throw std::invalid_argument("ModelParams: n_thermal must be >= 0");
    if (omega0 <= 0.0) throw std::invalid_argument("ModelParams: omega0 must be > 0");
}

void DensityState::validate(bool check_positivity) const {
    if (rho.rows() != system.dimension() || rho.cols() != system.dimension()) {
        throw std::invalid_argument("DensityState: matrix does not match system dimension");
    }
    const double scale = std::max(1.0, max_abs(rho));
    if (max_abs(rho - rho.adjoint()) > 1e-10 * scale) {
        throw std::invalid_argument("DensityState: not Hermitian within 1e-10");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("DensityState: trace deviates from 1 beyond 1e-8");
    }
    if (check_positivity && min_eigenvalue(hermitize(rho)) < -1e-8) {
        throw std::invalid_argument("DensityState: negative eigenvalue beyond -1e-8");
    }
}

CMatrix annihilation(int d) {
    if (d < 2) throw std::invalid_argument("annihilation: dimension must be >= 2");
    CMatrix a = CMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

CMatrix embed(const CMatrix& op, const CompositeSystem& system, std::string_view mode) {
    const std::size_t k = system.mode_index(mode);
    const int d = system.modes()[k].dim;
    if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("embed: operator does not match mode dimension");
    }
    CMatrix out = CMatrix::Identity(1, 1);
    for (std::size_t m = 0; m < system.mode_count(); ++m) {
        const int dm = system.modes()[m].dim;
        out = kron(out, (m == k) ? op : CMatrix(CMatrix::Identity(dm, dm)));
    }
    return out;
}

DensityState vacuum_state(const CompositeSystem& system) {
    CMatrix rho = CMatrix::Zero(system.dimension(), system.dimension());
    rho(0, 0) = 1.0;
    return {rho, system};
}

DensityState coherent_state(const CompositeSystem& system, const std::vector<Complex>& alphas) {
    if (alphas.size() != system.mode_count()) {
        throw std::invalid_argument("coherent_state: one amplitude per mode required");
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Ones(1);
    for (std::size_t m = 0; m < system.mode_count(); ++m) {
        const int d = system.modes()[m].dim;
        const double aa = std::abs(alphas[m]);
        if (aa * aa + 4.0 * aa + 6.0 > static_cast<double>(d)) {
            throw TruncationError("coherent_state: |alpha|^2 + 4|alpha| + 6 exceeds truncation of mode '" +
                                  system.modes()[m].id + "'");
        }
        Eigen::VectorXcd ket(d);
        Complex c = std::exp(-0.5 * aa * aa);  // c_n = e^{-|a|^2/2} a^n / sqrt(n!)
        ket(0) = c;
        for (int n = 1; n < d; ++n) {
            c *= alphas[m] / std::sqrt(static_cast<double>(n));
            ket(n) = c;
        }
        ket.normalize();
        // psi <- psi ⊗ ket
        Eigen::VectorXcd next(psi.size() * d);
        for (Eigen::Index i = 0; i < psi.size(); ++i) next.segment(i * d, d) = psi(i) * ket;
        psi = std::move(next);
    }
    DensityState state{psi * psi.adjoint(), system};
    state.validate();
    return state;
}

DensityState thermal_state(const CompositeSystem& system, const std::vector<double>& nbars) {
    if (nbars.size() != system.mode_count()) {
        throw std::invalid_argument("thermal_state: one occupation per mode required");
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(1);
    for (std::size_t m = 0; m < system.mode_count(); ++m) {
        const int d = system.modes()[m].dim;
        const double nbar = nbars[m];
        if (nbar < 0.0) throw std::invalid_argument("thermal_state: nbar must be >= 0");
        Eigen::VectorXd p(d);
        const double q = nbar / (1.0 + nbar);
        double w = 1.0;
        for (int n = 0; n < d; ++n) {
            p(n) = w;
            w *= q;
        }
        p /= p.sum();
        Eigen::VectorXd next(diag.size() * d);
        for (Eigen::Index i = 0; i < diag.size(); ++i) next.segment(i * d, d) = diag(i) * p;
        diag = std::move(next);
    }
    DensityState state{diag.cast<Complex>().asDiagonal(), system};
    state.validate();
    return state;
}

CMatrix build_hamiltonian_lab(const ModelParams& params, const CompositeSystem& system, double t) {
    require_two_modes(system, "build_hamiltonian_lab");
    const auto [a, b] = charger_battery_ops(system);
    const CMatrix ad = a.adjoint(), bd = b.adjoint();
    const Complex phase = std::exp(Complex(0.0, params.omega_f * t));
    CMatrix h = params.omega0 * (ad * a + bd * b) + params.g * (a * bd + ad * b);
    h += params.F * (phase * a + std::conj(phase) * ad);
    return h;
}

CMatrix build_hamiltonian_rotating(const ModelParams& params, const CompositeSystem& system) {
    require_two_modes(system, "build_hamiltonian_rotating");
    const auto [a, b] = charger_battery_ops(system);
    const CMatrix ad = a.adjoint(), bd = b.adjoint();
    return params.delta() * (ad * a + bd * b) + params.g * (a * bd + ad * b) +
           params.F * (a + ad);
}

CMatrix build_hamiltonian_simple(const ModelParams& params, const CompositeSystem& system) {
    if (system.mode_count() != 1) {
        throw std::invalid_argument("build_hamiltonian_simple: needs a single-mode system");
    }
    const CMatrix a = annihilation(system.modes()[0].dim);
    const CMatrix ad = a.adjoint();
    return params.delta() * (ad * a) + params.F * (a + ad);
}

std::pair<double, double> supermode_frequencies(const ModelParams& params) {
    return {params.omega0 + params.g, params.omega0 - params.g};
}

double planck_occupation(double omega_e, double kT) {
    if (omega_e <= 0.0) throw std::invalid_argument("planck_occupation: omega_e must be > 0");
    if (kT < 0.0) throw std::invalid_argument("planck_occupation: kT must be >= 0");
    if (kT == 0.0) return 0.0;
    return 1.0 / std::expm1(omega_e / kT);
}

}  // namespace qho
