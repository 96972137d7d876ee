// dynamics.hpp — GKSL master-equation right-hand side and fixed-step RK4
// integrator for density matrices, plus the exact first/second-moment
// propagator for the same driven charger-battery model.

#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "qho/fock.hpp"
#include "qho/trajectory.hpp"

namespace qho {

enum class Frame { Lab, Rotating };

// Finite-temperature dissipator form. Physical splits the bath coupling into
// gamma(N+1) D_a + gamma N D_{a†}; LoweringOnly applies both channels to the
// lowering operator (an intentionally unphysical variant kept for comparison:
// it damps without thermal injection).
enum class ThermalForm { Physical, LoweringOnly };

struct LindbladGenerator {
    using HamiltonianBuilder = std::function<CMatrix(double)>;

    std::variant<CMatrix, HamiltonianBuilder> hamiltonian;

    struct Collapse {
        CMatrix op;
        double rate = 0.0;  // >= 0
    };
    std::vector<Collapse> collapse;

    bool time_dependent() const { return hamiltonian.index() == 1; }
    CMatrix hamiltonian_at(double t) const;
    void validate(int dim) const;  // rates >= 0, dimensions match
};

// Ready-made generator for the driven dissipative model: charger bath at
// occupation N(T) (split per `form`), battery bath at zero temperature with
// rate gamma_B. Two-mode systems take the coupled Hamiltonian in the chosen
// frame; single-mode systems take the simple Hamiltonian (rotating only).
LindbladGenerator make_thermal_generator(const ModelParams& params, const CompositeSystem& system,
                                         Frame frame, ThermalForm form = ThermalForm::Physical);

// -i[H(t), rho] + sum_k r_k (L_k rho L_k† - 1/2 {L_k† L_k, rho})
CMatrix lindblad_rhs(const DensityState& state, const LindbladGenerator& gen, double t);

struct TraceDriftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvolveOptions {
    double t_start = 0.0;
    double t_end = 0.0;     // > t_start, commensurate with dt
    double dt = 0.01;
    int record_stride = 10;
    double omega0 = 1.0;    // energy scale for recorded rows
};

// Classic fixed-step RK4; the state is re-symmetrized each step. Aborts with
// TruncationError if any mode's top Fock level exceeds 1e-4 population, and
// with TraceDriftError if |tr(rho) - 1| drifts beyond 1e-6.
std::pair<DensityState, Trajectory> evolve(const DensityState& state, const LindbladGenerator& gen,
                                           const EvolveOptions& opt);

// Time derivative of the coupled-model moments in the rotating frame:
//   d<a>/dt = -i delta <a> - i g <b> - gamma_A/2 <a> - iF
//   d<b>/dt = -i delta <b> - i g <a> - gamma_B/2 <b>
// and the matching linear equation for the normal-ordered second moments,
// with thermal injection gamma_A N(T) into the aa entry.
MomentState moment_rhs(const MomentState& m, const ModelParams& params);

std::pair<MomentState, Trajectory> evolve_moments(const MomentState& m0, const ModelParams& params,
                                                  const EvolveOptions& opt);

}  // namespace qho
