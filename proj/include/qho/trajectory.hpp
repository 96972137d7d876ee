// trajectory.hpp — recorded observable rows shared by the density-matrix and
// moment propagators, plus the Gaussian moment state they exchange.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qho {

// First moments and normal-ordered second moments N_ij = <v_i† v_j> for
// v = (a, b). occ(0,0) = <a†a>, occ(1,1) = <b†b>, occ(0,1) = <a†b>.
struct MomentState {
    std::complex<double> mean_a{0.0, 0.0};
    std::complex<double> mean_b{0.0, 0.0};
    Eigen::Matrix2cd occ = Eigen::Matrix2cd::Zero();
};

struct TrajectoryRow {
    double e_charger = 0.0;     // omega0 <a†a>
    double e_battery = 0.0;     // omega0 <b†b>
    double ergotropy_b = 0.0;
    double mean_a_sq = 0.0;     // |<a>|^2
    double mean_b_sq = 0.0;     // |<b>|^2
    double trace_err = 0.0;     // |tr(rho) - 1| (0 for moment runs)
    double top_pop_a = 0.0;     // population of the highest Fock level, per mode
    double top_pop_b = 0.0;
};

struct Trajectory {
    std::vector<double> times;  // strictly increasing
    std::vector<TrajectoryRow> rows;

    void append(double t, const TrajectoryRow& row) {
        if (!times.empty() && t <= times.back()) {
            throw std::invalid_argument("Trajectory: times must be strictly increasing");
        }
        times.push_back(t);
        rows.push_back(row);
    }

    std::size_t size() const { return times.size(); }
};

}  // namespace qho
