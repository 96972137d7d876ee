#include "qho/linalg.hpp"

#include <stdexcept>

namespace qho {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols();
    const Eigen::Index br = b.rows(), bc = b.cols();
    CMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i) {
        for (Eigen::Index j = 0; j < ac; ++j) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

HermitianEig hermitian_eig(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_eig: matrix must be square");
    }
    const double scale = std::max(1.0, max_abs(a));
    if (max_abs(a - a.adjoint()) > 1e-10 * scale) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("min_eigenvalue: eigensolver failed to converge");
    }
    return solver.eigenvalues().minCoeff();
}

CMatrix partial_trace(const CMatrix& rho, const CompositeSystem& system, std::string_view keep) {
    const int dim = system.dimension();
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("partial_trace: state dimension does not match system");
    }
    const std::size_t k = system.mode_index(keep);
    const int dk = system.modes()[k].dim;

    // Composite index = (pre * dk + n) * post + q, modes ordered slow-to-fast.
    Eigen::Index pre = 1, post = 1;
    for (std::size_t m = 0; m < k; ++m) pre *= system.modes()[m].dim;
    for (std::size_t m = k + 1; m < system.mode_count(); ++m) post *= system.modes()[m].dim;

    CMatrix out = CMatrix::Zero(dk, dk);
    for (Eigen::Index p = 0; p < pre; ++p) {
        for (Eigen::Index n = 0; n < dk; ++n) {
            for (Eigen::Index m = 0; m < dk; ++m) {
                Complex sum = 0.0;
                const Eigen::Index row0 = (p * dk + n) * post;
                const Eigen::Index col0 = (p * dk + m) * post;
                for (Eigen::Index q = 0; q < post; ++q) {
                    sum += rho(row0 + q, col0 + q);
                }
                out(n, m) += sum;
            }
        }
    }
    return out;
}

}  // namespace qho
