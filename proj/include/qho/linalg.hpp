// linalg.hpp — dense complex linear algebra shared by every physics layer:
// Kronecker products, adjoints, Hermitian eigendecomposition, partial trace.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>

#include "qho/system.hpp"

namespace qho {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Eigenpairs of a Hermitian matrix, eigenvalues ascending; column k of
// `eigenvectors` pairs with eigenvalue k.
struct HermitianEig {
    Eigen::VectorXd eigenvalues;
    CMatrix eigenvectors;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix dagger(const CMatrix& a);

// Requires a square matrix, Hermitian within 1e-10 (relative to its largest
// entry); callers symmetrize first if needed.
HermitianEig hermitian_eig(const CMatrix& a);

// Trace out every mode except `keep`.
CMatrix partial_trace(const CMatrix& rho, const CompositeSystem& system, std::string_view keep);

inline CMatrix hermitize(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

inline double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double min_eigenvalue(const CMatrix& hermitian);

}  // namespace qho
