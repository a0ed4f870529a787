#ifndef OPRADIUS_LINALG_HPP
#define OPRADIUS_LINALG_HPP

#include "opradius/types.hpp"

#include <utility>

namespace opradius {

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, eigenvector
// columns orthonormal, V * diag(d) * V^* reconstructs the input.
struct HermitianEig {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

// Max-modulus entry of H - H^*; zero for exactly Hermitian input.
double hermitian_defect(const ComplexMatrix& h);

// Cyclic complex Jacobi diagonalization. `tol` is the relative off-diagonal
// threshold: the sweep loop stops once the off-diagonal Frobenius mass drops
// below tol * ||H||_F. Sweep budget 100, then NoConvergenceError.
// Throws NotHermitianError unless ||H - H^*||_max <= 1e-12.
HermitianEig hermitian_eig(const ComplexMatrix& h, double tol = 1e-12);

// Largest eigenvalue only; same Jacobi core without eigenvector accumulation.
// The input is trusted to be Hermitian (internal fast path).
double hermitian_lambda_max(const ComplexMatrix& h, double tol = 1e-12);

// Largest singular value, computed as sqrt(lambda_max(T^* T)).
double operator_norm(const ComplexMatrix& t);

// Operator absolute value (T^* T)^{1/2}.
ComplexMatrix abs_operator(const ComplexMatrix& t);

// Fractional power of a positive semidefinite matrix via its eigensystem.
// Eigenvalues in [-1e-8, 0) are clamped to zero; below -1e-8 -> NotPsdError.
// beta must be >= 0; beta == 1 returns the input unchanged.
ComplexMatrix psd_power(const ComplexMatrix& h, double beta);

// Cartesian decomposition A = B + iC with B = (A + A^*)/2, C = (A - A^*)/(2i).
std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& a);

}  // namespace opradius

#endif
