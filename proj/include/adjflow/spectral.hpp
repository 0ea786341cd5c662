#pragma once

#include "adjflow/types.hpp"

namespace adjflow {

/** Ascending eigenvalues with orthonormal eigenvector columns. */
struct EigenDecomposition {
	Vector values;
	Matrix vectors;
	/** Absolute tolerance used when grouping eigenvalues into clusters. */
	double cluster_tol = 1e-8;
};

/**
 * Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
 *
 * Sweeps run until the off-diagonal Frobenius norm drops below
 * 1e-12 * ||M||_F, with a hard stop at 50 sweeps.  Eigenpairs are sorted
 * ascending and each eigenvector's first nonzero component is made
 * positive, so results are fully deterministic.
 */
EigenDecomposition sym_eigen(const Matrix& m);

/** e^{tM} = V diag(e^{t lambda}) V^T, symmetrized by averaging.
    Refuses exponents above 700 (OverflowError reports the safe range). */
Matrix expm_sym(const Matrix& m, double t);
Matrix expm_sym(const EigenDecomposition& d, double t);

/** V diag(e^{t(lambda - shift)}) V^T: the propagator rescaled by
    e^{-t*shift}.  Long-time limits are evaluated through this with the
    extreme eigenvalue as shift, so every exponent is <= 0 and the
    computation cannot overflow. */
Matrix shifted_propagator(const EigenDecomposition& d, double t, double shift);

/** Orthogonal projector onto the span of eigenvectors with
    |lambda - target| <= tol; zero matrix for an empty cluster. */
Matrix eigenprojector(const EigenDecomposition& d, double target, double tol = 1e-8);

/** Number of eigenvalues with |lambda - target| <= tol. */
int cluster_size(const EigenDecomposition& d, double target, double tol = 1e-8);

enum class Norm { One, Two, Inf };

/** Operator norm: max column sum, spectral radius (via sym_eigen of
    M^T M), or max row sum. */
double operator_norm(const Matrix& m, Norm p);

} // namespace adjflow
