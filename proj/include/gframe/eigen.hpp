#pragma once

#include <functional>
#include <vector>

#include "gframe/matrix.hpp"

// LAPACK-backed spectral decompositions. Everything here returns explicit
// factorizations so callers can reassemble f(A) = V f(D) V^dagger.

namespace gframe {

/// A = vectors * diag(values) * vectors^dagger, values ascending.
struct HermitianEig {
    std::vector<double> values;
    Matrix vectors;
};

HermitianEig eig_hermitian(const Matrix& a);

/// Spectral decomposition of a normal matrix via complex Schur form.
/// A = vectors * diag(values) * vectors^dagger. Throws BadOperator if the
/// Schur factor is not diagonal to within the given tolerance (input was not
/// numerically normal).
struct NormalEig {
    CVec values;
    Matrix vectors;
};

NormalEig eig_normal(const Matrix& a, double offdiag_tol = 1e-8);

/// f(A) for Hermitian A, f applied to real eigenvalues.
Matrix spectral_apply_hermitian(const Matrix& a, const std::function<cd(double)>& f);

/// f(A) for normal A, f applied to complex eigenvalues.
Matrix spectral_apply_normal(const Matrix& a, const std::function<cd(cd)>& f,
                             double offdiag_tol = 1e-8);

/// -sum lambda ln lambda over eigenvalues above 1e-12 (natural log).
double von_neumann_entropy(const Matrix& rho);

}  // namespace gframe
