#include "gframe/eigen.hpp"

#include <cmath>
#include <string>

#include "gframe/error.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace gframe {

HermitianEig eig_hermitian(const Matrix& a) {
    if (!a.is_square()) throw InvalidArgument("eig_hermitian: matrix not square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    HermitianEig out;
    out.vectors = a;
    out.values.resize(a.rows());
    const lapack_int info = LAPACKE_zheevd(
        LAPACK_ROW_MAJOR, 'V', 'U', n,
        reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n,
        out.values.data());
    if (info != 0)
        throw BadOperator("zheevd failed with info=" + std::to_string(info));
    return out;
}

NormalEig eig_normal(const Matrix& a, double offdiag_tol) {
    if (!a.is_square()) throw InvalidArgument("eig_normal: matrix not square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Matrix t = a;
    Matrix vs(a.rows(), a.rows());
    CVec w(a.rows());
    lapack_int sdim = 0;
    const lapack_int info = LAPACKE_zgees(
        LAPACK_ROW_MAJOR, 'V', 'N', nullptr, n,
        reinterpret_cast<lapack_complex_double*>(t.data()), n, &sdim,
        reinterpret_cast<lapack_complex_double*>(w.data()),
        reinterpret_cast<lapack_complex_double*>(vs.data()), n);
    if (info != 0)
        throw BadOperator("zgees failed with info=" + std::to_string(info));
    // For a normal input the Schur factor is diagonal; a large off-diagonal
    // residual means the caller handed us a non-normal matrix.
    double offdiag = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) offdiag = std::max(offdiag, std::abs(t(i, j)));
    const double scale = std::max(1.0, a.max_abs());
    if (offdiag > offdiag_tol * scale)
        throw BadOperator("eig_normal: matrix is not normal (Schur off-diagonal " +
                          std::to_string(offdiag) + ")");
    return NormalEig{std::move(w), std::move(vs)};
}

namespace {
Matrix reassemble(const Matrix& vectors, const CVec& fvals) {
    // vectors * diag(fvals) * vectors^dagger
    Matrix scaled_v = vectors;
    for (std::size_t i = 0; i < scaled_v.rows(); ++i)
        for (std::size_t j = 0; j < scaled_v.cols(); ++j) scaled_v(i, j) *= fvals[j];
    return scaled_v * vectors.adjoint();
}
}  // namespace

Matrix spectral_apply_hermitian(const Matrix& a, const std::function<cd(double)>& f) {
    const HermitianEig e = eig_hermitian(a);
    CVec fvals(e.values.size());
    for (std::size_t i = 0; i < fvals.size(); ++i) fvals[i] = f(e.values[i]);
    return reassemble(e.vectors, fvals);
}

Matrix spectral_apply_normal(const Matrix& a, const std::function<cd(cd)>& f,
                             double offdiag_tol) {
    const NormalEig e = eig_normal(a, offdiag_tol);
    CVec fvals(e.values.size());
    for (std::size_t i = 0; i < fvals.size(); ++i) fvals[i] = f(e.values[i]);
    return reassemble(e.vectors, fvals);
}

double von_neumann_entropy(const Matrix& rho) {
    const HermitianEig e = eig_hermitian(rho);
    double s = 0.0;
    for (double w : e.values)
        if (w > 1e-12) s -= w * std::log(w);
    return s;
}

void density_positivity_check(const Matrix& m, double tol) {
    const HermitianEig e = eig_hermitian(m);
    for (double w : e.values)
        if (w < -tol)
            throw BadOperator("density matrix has negative eigenvalue " +
                              std::to_string(w));
}

}  // namespace gframe

