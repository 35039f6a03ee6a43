#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gframe/kernels.hpp"

namespace gframe {

using cd = std::complex<double>;
using CVec = std::vector<cd>;

/// Dense row-major complex matrix. Immutable in spirit: operations return new
/// values; in-place mutation is limited to construction-time filling.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cd{0.0, 0.0}) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const CVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return a_.size(); }
    bool is_square() const { return rows_ == cols_; }

    cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cd& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(cd s) const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cd s);

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix kron(const Matrix& o) const;

    cd trace() const;
    double max_abs() const { return kern::max_abs(a_.size(), a_.data()); }
    double frobenius_norm() const;

    /// A * x
    CVec apply(const CVec& x) const;
    /// A^dagger * x
    CVec apply_adjoint(const CVec& x) const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    bool is_normal(double tol) const;

    static double max_abs_diff(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVec a_;
};

inline Matrix operator*(cd s, const Matrix& m) { return m * s; }

/// Rank-one |x><y|.
Matrix outer(const CVec& x, const CVec& y);

// Vector helpers shared across modules.
cd inner(const CVec& x, const CVec& y);  // <x|y>, conjugate-linear in x
double norm(const CVec& x);
double max_abs_diff(const CVec& x, const CVec& y);
CVec add(const CVec& x, const CVec& y);
CVec scaled(const CVec& x, cd s);

}  // namespace gframe
