#include "gframe/matrix.hpp"

#include <cmath>

#include "gframe/error.hpp"

namespace gframe {

namespace {
void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument(std::string(op) + ": shape mismatch " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
}
}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const CVec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(*this, o, "matrix add");
    Matrix r = *this;
    kern::axpy(r.a_.size(), cd{1.0, 0.0}, o.a_.data(), r.a_.data());
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(*this, o, "matrix sub");
    Matrix r = *this;
    kern::axpy(r.a_.size(), cd{-1.0, 0.0}, o.a_.data(), r.a_.data());
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw InvalidArgument("matrix mul: inner dimension mismatch " +
                              std::to_string(cols_) + " vs " + std::to_string(o.rows_));
    Matrix r(rows_, o.cols_);
    kern::matmul(rows_, cols_, o.cols_, a_.data(), o.a_.data(), r.a_.data(), false);
    return r;
}

Matrix Matrix::operator*(cd s) const {
    Matrix r = *this;
    kern::scal(r.a_.size(), s, r.a_.data());
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "matrix add");
    kern::axpy(a_.size(), cd{1.0, 0.0}, o.a_.data(), a_.data());
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "matrix sub");
    kern::axpy(a_.size(), cd{-1.0, 0.0}, o.a_.data(), a_.data());
    return *this;
}

Matrix& Matrix::operator*=(cd s) {
    kern::scal(a_.size(), s, a_.data());
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r = *this;
    for (auto& z : r.a_) z = std::conj(z);
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const cd aij = (*this)(i, j);
            if (aij == cd{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r(i * o.rows_ + k, j * o.cols_ + l) = aij * o(k, l);
        }
    return r;
}

cd Matrix::trace() const {
    cd t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

CVec Matrix::apply(const CVec& x) const {
    if (x.size() != cols_)
        throw InvalidArgument("matrix apply: vector length " + std::to_string(x.size()) +
                              " vs cols " + std::to_string(cols_));
    CVec y(rows_, cd{0.0, 0.0});
    kern::matmul(rows_, cols_, 1, a_.data(), x.data(), y.data(), false);
    return y;
}

CVec Matrix::apply_adjoint(const CVec& x) const {
    if (x.size() != rows_)
        throw InvalidArgument("matrix apply_adjoint: vector length mismatch");
    CVec y(cols_, cd{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[j] += std::conj((*this)(i, j)) * x[i];
    return y;
}

bool Matrix::is_hermitian(double tol) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool Matrix::is_unitary(double tol) const {
    if (!is_square()) return false;
    const Matrix p = (*this) * adjoint();
    return max_abs_diff(p, identity(rows_)) <= tol;
}

bool Matrix::is_normal(double tol) const {
    if (!is_square()) return false;
    const Matrix ad = adjoint();
    return max_abs_diff((*this) * ad, ad * (*this)) <= tol;
}

double Matrix::max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    return kern::max_abs_diff(a.a_.size(), a.a_.data(), b.a_.data());
}

Matrix outer(const CVec& x, const CVec& y) {
    Matrix r(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * std::conj(y[j]);
    return r;
}

cd inner(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw InvalidArgument("inner: length mismatch");
    return kern::dotc(x.size(), x.data(), y.data());
}

double norm(const CVec& x) { return std::sqrt(std::abs(inner(x, x))); }

double max_abs_diff(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw InvalidArgument("max_abs_diff: length mismatch");
    return kern::max_abs_diff(x.size(), x.data(), y.data());
}

CVec add(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw InvalidArgument("add: length mismatch");
    CVec r = x;
    kern::axpy(r.size(), cd{1.0, 0.0}, y.data(), r.data());
    return r;
}

CVec scaled(const CVec& x, cd s) {
    CVec r = x;
    kern::scal(r.size(), s, r.data());
    return r;
}

}  // namespace gframe
