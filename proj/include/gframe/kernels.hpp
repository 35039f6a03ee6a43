#pragma once

#include <complex>
#include <cstddef>

// Data-parallel arithmetic kernels backing the dense matrix layer.
//
// Every kernel has a scalar reference implementation and (on x86-64) an
// AVX2+FMA variant. The backend is picked once at startup from CPUID and can
// be forced with GFRAME_KERNEL=scalar|avx2 for debugging and for the
// equivalence tests. All complex data is interleaved (re,im) doubles, the
// layout of std::complex<double>.

namespace gframe::kern {

using cd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// Backend selected at startup (CPUID + GFRAME_KERNEL override).
Backend active_backend();
const char* backend_name();

/// y += a*x
void axpy(std::size_t n, cd a, const cd* x, cd* y);
/// x *= a
void scal(std::size_t n, cd a, cd* x);
/// sum_i conj(x_i)*y_i
cd dotc(std::size_t n, const cd* x, const cd* y);
/// max_i |x_i| (complex modulus)
double max_abs(std::size_t n, const cd* x);
/// max_i |x_i - y_i|
double max_abs_diff(std::size_t n, const cd* x, const cd* y);
/// C = A*B, or C += A*B when accumulate. Row-major, A m-by-k, B k-by-n.
void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate = false);

namespace scalar {
void axpy(std::size_t n, cd a, const cd* x, cd* y);
void scal(std::size_t n, cd a, cd* x);
cd dotc(std::size_t n, const cd* x, const cd* y);
double max_abs(std::size_t n, const cd* x);
double max_abs_diff(std::size_t n, const cd* x, const cd* y);
void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate);
}  // namespace scalar

#ifdef GFRAME_HAVE_AVX2
namespace avx2 {
void axpy(std::size_t n, cd a, const cd* x, cd* y);
void scal(std::size_t n, cd a, cd* x);
cd dotc(std::size_t n, const cd* x, const cd* y);
double max_abs(std::size_t n, const cd* x);
double max_abs_diff(std::size_t n, const cd* x, const cd* y);
void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate);
}  // namespace avx2
#endif

}  // namespace gframe::kern
