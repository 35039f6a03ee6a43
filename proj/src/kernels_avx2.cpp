// AVX2+FMA variants of the complex kernels. This translation unit is compiled
// with -mavx2 -mfma; the dispatcher guarantees it only runs on capable CPUs.

#include "gframe/kernels.hpp"

#ifdef GFRAME_HAVE_AVX2

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>

namespace gframe::kern::avx2 {

namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

// (are + i*aim) * b for both complex lanes, are/aim pre-broadcast.
inline __m256d cmul_broadcast(__m256d are, __m256d aim, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);  // [im0,re0,im1,re1]
    return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bswap));
}

// Lane-wise complex product a*b.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d are = _mm256_movedup_pd(a);            // [re0,re0,re1,re1]
    const __m256d aim = _mm256_permute_pd(a, 0b1111);    // [im0,im0,im1,im1]
    return cmul_broadcast(are, aim, b);
}

inline cd hsum_complex(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

inline const double* dp(const cd* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cd* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void axpy(std::size_t n, cd a, const cd* x, cd* y) {
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        __m256d yv = _mm256_loadu_pd(dp(y + i));
        yv = _mm256_add_pd(yv, cmul_broadcast(are, aim, xv));
        _mm256_storeu_pd(dp(y + i), yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal(std::size_t n, cd a, cd* x) {
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        _mm256_storeu_pd(dp(x + i), cmul_broadcast(are, aim, xv));
    }
    for (; i < n; ++i) x[i] *= a;
}

cd dotc(std::size_t n, const cd* x, const cd* y) {
    const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_xor_pd(_mm256_loadu_pd(dp(x + i)), conj_mask);
        const __m256d yv = _mm256_loadu_pd(dp(y + i));
        acc = _mm256_add_pd(acc, cmul(xv, yv));
    }
    cd out = hsum_complex(acc);
    for (; i < n; ++i) out += std::conj(x[i]) * y[i];
    return out;
}

namespace {
inline double max_sqmod_tail(std::size_t i, std::size_t n, const cd* x,
                             double m) {
    for (; i < n; ++i) {
        const double s = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
        m = std::max(m, s);
    }
    return m;
}
}  // namespace

double max_abs(std::size_t n, const cd* x) {
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(dp(x + i));
        const __m256d sq = _mm256_mul_pd(v, v);
        // re^2+im^2 for both lanes
        const __m256d mod = _mm256_hadd_pd(sq, sq);
        best = _mm256_max_pd(best, mod);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, best);
    double m = std::max(out[0], out[2]);
    m = max_sqmod_tail(i, n, x, m);
    return std::sqrt(m);
}

double max_abs_diff(std::size_t n, const cd* x, const cd* y) {
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(dp(x + i)),
                                        _mm256_loadu_pd(dp(y + i)));
        const __m256d sq = _mm256_mul_pd(v, v);
        const __m256d mod = _mm256_hadd_pd(sq, sq);
        best = _mm256_max_pd(best, mod);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, best);
    double m = std::max(out[0], out[2]);
    for (; i < n; ++i) {
        const cd d = x[i] - y[i];
        m = std::max(m, d.real() * d.real() + d.imag() * d.imag());
    }
    return std::sqrt(m);
}

void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate) {
    if (!accumulate) std::memset(static_cast<void*>(c), 0, m * n * sizeof(cd));
    for (std::size_t i = 0; i < m; ++i) {
        cd* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cd aip = a[i * k + p];
            if (aip == cd{0.0, 0.0}) continue;
            const __m256d are = _mm256_set1_pd(aip.real());
            const __m256d aim = _mm256_set1_pd(aip.imag());
            const cd* brow = b + p * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                const __m256d bv = _mm256_loadu_pd(dp(brow + j));
                __m256d cv = _mm256_loadu_pd(dp(crow + j));
                cv = _mm256_add_pd(cv, cmul_broadcast(are, aim, bv));
                _mm256_storeu_pd(dp(crow + j), cv);
            }
            for (; j < n; ++j) crow[j] += aip * brow[j];
        }
    }
}

}  // namespace gframe::kern::avx2

#endif  // GFRAME_HAVE_AVX2
