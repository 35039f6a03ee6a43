#include "gframe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace gframe::kern {

namespace scalar {

void axpy(std::size_t n, cd a, const cd* x, cd* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(std::size_t n, cd a, cd* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cd dotc(std::size_t n, const cd* x, const cd* y) {
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double max_abs(std::size_t n, const cd* x) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double max_abs_diff(std::size_t n, const cd* x, const cd* y) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate) {
    if (!accumulate) std::memset(static_cast<void*>(c), 0, m * n * sizeof(cd));
    // i-k-j order: the inner loop streams one row of B into one row of C.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const cd aip = a[i * k + p];
            if (aip == cd{0.0, 0.0}) continue;
            const cd* brow = b + p * n;
            cd* crow = c + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
        }
    }
}

}  // namespace scalar

namespace {

struct Dispatch {
    Backend backend;
    void (*axpy)(std::size_t, cd, const cd*, cd*);
    void (*scal)(std::size_t, cd, cd*);
    cd (*dotc)(std::size_t, const cd*, const cd*);
    double (*max_abs)(std::size_t, const cd*);
    double (*max_abs_diff)(std::size_t, const cd*, const cd*);
    void (*matmul)(std::size_t, std::size_t, std::size_t, const cd*, const cd*,
                   cd*, bool);
};

Dispatch pick_backend() {
    Dispatch d{Backend::Scalar, scalar::axpy,         scalar::scal,
               scalar::dotc,    scalar::max_abs,      scalar::max_abs_diff,
               scalar::matmul};
#ifdef GFRAME_HAVE_AVX2
    bool want_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (const char* env = std::getenv("GFRAME_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
        // "avx2" keeps the CPUID requirement; forcing it on unsupported
        // hardware would fault.
    }
    if (want_avx2) {
        d = Dispatch{Backend::Avx2, avx2::axpy,         avx2::scal,
                     avx2::dotc,    avx2::max_abs,      avx2::max_abs_diff,
                     avx2::matmul};
    }
#endif
    return d;
}

const Dispatch& table() {
    static const Dispatch d = pick_backend();
    return d;
}

}  // namespace

Backend active_backend() { return table().backend; }

const char* backend_name() {
    return table().backend == Backend::Avx2 ? "avx2" : "scalar";
}

void axpy(std::size_t n, cd a, const cd* x, cd* y) { table().axpy(n, a, x, y); }
void scal(std::size_t n, cd a, cd* x) { table().scal(n, a, x); }
cd dotc(std::size_t n, const cd* x, const cd* y) { return table().dotc(n, x, y); }
double max_abs(std::size_t n, const cd* x) { return table().max_abs(n, x); }
double max_abs_diff(std::size_t n, const cd* x, const cd* y) {
    return table().max_abs_diff(n, x, y);
}
void matmul(std::size_t m, std::size_t k, std::size_t n, const cd* a,
            const cd* b, cd* c, bool accumulate) {
    table().matmul(m, k, n, a, b, c, accumulate);
}

}  // namespace gframe::kern
