#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gframe/kernels.hpp"

using gframe::kern::cd;

namespace {

std::vector<cd> random_vec(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<cd> v(n);
    for (auto& z : v) z = cd{d(rng), d(rng)};
    return v;
}

// Plain triple loop, no blocking, no skip logic: the reference for matmul.
std::vector<cd> naive_matmul(std::size_t m, std::size_t k, std::size_t n,
                             const std::vector<cd>& a, const std::vector<cd>& b) {
    std::vector<cd> c(m * n, cd{0.0, 0.0});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cd acc{0.0, 0.0};
            for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
            c[i * n + j] = acc;
        }
    return c;
}

double vec_dev(const std::vector<cd>& x, const std::vector<cd>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

}  // namespace

TEST_CASE("scalar matmul matches the naive triple loop") {
    std::mt19937_64 rng(7);
    for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 1},
                           {3, 5, 2},
                           {8, 8, 8},
                           {17, 9, 13}}) {
        const auto a = random_vec(m * k, rng);
        const auto b = random_vec(k * n, rng);
        std::vector<cd> c(m * n);
        gframe::kern::scalar::matmul(m, k, n, a.data(), b.data(), c.data(), false);
        CHECK(vec_dev(c, naive_matmul(m, k, n, a, b)) < 1e-12);
    }
}

TEST_CASE("accumulating matmul adds onto the output") {
    std::mt19937_64 rng(8);
    const std::size_t n = 6;
    const auto a = random_vec(n * n, rng);
    const auto b = random_vec(n * n, rng);
    auto c = random_vec(n * n, rng);
    auto expected = c;
    const auto prod = naive_matmul(n, n, n, a, b);
    for (std::size_t i = 0; i < c.size(); ++i) expected[i] += prod[i];
    gframe::kern::matmul(n, n, n, a.data(), b.data(), c.data(), true);
    CHECK(vec_dev(c, expected) < 1e-12);
}

#ifdef GFRAME_HAVE_AVX2
TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return;
    std::mt19937_64 rng(9);
    namespace sc = gframe::kern::scalar;
    namespace vx = gframe::kern::avx2;

    for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 255u}) {
        const auto x = random_vec(n, rng);
        auto y1 = random_vec(n, rng);
        auto y2 = y1;
        const cd alpha{0.7, -1.3};

        sc::axpy(n, alpha, x.data(), y1.data());
        vx::axpy(n, alpha, x.data(), y2.data());
        CHECK(vec_dev(y1, y2) < 1e-13);

        auto s1 = x, s2 = x;
        sc::scal(n, alpha, s1.data());
        vx::scal(n, alpha, s2.data());
        CHECK(vec_dev(s1, s2) < 1e-13);

        const cd d1 = sc::dotc(n, x.data(), y1.data());
        const cd d2 = vx::dotc(n, x.data(), y1.data());
        CHECK(std::abs(d1 - d2) < 1e-10 * (1.0 + std::abs(d1)));

        CHECK(sc::max_abs(n, x.data()) ==
              doctest::Approx(vx::max_abs(n, x.data())).epsilon(1e-13));
        CHECK(sc::max_abs_diff(n, x.data(), y1.data()) ==
              doctest::Approx(vx::max_abs_diff(n, x.data(), y1.data())).epsilon(1e-13));
    }

    for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 4, 4},
                           {5, 7, 3},
                           {16, 16, 16},
                           {33, 17, 9}}) {
        const auto a = random_vec(m * k, rng);
        const auto b = random_vec(k * n, rng);
        std::vector<cd> c1(m * n), c2(m * n);
        sc::matmul(m, k, n, a.data(), b.data(), c1.data(), false);
        vx::matmul(m, k, n, a.data(), b.data(), c2.data(), false);
        CHECK(vec_dev(c1, c2) < 1e-11);
    }
}
#endif

TEST_CASE("dispatch reports a backend") {
    const char* name = gframe::kern::backend_name();
    CHECK((std::string(name) == "avx2" || std::string(name) == "scalar"));
}
