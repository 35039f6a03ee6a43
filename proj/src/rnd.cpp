#include "gframe/rnd.hpp"

#include <cmath>
#include <numbers>

namespace gframe::rnd {

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

namespace {
cd gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}
}  // namespace

CVec random_state(std::size_t dim, std::mt19937_64& rng) {
    CVec v(dim);
    for (auto& z : v) z = gaussian(rng);
    const double nrm = norm(v);
    kern::scal(v.size(), cd{1.0 / nrm, 0.0}, v.data());
    return v;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
    return m;
}

Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    const Matrix g = random_matrix(n, n, rng);
    return (g + g.adjoint()) * cd{0.5, 0.0};
}

Matrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    // Modified Gram-Schmidt on a Gaussian matrix; fine at these dimensions.
    Matrix g = random_matrix(n, n, rng);
    Matrix q(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        CVec v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = g(r, col);
        for (std::size_t prev = 0; prev < col; ++prev) {
            cd overlap{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r)
                overlap += std::conj(q(r, prev)) * v[r];
            for (std::size_t r = 0; r < n; ++r) v[r] -= overlap * q(r, prev);
        }
        const double nrm = norm(v);
        for (std::size_t r = 0; r < n; ++r) q(r, col) = v[r] / nrm;
    }
    return q;
}

Matrix random_density(std::size_t n, std::mt19937_64& rng) {
    const Matrix g = random_matrix(n, n, rng);
    Matrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho *= cd{1.0 / tr, 0.0};
    return rho;
}

Matrix random_invariant_unitary(const KinSpace& space, std::mt19937_64& rng) {
    const std::size_t q = space.group().order();
    const std::size_t sectors = space.sector_count();
    const Matrix block = random_unitary(sectors, rng);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Matrix w(space.dim(), space.dim());
    for (std::size_t r = 0; r < sectors; ++r)
        for (std::size_t c = 0; c < sectors; ++c)
            w(space.rel_index(r, 0), space.rel_index(c, 0)) = block(r, c);
    for (std::size_t h = 0; h < sectors; ++h)
        for (std::size_t chi = 1; chi < q; ++chi) {
            const std::size_t d = space.rel_index(h, chi);
            w(d, d) = std::polar(1.0, angle(rng));
        }
    return w;
}

}  // namespace gframe::rnd
