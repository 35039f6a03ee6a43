#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "gframe/dynamics.hpp"
#include "gframe/eigen.hpp"
#include "gframe/rnd.hpp"

using namespace gframe;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CircleModel free_model(int n, int particles, std::vector<double> masses = {}) {
    CircleModel m;
    m.sites = n;
    m.particles = particles;
    m.masses = masses.empty() ? std::vector<double>(particles, 1.0) : std::move(masses);
    return m;
}

std::vector<double> random_symmetric_potential(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int g = 0; g <= n / 2; ++g) {
        const double x = d(rng);
        v[static_cast<std::size_t>(g)] = x;
        v[static_cast<std::size_t>((n - g) % n)] = x;
    }
    return v;
}

CircleModel random_model(int n, int particles, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mdist(0.5, 4.0);
    CircleModel m = free_model(n, particles);
    for (auto& mass : m.masses) mass = mdist(rng);
    for (int i = 1; i <= particles; ++i)
        for (int j = i + 1; j <= particles; ++j)
            m.potentials.push_back({i, j, random_symmetric_potential(n, rng)});
    return m;
}
}  // namespace

TEST_CASE("momentum in the character basis") {
    const Matrix p2 = momentum(2);
    // diag(0,1) conjugated back to configurations: (1/2)[[1,-1],[-1,1]].
    CHECK(std::abs(p2(0, 0) - cd{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(p2(0, 1) + cd{0.5, 0.0}) < 1e-14);
    CHECK(p2.is_hermitian(1e-14));

    const int n = 4;
    const Matrix p = momentum(n);
    const HermitianEig e = eig_hermitian(p);
    for (int k = 0; k < n; ++k)
        CHECK(std::abs(e.values[static_cast<std::size_t>(k)] - k) < 1e-10);
}

TEST_CASE("momentum generates translations for every step") {
    const int n = 4;
    const KinSpace one(FiniteAbelianGroup({n}), 1);
    const Matrix p = momentum(n);
    for (int l = 0; l < n; ++l) {
        const Matrix u = spectral_apply_hermitian(
            p, [&](double e) { return std::polar(1.0, kTwoPi * l * e / n); });
        CHECK(Matrix::max_abs_diff(u, translation(one, one.group().cyclic(l)).matrix()) <
              1e-10);
    }
}

TEST_CASE("squared momentum mod n ignores integer eigenvalue shifts") {
    auto rng = rnd::make_rng(61);
    const int n = 5;
    const KinSpace one(FiniteAbelianGroup({n}), 1);
    const Matrix q = relational_basis_matrix(one);
    std::uniform_int_distribution<int> shift(-3, 3);
    CVec d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        d[static_cast<std::size_t>(k)] = static_cast<double>(k + n * shift(rng));
    const Matrix p_shifted = q * Matrix::diagonal(d) * q.adjoint();

    const Operator shifted_sq = apply_spectral(
        Operator(one, Basis::Config, p_shifted),
        [&](cd z) {
            const long long k = std::llround(z.real());
            return cd{static_cast<double>(((k * k) % n + n) % n), 0.0};
        });
    CHECK(Matrix::max_abs_diff(shifted_sq.matrix(), momentum_squared_mod(n)) < 1e-9);
}

TEST_CASE("pair potentials are relation diagonal") {
    auto rng = rnd::make_rng(62);
    const int n = 4;
    const KinSpace sp(FiniteAbelianGroup({n}), 3);
    const auto& grp = sp.group();

    const Operator zero = pair_potential(sp, 1, 2, std::vector<double>(n, 0.0));
    CHECK(zero.matrix().max_abs() == 0.0);

    std::vector<double> delta(n, 0.0);
    delta[0] = 1.0;
    const Operator coincide = pair_potential(sp, 1, 3, delta);
    for (std::size_t idx = 0; idx < sp.dim(); ++idx) {
        const auto cfg = sp.config_at(idx);
        const double want = cfg[0] == cfg[2] ? 1.0 : 0.0;
        CHECK(std::abs(coincide.matrix()(idx, idx) - want) < 1e-15);
    }

    // V |h;chi> = v(h_{i-1}^{-1} h_{j-1}) |h;chi> for every sector/character.
    const auto v= random_symmetric_potential(n, rng);
    for (auto [i, j] : {std::pair<int, int>{1, 2}, {2, 3}, {1, 3}}) {
        const Operator pot = pair_potential(sp, i, j, v);
        for (std::size_t hi = 0; hi < sp.sector_count(); hi += 3) {
            const auto h = grp.tuple_at(hi, 2);
            const int hj = j == 1 ? 0 : h[static_cast<std::size_t>(j - 2)].coords[0];
            const int hival = i == 1 ? 0 : h[static_cast<std::size_t>(i - 2)].coords[0];
            const double want = v[static_cast<std::size_t>(((hj - hival) % n + n) % n)];
            for (std::size_t ci = 0; ci < grp.order(); ci += 2) {
                const StateVector vec = relational_vector(
                    sp, RelationalIndex{h, grp.character_at(ci)});
                const CVec got = pot.matrix().apply(vec.amplitudes());
                CHECK(max_abs_diff(got, scaled(vec.amplitudes(), want)) < 1e-12);
            }
        }
    }

    std::vector<double> bad(n, 0.0);
    bad[1] = 1.0;  // v(1) != v(n-1)
    CHECK_THROWS_AS(pair_potential(sp, 1, 2, bad), BadOperator);
}

TEST_CASE("Hamiltonian commutes with global translations and the projector") {
    auto rng = rnd::make_rng(63);
    for (int n : {2, 3, 4}) {
        const CircleModel m = random_model(n, 2, rng);
        const Operator h = hamiltonian(m);
        CHECK(h.matrix().is_hermitian(1e-12));
        for (int g = 0; g < n; ++g) {
            const Matrix u = translation(h.space(), h.space().group().cyclic(g)).matrix();
            CHECK(Matrix::max_abs_diff(h.matrix() * u, u * h.matrix()) < 1e-12);
        }
        const Matrix pi = physical_projector(h.space()).matrix();
        CHECK(Matrix::max_abs_diff(h.matrix() * pi, pi * h.matrix()) < 1e-12);
    }

    const CircleModel single = free_model(5, 1, {2.0});
    const Operator h1 = hamiltonian(single);
    CHECK(Matrix::max_abs_diff(h1.matrix(),
                               momentum_squared_mod(5) * cd{1.0 / 4.0, 0.0}) < 1e-12);
}

TEST_CASE("evolution is a one-parameter unitary group") {
    auto rng = rnd::make_rng(64);
    const CircleModel m = random_model(3, 2, rng);
    const Operator h = hamiltonian(m);
    CHECK(Operator::max_abs_diff(evolve(h, 0.0),
                                 Operator(h.space(), Basis::Config,
                                          Matrix::identity(h.space().dim()))) <
          1e-12);
    std::uniform_real_distribution<double> t(0.0, 5.0);
    for (int s = 0; s < 5; ++s) {
        const double t1 = t(rng), t2 = t(rng);
        const Operator w1 = evolve(h, t1);
        const Operator w2 = evolve(h, t2);
        const Operator w12 = evolve(h, t1 + t2);
        CHECK(Operator::max_abs_diff(w1 * w2, w12) < 1e-10);
        CHECK(Matrix::max_abs_diff(w1.matrix() * evolve(h, -t1).matrix(),
                                   Matrix::identity(h.space().dim())) < 1e-10);
    }

    Matrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(
        evolve(Operator(KinSpace(FiniteAbelianGroup({2}), 1), Basis::Config, bad), 1.0),
        BadOperator);
}

TEST_CASE("free single particle has trivial physical dynamics") {
    const CircleModel m = free_model(4, 1);
    const Operator hp = physical_hamiltonian(hamiltonian(m));
    CHECK(hp.matrix().max_abs() < 1e-12);
}

TEST_CASE("projected evolution intertwines and stays invariant") {
    auto rng = rnd::make_rng(65);
    std::uniform_real_distribution<double> tdist(0.0, 3.0);
    for (int s = 0; s < 20; ++s) {
        const int n = 2 + s % 4;          // up to 5 sites
        const int particles = 2 + s % 2;  // 2 or 3
        const CircleModel m = random_model(n, particles, rng);
        const Operator h = hamiltonian(m);
        const Operator hp = physical_hamiltonian(h);
        const double t = tdist(rng);
        const Operator w = evolve(h, t);
        const Operator wp = evolve(hp, t);
        const Matrix pi = physical_projector(h.space()).matrix();
        CHECK(Matrix::max_abs_diff(pi * w.matrix(), wp.matrix() * pi) < 1e-9);
        if (h.space().dim() <= 64) CHECK(in_invariant_algebra(wp, 1e-9));
    }
}

TEST_CASE("reduced Hamiltonian: free two-particle closed form") {
    for (int n : {3, 4, 5}) {
        const CircleModel m = free_model(n, 2, {2.0, 3.0});
        const Operator red = reduced_hamiltonian_closed_form(m);
        const Matrix want =
            momentum_squared_mod(n) * cd{1.0 / 4.0 + 1.0 / 6.0, 0.0};
        CHECK(Matrix::max_abs_diff(red.matrix(), want) < 1e-10);
    }
}

TEST_CASE("reduced Hamiltonian equals the conjugated physical Hamiltonian") {
    auto rng = rnd::make_rng(66);
    for (int n : {2, 3, 4, 5})
        for (int particles : {2, 3}) {
            const CircleModel m = random_model(n, particles, rng);
            const Operator closed = reduced_hamiltonian_closed_form(m);
            const Operator conjd = reduced_hamiltonian_conjugated(m);
            CHECK(Operator::max_abs_diff(closed, conjd) < 1e-9);
        }
}

TEST_CASE("free Hamiltonian becomes interacting relative to a frame") {
    const int n = 4;
    const CircleModel m = free_model(n, 3, {1.5, 1.0, 1.0});
    const Operator red = reduced_hamiltonian_closed_form(m);
    // The frame-elimination term carries the momentum cross product: compare
    // against the independent spectral-calculus evaluation of the sum.
    const KinSpace rsp = red.space();
    const Matrix p = momentum(n);
    const Matrix p2 = momentum_squared_mod(n);
    Matrix own(rsp.dim(), rsp.dim());
    own += embed_at(p2, {1}, rsp).matrix() * cd{1.0 / 2.0, 0.0};
    own += embed_at(p2, {2}, rsp).matrix() * cd{1.0 / 2.0, 0.0};
    // Independent route for the frame-elimination term: build
    // (P_2 + P_3)^2 = P_2^2 + P_3^2 + 2 P_2 P_3 and reduce mod n spectrally.
    const Matrix psum = embed_at(p * p, {1}, rsp).matrix() +
                        embed_at(p * p, {2}, rsp).matrix() +
                        embed_at(p.kron(p), {1, 2}, rsp).matrix() * cd{2.0, 0.0};
    const Operator cross_mod = apply_spectral(
        Operator(rsp, Basis::Config, psum),
        [&](cd z) {
            const long long k = std::llround(z.real());
            return cd{static_cast<double>(((k % n) + n) % n), 0.0};
        });
    const Matrix want = own + cross_mod.matrix() * cd{1.0 / 3.0, 0.0};
    CHECK(Matrix::max_abs_diff(red.matrix(), want) < 1e-9);

    // The reduced free dynamics is interacting: its character-basis spectrum
    // is not additively separable across the two remaining particles.
    const Matrix q1 = relational_basis_matrix(KinSpace(rsp.group(), 1));
    const Matrix f = q1.kron(q1);
    const Matrix diag = f.adjoint() * red.matrix() * f;
    auto lam = [&](int k2, int k3) {
        return diag(static_cast<std::size_t>(k2 * n + k3),
                    static_cast<std::size_t>(k2 * n + k3))
            .real();
    };
    double obstruction = 0.0;
    for (int k2 = 0; k2 < n; ++k2)
        for (int k3 = 0; k3 < n; ++k3)
            obstruction = std::max(
                obstruction,
                std::abs(lam(k2, k3) - lam(k2, 0) - lam(0, k3) + lam(0, 0)));
    CHECK(obstruction > 1e-3);
}

TEST_CASE("potential terms keep their pattern in the reduced picture") {
    auto rng = rnd::make_rng(67);
    const int n = 4;
    CircleModel m = free_model(n, 3);
    m.potentials.push_back({1, 2, random_symmetric_potential(n, rng)});
    m.potentials.push_back({2, 3, random_symmetric_potential(n, rng)});
    const Operator with = reduced_hamiltonian_closed_form(m);
    const Operator without = reduced_hamiltonian_closed_form(free_model(n, 3));
    const Matrix diff = with.matrix() - without.matrix();
    // The difference is the diagonal potential pattern v_12(h_1) + v_23(h_2 - h_1).
    const KinSpace rsp = with.space();
    for (std::size_t idx = 0; idx < rsp.dim(); ++idx) {
        const auto cfg = rsp.config_at(idx);
        const int h1 = cfg[0].coords[0];
        const int h2 = cfg[1].coords[0];
        const double want =
            m.potentials[0].values[static_cast<std::size_t>(h1)] +
            m.potentials[1].values[static_cast<std::size_t>(((h2 - h1) % n + n) % n)];
        CHECK(std::abs(diff(idx, idx) - want) < 1e-10);
    }
}

TEST_CASE("observational-equivalence preservation classifier") {
    auto rng = rnd::make_rng(68);
    const KinSpace sp(FiniteAbelianGroup({4}), 2);
    // Members of the invariant algebra pass.
    for (int s = 0; s < 3; ++s)
        CHECK(is_oe_preserving(to_config(
            Operator(sp, Basis::Relational, rnd::random_invariant_unitary(sp, rng)))));
    // The character swap passes.
    CHECK(is_oe_preserving(to_config(character_swap_unitary(
        sp, sp.group().character_at(2), sp.group().character_at(1)))));
    // A generic unitary fails.
    CHECK_FALSE(is_oe_preserving(
        Operator(sp, Basis::Config, rnd::random_unitary(sp.dim(), rng))));
    // Non-unitaries are rejected.
    CHECK_THROWS_AS(
        is_oe_preserving(Operator(sp, Basis::Config, Matrix::identity(16) * cd{2, 0})),
        BadOperator);
}

TEST_CASE("monomial classifier") {
    CVec phases = {std::polar(1.0, 0.3), std::polar(1.0, 1.1), std::polar(1.0, 2.9)};
    CHECK(is_monomial(Matrix::diagonal(phases)));

    Matrix perm(3, 3);
    perm(1, 0) = std::polar(1.0, 0.2);
    perm(2, 1) = 1.0;
    perm(0, 2) = std::polar(1.0, -1.0);
    CHECK(is_monomial(perm));

    Matrix had(2, 2);
    const double w = 1.0 / std::sqrt(2.0);
    had(0, 0) = had(0, 1) = had(1, 0) = w;
    had(1, 1) = -w;
    CHECK_FALSE(is_monomial(had));
}

TEST_CASE("grid scan finds equivalence-breaking evolutions for the free model") {
    for (int n : {2, 3, 4}) {
        const auto witness = find_oe_violation(free_model(n, 2));
        REQUIRE(witness.has_value());
        const CircleModel m = free_model(n, 2, witness->masses);
        const Operator w = evolve(hamiltonian(m), witness->t);
        CHECK_FALSE(is_oe_preserving(w));
    }
}

TEST_CASE("projection onto the invariant algebra commutes with "
          "OE-preserving unitaries") {
    auto rng = rnd::make_rng(69);
    const KinSpace sp(FiniteAbelianGroup({4}), 2);
    const DensityMatrix rho(sp, Basis::Config, rnd::random_density(sp.dim(), rng));

    const Operator id(sp, Basis::Config, Matrix::identity(sp.dim()));
    CHECK(invariant_projection_commutes(id, rho));

    const Operator swap = to_config(character_swap_unitary(
        sp, sp.group().character_at(2), sp.group().character_at(1)));
    CHECK(invariant_projection_commutes(swap, rho));

    CircleModel m = free_model(4, 2, {1.0, 3.0});
    const Operator wp = evolve(physical_hamiltonian(hamiltonian(m)), 1.7);
    CHECK(invariant_projection_commutes(wp, rho));

    // Precondition enforced.
    const Operator generic(sp, Basis::Config, rnd::random_unitary(sp.dim(), rng));
    CHECK_THROWS_AS(invariant_projection_commutes(generic, rho), BadOperator);
}

TEST_CASE("distance-conditional translation is a symmetry but moves momenta") {
    for (int n : {4, 5}) {
        const auto rep = relation_conditional_example(n, 2, 2, 1);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
    const auto rep3 = relation_conditional_example(3, 3, 3, 1);
    CHECK(rep3.all_pass());
}

TEST_CASE("preservation chain including the character-swap counterexample") {
    const ChainReport rep = preservation_chain_suite(4, 123);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    // No suitable character pair on Z_3: every nontrivial character attains
    // the full set of cube roots.
    CHECK_THROWS_AS(preservation_chain_suite(3, 123), InvalidArgument);
}

TEST_CASE("generators of monomial evolutions are relation diagonal") {
    auto rng = rnd::make_rng(70);
    const int d = 4;  // reduced space of Z_4, N=2
    std::uniform_real_distribution<double> e(-2.0, 2.0);
    CVec diag(d);
    for (auto& z : diag) z = cd{e(rng), 0.0};
    const Matrix hdiag = Matrix::diagonal(diag);
    for (double t : {0.3, 0.9, 2.2}) {
        const Matrix w = spectral_apply_hermitian(
            hdiag, [&](double x) { return std::polar(1.0, -t * x); });
        CHECK(is_monomial(w));
    }

    const Matrix hfull = rnd::random_hermitian(d, rng);
    bool monomial_everywhere = true;
    for (double t : {0.3, 0.9, 2.2}) {
        const Matrix w = spectral_apply_hermitian(
            hfull, [&](double x) { return std::polar(1.0, -t * x); });
        if (!is_monomial(w)) monomial_everywhere = false;
    }
    CHECK_FALSE(monomial_everywhere);
}
