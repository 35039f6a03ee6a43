#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "gframe/alignment.hpp"
#include "gframe/relframes.hpp"
#include "gframe/rnd.hpp"

using namespace gframe;

namespace {
KinSpace make_space(std::vector<int> factors, int n) {
    return KinSpace(FiniteAbelianGroup(std::move(factors)), n);
}

StateVector random_physical(const KinSpace& sp, std::mt19937_64& rng) {
    const StateVector raw(sp, Basis::Config, rnd::random_state(sp.dim(), rng));
    StateVector proj = project_phys(raw);
    CVec v = proj.amplitudes();
    const double nrm = norm(v);
    kern::scal(v.size(), cd{1.0 / nrm, 0.0}, v.data());
    return StateVector(sp, Basis::Config, std::move(v));
}

StateVector trivial_sector_vector(const KinSpace& sp, std::size_t h_idx) {
    return relational_vector(
        sp, RelationalIndex{sp.group().tuple_at(h_idx, sp.particles() - 1),
                            sp.group().trivial_character()});
}
}  // namespace

TEST_CASE("relativizing the identity gives the physical projector") {
    const KinSpace sp = make_space({3}, 2);
    const Operator f1 = relativize(Matrix::identity(3), sp, 1, sp.group().identity());
    CHECK(Operator::max_abs_diff(f1, physical_projector(sp)) < 1e-12);
}

TEST_CASE("relativization is an algebra homomorphism") {
    auto rng = rnd::make_rng(41);
    const KinSpace sp = make_space({3}, 2);
    const GroupElement g = sp.group().cyclic(2);
    const Matrix a = rnd::random_matrix(3, 3, rng);
    const Matrix b = rnd::random_matrix(3, 3, rng);
    const Matrix c = rnd::random_matrix(3, 3, rng);
    const Operator lhs = relativize(a + b * c, sp, 2, g);
    const Operator rhs =
        relativize(a, sp, 2, g) + relativize(b, sp, 2, g) * relativize(c, sp, 2, g);
    CHECK(Operator::max_abs_diff(lhs, rhs) < 1e-10);
}

TEST_CASE("conditioning maps trivial-sector vectors onto their relations") {
    const KinSpace sp = make_space({4}, 3);
    for (std::size_t hi = 0; hi < sp.sector_count(); ++hi) {
        const StateVector v = trivial_sector_vector(sp, hi);
        const StateVector red = reduce_S(v, 1, sp.group().identity());
        CVec want(red.space().dim(), cd{0.0, 0.0});
        want[hi] = 1.0;
        CHECK(max_abs_diff(red.amplitudes(), want) < 1e-12);
    }
}

TEST_CASE("conditioning an aligned state's projection recovers its translate") {
    auto rng = rnd::make_rng(42);
    const KinSpace sp = make_space({4}, 2);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();

    const CVec phi = rnd::random_state(red.dim(), rng);
    CVec full(sp.dim(), cd{0.0, 0.0});
    for (std::size_t x = 0; x < red.dim(); ++x) full[x] = phi[x];  // particle 1 at e
    const StateVector aligned(sp, Basis::Config, full);
    StateVector proj = project_phys(aligned);
    CVec amp = scaled(proj.amplitudes(),
                      cd{std::sqrt(static_cast<double>(grp.order())), 0.0});
    const StateVector psi_phys(sp, Basis::Config, amp);

    for (std::size_t gi = 0; gi < grp.order(); ++gi) {
        const GroupElement g = grp.element_at(gi);
        const StateVector got = reduce_S(psi_phys, 1, g);
        const CVec want = translation(red, g).matrix().apply(phi);
        CHECK(max_abs_diff(got.amplitudes(), want) < 1e-12);
    }
}

TEST_CASE("conditioning is isometric on physical states and covariant") {
    auto rng = rnd::make_rng(43);
    const KinSpace sp = make_space({3}, 3);
    const auto& grp = sp.group();
    for (int s = 0; s < 20; ++s) {
        const StateVector psi = random_physical(sp, rng);
        const StateVector phi = random_physical(sp, rng);
        const int frame = 1 + s % 3;
        const GroupElement g = grp.element_at(static_cast<std::size_t>(s) % grp.order());
        const StateVector rp = reduce_S(psi, frame, g);
        const StateVector rq = reduce_S(phi, frame, g);
        CHECK(std::abs(inner(rp.amplitudes(), rq.amplitudes()) -
                       inner(psi.amplitudes(), phi.amplitudes())) < 1e-10);
        CHECK(std::abs(rp.norm() - 1.0) < 1e-10);

        const GroupElement g2 = grp.element_at(static_cast<std::size_t>(s + 1) % grp.order());
        const StateVector rp2 = reduce_S(psi, frame, g2);
        const Matrix shift =
            translation(rp.space(), grp.mul(g, grp.inv(g2))).matrix();
        CHECK(max_abs_diff(rp.amplitudes(), shift.apply(rp2.amplitudes())) < 1e-10);
    }
}

TEST_CASE("unreducing inverts conditioning") {
    auto rng = rnd::make_rng(44);
    const KinSpace sp = make_space({3}, 2);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();

    // |h> comes back as the trivial-sector vector.
    for (std::size_t hi = 0; hi < red.dim(); ++hi) {
        CVec e(red.dim(), cd{0.0, 0.0});
        e[hi] = 1.0;
        const StateVector lift =
            reduce_S_inverse(StateVector(red, Basis::Config, e), sp, 1, grp.identity());
        CHECK(max_abs_diff(lift.amplitudes(),
                           trivial_sector_vector(sp, hi).amplitudes()) < 1e-12);
    }

    for (int s = 0; s < 10; ++s) {
        const int frame = 1 + s % 2;
        const GroupElement g = grp.element_at(static_cast<std::size_t>(s) % grp.order());
        const StateVector phi(red, Basis::Config, rnd::random_state(red.dim(), rng));
        const StateVector lift = reduce_S_inverse(phi, sp, frame, g);
        CHECK(nonphysical_residual(lift) < 1e-12);
        const StateVector back = reduce_S(lift, frame, g);
        CHECK(max_abs_diff(back.amplitudes(), phi.amplitudes()) < 1e-10);

        const StateVector psi = random_physical(sp, rng);
        const StateVector round =
            reduce_S_inverse(reduce_S(psi, frame, g), sp, frame, g);
        CHECK(max_abs_diff(round.amplitudes(), psi.amplitudes()) < 1e-10);
    }
}

TEST_CASE("reduction maps as explicit rectangular isometries") {
    const KinSpace sp = make_space({3}, 2);
    for (const auto kind : {ReductionKind::Schrodinger, ReductionKind::Heisenberg}) {
        const ReductionMap r = kind == ReductionKind::Schrodinger
                                   ? schrodinger_reduction(sp, 2, sp.group().cyclic(1))
                                   : heisenberg_reduction(sp, 2, sp.group().cyclic(1));
        const Matrix rinv = reduction_inverse(r);
        CHECK(Matrix::max_abs_diff(r.matrix * rinv, Matrix::identity(r.reduced.dim())) <
              1e-10);
        const Matrix proj = rinv * r.matrix;
        const Matrix pi = physical_projector(sp).matrix();
        // On the physical subspace the composition acts as the identity.
        CHECK(Matrix::max_abs_diff(proj * pi, pi) < 1e-10);
    }
}

TEST_CASE("non-physical inputs are rejected by the reductions") {
    const KinSpace sp = make_space({2}, 2);
    CVec v(sp.dim(), cd{0.0, 0.0});
    v[0] = 1.0;
    const StateVector nonphys(sp, Basis::Config, v);
    CHECK_THROWS_AS(reduce_S(nonphys, 1, sp.group().identity()), NotPhysical);
    CHECK_THROWS_AS(reduce_H(nonphys, 1, sp.group().identity()), NotPhysical);
}

TEST_CASE("trivialization disentangles frame from complement") {
    auto rng = rnd::make_rng(45);
    const KinSpace sp = make_space({4}, 2);
    const auto& grp = sp.group();
    const Operator t = trivialize(sp, 1);
    CHECK(t.matrix().is_unitary(1e-12));

    // Identity on the origin sector of the frame.
    for (std::size_t x = 0; x < sp.dim() / grp.order(); ++x) {
        CVec e(sp.dim(), cd{0.0, 0.0});
        e[x] = 1.0;  // particle 1 at the origin
        CHECK(max_abs_diff(t.matrix().apply(e), e) < 1e-15);
    }

    // Product form on physical states.
    const StateVector psi = random_physical(sp, rng);
    const CVec shifted = t.matrix().apply(psi.amplitudes());
    const StateVector red = reduce_S(psi, 1, grp.identity());
    CVec want(sp.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(static_cast<double>(grp.order()));
    for (std::size_t gi = 0; gi < grp.order(); ++gi)
        for (std::size_t x = 0; x < red.space().dim(); ++x)
            want[gi * red.space().dim() + x] = w * red.amplitudes()[x];
    CHECK(max_abs_diff(shifted, want) < 1e-10);

    // Projector transport onto the frame alone.
    const Matrix lhs = t.matrix() * physical_projector(sp).matrix() *
                       t.matrix().adjoint();
    const Operator pi1 =
        embed_at(physical_projector(KinSpace(grp, 1)).matrix(), {1}, sp);
    CHECK(Matrix::max_abs_diff(lhs, pi1.matrix()) < 1e-10);
}

TEST_CASE("shift-picture reduction is orientation independent") {
    auto rng = rnd::make_rng(46);
    const KinSpace sp = make_space({4}, 3);
    const auto& grp = sp.group();
    for (std::size_t hi = 0; hi < sp.sector_count(); hi += 5) {
        const StateVector v = trivial_sector_vector(sp, hi);
        for (std::size_t gi = 0; gi < grp.order(); ++gi) {
            const StateVector red = reduce_H(v, 1, grp.element_at(gi));
            CVec want(red.space().dim(), cd{0.0, 0.0});
            want[hi] = 1.0;
            CHECK(max_abs_diff(red.amplitudes(), want) < 1e-12);
        }
    }
    const StateVector psi = random_physical(sp, rng);
    const CVec base = reduce_H(psi, 2, grp.identity()).amplitudes();
    for (std::size_t gi = 1; gi < grp.order(); ++gi)
        CHECK(max_abs_diff(reduce_H(psi, 2, grp.element_at(gi)).amplitudes(), base) <
              1e-12);
    CHECK(max_abs_diff(base, reduce_S(psi, 2, grp.identity()).amplitudes()) < 1e-12);
}

TEST_CASE("shift-picture observables transform covariantly") {
    auto rng = rnd::make_rng(47);
    const KinSpace sp = make_space({3}, 2);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();
    for (std::size_t gi = 0; gi < grp.order(); ++gi) {
        const GroupElement g = grp.element_at(gi);
        const Matrix f = rnd::random_matrix(red.dim(), red.dim(), rng);
        const Operator ff = relativize(f, sp, 1, g);
        const ReductionMap rh = heisenberg_reduction(sp, 1, g);
        const Matrix got = rh.matrix * ff.matrix() * reduction_inverse(rh);
        const Matrix u = translation(red, g).matrix();
        const Matrix want = u.adjoint() * f * u;
        CHECK(Matrix::max_abs_diff(got, want) < 1e-10);
    }
}

TEST_CASE("frame changes: explicit form, compositional form, inverses") {
    auto rng = rnd::make_rng(48);
    const KinSpace sp = make_space({3}, 3);
    const auto& grp = sp.group();
    std::uniform_int_distribution<std::size_t> pick(0, grp.order() - 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            for (int s = 0; s < 3; ++s) {
                const GroupElement gi = grp.element_at(pick(rng));
                const GroupElement gj = grp.element_at(pick(rng));
                const Operator ex = frame_change(sp, i, gi, j, gj);
                CHECK(ex.matrix().is_unitary(1e-12));
                CHECK(Operator::max_abs_diff(
                          ex, frame_change_compositional(sp, i, gi, j, gj)) < 1e-10);
                const Operator back = frame_change(sp, j, gj, i, gi);
                CHECK(Matrix::max_abs_diff(back.matrix() * ex.matrix(),
                                           Matrix::identity(ex.matrix().rows())) <
                      1e-12);
            }
        }
}

TEST_CASE("frame change transports reduced states") {
    auto rng = rnd::make_rng(49);
    const KinSpace sp = make_space({3}, 3);
    const auto& grp = sp.group();
    const StateVector psi = random_physical(sp, rng);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            const GroupElement gi = grp.cyclic(1);
            const GroupElement gj = grp.cyclic(2);
            const CVec ri = reduce_S(psi, i, gi).amplitudes();
            const CVec rj = reduce_S(psi, j, gj).amplitudes();
            const Operator v = frame_change(sp, i, gi, j, gj);
            CHECK(max_abs_diff(v.matrix().apply(ri), rj) < 1e-10);
        }
}

TEST_CASE("three-particle demonstration: product relative to one frame, "
          "entangled relative to another") {
    const KinSpace sp = make_space({4}, 3);
    const KinSpace red = sp.complement();
    const auto& g = sp.group();
    CVec phi(red.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    phi[red.config_index({g.cyclic(1), g.cyclic(2)})] = w;
    phi[red.config_index({g.cyclic(1), g.cyclic(3)})] = w;

    const Operator v = frame_change(sp, 1, g.identity(), 3, g.identity());
    const CVec out = v.matrix().apply(phi);
    CVec want(red.dim(), cd{0.0, 0.0});
    want[red.config_index({g.cyclic(-2), g.cyclic(-1)})] = w;
    want[red.config_index({g.cyclic(-3), g.cyclic(-2)})] = w;
    CHECK(max_abs_diff(out, want) < 1e-14);
}

TEST_CASE("observable transport: invariant pair observables keep their form") {
    auto rng = rnd::make_rng(50);
    const KinSpace sp = make_space({3}, 3);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();

    // Identity maps to identity.
    const Operator id(red, Basis::Config, Matrix::identity(red.dim()));
    CHECK(Operator::max_abs_diff(
              transform_observable(id, sp, 1, grp.identity(), 2, grp.cyclic(1)), id) <
          1e-12);

    // f on the complement of {i,j} that commutes with all translations:
    // diagonal functions of nothing but relative data; here a translation
    // average of a random one-site observable.
    const int i = 1, j = 2;  // remaining particle: 3
    Matrix f1(grp.order(), grp.order());
    {
        const Matrix raw = rnd::random_matrix(grp.order(), grp.order(), rng);
        for (std::size_t gi = 0; gi < grp.order(); ++gi) {
            const Matrix u = translation(KinSpace(grp, 1), grp.element_at(gi)).matrix();
            f1 += u * raw * u.adjoint();
        }
        f1 *= cd{1.0 / static_cast<double>(grp.order()), 0.0};
    }
    // Embed as 1_j tensor f at the slot of particle 3 within the complement
    // of i = {2,3}.
    const Operator f_ibar = embed_at(f1, {2}, red);
    const Operator moved =
        transform_observable(f_ibar, sp, i, grp.cyclic(1), j, grp.cyclic(2));
    // Relative to j = 2 the complement is {1,3}; the observable must sit at
    // particle 3's slot there, which is again slot 2, with identity at slot 1.
    CHECK(Operator::max_abs_diff(moved, embed_at(f1, {2}, red)) < 1e-10);
}

TEST_CASE("observable transport matches the translated-ensemble expansion") {
    auto rng = rnd::make_rng(51);
    const KinSpace sp = make_space({3}, 3);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();
    const int i = 1, j = 2;
    const Matrix f1 = rnd::random_matrix(grp.order(), grp.order(), rng);
    const Operator f_ibar = embed_at(f1, {2}, red);  // 1_j tensor f_{ij-bar}

    for (std::size_t s = 0; s < grp.order(); ++s) {
        const GroupElement gi = grp.element_at(s);
        const GroupElement gj = grp.element_at((s + 1) % grp.order());
        const Operator got = transform_observable(f_ibar, sp, i, gi, j, gj);

        // Independent evaluation: sum_g U_g^{(N-1)} (|gi><gi|_i tensor f) U_g^dag
        // on the complement of j, slots {1, 3} in ascending order.
        Matrix pin(grp.order(), grp.order());
        pin(grp.element_index(gi), grp.element_index(gi)) = 1.0;
        const Matrix base = embed_at(pin.kron(f1), {1, 2}, red).matrix();
        Matrix want(red.dim(), red.dim());
        for (std::size_t gg = 0; gg < grp.order(); ++gg) {
            const Matrix u = translation(red, grp.element_at(gg)).matrix();
            want += u * base * u.adjoint();
        }
        CHECK(Matrix::max_abs_diff(got.matrix(), want) < 1e-10);
    }
}

TEST_CASE("relational embedding: two forms, multiplicativity, non-unitality") {
    auto rng = rnd::make_rng(52);
    const KinSpace sp = make_space({2}, 2);
    const Matrix pi = physical_projector(sp).matrix();
    const auto mk_phys = [&] {
        const Matrix raw = rnd::random_matrix(sp.dim(), sp.dim(), rng);
        return Operator(sp, Basis::Config, pi * raw * pi);
    };
    const Operator x = mk_phys();
    const Operator y = mk_phys();
    CHECK(Operator::max_abs_diff(relational_embed(x, 1),
                                 relational_embed_product_form(x, 1)) < 1e-10);
    CHECK(Matrix::max_abs_diff(
              relational_embed(Operator(sp, Basis::Config, x.matrix() * y.matrix()), 1)
                  .matrix(),
              relational_embed(x, 1).matrix() * relational_embed(y, 1).matrix()) <
          1e-10);
    CHECK(Matrix::max_abs_diff(relational_embed(x, 1).matrix().adjoint(),
                               relational_embed(x.adjoint(), 1).matrix()) < 1e-12);

    const Operator emb_pi = relational_embed(physical_projector(sp), 1);
    const Operator big_pi = physical_projector(KinSpace(sp.group(), 3));
    CHECK(Operator::max_abs_diff(emb_pi, big_pi) > 0.1);

    Matrix raw = rnd::random_matrix(sp.dim(), sp.dim(), rng);
    CHECK_THROWS_AS(relational_embed(Operator(sp, Basis::Config, raw), 1),
                    NotPhysical);
}

TEST_CASE("the incoherent-average analogue fails to embed multiplicatively") {
    // Mapping X to the invariant projection of X tensor 1 is not an algebra
    // homomorphism: a concrete invariant pair breaks it.
    const KinSpace one = make_space({2}, 1);
    const KinSpace two = make_space({2}, 2);
    const auto& grp = one.group();

    const StateVector minus =
        relational_vector(one, RelationalIndex{{}, grp.character_at(1)});
    const Matrix x = outer(minus.amplitudes(), minus.amplitudes());
    const auto lift = [&](const Matrix& m) {
        std::size_t dpad = two.dim() / m.rows();
        return project_inv_matrix(two, m.kron(Matrix::identity(dpad)), Basis::Config);
    };
    const Matrix phi_x = lift(x);
    const Matrix phi_xx = lift(x * x);
    CHECK(Matrix::max_abs_diff(phi_xx, phi_x * phi_x) > 1e-3);
}

TEST_CASE("relational trace: duality, subnormalization, factorizing states") {
    auto rng = rnd::make_rng(53);
    for (int base_particles : {1, 2}) {
        const KinSpace small = make_space({2}, base_particles);
        const KinSpace big = make_space({2}, base_particles + 1);
        const Matrix pi_small = physical_projector(small).matrix();
        const DensityMatrix rho(big, Basis::Config,
                                rnd::random_density(big.dim(), rng));
        const DensityMatrix red = relational_trace(rho, 1);
        CHECK(red.trace_real() <= 1.0 + 1e-12);
        for (int s = 0; s < 10; ++s) {
            const Matrix raw = rnd::random_matrix(small.dim(), small.dim(), rng);
            const Operator obs(small, Basis::Config, pi_small * raw * pi_small);
            const cd lhs = (rho.matrix() * relational_embed(obs, 1).matrix()).trace();
            const cd rhs = (red.matrix() * obs.matrix()).trace();
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }

    // Product of two physical groups: nothing is projected out.
    const KinSpace sp2 = make_space({3}, 2);
    const KinSpace sp1 = make_space({3}, 1);
    auto physical_density = [&](const KinSpace& sp) {
        const Matrix pi = physical_projector(sp).matrix();
        const Matrix raw = rnd::random_density(sp.dim(), rng);
        Matrix m = pi * raw * pi;
        m *= cd{1.0 / m.trace().real(), 0.0};
        return m;
    };
    const Matrix rho_n = physical_density(sp2);
    const Matrix rho_m = physical_density(sp1);
    const KinSpace big = make_space({3}, 3);
    const DensityMatrix joint(big, Basis::Config, rho_n.kron(rho_m));
    const DensityMatrix red = relational_trace(joint, 1);
    CHECK(std::abs(red.trace_real() - 1.0) < 1e-10);
    CHECK(Matrix::max_abs_diff(red.matrix(), rho_n) < 1e-10);
}

TEST_CASE("relational trace of pure states matches the general path") {
    auto rng = rnd::make_rng(54);
    const KinSpace big = make_space({2}, 3);
    const StateVector psi(big, Basis::Config, rnd::random_state(big.dim(), rng));
    const DensityMatrix via_pure = relational_trace_pure(psi, 1);
    const DensityMatrix via_general = relational_trace(
        DensityMatrix(big, Basis::Config, outer(psi.amplitudes(), psi.amplitudes())),
        1);
    CHECK(DensityMatrix::max_abs_diff(via_pure, via_general) < 1e-12);
}

TEST_CASE("physical projection of an aligned state reproduces its relational "
          "coefficients") {
    auto rng = rnd::make_rng(55);
    const KinSpace sp = make_space({3}, 2);
    const KinSpace red = sp.complement();
    const auto& grp = sp.group();
    const Matrix sigma = rnd::random_density(red.dim(), rng);
    Matrix pin(grp.order(), grp.order());
    pin(0, 0) = 1.0;
    const DensityMatrix rho(sp, Basis::Config, pin.kron(sigma));

    const Matrix proj = to_relational(project_phys(rho)).matrix();
    double dev = 0.0;
    for (std::size_t h = 0; h < red.dim(); ++h)
        for (std::size_t j = 0; j < red.dim(); ++j)
            dev = std::max(dev,
                           std::abs(proj(sp.rel_index(h, 0), sp.rel_index(j, 0)) -
                                    sigma(h, j) / static_cast<double>(grp.order())));
    CHECK(dev < 1e-12);
}

TEST_CASE("aligned embedding realizes the reduced picture inside the full space") {
    auto rng = rnd::make_rng(56);
    const KinSpace sp = make_space({3}, 2);
    const auto& grp = sp.group();
    const GroupElement g = grp.cyclic(1);
    const StateVector psi = random_physical(sp, rng);
    const Matrix rbar = aligned_embedding_matrix(sp, 1, g);

    // Expected image: |g>_1 tensor reduced.
    const CVec lifted = [&] {
        CVec out(sp.dim(), cd{0.0, 0.0});
        const CVec redv = reduce_S(psi, 1, g).amplitudes();
        const std::size_t rdim = redv.size();
        const std::size_t base = grp.element_index(g) * rdim;
        for (std::size_t x = 0; x < rdim; ++x) out[base + x] = redv[x];
        return out;
    }();
    const CVec via_matrix = rbar.apply(psi.amplitudes());
    CHECK(max_abs_diff(via_matrix, lifted) < 1e-12);
}

TEST_CASE("third-particle scenario: the phase survives only relationally") {
    const auto rep = paradox_scenario(16, 1, 2, 0, 0.0, std::numbers::pi);
    CHECK(rep.alignable);
    CHECK(rep.aligned_form_ok);
    CHECK(rep.aligned_form_deviation < 1e-12);
    CHECK(rep.partial_trace_phase_independent);
    CHECK(rep.partial_trace_difference < 1e-12);
    CHECK(rep.relational_trace_phase_dependent);
    CHECK(rep.relational_trace_difference > 1e-3);

    // Same phase on both sides: identical relational traces.
    const auto same = paradox_scenario(16, 1, 2, 0, 0.7, 0.7 + 2.0 * std::numbers::pi);
    CHECK_FALSE(same.phases_distinct);
    CHECK(same.relational_trace_difference < 1e-9);
    CHECK_FALSE(same.relational_trace_phase_dependent);

    CHECK_THROWS_AS(paradox_state(8, 2, 2, 0, 0.0), InvalidArgument);  // 2(a+b)=0
    CHECK_THROWS_AS(paradox_state(4, 2, 1, 0, 0.0), InvalidArgument);  // 2a=0
}

TEST_CASE("third-particle scenario at small size agrees with the dense route") {
    const int n = 7;
    const StateVector psi0 = paradox_state(n, 1, 2, 0, 0.0);
    const StateVector psi1 = paradox_state(n, 1, 2, 0, 1.1);
    const DensityMatrix t0 = relational_trace_pure(psi0, 1);
    const DensityMatrix t1 = relational_trace_pure(psi1, 1);
    CHECK(DensityMatrix::max_abs_diff(t0, t1) > 1e-3);
    const DensityMatrix dense0 = relational_trace(
        DensityMatrix(psi0.space(), Basis::Config,
                      outer(psi0.amplitudes(), psi0.amplitudes())),
        1);
    CHECK(DensityMatrix::max_abs_diff(t0, dense0) < 1e-12);
}
