#include "gframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gframe/alignment.hpp"
#include "gframe/eigen.hpp"
#include "gframe/relframes.hpp"
#include "gframe/rnd.hpp"

namespace gframe::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Collector {
    std::string suite;
    std::vector<CheckResult> out;

    void add(const std::string& name, double deviation, double tolerance) {
        out.push_back({suite, name, deviation <= tolerance, deviation, tolerance});
    }
    void add_flag(const std::string& name, bool pass) {
        out.push_back({suite, name, pass, pass ? 0.0 : 1.0, 0.0});
    }
    void add_named(const NamedCheck& c) {
        out.push_back({suite, c.name, c.pass, c.deviation, c.tolerance});
    }
};

std::vector<KinSpace> spaces_for(const Options& opt, int min_particles = 1) {
    std::vector<KinSpace> out;
    for (const auto& f : opt.groups) {
        const FiniteAbelianGroup g(f);
        for (int n = min_particles; n <= opt.max_particles; ++n) {
            KinSpace sp(g, n);
            if (sp.dim() <= 256) out.push_back(std::move(sp));
        }
    }
    return out;
}

void suite_group(const Options& opt, Collector& c) {
    for (const auto& f : opt.groups) {
        const FiniteAbelianGroup g(f);
        const auto chars = g.characters();
        double worst = 0.0;
        for (const auto& chi : chars)
            for (const auto& chip : chars) {
                cd acc{0.0, 0.0};
                for (const auto& el : g.elements())
                    acc += std::conj(g.char_value(chi, el)) * g.char_value(chip, el);
                const cd want = chi == chip ? cd{static_cast<double>(g.order()), 0.0}
                                            : cd{0.0, 0.0};
                worst = std::max(worst, std::abs(acc - want));
            }
        c.add(g.name() + ": character orthogonality", worst, 1e-12);
        c.add_flag(g.name() + ": character count equals group order",
                   chars.size() == g.order());

        auto rng = rnd::make_rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        double hom = 0.0;
        for (int s = 0; s < 64; ++s) {
            const auto chi = g.character_at(pick(rng));
            const auto x = g.element_at(pick(rng));
            const auto y = g.element_at(pick(rng));
            hom = std::max(hom, std::abs(g.char_value(chi, g.mul(x, y)) -
                                         g.char_value(chi, x) * g.char_value(chi, y)));
        }
        c.add(g.name() + ": character homomorphism property", hom, 1e-12);
    }
}

void suite_spaces(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    for (const auto& sp : spaces_for(opt)) {
        const Matrix q = relational_basis_matrix(sp);
        c.add(sp.name() + ": relational basis completeness",
              Matrix::max_abs_diff(q * q.adjoint(), Matrix::identity(sp.dim())), 1e-10);

        double eig = 0.0;
        for (std::size_t gi = 0; gi < sp.group().order(); ++gi) {
            const auto g = sp.group().element_at(gi);
            const Operator u = translation(sp, g);
            for (std::size_t col = 0; col < sp.dim(); ++col) {
                const auto [hi, ci] = sp.rel_at(col);
                const StateVector v = relational_vector(
                    sp, RelationalIndex{sp.group().tuple_at(hi, sp.particles() - 1),
                                        sp.group().character_at(ci)});
                const CVec lhs = u.matrix().apply(v.amplitudes());
                const CVec rhs =
                    scaled(v.amplitudes(),
                           sp.group().char_value(sp.group().character_at(ci), g));
                eig = std::max(eig, max_abs_diff(lhs, rhs));
            }
        }
        c.add(sp.name() + ": translation eigenrelation on relational basis", eig,
              1e-10);

        const Matrix a = rnd::random_matrix(sp.dim(), sp.dim(), rng);
        const Operator op(sp, Basis::Config, a);
        c.add(sp.name() + ": basis-change roundtrip",
              Operator::max_abs_diff(to_config(to_relational(op)), op), 1e-12);
    }
}

void suite_oracle(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    const std::vector<std::pair<std::vector<int>, int>> cases = {
        {{2}, 2}, {{3}, 2}, {{2}, 3}};
    for (const auto& [factors, n] : cases) {
        const KinSpace sp{FiniteAbelianGroup(factors), n};
        const DensityMatrix rho(sp, Basis::Config, rnd::random_density(sp.dim(), rng));
        const DensityMatrix structural = project_inv(rho);
        const DensityMatrix twirl = brute_force_twirl(rho, opt.twirl_cap);
        c.add(sp.name() + ": structural invariant projection equals exhaustive twirl",
              DensityMatrix::max_abs_diff(structural, twirl), 1e-12);

        const Operator avg = brute_force_unitary_average(sp, opt.twirl_cap);
        c.add(sp.name() + ": symmetry-group average equals translation average",
              Operator::max_abs_diff(avg, physical_projector(sp)), 1e-12);
    }
}

void suite_symmetry(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    for (const auto& sp : spaces_for(opt, 2)) {
        const Operator pi = physical_projector(sp);
        c.add(sp.name() + ": physical projector idempotent",
              Operator::max_abs_diff(pi * pi, pi), 1e-10);
        c.add(sp.name() + ": physical projector Hermitian",
              Matrix::max_abs_diff(pi.matrix(), pi.matrix().adjoint()), 1e-10);
        const double rank = pi.trace().real();
        c.add(sp.name() + ": physical projector rank",
              std::abs(rank - static_cast<double>(sp.sector_count())), 1e-8);

        // Fixed points of sampled symmetry elements.
        double fix = 0.0;
        for (int s = 0; s < 5; ++s) {
            const auto a = SymmetryAssignment::random(sp, rng);
            const auto perm = assignment_permutation(a);
            for (std::size_t hi = 0; hi < std::min<std::size_t>(sp.sector_count(), 4);
                 ++hi) {
                const StateVector v = relational_vector(
                    sp, RelationalIndex{sp.group().tuple_at(hi, sp.particles() - 1),
                                        sp.group().trivial_character()});
                CVec moved(v.amplitudes().size());
                for (std::size_t i = 0; i < moved.size(); ++i)
                    moved[perm[i]] = v.amplitudes()[i];
                fix = std::max(fix, max_abs_diff(moved, v.amplitudes()));
            }
        }
        c.add(sp.name() + ": relational vectors fixed by sampled symmetries", fix,
              1e-10);

        const DensityMatrix sigma(sp, Basis::Config,
                                  rnd::random_density(sp.dim(), rng));
        const DensityMatrix proj = project_inv(sigma);
        c.add(sp.name() + ": invariant projection preserves trace",
              std::abs(proj.trace_real() - sigma.trace_real()), 1e-10);
        c.add(sp.name() + ": invariant projection idempotent",
              DensityMatrix::max_abs_diff(project_inv(proj), proj), 1e-10);

        // Expectation values of invariant observables are projection-blind.
        const Matrix w = rnd::random_invariant_unitary(sp, rng);
        const Operator a_inv = to_config(Operator(sp, Basis::Relational, w));
        const cd lhs = (sigma.matrix() * a_inv.matrix()).trace();
        const cd rhs = (proj.matrix() * a_inv.matrix()).trace();
        c.add(sp.name() + ": invariant expectations unchanged by projection",
              std::abs(lhs - rhs), 1e-10);
    }

    // Symmetry-equivalence implies observational equivalence; the converse
    // fails on a concrete pure/twirled pair.
    {
        const KinSpace sp{FiniteAbelianGroup({2}), 2};
        auto rng2 = rnd::make_rng(opt.seed + 1);
        const DensityMatrix rho(sp, Basis::Config, rnd::random_density(sp.dim(), rng2));
        const DensityMatrix sigma =
            apply_symmetry(SymmetryAssignment::random(sp, rng2), rho);
        c.add_flag("Z2^2: symmetry-equivalent pair is observationally equivalent",
                   observationally_equivalent(rho, sigma));

        CVec amp(sp.dim(), cd{0.0, 0.0});
        amp[0] = amp[1] = 1.0 / std::sqrt(2.0);
        const DensityMatrix pure(sp, Basis::Config, outer(amp, amp));
        const DensityMatrix mixed = project_inv(pure);
        const auto verdict = symmetry_equivalent_bruteforce(pure, mixed);
        c.add_flag(
            "Z2^2: pure state vs its invariant projection is observationally but "
            "not symmetry equivalent",
            verdict.kind == EquivKind::ObservationalEquiv);
    }

    // Purification criterion, both directions.
    {
        const KinSpace sp{FiniteAbelianGroup({3}), 2};
        auto rng2 = rnd::make_rng(opt.seed + 2);
        const Matrix block = rnd::random_density(sp.sector_count(), rng2);
        Matrix rel(sp.dim(), sp.dim());
        for (std::size_t r = 0; r < sp.sector_count(); ++r)
            for (std::size_t cc = 0; cc < sp.sector_count(); ++cc)
                rel(sp.rel_index(r, 0), sp.rel_index(cc, 0)) = block(r, cc);
        const DensityMatrix physical = to_config(DensityMatrix(sp, Basis::Relational, rel));
        c.add_flag("Z3^2: physical states pass the purification test",
                   purification_invariance_check(physical, 16, rng2));

        Matrix bad(sp.dim(), sp.dim());
        bad(sp.rel_index(0, 1), sp.rel_index(0, 1)) = 1.0;
        const DensityMatrix nonphys = to_config(DensityMatrix(sp, Basis::Relational, bad));
        c.add_flag("Z3^2: nontrivial-character states fail the purification test",
                   !purification_invariance_check(nonphys, 16, rng2));
    }
}

void suite_alignment(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    // Superposition of two positions in one sector is not alignable.
    {
        const KinSpace sp{FiniteAbelianGroup({2}), 2};
        CVec v(sp.dim(), cd{0.0, 0.0});
        const auto& g = sp.group();
        v[sp.config_index({g.cyclic(0), g.cyclic(0)})] = 1.0 / std::sqrt(2.0);
        v[sp.config_index({g.cyclic(1), g.cyclic(1)})] = 1.0 / std::sqrt(2.0);
        const DensityMatrix rho(sp, Basis::Config, outer(v, v));
        c.add_flag("Z2^2: equal superposition of same-relation positions rejected",
                   !is_alignable(rho));
        // The even mixture fails too.
        Matrix mix(sp.dim(), sp.dim());
        mix(0, 0) = 0.5;
        mix(sp.config_index({g.cyclic(1), g.cyclic(1)}),
            sp.config_index({g.cyclic(1), g.cyclic(1)})) = 0.5;
        c.add_flag("Z2^2: even mixture of same-relation positions rejected",
                   !is_alignable(DensityMatrix(sp, Basis::Config, mix)));
    }

    for (const auto& sp : spaces_for(opt, 2)) {
        // Random alignable states: product with particle 1 pinned, then moved
        // by a random symmetry.
        const KinSpace red = sp.complement();
        const CVec phi = rnd::random_state(red.dim(), rng);
        CVec full(sp.dim(), cd{0.0, 0.0});
        for (std::size_t x = 0; x < red.dim(); ++x) full[x] = phi[x];
        const StateVector aligned(sp, Basis::Config, full);
        const DensityMatrix rho(
            sp, Basis::Config,
            outer(aligned.amplitudes(), aligned.amplitudes()));

        bool closure = true;
        for (int s = 0; s < 16 && closure; ++s) {
            const auto moved = apply_symmetry(SymmetryAssignment::random(sp, rng), rho);
            closure = is_alignable(moved);
        }
        c.add_flag(sp.name() + ": alignable set closed under sampled symmetries",
                   closure);

        bool frames_ok = true;
        const DensityMatrix moved =
            apply_symmetry(SymmetryAssignment::random(sp, rng), rho);
        for (int f = 1; f <= sp.particles() && frames_ok; ++f) {
            const auto res = align(moved, f, sp.group().identity());
            frames_ok = std::abs(res.reduced.trace_real() - 1.0) < 1e-9;
        }
        c.add_flag(sp.name() + ": alignable relative to every frame", frames_ok);

        // Reduced description, observational and symmetry equivalence agree.
        const DensityMatrix other =
            apply_symmetry(SymmetryAssignment::random(sp, rng), rho);
        const auto r1 = align(moved, 1, sp.group().identity());
        const auto r2 = align(other, 1, sp.group().identity());
        const double red_dev = DensityMatrix::max_abs_diff(r1.reduced, r2.reduced);
        const bool oe = observationally_equivalent(moved, other);
        c.add_flag(sp.name() + ": equal reduced states iff observationally equivalent",
                   (red_dev < 1e-10) == oe);
        if (symmetry_group_size(sp) && *symmetry_group_size(sp) <= opt.twirl_cap) {
            const auto verdict = symmetry_equivalent_bruteforce(moved, other);
            c.add_flag(sp.name() + ": equal reduced states iff symmetry equivalent",
                       (red_dev < 1e-10) ==
                           (verdict.kind == EquivKind::SymmetryEquiv));
        }
    }

    // Center-of-mass table on the discrete circle.
    {
        const KinSpace sp{FiniteAbelianGroup({4}), 2};
        const auto com = center_of_mass_assignment(sp, {1.0, 1.0});
        const auto h2 = sp.group().tuple_index({sp.group().cyclic(2)});
        c.add_flag("Z4^2: equal-mass center-of-mass table value",
                   com.table[h2] == sp.group().cyclic(3));
        const auto com1 = center_of_mass_assignment(sp, {5.0, 0.0});
        bool all_e = true;
        for (const auto& t : com1.table) all_e = all_e && (t == sp.group().identity());
        c.add_flag("Z4^2: all mass on the frame gives the identity table", all_e);
    }
}

void suite_frames(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    for (const auto& sp : spaces_for(opt, 2)) {
        const auto& grp = sp.group();
        const KinSpace red = sp.complement();
        std::uniform_int_distribution<std::size_t> pick(0, grp.order() - 1);

        double obs_dev = 0.0, expec_dev = 0.0, cov_dev = 0.0, heis_dev = 0.0;
        for (int s = 0; s < 8; ++s) {
            const int frame = 1 + static_cast<int>(pick(rng)) % sp.particles();
            const GroupElement g = grp.element_at(pick(rng));
            const Matrix f = rnd::random_matrix(red.dim(), red.dim(), rng);
            const Operator ff = relativize(f, sp, frame, g);
            const ReductionMap r = schrodinger_reduction(sp, frame, g);
            const Matrix rinv = reduction_inverse(r);
            obs_dev = std::max(obs_dev,
                               Matrix::max_abs_diff(r.matrix * ff.matrix() * rinv, f));

            const StateVector psi(
                sp, Basis::Config,
                project_phys(StateVector(sp, Basis::Config,
                                         rnd::random_state(sp.dim(), rng)))
                    .amplitudes());
            const StateVector phi(
                sp, Basis::Config,
                project_phys(StateVector(sp, Basis::Config,
                                         rnd::random_state(sp.dim(), rng)))
                    .amplitudes());
            const CVec rpsi = reduce_S(psi, frame, g).amplitudes();
            const CVec rphi = reduce_S(phi, frame, g).amplitudes();
            const cd lhs = inner(psi.amplitudes(), ff.matrix().apply(phi.amplitudes()));
            const cd rhs = inner(rpsi, f.apply(rphi));
            expec_dev = std::max(expec_dev, std::abs(lhs - rhs));

            const GroupElement g2 = grp.element_at(pick(rng));
            const CVec red_g = reduce_S(psi, frame, g).amplitudes();
            const CVec red_g2 = reduce_S(psi, frame, g2).amplitudes();
            const Operator shift =
                translation(red, grp.mul(g, grp.inv(g2)));
            cov_dev = std::max(cov_dev,
                               max_abs_diff(red_g, shift.matrix().apply(red_g2)));

            heis_dev = std::max(
                heis_dev, max_abs_diff(reduce_H(psi, frame, g).amplitudes(),
                                       reduce_S(psi, frame, grp.identity())
                                           .amplitudes()));
        }
        c.add(sp.name() + ": reduced relational observables act as the original",
              obs_dev, 1e-10);
        c.add(sp.name() + ": relational expectation values match reduced ones",
              expec_dev, 1e-10);
        c.add(sp.name() + ": reduced states transform covariantly", cov_dev, 1e-10);
        c.add(sp.name() + ": conditional and shift reductions agree", heis_dev, 1e-10);

        // Trivialization transports the projector onto the frame alone.
        const int frame = 1;
        const Operator t = trivialize(sp, frame);
        const Operator pi = physical_projector(sp);
        const Matrix lhs = t.matrix() * pi.matrix() * t.matrix().adjoint();
        const Operator pi1 = embed_at(
            physical_projector(KinSpace(grp, 1)).matrix(), {frame}, sp);
        c.add(sp.name() + ": trivialization transports the projector",
              Matrix::max_abs_diff(lhs, pi1.matrix()), 1e-10);
    }

    // Frame-change forms agree and compose to the identity.
    for (const auto& sp : spaces_for(opt, 3)) {
        const auto& grp = sp.group();
        auto rng2 = rnd::make_rng(opt.seed + 3);
        std::uniform_int_distribution<std::size_t> pick(0, grp.order() - 1);
        double form_dev = 0.0, comp_dev = 0.0, aligned_dev = 0.0;
        for (int i = 1; i <= sp.particles(); ++i)
            for (int j = 1; j <= sp.particles(); ++j) {
                if (i == j) continue;
                const GroupElement gi = grp.element_at(pick(rng2));
                const GroupElement gj = grp.element_at(pick(rng2));
                const Operator ex = frame_change(sp, i, gi, j, gj);
                const Operator co = frame_change_compositional(sp, i, gi, j, gj);
                form_dev = std::max(form_dev, Operator::max_abs_diff(ex, co));
                const Operator back = frame_change(sp, j, gj, i, gi);
                comp_dev = std::max(
                    comp_dev,
                    Matrix::max_abs_diff(back.matrix() * ex.matrix(),
                                         Matrix::identity(ex.matrix().rows())));
                aligned_dev = std::max(
                    aligned_dev,
                    Operator::max_abs_diff(
                        frame_change(sp, i, grp.identity(), j, grp.identity()),
                        qrf_transform_aligned(sp, i, j)));
            }
        c.add(sp.name() + ": explicit and compositional frame changes agree",
              form_dev, 1e-10);
        c.add(sp.name() + ": frame changes invert each other", comp_dev, 1e-10);
        c.add(sp.name() + ": origin frame change equals the aligned-picture map",
              aligned_dev, 1e-10);
    }

    // Relational embedding and trace.
    {
        const KinSpace sp{FiniteAbelianGroup({2}), 2};
        auto rng2 = rnd::make_rng(opt.seed + 4);
        const Operator pi = physical_projector(sp);
        const Matrix raw = rnd::random_matrix(sp.dim(), sp.dim(), rng2);
        const Operator x(sp, Basis::Config,
                         pi.matrix() * raw * pi.matrix());
        const Operator lhs = relational_embed(x, 1);
        const Operator rhs = relational_embed_product_form(x, 1);
        c.add("Z2 2->3: embedding forms agree", Operator::max_abs_diff(lhs, rhs),
              1e-10);

        const Matrix raw2 = rnd::random_matrix(sp.dim(), sp.dim(), rng2);
        const Operator y(sp, Basis::Config, pi.matrix() * raw2 * pi.matrix());
        const Operator prod = relational_embed(
            Operator(sp, Basis::Config, x.matrix() * y.matrix()), 1);
        c.add("Z2 2->3: embedding is multiplicative",
              Matrix::max_abs_diff(prod.matrix(),
                                   (relational_embed(x, 1).matrix() *
                                    relational_embed(y, 1).matrix())),
              1e-10);

        const Operator big_pi = physical_projector(KinSpace(sp.group(), 3));
        const Operator emb_pi = relational_embed(pi, 1);
        c.add_flag("Z2 2->3: embedding is not unital",
                   Operator::max_abs_diff(emb_pi, big_pi) > 1e-6);

        // Duality of trace and embedding on random states and observables.
        double dual = 0.0;
        const KinSpace big(sp.group(), 3);
        const DensityMatrix rho(big, Basis::Config,
                                rnd::random_density(big.dim(), rng2));
        const DensityMatrix reduced = relational_trace(rho, 1);
        for (int s = 0; s < 8; ++s) {
            const Matrix raw3 = rnd::random_matrix(sp.dim(), sp.dim(), rng2);
            const Operator obs(sp, Basis::Config, pi.matrix() * raw3 * pi.matrix());
            const cd a = (rho.matrix() * relational_embed(obs, 1).matrix()).trace();
            const cd b = (reduced.matrix() * obs.matrix()).trace();
            dual = std::max(dual, std::abs(a - b));
        }
        c.add("Z2 3->2: relational trace is dual to the embedding", dual, 1e-10);
    }
}

void suite_dynamics(const Options& opt, Collector& c) {
    auto rng = rnd::make_rng(opt.seed);
    std::uniform_real_distribution<double> tdist(0.0, 3.0);
    std::uniform_real_distribution<double> vdist(-1.0, 1.0);
    std::uniform_real_distribution<double> mdist(0.5, 4.0);

    auto random_model = [&](int n, int particles) {
        CircleModel m;
        m.sites = n;
        m.particles = particles;
        for (int i = 0; i < particles; ++i) m.masses.push_back(mdist(rng));
        for (int i = 1; i <= particles; ++i)
            for (int j = i + 1; j <= particles; ++j) {
                PairPotential p;
                p.i = i;
                p.j = j;
                p.values.resize(static_cast<std::size_t>(n));
                for (int g = 0; g <= n / 2; ++g) {
                    const double v = vdist(rng);
                    p.values[static_cast<std::size_t>(g)] = v;
                    p.values[static_cast<std::size_t>((n - g) % n)] = v;
                }
                m.potentials.push_back(std::move(p));
            }
        return m;
    };

    // Momentum generates translations.
    for (int n : {2, 3, 4, 5}) {
        const Matrix p = momentum(n);
        double dev = 0.0;
        const KinSpace one{FiniteAbelianGroup({n}), 1};
        for (int l = 0; l < n; ++l) {
            const Matrix u = spectral_apply_hermitian(
                p, [&](double e) { return std::polar(1.0, kTwoPi * l * e / n); });
            const Operator want = translation(one, one.group().cyclic(l));
            dev = std::max(dev, Matrix::max_abs_diff(u, want.matrix()));
        }
        c.add("Z" + std::to_string(n) + ": momentum generates translations", dev,
              1e-10);
    }

    // Hamiltonian commutes with global translations and the projector.
    for (int n : {2, 3, 4}) {
        const CircleModel m = random_model(n, 2);
        const Operator h = hamiltonian(m);
        double dev = 0.0;
        for (int g = 0; g < n; ++g) {
            const Operator u = translation(h.space(), h.space().group().cyclic(g));
            dev = std::max(dev, Matrix::max_abs_diff(h.matrix() * u.matrix(),
                                                     u.matrix() * h.matrix()));
        }
        c.add("Z" + std::to_string(n) + "^2: Hamiltonian commutes with translations",
              dev, 1e-12);

        // Projected evolution intertwines with the full one.
        const Operator hp = physical_hamiltonian(h);
        const double t = tdist(rng);
        const Operator w = evolve(h, t);
        const Operator wp = evolve(hp, t);
        const Operator pi = physical_projector(h.space());
        c.add("Z" + std::to_string(n) +
                  "^2: projected evolution intertwines with the full evolution",
              Matrix::max_abs_diff(pi.matrix() * w.matrix(),
                                   wp.matrix() * pi.matrix()),
              1e-9);
        c.add_flag("Z" + std::to_string(n) +
                       "^2: projected evolution stays in the invariant algebra",
                   in_invariant_algebra(wp));
    }

    // Reduced Hamiltonian: closed form vs conjugation.
    for (int n : {2, 3, 4}) {
        for (int particles : {2, 3}) {
            const CircleModel m = random_model(n, particles);
            const Operator closed = reduced_hamiltonian_closed_form(m);
            const Operator conjd = reduced_hamiltonian_conjugated(m);
            c.add("Z" + std::to_string(n) + "^" + std::to_string(particles) +
                      ": reduced Hamiltonian closed form matches conjugation",
                  Operator::max_abs_diff(closed, conjd), 1e-9);
        }
    }

    // A full evolution that breaks observational equivalence exists in the
    // scan grid.
    for (int n : {2, 3, 4}) {
        CircleModel m;
        m.sites = n;
        m.particles = 2;
        m.masses = {1.0, 1.0};
        const auto witness = find_oe_violation(m);
        c.add_flag("Z" + std::to_string(n) +
                       "^2: grid scan finds an equivalence-breaking evolution",
                   witness.has_value());
    }

    // Projection onto the invariant algebra commutes with OE-preserving maps.
    {
        const KinSpace sp{FiniteAbelianGroup({4}), 2};
        const DensityMatrix rho(sp, Basis::Config, rnd::random_density(sp.dim(), rng));
        const Operator w = to_config(
            character_swap_unitary(sp, sp.group().character_at(2),
                                   sp.group().character_at(1)));
        c.add_flag("Z4^2: invariant projection commutes with the character swap",
                   invariant_projection_commutes(w, rho));
        CircleModel m;
        m.sites = 4;
        m.particles = 2;
        m.masses = {1.0, 2.0};
        const Operator wp = evolve(physical_hamiltonian(hamiltonian(m)), tdist(rng));
        c.add_flag("Z4^2: invariant projection commutes with projected evolution",
                   invariant_projection_commutes(wp, rho));
    }

    // Relation-conditional translation example.
    {
        const auto rep = relation_conditional_example(5, 2, 2, 1);
        for (const auto& nc : rep.checks) c.add_named(nc);
    }
}

void suite_chain(const Options& opt, Collector& c) {
    const ChainReport rep = preservation_chain_suite(4, opt.seed);
    for (const auto& nc : rep.checks) c.add_named(nc);
}

void suite_paradox(const Options&, Collector& c) {
    const ParadoxReport rep = paradox_scenario(16, 1, 2, 0, 0.0, std::numbers::pi);
    c.add_flag("paradox: input state is alignable", rep.alignable);
    c.add("paradox: aligned state matches the closed form",
          rep.aligned_form_deviation, 1e-12);
    c.add("paradox: ordinary partial trace is phase independent",
          rep.partial_trace_difference, 1e-12);
    c.add_flag("paradox: relational trace distinguishes the phases",
               rep.relational_trace_phase_dependent);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"group",  "spaces",   "oracle", "symmetry", "alignment",
            "frames", "dynamics", "chain",  "paradox"};
}

std::vector<CheckResult> run_suite(const std::string& selector, const Options& opt) {
    Collector c;
    auto run_one = [&](const std::string& name) {
        c.suite = name;
        if (name == "group") suite_group(opt, c);
        else if (name == "spaces") suite_spaces(opt, c);
        else if (name == "oracle") suite_oracle(opt, c);
        else if (name == "symmetry") suite_symmetry(opt, c);
        else if (name == "alignment") suite_alignment(opt, c);
        else if (name == "frames") suite_frames(opt, c);
        else if (name == "dynamics") suite_dynamics(opt, c);
        else if (name == "chain") suite_chain(opt, c);
        else if (name == "paradox") suite_paradox(opt, c);
        else throw InvalidArgument("unknown verify suite: " + name);
    };
    if (selector == "all") {
        for (const auto& name : suite_names()) run_one(name);
    } else {
        run_one(selector);
    }
    return c.out;
}

}  // namespace gframe::verify
