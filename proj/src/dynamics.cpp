#include "gframe/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gframe/alignment.hpp"
#include "gframe/eigen.hpp"
#include "gframe/rnd.hpp"

namespace gframe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_symmetric_potential(int n, const std::vector<double>& v) {
    if (v.size() != static_cast<std::size_t>(n))
        throw InvalidArgument("potential table must have one entry per site");
    for (int g = 0; g < n; ++g)
        if (std::abs(v[static_cast<std::size_t>(g)] -
                     v[static_cast<std::size_t>((n - g) % n)]) > 1e-12)
            throw BadOperator("potential is not symmetric: v(g) != v(-g) at g=" +
                              std::to_string(g));
}
}  // namespace

void CircleModel::validate() const {
    if (sites < 2) throw InvalidArgument("circle model needs n >= 2 sites");
    if (particles < 1) throw InvalidArgument("circle model needs at least 1 particle");
    if (masses.size() != static_cast<std::size_t>(particles))
        throw InvalidArgument("need one mass per particle");
    for (double m : masses)
        if (m <= 0.0) throw InvalidArgument("masses must be positive");
    for (const auto& p : potentials) {
        if (p.i < 1 || p.j > particles || p.i >= p.j)
            throw InvalidArgument("potential pair must satisfy 1 <= i < j <= N");
        check_symmetric_potential(sites, p.values);
    }
    for (std::size_t x = 0; x < potentials.size(); ++x)
        for (std::size_t y = x + 1; y < potentials.size(); ++y)
            if (potentials[x].i == potentials[y].i && potentials[x].j == potentials[y].j)
                throw InvalidArgument("duplicate potential pair");
}

KinSpace CircleModel::space() const {
    return KinSpace(FiniteAbelianGroup({sites}), particles);
}

Matrix momentum(int n) {
    if (n < 2) throw InvalidArgument("momentum needs n >= 2");
    Matrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            cd acc{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                acc += static_cast<double>(k) *
                       std::polar(1.0, -kTwoPi * k * (g - gp) / n);
            p(static_cast<std::size_t>(g), static_cast<std::size_t>(gp)) =
                acc / static_cast<double>(n);
        }
    return p;
}

Matrix momentum_squared_mod(int n) {
    if (n < 2) throw InvalidArgument("momentum needs n >= 2");
    Matrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            cd acc{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                acc += static_cast<double>((k * k) % n) *
                       std::polar(1.0, -kTwoPi * k * (g - gp) / n);
            p(static_cast<std::size_t>(g), static_cast<std::size_t>(gp)) =
                acc / static_cast<double>(n);
        }
    return p;
}

Operator pair_potential(const KinSpace& space, int i, int j,
                        const std::vector<double>& v) {
    if (!space.group().is_cyclic())
        throw InvalidArgument("pair potential requires a cyclic group");
    const int n = space.group().factors()[0];
    if (i < 1 || j > space.particles() || i >= j)
        throw InvalidArgument("potential pair must satisfy 1 <= i < j <= N");
    check_symmetric_potential(n, v);
    Matrix m(space.dim(), space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        const auto cfg = space.config_at(idx);
        const int gi = cfg[static_cast<std::size_t>(i - 1)].coords[0];
        const int gj = cfg[static_cast<std::size_t>(j - 1)].coords[0];
        m(idx, idx) = v[static_cast<std::size_t>(((gj - gi) % n + n) % n)];
    }
    return Operator(space, Basis::Config, std::move(m));
}

Operator hamiltonian(const CircleModel& model) {
    model.validate();
    const KinSpace sp = model.space();
    const Matrix kin = momentum_squared_mod(model.sites);
    Matrix h(sp.dim(), sp.dim());
    for (int i = 1; i <= model.particles; ++i) {
        const Operator emb = embed_at(kin, {i}, sp);
        kern::axpy(h.size(),
                   cd{1.0 / (2.0 * model.masses[static_cast<std::size_t>(i - 1)]), 0.0},
                   emb.matrix().data(), h.data());
    }
    for (const auto& p : model.potentials) {
        const Operator v = pair_potential(sp, p.i, p.j, p.values);
        kern::axpy(h.size(), cd{1.0, 0.0}, v.matrix().data(), h.data());
    }
    return Operator(sp, Basis::Config, std::move(h));
}

Operator evolve(const Operator& h, double t, double herm_tol) {
    if (!h.matrix().is_hermitian(herm_tol))
        throw BadOperator("evolve: Hamiltonian is not Hermitian");
    const Matrix w = spectral_apply_hermitian(
        h.matrix(), [t](double e) { return std::polar(1.0, -t * e); });
    return Operator(h.space(), h.basis(), w);
}

Operator physical_hamiltonian(const Operator& h) { return project_phys(h); }

Operator reduced_hamiltonian_closed_form(const CircleModel& model) {
    model.validate();
    if (model.particles < 2)
        throw InvalidArgument("reduced Hamiltonian needs at least 2 particles");
    const int n = model.sites;
    const int nred = model.particles - 1;  // particles 2..N
    const KinSpace red(FiniteAbelianGroup({n}), nred);
    Matrix h(red.dim(), red.dim());

    // Own kinetic terms of the non-frame particles.
    const Matrix kin = momentum_squared_mod(n);
    for (int i = 2; i <= model.particles; ++i) {
        const Operator emb = embed_at(kin, {i - 1}, red);
        kern::axpy(h.size(),
                   cd{1.0 / (2.0 * model.masses[static_cast<std::size_t>(i - 1)]), 0.0},
                   emb.matrix().data(), h.data());
    }

    // Potentials keep their form; relative to the frame the positions are
    // the relations themselves (h_0 = 0 for pairs involving the frame).
    for (const auto& p : model.potentials) {
        Matrix v(red.dim(), red.dim());
        for (std::size_t idx = 0; idx < red.dim(); ++idx) {
            const auto cfg = red.config_at(idx);
            const int hj = cfg[static_cast<std::size_t>(p.j - 2)].coords[0];
            const int hi = p.i == 1 ? 0 : cfg[static_cast<std::size_t>(p.i - 2)].coords[0];
            v(idx, idx) = p.values[static_cast<std::size_t>(((hj - hi) % n + n) % n)];
        }
        kern::axpy(h.size(), cd{1.0, 0.0}, v.data(), h.data());
    }

    // Frame-elimination cross term: diagonal in the tensor character basis
    // with integer eigenvalues, so build it there exactly.
    Matrix q1(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k)
            q1(static_cast<std::size_t>(g), static_cast<std::size_t>(k)) =
                std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           -kTwoPi * k * g / n);
    Matrix f = q1;
    for (int i = 1; i < nred; ++i) f = f.kron(q1);
    CVec diag(red.dim());
    for (std::size_t idx = 0; idx < red.dim(); ++idx) {
        // Digits of idx are the character labels k_2..k_N.
        long long total = 0;
        std::size_t rest = idx;
        std::vector<long long> ks(static_cast<std::size_t>(nred));
        for (int p = nred; p-- > 0;) {
            ks[static_cast<std::size_t>(p)] = static_cast<long long>(rest % n);
            rest /= static_cast<std::size_t>(n);
        }
        // (sum_i P_i)^2 expanded: squares plus twice the ordered pair
        // products, reduced mod n afterwards.
        for (int x = 0; x < nred; ++x) {
            total += ks[static_cast<std::size_t>(x)] * ks[static_cast<std::size_t>(x)];
            for (int y = x + 1; y < nred; ++y)
                total += 2 * ks[static_cast<std::size_t>(x)] *
                         ks[static_cast<std::size_t>(y)];
        }
        diag[idx] = static_cast<double>(total % n);
    }
    Matrix scaled = f;
    for (std::size_t r = 0; r < red.dim(); ++r)
        for (std::size_t c = 0; c < red.dim(); ++c) scaled(r, c) *= diag[c];
    const Matrix cross = scaled * f.adjoint();
    kern::axpy(h.size(), cd{1.0 / (2.0 * model.masses[0]), 0.0}, cross.data(),
               h.data());
    return Operator(red, Basis::Config, std::move(h));
}

Operator reduced_hamiltonian_conjugated(const CircleModel& model) {
    model.validate();
    if (model.particles < 2)
        throw InvalidArgument("reduced Hamiltonian needs at least 2 particles");
    const KinSpace sp = model.space();
    const Operator hphys = physical_hamiltonian(hamiltonian(model));
    const KinSpace red(sp.group(), model.particles - 1);
    const auto& grp = sp.group();
    const Character triv = grp.trivial_character();

    // Matrix elements between trivial-character sector vectors.
    std::vector<CVec> basis(sp.sector_count());
    for (std::size_t hi = 0; hi < sp.sector_count(); ++hi)
        basis[hi] = relational_vector(
                        sp, RelationalIndex{grp.tuple_at(hi, sp.particles() - 1), triv})
                        .amplitudes();
    Matrix out(red.dim(), red.dim());
    for (std::size_t col = 0; col < sp.sector_count(); ++col) {
        const CVec image = hphys.matrix().apply(basis[col]);
        for (std::size_t row = 0; row < sp.sector_count(); ++row)
            out(row, col) = inner(basis[row], image);
    }
    return Operator(red, Basis::Config, std::move(out));
}

bool is_oe_preserving(const Operator& w, double tol, double unitary_tol) {
    if (!w.matrix().is_unitary(unitary_tol))
        throw BadOperator("OE-preservation test requires a unitary");
    const Operator wrel = to_relational(w);
    const KinSpace& sp = wrel.space();
    const std::size_t q = sp.group().order();
    const std::size_t dim = sp.dim();
    const std::size_t sectors = sp.sector_count();

    // Conjugating the pattern basis |r><c| by W gives the outer product of
    // columns r and c of W^dagger; check those stay inside the pattern.
    const Matrix& m = wrel.matrix();
    auto off_pattern = [&](std::size_t a, std::size_t b) {
        return !((a % q == 0 && b % q == 0) || a == b);
    };
    auto conjugated_stays = [&](std::size_t r, std::size_t c) {
        for (std::size_t a = 0; a < dim; ++a) {
            const cd ua = std::conj(m(r, a));
            if (std::abs(ua) < tol) continue;
            for (std::size_t b = 0; b < dim; ++b) {
                if (!off_pattern(a, b)) continue;
                if (std::abs(ua) * std::abs(m(c, b)) > tol) return false;
            }
        }
        return true;
    };

    for (std::size_t hr = 0; hr < sectors; ++hr)
        for (std::size_t hc = 0; hc < sectors; ++hc)
            if (!conjugated_stays(sp.rel_index(hr, 0), sp.rel_index(hc, 0)))
                return false;
    for (std::size_t h = 0; h < sectors; ++h)
        for (std::size_t chi = 1; chi < q; ++chi) {
            const std::size_t d = sp.rel_index(h, chi);
            if (!conjugated_stays(d, d)) return false;
        }
    return true;
}

bool is_monomial(const Matrix& w, double tol, double unitary_tol) {
    if (!w.is_unitary(unitary_tol))
        throw BadOperator("monomial test requires a unitary");
    for (std::size_t c = 0; c < w.cols(); ++c) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < w.rows(); ++r) {
            const double mag = std::abs(w(r, c));
            if (mag > tol) {
                if (std::abs(mag - 1.0) > tol) return false;
                ++hits;
            }
        }
        if (hits != 1) return false;
    }
    return true;
}

std::optional<OeViolationWitness> find_oe_violation(const CircleModel& base) {
    base.validate();
    const std::vector<double> ratios = {1.0, 10.0, 100.0, 1000.0};
    for (double ratio : ratios) {
        CircleModel m = base;
        m.masses.assign(static_cast<std::size_t>(m.particles), ratio);
        m.masses[0] = 1.0;
        const Operator h = hamiltonian(m);
        for (int step = 1; step <= 30; ++step) {
            const double t = 0.1 * step;
            const Operator w = evolve(h, t);
            if (!is_oe_preserving(w)) return OeViolationWitness{t, m.masses};
        }
    }
    return std::nullopt;
}

bool invariant_projection_commutes(const Operator& w, const DensityMatrix& rho,
                                   double tol) {
    if (!is_oe_preserving(w))
        throw BadOperator("projection-commutation identity requires an "
                          "OE-preserving unitary");
    require_same_frame(w.space(), rho.space(), "projection commutation");
    const Matrix wc = to_config(w).matrix();
    const Matrix rc = to_config(rho).matrix();
    const KinSpace& sp = rho.space();
    const Matrix lhs = project_inv_matrix(sp, wc * rc * wc.adjoint(), Basis::Config);
    const Matrix rhs = wc * project_inv_matrix(sp, rc, Basis::Config) * wc.adjoint();
    return Matrix::max_abs_diff(lhs, rhs) <= tol;
}

bool RelationConditionalReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.pass; });
}

bool ChainReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.pass; });
}

Matrix total_momentum(const KinSpace& space) {
    if (!space.group().is_cyclic())
        throw InvalidArgument("total momentum requires a cyclic group");
    const int n = space.group().factors()[0];
    const Operator u1 = translation(space, space.group().cyclic(1));
    // Eigenphases land exactly on n-th roots of unity; snap to integers so
    // the branch cut at 0 ~ 2 pi cannot flip a 0 eigenvalue to n.
    return spectral_apply_normal(u1.matrix(), [n](cd z) {
        double x = std::atan2(z.imag(), z.real());
        if (x < 0.0) x += kTwoPi;
        const long long k = std::llround(x * n / kTwoPi);
        return cd{static_cast<double>(((k % n) + n) % n), 0.0};
    });
}

RelationConditionalReport relation_conditional_example(int n, int particles, int j,
                                                       int k) {
    if (j == k) throw InvalidArgument("needs two distinct particles");
    const KinSpace sp(FiniteAbelianGroup({n}), particles);
    if (j < 1 || j > particles || k < 1 || k > particles)
        throw InvalidArgument("particle out of range");
    const auto& grp = sp.group();
    RelationConditionalReport rep;

    // Distance observable Delta_{jk} = X_j - X_k mod n, diagonal in config.
    Matrix delta(sp.dim(), sp.dim());
    for (std::size_t idx = 0; idx < sp.dim(); ++idx) {
        const auto cfg = sp.config_at(idx);
        const int gj = cfg[static_cast<std::size_t>(j - 1)].coords[0];
        const int gk = cfg[static_cast<std::size_t>(k - 1)].coords[0];
        delta(idx, idx) = static_cast<double>(((gj - gk) % n + n) % n);
    }

    const Matrix ptot = total_momentum(sp);
    {
        const Matrix comm = delta * ptot - ptot * delta;
        rep.checks.push_back({"distance observable commutes with total momentum",
                              comm.max_abs() <= 1e-10, comm.max_abs(), 1e-10});
    }

    // U = exp(2 pi i Delta P_tot / n); the product of the two commuting
    // Hermitian observables is Hermitian up to roundoff.
    Matrix prod = delta * ptot;
    prod = (prod + prod.adjoint()) * cd{0.5, 0.0};
    const Matrix u = spectral_apply_hermitian(
        prod, [n](double e) { return std::polar(1.0, kTwoPi * e / n); });

    // Matches the relation-conditional translation g(h) = h_{j-1} - h_{k-1}.
    SymmetryAssignment a{sp, std::vector<GroupElement>(sp.sector_count())};
    for (std::size_t hi = 0; hi < sp.sector_count(); ++hi) {
        const auto h = grp.tuple_at(hi, particles - 1);
        const int hj = j == 1 ? 0 : h[static_cast<std::size_t>(j - 2)].coords[0];
        const int hk = k == 1 ? 0 : h[static_cast<std::size_t>(k - 2)].coords[0];
        a.table[hi] = grp.cyclic(hj - hk);
    }
    const Matrix usym = symmetry_unitary(a).matrix();
    rep.checks.push_back({"exponential equals the relation-conditional translation",
                          Matrix::max_abs_diff(u, usym) <= 1e-9,
                          Matrix::max_abs_diff(u, usym), 1e-9});

    {
        const Matrix comm = ptot * u - u * ptot;
        rep.checks.push_back({"total momentum commutes with the conditional translation",
                              comm.max_abs() <= 1e-9, comm.max_abs(), 1e-9});
    }

    if (particles == 2 && j == 2 && k == 1) {
        // The two displayed orderings on every basis state |g, g+h>.
        const Matrix p1 = embed_at(momentum(n), {1}, sp).matrix();
        const Matrix u1 =
            embed_at(translation(KinSpace(grp, 1), grp.cyclic(1)).matrix(), {1}, sp)
                .matrix();
        double dev_first = 0.0, dev_second = 0.0;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                CVec e(sp.dim(), cd{0.0, 0.0});
                e[sp.config_index({grp.cyclic(g), grp.cyclic(g + h)})] = 1.0;
                const CVec lhs = u1.apply(usym.apply(e));
                CVec want(sp.dim(), cd{0.0, 0.0});
                want[sp.config_index({grp.cyclic(g + h + 1), grp.cyclic(g + 2 * h)})] =
                    1.0;
                dev_first = std::max(dev_first, max_abs_diff(lhs, want));

                const CVec rhs = usym.apply(u1.apply(e));
                CVec want2(sp.dim(), cd{0.0, 0.0});
                want2[sp.config_index({grp.cyclic(g + h), grp.cyclic(g + 2 * h - 1)})] =
                    1.0;
                dev_second = std::max(dev_second, max_abs_diff(rhs, want2));
            }
        rep.checks.push_back({"shift-then-translate acts as |g,g+h> -> |g+h+1,g+2h>",
                              dev_first <= 1e-10, dev_first, 1e-10});
        rep.checks.push_back({"translate-then-shift acts as |g,g+h> -> |g+h,g+2h-1>",
                              dev_second <= 1e-10, dev_second, 1e-10});
        const Matrix comm = p1 * usym - usym * p1;
        rep.checks.push_back({"single-particle momentum fails to commute",
                              comm.max_abs() > 1e-6, comm.max_abs(), 1e-6});
    }
    return rep;
}

namespace {

// (chi0, chi1) both nontrivial such that chi1 takes a value chi0 never
// takes; exists iff gcd(c0,n) does not divide gcd(c1,n) for some pair.
std::optional<std::pair<int, int>> swap_character_pair(int n) {
    for (int c0 = 1; c0 < n; ++c0)
        for (int c1 = 1; c1 < n; ++c1) {
            if (c0 == c1) continue;
            const int d0 = std::gcd(c0, n);
            const int d1 = std::gcd(c1, n);
            if (d1 % d0 != 0) return std::make_pair(c0, c1);
        }
    return std::nullopt;
}

}  // namespace

ChainReport preservation_chain_suite(int n, std::uint64_t seed) {
    const FiniteAbelianGroup grp({n});
    const KinSpace sp(grp, 2);
    auto rng = rnd::make_rng(seed);
    ChainReport rep;

    // Invariant-algebra unitaries commute with every symmetry element.
    {
        double worst = 0.0;
        for (int s = 0; s < 5; ++s) {
            const Operator w = to_config(Operator(
                sp, Basis::Relational, rnd::random_invariant_unitary(sp, rng)));
            for (int t = 0; t < 5; ++t) {
                const Operator u = symmetry_unitary(SymmetryAssignment::random(sp, rng));
                const Matrix comm = w.matrix() * u.matrix() - u.matrix() * w.matrix();
                worst = std::max(worst, comm.max_abs());
            }
        }
        rep.checks.push_back({"invariant-algebra unitaries commute with sampled "
                              "symmetry elements",
                              worst <= 1e-10, worst, 1e-10});
    }

    // They therefore preserve observational equivalence...
    {
        bool ok = true;
        for (int s = 0; s < 3; ++s) {
            const Operator w = to_config(Operator(
                sp, Basis::Relational, rnd::random_invariant_unitary(sp, rng)));
            ok = ok && is_oe_preserving(w);
        }
        rep.checks.push_back(
            {"invariant-algebra unitaries preserve observational equivalence",
             ok, ok ? 0.0 : 1.0, 0.0});
    }

    // ...and symmetry equivalence of sampled pairs.
    {
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) {
            const Operator w = to_config(Operator(
                sp, Basis::Relational, rnd::random_invariant_unitary(sp, rng)));
            const DensityMatrix rho =
                DensityMatrix(sp, Basis::Config, rnd::random_density(sp.dim(), rng));
            const DensityMatrix sigma =
                apply_symmetry(SymmetryAssignment::random(sp, rng), rho);
            const auto conj = [&](const DensityMatrix& x) {
                return DensityMatrix(sp, Basis::Config,
                                     w.matrix() * x.matrix() * w.matrix().adjoint());
            };
            const auto verdict = symmetry_equivalent_bruteforce(conj(rho), conj(sigma));
            ok = verdict.kind == EquivKind::SymmetryEquiv;
        }
        rep.checks.push_back(
            {"invariant-algebra unitaries preserve symmetry equivalence "
             "(exhaustive witness search)",
             ok, ok ? 0.0 : 1.0, 0.0});
    }

    const auto pair = swap_character_pair(n);
    if (!pair)
        throw InvalidArgument("no character pair with a missed value exists for n=" +
                              std::to_string(n));
    const Character chi0 = grp.character_at(static_cast<std::size_t>(pair->first));
    const Character chi1 = grp.character_at(static_cast<std::size_t>(pair->second));
    const Operator w_swap = character_swap_unitary(sp, chi0, chi1);

    rep.checks.push_back({"character swap preserves the invariant algebra",
                          is_oe_preserving(to_config(w_swap)),
                          is_oe_preserving(to_config(w_swap)) ? 0.0 : 1.0, 0.0});

    // The counterexample pair: coherence between the trivial sector and chi1,
    // moved by a symmetry whose phase chi1(g) lies outside chi0's range.
    {
        const std::size_t h0 = 0;
        CVec phi(sp.dim(), cd{0.0, 0.0});
        const double w = 1.0 / std::sqrt(2.0);
        phi[sp.rel_index(h0, 0)] = w;
        phi[sp.rel_index(h0, grp.character_index(chi1))] = w;
        const DensityMatrix rho =
            to_config(DensityMatrix(sp, Basis::Relational, outer(phi, phi)));

        // Pick g with chi1(g) outside the value set of chi0.
        std::optional<GroupElement> g_out;
        for (std::size_t gi = 0; gi < grp.order() && !g_out; ++gi) {
            const cd v1 = grp.char_value(chi1, grp.element_at(gi));
            bool taken = false;
            for (std::size_t gj = 0; gj < grp.order(); ++gj)
                if (std::abs(v1 - grp.char_value(chi0, grp.element_at(gj))) < 1e-9)
                    taken = true;
            if (!taken) g_out = grp.element_at(gi);
        }
        SymmetryAssignment a = SymmetryAssignment::all_identity(sp);
        a.table[h0] = *g_out;
        const DensityMatrix sigma = apply_symmetry(a, rho);

        const auto before = symmetry_equivalent_bruteforce(rho, sigma);
        rep.checks.push_back({"counterexample pair starts symmetry-equivalent",
                              before.kind == EquivKind::SymmetryEquiv,
                              before.kind == EquivKind::SymmetryEquiv ? 0.0 : 1.0, 0.0});

        const Matrix ws = to_config(w_swap).matrix();
        const auto conj = [&](const DensityMatrix& x) {
            return DensityMatrix(sp, Basis::Config, ws * x.matrix() * ws.adjoint());
        };
        const auto after = symmetry_equivalent_bruteforce(conj(rho), conj(sigma));
        rep.checks.push_back(
            {"swap images admit no symmetry witness (exhaustive search)",
             after.kind != EquivKind::SymmetryEquiv,
             after.kind != EquivKind::SymmetryEquiv ? 0.0 : 1.0, 0.0});
        rep.checks.push_back({"swap images remain observationally equivalent",
                              after.kind == EquivKind::ObservationalEquiv,
                              after.kind == EquivKind::ObservationalEquiv ? 0.0 : 1.0,
                              0.0});
    }

    // Aligned-block dynamics: OE-preserving unitaries that keep the aligned
    // slice invariant act monomially on it; non-monomial blocks break
    // OE-preservation. With particle 1 most significant, the aligned slice
    // (particle 1 at the origin) is exactly the first index block.
    {
        const std::size_t rdim = sp.dim() / grp.order();
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        bool positive_ok = true;
        for (int s = 0; s < 3; ++s) {
            // Relation permutation with per-relation phases, lifted to the
            // full space; preserves the invariant-algebra pattern and the
            // aligned slice.
            std::vector<std::size_t> perm(sp.sector_count());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Matrix wrel(sp.dim(), sp.dim());
            for (std::size_t h = 0; h < sp.sector_count(); ++h) {
                const cd phase = std::polar(1.0, angle(rng));
                for (std::size_t chi = 0; chi < grp.order(); ++chi)
                    wrel(sp.rel_index(perm[h], chi), sp.rel_index(h, chi)) = phase;
            }
            const Operator w = to_config(Operator(sp, Basis::Relational, wrel));
            if (!is_oe_preserving(w)) positive_ok = false;
            Matrix block(rdim, rdim);
            for (std::size_t y = 0; y < rdim; ++y)
                for (std::size_t x = 0; x < rdim; ++x) block(y, x) = w.matrix()(y, x);
            if (!is_monomial(block)) positive_ok = false;
        }
        rep.checks.push_back(
            {"relation permutations with phases are OE-preserving and reduce to "
             "monomial blocks",
             positive_ok, positive_ok ? 0.0 : 1.0, 0.0});

        bool negative_ok = true;
        for (int s = 0; s < 3; ++s) {
            // Lift a generic (non-monomial) block over the aligned slice.
            const Matrix v = rnd::random_unitary(rdim, rng);
            if (is_monomial(v)) continue;
            Matrix wfull = Matrix::identity(sp.dim());
            for (std::size_t y = 0; y < rdim; ++y)
                for (std::size_t x = 0; x < rdim; ++x) wfull(y, x) = v(y, x);
            if (is_oe_preserving(Operator(sp, Basis::Config, wfull)))
                negative_ok = false;
        }
        rep.checks.push_back(
            {"generic aligned-block unitaries break OE-preservation",
             negative_ok, negative_ok ? 0.0 : 1.0, 0.0});
    }

    return rep;
}

}  // namespace gframe
