#include "gframe/relframes.hpp"

#include <cmath>
#include <numbers>

#include "gframe/alignment.hpp"

namespace gframe {

namespace {

std::vector<int> complement_particles(int n, int frame) {
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if (p != frame) out.push_back(p);
    return out;
}

void check_frame(const KinSpace& sp, int frame) {
    if (sp.particles() < 2)
        throw InvalidArgument("frame reduction needs at least 2 particles");
    if (frame < 1 || frame > sp.particles())
        throw InvalidArgument("frame particle out of range");
}

// Full-space config index with the frame slot pinned and the complement
// slots running over the reduced space in ascending particle order.
std::vector<std::size_t> slice_indices(const KinSpace& sp, int frame,
                                       const GroupElement& g) {
    const KinSpace red = sp.complement();
    const auto parts = complement_particles(sp.particles(), frame);
    std::vector<std::size_t> idx(red.dim());
    std::vector<GroupElement> full(static_cast<std::size_t>(sp.particles()),
                                   sp.group().identity());
    for (std::size_t x = 0; x < red.dim(); ++x) {
        const auto xc = red.config_at(x);
        full[static_cast<std::size_t>(frame - 1)] = g;
        for (std::size_t k = 0; k < parts.size(); ++k)
            full[static_cast<std::size_t>(parts[k] - 1)] = xc[k];
        idx[x] = sp.config_index(full);
    }
    return idx;
}

}  // namespace

ReductionMap schrodinger_reduction(const KinSpace& space, int frame,
                                   const GroupElement& g) {
    check_frame(space, frame);
    space.group().check_element(g);
    const KinSpace red = space.complement();
    const double w = std::sqrt(static_cast<double>(space.group().order()));
    Matrix m(red.dim(), space.dim());
    const auto idx = slice_indices(space, frame, g);
    for (std::size_t x = 0; x < red.dim(); ++x) m(x, idx[x]) = w;
    return ReductionMap{ReductionKind::Schrodinger, frame, g, space, red,
                        std::move(m)};
}

ReductionMap heisenberg_reduction(const KinSpace& space, int frame,
                                  const GroupElement& g) {
    check_frame(space, frame);
    space.group().check_element(g);
    const ReductionMap rs = schrodinger_reduction(space, frame, g);
    const Operator t = trivialize(space, frame);
    return ReductionMap{ReductionKind::Heisenberg, frame, g, space, rs.reduced,
                        rs.matrix * t.matrix()};
}

Matrix reduction_inverse(const ReductionMap& r) {
    // Schroedinger: sqrt(|G|) Pi_phys (|g>_frame tensor 1). The Heisenberg
    // map agrees with the orientation-e Schroedinger map on its physical
    // domain, so its inverse is the orientation-e inverse (g-independent).
    const KinSpace& sp = r.full;
    const auto& grp = sp.group();
    const GroupElement orient =
        r.kind == ReductionKind::Heisenberg ? grp.identity() : r.orientation;
    const double w = 1.0 / std::sqrt(static_cast<double>(grp.order()));
    Matrix m(sp.dim(), r.reduced.dim());
    const auto parts = complement_particles(sp.particles(), r.frame);
    for (std::size_t x = 0; x < r.reduced.dim(); ++x) {
        const auto xc = r.reduced.config_at(x);
        for (std::size_t gi = 0; gi < grp.order(); ++gi) {
            const GroupElement t = grp.element_at(gi);
            std::vector<GroupElement> full(static_cast<std::size_t>(sp.particles()),
                                           grp.identity());
            full[static_cast<std::size_t>(r.frame - 1)] = grp.mul(t, orient);
            for (std::size_t k = 0; k < parts.size(); ++k)
                full[static_cast<std::size_t>(parts[k] - 1)] = grp.mul(t, xc[k]);
            m(sp.config_index(full), x) += w;
        }
    }
    return m;
}

StateVector reduce_S(const StateVector& psi, int frame, const GroupElement& g,
                     double phys_tol) {
    check_frame(psi.space(), frame);
    require_same_basis(psi.basis(), Basis::Config, "reduce");
    const double resid = nonphysical_residual(psi);
    if (resid > phys_tol)
        throw NotPhysical("input has nonphysical component of norm " +
                          std::to_string(resid));
    const KinSpace& sp = psi.space();
    const KinSpace red = sp.complement();
    const double w = std::sqrt(static_cast<double>(sp.group().order()));
    const auto idx = slice_indices(sp, frame, g);
    CVec out(red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x) out[x] = w * psi.amplitudes()[idx[x]];
    return StateVector(red, Basis::Config, std::move(out));
}

StateVector reduce_S_inverse(const StateVector& phi, const KinSpace& full, int frame,
                             const GroupElement& g) {
    check_frame(full, frame);
    require_same_basis(phi.basis(), Basis::Config, "reduce inverse");
    require_same_frame(phi.space(), full.complement(), "reduce inverse");
    const auto& grp = full.group();
    const auto parts = complement_particles(full.particles(), frame);
    const double w = 1.0 / std::sqrt(static_cast<double>(grp.order()));
    CVec out(full.dim(), cd{0.0, 0.0});
    std::vector<GroupElement> cfg(static_cast<std::size_t>(full.particles()),
                                  grp.identity());
    for (std::size_t x = 0; x < phi.space().dim(); ++x) {
        const cd amp = phi.amplitudes()[x];
        if (amp == cd{0.0, 0.0}) continue;
        const auto xc = phi.space().config_at(x);
        for (std::size_t gi = 0; gi < grp.order(); ++gi) {
            const GroupElement t = grp.element_at(gi);
            cfg[static_cast<std::size_t>(frame - 1)] = grp.mul(t, g);
            for (std::size_t k = 0; k < parts.size(); ++k)
                cfg[static_cast<std::size_t>(parts[k] - 1)] = grp.mul(t, xc[k]);
            out[full.config_index(cfg)] += w * amp;
        }
    }
    return StateVector(full, Basis::Config, std::move(out));
}

Operator trivialize(const KinSpace& space, int frame) {
    check_frame(space, frame);
    const auto& grp = space.group();
    Matrix m(space.dim(), space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        auto cfg = space.config_at(idx);
        const GroupElement shift =
            grp.inv(cfg[static_cast<std::size_t>(frame - 1)]);
        for (int p = 0; p < space.particles(); ++p)
            if (p != frame - 1)
                cfg[static_cast<std::size_t>(p)] =
                    grp.mul(shift, cfg[static_cast<std::size_t>(p)]);
        m(space.config_index(cfg), idx) = 1.0;
    }
    return Operator(space, Basis::Config, std::move(m));
}

StateVector reduce_H(const StateVector& psi, int frame, const GroupElement& g,
                     double phys_tol) {
    check_frame(psi.space(), frame);
    require_same_basis(psi.basis(), Basis::Config, "reduce");
    const double resid = nonphysical_residual(psi);
    if (resid > phys_tol)
        throw NotPhysical("input has nonphysical component of norm " +
                          std::to_string(resid));
    const KinSpace& sp = psi.space();
    const Operator t = trivialize(sp, frame);
    const CVec shifted = t.matrix().apply(psi.amplitudes());
    const KinSpace red = sp.complement();
    const double w = std::sqrt(static_cast<double>(sp.group().order()));
    const auto idx = slice_indices(sp, frame, g);
    CVec out(red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x) out[x] = w * shifted[idx[x]];
    return StateVector(red, Basis::Config, std::move(out));
}

Matrix aligned_embedding_matrix(const KinSpace& space, int frame,
                                const GroupElement& g) {
    const ReductionMap r = schrodinger_reduction(space, frame, g);
    // |g>_frame tensor R: lift each reduced row back to the pinned slice.
    Matrix m(space.dim(), space.dim());
    const auto idx = slice_indices(space, frame, g);
    for (std::size_t x = 0; x < r.reduced.dim(); ++x)
        for (std::size_t y = 0; y < space.dim(); ++y)
            m(idx[x], y) = r.matrix(x, y);
    return m;
}

Operator relativize(const Matrix& f, const KinSpace& space, int frame,
                    const GroupElement& g) {
    check_frame(space, frame);
    const KinSpace red = space.complement();
    if (f.rows() != red.dim() || f.cols() != red.dim())
        throw InvalidArgument("relativize: observable shape does not match complement");
    // |g><g|_frame tensor f, then the coherent-average sandwich times |G|.
    Matrix pin(space.group().order(), space.group().order());
    pin(space.group().element_index(g), space.group().element_index(g)) = 1.0;
    std::vector<int> slots = {frame};
    const auto rest = complement_particles(space.particles(), frame);
    slots.insert(slots.end(), rest.begin(), rest.end());
    const Operator a = embed_at(pin.kron(f), slots, space);
    const Operator proj = project_phys(a);
    return proj * cd{static_cast<double>(space.group().order()), 0.0};
}

Operator frame_change(const KinSpace& space, int i, const GroupElement& gi, int j,
                      const GroupElement& gj) {
    check_frame(space, i);
    check_frame(space, j);
    if (i == j) throw InvalidArgument("frame change needs distinct frames");
    const auto& grp = space.group();
    grp.check_element(gi);
    grp.check_element(gj);
    const KinSpace red = space.complement();

    const auto dom = complement_particles(space.particles(), i);
    const auto cod = complement_particles(space.particles(), j);
    auto pos_in = [](const std::vector<int>& ps, int particle) {
        for (std::size_t k = 0; k < ps.size(); ++k)
            if (ps[k] == particle) return k;
        throw InvalidArgument("particle not in slot list");
    };
    const std::size_t dom_j = pos_in(dom, j);
    const std::size_t cod_i = pos_in(cod, i);

    // For each domain configuration x the bra picks the unique g with
    // g x_j = g_j; slot i of the codomain receives g g_i and the common
    // slots are translated by g.
    Matrix m(red.dim(), red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x) {
        const auto xc = red.config_at(x);
        const GroupElement g = grp.mul(gj, grp.inv(xc[dom_j]));
        std::vector<GroupElement> out(xc.size());
        out[cod_i] = grp.mul(g, gi);
        for (std::size_t k = 0; k < xc.size(); ++k) {
            if (k == dom_j) continue;
            out[pos_in(cod, dom[k])] = grp.mul(g, xc[k]);
        }
        m(red.config_index(out), x) = 1.0;
    }
    return Operator(red, Basis::Config, std::move(m));
}

Operator frame_change_compositional(const KinSpace& space, int i,
                                    const GroupElement& gi, int j,
                                    const GroupElement& gj) {
    if (i == j) throw InvalidArgument("frame change needs distinct frames");
    const ReductionMap rj = schrodinger_reduction(space, j, gj);
    const ReductionMap ri = schrodinger_reduction(space, i, gi);
    return Operator(space.complement(), Basis::Config,
                    rj.matrix * reduction_inverse(ri));
}

Operator transform_observable(const Operator& f_ibar, const KinSpace& space, int i,
                              const GroupElement& gi, int j, const GroupElement& gj) {
    require_same_frame(f_ibar.space(), space.complement(), "transform observable");
    require_same_basis(f_ibar.basis(), Basis::Config, "transform observable");
    const Operator v = frame_change(space, i, gi, j, gj);
    return Operator(space.complement(), Basis::Config,
                    v.matrix() * f_ibar.matrix() * v.matrix().adjoint());
}

namespace {
double physical_support_residual(const Operator& x) {
    return Operator::max_abs_diff(project_phys(x), x);
}
}  // namespace

Operator relational_embed(const Operator& x, int extra_particles, double phys_tol) {
    if (extra_particles < 1)
        throw InvalidArgument("relational embedding needs at least 1 extra particle");
    require_same_basis(x.basis(), Basis::Config, "relational embed");
    if (physical_support_residual(x) > phys_tol)
        throw NotPhysical("operator is not supported on the physical subspace");
    const KinSpace big(x.space().group(),
                       x.space().particles() + extra_particles);
    const std::size_t mdim = big.dim() / x.space().dim();
    Matrix ext(mdim, mdim);
    for (std::size_t k = 0; k < mdim; ++k) ext(k, k) = 1.0;
    const Matrix lifted = x.matrix().kron(ext);
    return project_phys(Operator(big, Basis::Config, lifted));
}

Operator relational_embed_product_form(const Operator& x, int extra_particles,
                                       double phys_tol) {
    if (extra_particles < 1)
        throw InvalidArgument("relational embedding needs at least 1 extra particle");
    require_same_basis(x.basis(), Basis::Config, "relational embed");
    if (physical_support_residual(x) > phys_tol)
        throw NotPhysical("operator is not supported on the physical subspace");
    const KinSpace tail(x.space().group(), extra_particles);
    const Operator ptail = physical_projector(tail);
    const KinSpace big(x.space().group(),
                       x.space().particles() + extra_particles);
    return Operator(big, Basis::Config, x.matrix().kron(ptail.matrix()));
}

DensityMatrix relational_trace(const DensityMatrix& rho, int traced_particles) {
    require_same_basis(rho.basis(), Basis::Config, "relational trace");
    const int total = rho.space().particles();
    if (traced_particles < 1 || traced_particles >= total)
        throw InvalidArgument("relational trace: bad particle split");
    const int keep_n = total - traced_particles;
    const DensityMatrix projected = project_phys(rho);
    std::vector<int> keep(static_cast<std::size_t>(keep_n));
    for (int p = 0; p < keep_n; ++p) keep[static_cast<std::size_t>(p)] = p + 1;
    const DensityMatrix traced = partial_trace(projected, keep);
    return project_phys(traced);
}

DensityMatrix relational_trace_pure(const StateVector& psi, int traced_particles) {
    require_same_basis(psi.basis(), Basis::Config, "relational trace");
    const int total = psi.space().particles();
    if (traced_particles < 1 || traced_particles >= total)
        throw InvalidArgument("relational trace: bad particle split");
    const int keep_n = total - traced_particles;
    const StateVector projected = project_phys(psi);
    std::vector<int> keep(static_cast<std::size_t>(keep_n));
    for (int p = 0; p < keep_n; ++p) keep[static_cast<std::size_t>(p)] = p + 1;
    const DensityMatrix traced = partial_trace_pure(projected, keep);
    return project_phys(traced);
}

StateVector paradox_state(int n, int a, int b, int c, double theta) {
    if (n < 2) throw InvalidArgument("paradox scenario needs n >= 2");
    if (a <= 0 || b <= 0 || c < 0 || a >= n || b >= n || c >= n)
        throw InvalidArgument("paradox scenario needs 0 < a,b < n and 0 <= c < n");
    if ((2 * a) % n == 0 || (2 * (a + b)) % n == 0)
        throw InvalidArgument(
            "degenerate paradox parameters: branches coincide (2a or 2(a+b) "
            "vanishes mod n)");
    const FiniteAbelianGroup grp({n});
    const KinSpace sp(grp, 3);
    CVec v(sp.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    const auto cfg = [&](long long g1, long long g2, long long g3) {
        return sp.config_index({grp.cyclic(g1), grp.cyclic(g2), grp.cyclic(g3)});
    };
    v[cfg(-a, b, c)] = w;
    v[cfg(a, -b, c)] = w * std::polar(1.0, theta);
    return StateVector(sp, Basis::Config, std::move(v));
}

ParadoxReport paradox_scenario(int n, int a, int b, int c, double theta,
                               double theta_prime) {
    ParadoxReport rep;
    rep.n = n;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.theta = theta;
    rep.theta_prime = theta_prime;
    rep.phases_distinct =
        std::abs(std::remainder(theta - theta_prime, 2.0 * std::numbers::pi)) > 1e-9;

    const StateVector psi = paradox_state(n, a, b, c, theta);
    const StateVector psi_prime_input = paradox_state(n, a, b, c, theta_prime);
    const KinSpace& sp = psi.space();
    const auto& grp = sp.group();

    rep.alignable = alignment_table(psi).has_value();

    // Aligned to particle 1 at the origin; closed form
    // |0>(|a+b>|a+c> + e^{i theta}|-a-b>|-a+c>)/sqrt(2).
    const PureAlignment aligned = align_pure(psi, 1, grp.identity());
    CVec expect(sp.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    const auto cfg = [&](long long g1, long long g2, long long g3) {
        return sp.config_index({grp.cyclic(g1), grp.cyclic(g2), grp.cyclic(g3)});
    };
    expect[cfg(0, a + b, a + c)] = w;
    expect[cfg(0, -a - b, -a + c)] = w * std::polar(1.0, theta);
    rep.aligned_form_deviation =
        max_abs_diff(aligned.aligned_full.amplitudes(), expect);
    rep.aligned_form_ok = rep.aligned_form_deviation < 1e-12;

    // Ordinary partial trace over particle 3 of the aligned state: the phase
    // must drop out.
    const PureAlignment aligned_prime = align_pure(psi_prime_input, 1, grp.identity());
    const DensityMatrix pt =
        partial_trace_pure(aligned.aligned_full, {1, 2});
    const DensityMatrix pt_prime =
        partial_trace_pure(aligned_prime.aligned_full, {1, 2});
    rep.partial_trace_difference = DensityMatrix::max_abs_diff(pt, pt_prime);
    rep.partial_trace_phase_independent = rep.partial_trace_difference < 1e-12;
    rep.partial_trace_state = pt.matrix();

    // Relational trace over particle 3 of the normalized physical
    // projection: the phase must survive.
    const auto trel_of_physical = [](const StateVector& input) {
        StateVector proj = project_phys(input);
        CVec v = proj.amplitudes();
        const double nrm = norm(v);
        kern::scal(v.size(), cd{1.0 / nrm, 0.0}, v.data());
        return relational_trace_pure(
            StateVector(input.space(), Basis::Config, std::move(v)), 1);
    };
    const DensityMatrix rt = trel_of_physical(psi);
    const DensityMatrix rt_prime = trel_of_physical(psi_prime_input);
    rep.relational_trace_difference = DensityMatrix::max_abs_diff(rt, rt_prime);
    rep.relational_trace_phase_dependent = rep.relational_trace_difference > 1e-3;
    rep.relational_trace_state = rt.matrix();
    rep.relational_trace_state_prime = rt_prime.matrix();
    return rep;
}

}  // namespace gframe
