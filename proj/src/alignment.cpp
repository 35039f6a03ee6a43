#include "gframe/alignment.hpp"

#include <cmath>

namespace gframe {

namespace {

// Shared sector scan: feed per-configuration diagonal weights, get the table.
std::optional<std::vector<GroupElement>> scan_sectors(
    const KinSpace& sp, const std::vector<double>& diag, double tol) {
    const auto& grp = sp.group();
    std::vector<GroupElement> table(sp.sector_count(), grp.identity());
    std::vector<bool> seen(sp.sector_count(), false);
    for (std::size_t idx = 0; idx < sp.dim(); ++idx) {
        if (diag[idx] <= tol) continue;
        const auto [h, g] = sp.sector_of(sp.config_at(idx));
        const std::size_t hi = grp.tuple_index(h);
        if (seen[hi] && !(table[hi] == g)) return std::nullopt;
        table[hi] = g;
        seen[hi] = true;
    }
    return table;
}

// Witness assignment aligning a state with sector table `table` to frame i
// in orientation g: each supported sector's configuration has particle i at
// h_{i-1} g(h); translate that to g.
SymmetryAssignment witness_assignment(const KinSpace& sp,
                                      const std::vector<GroupElement>& table,
                                      int frame, const GroupElement& g) {
    const auto& grp = sp.group();
    if (frame < 1 || frame > sp.particles())
        throw InvalidArgument("frame particle out of range");
    grp.check_element(g);
    SymmetryAssignment a{sp, std::vector<GroupElement>(sp.sector_count())};
    for (std::size_t hi = 0; hi < sp.sector_count(); ++hi) {
        const auto h = grp.tuple_at(hi, sp.particles() - 1);
        const GroupElement pos_i =
            frame == 1 ? table[hi]
                       : grp.mul(h[static_cast<std::size_t>(frame - 2)], table[hi]);
        a.table[hi] = grp.mul(g, grp.inv(pos_i));
    }
    return a;
}

std::vector<int> complement_particles(int n, int frame) {
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if (p != frame) out.push_back(p);
    return out;
}

// Full-space index of (frame slot = g, complement slots = reduced config x).
std::vector<std::size_t> frame_slice_indices(const KinSpace& sp, int frame,
                                             const GroupElement& g) {
    const KinSpace red = sp.complement();
    const auto parts = complement_particles(sp.particles(), frame);
    const auto& grp = sp.group();
    std::vector<std::size_t> idx(red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x) {
        const auto xc = red.config_at(x);
        std::vector<GroupElement> full(static_cast<std::size_t>(sp.particles()),
                                       grp.identity());
        full[static_cast<std::size_t>(frame - 1)] = g;
        for (std::size_t k = 0; k < parts.size(); ++k)
            full[static_cast<std::size_t>(parts[k] - 1)] = xc[k];
        idx[x] = sp.config_index(full);
    }
    return idx;
}

}  // namespace

std::optional<std::vector<GroupElement>> alignment_table(const DensityMatrix& rho,
                                                         double support_tol) {
    require_same_basis(rho.basis(), Basis::Config, "alignment test");
    std::vector<double> diag(rho.space().dim());
    for (std::size_t i = 0; i < diag.size(); ++i)
        diag[i] = std::abs(rho.matrix()(i, i));
    return scan_sectors(rho.space(), diag, support_tol);
}

std::optional<std::vector<GroupElement>> alignment_table(const StateVector& psi,
                                                         double support_tol) {
    require_same_basis(psi.basis(), Basis::Config, "alignment test");
    std::vector<double> diag(psi.space().dim());
    for (std::size_t i = 0; i < diag.size(); ++i)
        diag[i] = std::norm(psi.amplitudes()[i]);
    return scan_sectors(psi.space(), diag, support_tol);
}

bool is_alignable(const DensityMatrix& rho, double support_tol) {
    return alignment_table(rho, support_tol).has_value();
}

AlignmentResult align(const DensityMatrix& rho, int frame, const GroupElement& g,
                      double support_tol) {
    const auto table = alignment_table(rho, support_tol);
    if (!table)
        throw NotAlignable("state has a relation sector with support at two positions");
    const KinSpace& sp = rho.space();
    if (sp.particles() < 2)
        throw InvalidArgument("alignment needs at least 2 particles");
    const SymmetryAssignment a = witness_assignment(sp, *table, frame, g);
    const DensityMatrix moved = apply_symmetry(a, rho);

    // Contract the frame slot, pinned at g.
    const KinSpace red = sp.complement();
    const auto idx = frame_slice_indices(sp, frame, g);
    Matrix m(red.dim(), red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x)
        for (std::size_t y = 0; y < red.dim(); ++y)
            m(x, y) = moved.matrix()(idx[x], idx[y]);
    return AlignmentResult{frame, g, DensityMatrix(red, Basis::Config, std::move(m)),
                           a};
}

PureAlignment align_pure(const StateVector& psi, int frame, const GroupElement& g,
                         double support_tol) {
    const auto table = alignment_table(psi, support_tol);
    if (!table)
        throw NotAlignable("state has a relation sector with support at two positions");
    const KinSpace& sp = psi.space();
    if (sp.particles() < 2)
        throw InvalidArgument("alignment needs at least 2 particles");
    const SymmetryAssignment a = witness_assignment(sp, *table, frame, g);
    StateVector moved = apply_symmetry(a, psi);

    const KinSpace red = sp.complement();
    const auto idx = frame_slice_indices(sp, frame, g);
    CVec reduced(red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x)
        reduced[x] = moved.amplitudes()[idx[x]];
    return PureAlignment{std::move(moved), std::move(reduced), a};
}

Operator qrf_transform_aligned(const KinSpace& space, int i, int j) {
    const int n = space.particles();
    if (n < 2) throw InvalidArgument("QRF transformation needs at least 2 particles");
    if (i == j) throw InvalidArgument("QRF transformation needs distinct frames");
    if (i < 1 || i > n || j < 1 || j > n)
        throw InvalidArgument("frame particle out of range");
    const auto& grp = space.group();
    const KinSpace red = space.complement();

    // Domain slots: complement of i; codomain slots: complement of j. The
    // conditional-translation factor inverts slot j's position and translates
    // the rest by the same inverse; the swap then relabels slot j as slot i.
    const auto dom = complement_particles(n, i);
    const auto cod = complement_particles(n, j);
    auto pos_in = [](const std::vector<int>& ps, int particle) {
        for (std::size_t k = 0; k < ps.size(); ++k)
            if (ps[k] == particle) return k;
        throw InvalidArgument("particle not in slot list");
    };
    const std::size_t dom_j = pos_in(dom, j);

    Matrix m(red.dim(), red.dim());
    for (std::size_t x = 0; x < red.dim(); ++x) {
        const auto xc = red.config_at(x);
        const GroupElement shift = grp.inv(xc[dom_j]);
        std::vector<GroupElement> out(xc.size());
        out[pos_in(cod, i)] = shift;  // the inverted frame position
        for (std::size_t k = 0; k < xc.size(); ++k) {
            if (k == dom_j) continue;
            out[pos_in(cod, dom[k])] = grp.mul(shift, xc[k]);
        }
        m(red.config_index(out), x) = 1.0;
    }
    return Operator(red, Basis::Config, std::move(m));
}

SymmetryAssignment center_of_mass_assignment(const KinSpace& space,
                                             const std::vector<double>& masses) {
    const auto& grp = space.group();
    if (!grp.is_cyclic())
        throw InvalidArgument("center-of-mass assignment requires a cyclic group, got " +
                              grp.name());
    if (masses.size() != static_cast<std::size_t>(space.particles()))
        throw InvalidArgument("need one mass per particle");
    double total = 0.0;
    for (double m : masses) {
        if (m < 0.0) throw InvalidArgument("masses must be non-negative");
        total += m;
    }
    if (total <= 0.0) throw InvalidArgument("total mass must be positive");

    SymmetryAssignment a{space, std::vector<GroupElement>(space.sector_count())};
    for (std::size_t hi = 0; hi < space.sector_count(); ++hi) {
        const auto h = grp.tuple_at(hi, space.particles() - 1);
        double s = 0.0;
        for (std::size_t k = 0; k < h.size(); ++k)
            s += masses[k + 1] * static_cast<double>(h[k].coords[0]);
        a.table[hi] = grp.cyclic(-static_cast<long long>(std::floor(s / total)));
    }
    return a;
}

}  // namespace gframe
