#include "gframe/symmetry.hpp"

#include <cmath>
#include <limits>

#include "gframe/eigen.hpp"

namespace gframe {

namespace {

Matrix permute_rows(const Matrix& x, const std::vector<std::size_t>& perm) {
    Matrix y(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const cd* src = x.data() + r * x.cols();
        cd* dst = y.data() + perm[r] * x.cols();
        for (std::size_t c = 0; c < x.cols(); ++c) dst[c] = src[c];
    }
    return y;
}

Matrix permute_cols(const Matrix& x, const std::vector<std::size_t>& perm) {
    Matrix y(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) y(r, perm[c]) = x(r, c);
    return y;
}

// U x U^dagger for a permutation unitary.
Matrix conjugate_by_permutation(const Matrix& x, const std::vector<std::size_t>& perm) {
    return permute_cols(permute_rows(x, perm), perm);
}

CVec permute_vec(const CVec& v, const std::vector<std::size_t>& perm) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

// Walks every assignment table in enumeration order (sector 0 most
// significant). Callback gets the table; return false from it to stop.
template <typename F>
void for_each_assignment(const KinSpace& space, std::uint64_t cap, F&& fn) {
    const auto size = symmetry_group_size(space);
    if (!size || *size > cap)
        throw CapExceeded("symmetry group of " + space.name() +
                          " exceeds enumeration cap " + std::to_string(cap));
    const std::size_t sectors = space.sector_count();
    const std::size_t q = space.group().order();
    std::vector<std::size_t> digits(sectors, 0);
    SymmetryAssignment a{space, std::vector<GroupElement>(
                                    sectors, space.group().identity())};
    while (true) {
        for (std::size_t s = 0; s < sectors; ++s)
            a.table[s] = space.group().element_at(digits[s]);
        if (!fn(const_cast<const SymmetryAssignment&>(a))) return;
        std::size_t s = sectors;
        while (s-- > 0) {
            if (++digits[s] < q) break;
            digits[s] = 0;
            if (s == 0) return;
        }
    }
}

}  // namespace

SymmetryAssignment SymmetryAssignment::all_identity(const KinSpace& space) {
    return {space, std::vector<GroupElement>(space.sector_count(),
                                             space.group().identity())};
}

SymmetryAssignment SymmetryAssignment::constant(const KinSpace& space,
                                                const GroupElement& g) {
    space.group().check_element(g);
    return {space, std::vector<GroupElement>(space.sector_count(), g)};
}

SymmetryAssignment SymmetryAssignment::random(const KinSpace& space,
                                              std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, space.group().order() - 1);
    std::vector<GroupElement> table;
    table.reserve(space.sector_count());
    for (std::size_t s = 0; s < space.sector_count(); ++s)
        table.push_back(space.group().element_at(pick(rng)));
    return {space, std::move(table)};
}

void check_assignment(const SymmetryAssignment& a) {
    if (a.table.size() != a.space.sector_count())
        throw InvalidArgument("assignment table length " + std::to_string(a.table.size()) +
                              " does not match sector count " +
                              std::to_string(a.space.sector_count()));
    for (const auto& g : a.table) a.space.group().check_element(g);
}

std::vector<std::size_t> assignment_permutation(const SymmetryAssignment& a) {
    check_assignment(a);
    const KinSpace& sp = a.space;
    std::vector<std::size_t> perm(sp.dim());
    for (std::size_t idx = 0; idx < sp.dim(); ++idx) {
        const auto cfg = sp.config_at(idx);
        const auto [h, g] = sp.sector_of(cfg);
        const GroupElement t = a.table[sp.group().tuple_index(h)];
        perm[idx] = sp.config_index(sp.config_from_sector(h, sp.group().mul(t, g)));
    }
    return perm;
}

Operator symmetry_unitary(const SymmetryAssignment& a) {
    const auto perm = assignment_permutation(a);
    Matrix m(a.space.dim(), a.space.dim());
    for (std::size_t j = 0; j < a.space.dim(); ++j) m(perm[j], j) = 1.0;
    return Operator(a.space, Basis::Config, std::move(m));
}

StateVector apply_symmetry(const SymmetryAssignment& a, const StateVector& psi) {
    require_same_frame(a.space, psi.space(), "apply symmetry");
    require_same_basis(psi.basis(), Basis::Config, "apply symmetry");
    return StateVector(psi.space(), Basis::Config,
                       permute_vec(psi.amplitudes(), assignment_permutation(a)));
}

DensityMatrix apply_symmetry(const SymmetryAssignment& a, const DensityMatrix& rho) {
    require_same_frame(a.space, rho.space(), "apply symmetry");
    require_same_basis(rho.basis(), Basis::Config, "apply symmetry");
    return DensityMatrix(
        rho.space(), Basis::Config,
        conjugate_by_permutation(rho.matrix(), assignment_permutation(a)));
}

std::optional<std::uint64_t> symmetry_group_size(const KinSpace& space) {
    const std::uint64_t q = space.group().order();
    std::uint64_t size = 1;
    for (std::size_t s = 0; s < space.sector_count(); ++s) {
        if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        size *= q;
    }
    return size;
}

Operator physical_projector(const KinSpace& space) {
    Matrix m(space.dim(), space.dim());
    const double w = 1.0 / static_cast<double>(space.group().order());
    for (std::size_t gi = 0; gi < space.group().order(); ++gi) {
        const auto perm = translation_permutation(space, space.group().element_at(gi));
        for (std::size_t j = 0; j < space.dim(); ++j) m(perm[j], j) += w;
    }
    return Operator(space, Basis::Config, std::move(m));
}

StateVector project_phys(const StateVector& psi) {
    require_same_basis(psi.basis(), Basis::Config, "project_phys");
    const KinSpace& sp = psi.space();
    CVec out(sp.dim(), cd{0.0, 0.0});
    const double w = 1.0 / static_cast<double>(sp.group().order());
    for (std::size_t gi = 0; gi < sp.group().order(); ++gi) {
        const auto perm = translation_permutation(sp, sp.group().element_at(gi));
        for (std::size_t j = 0; j < sp.dim(); ++j)
            out[perm[j]] += w * psi.amplitudes()[j];
    }
    return StateVector(sp, Basis::Config, std::move(out));
}

namespace {
Matrix phys_sandwich(const KinSpace& sp, const Matrix& x) {
    const double w = 1.0 / static_cast<double>(sp.group().order());
    Matrix left(x.rows(), x.cols());
    for (std::size_t gi = 0; gi < sp.group().order(); ++gi) {
        const auto perm = translation_permutation(sp, sp.group().element_at(gi));
        const Matrix px = permute_rows(x, perm);
        kern::axpy(left.size(), cd{w, 0.0}, px.data(), left.data());
    }
    Matrix out(x.rows(), x.cols());
    for (std::size_t gi = 0; gi < sp.group().order(); ++gi) {
        const auto perm = translation_permutation(sp, sp.group().element_at(gi));
        const Matrix lp = permute_cols(left, perm);
        kern::axpy(out.size(), cd{w, 0.0}, lp.data(), out.data());
    }
    return out;
}
}  // namespace

Operator project_phys(const Operator& x) {
    if (x.basis() == Basis::Config)
        return Operator(x.space(), Basis::Config, phys_sandwich(x.space(), x.matrix()));
    return to_relational(project_phys(to_config(x)));
}

DensityMatrix project_phys(const DensityMatrix& rho) {
    if (rho.basis() == Basis::Config)
        return DensityMatrix(rho.space(), Basis::Config,
                             phys_sandwich(rho.space(), rho.matrix()));
    return to_relational(project_phys(to_config(rho)));
}

double nonphysical_residual(const StateVector& psi) {
    const StateVector p = project_phys(to_config(psi));
    CVec diff = to_config(psi).amplitudes();
    kern::axpy(diff.size(), cd{-1.0, 0.0}, p.amplitudes().data(), diff.data());
    return norm(diff);
}

Matrix project_inv_matrix(const KinSpace& space, const Matrix& m, Basis basis) {
    Matrix qmat;
    Matrix rel = m;
    if (basis == Basis::Config) {
        qmat = relational_basis_matrix(space);
        rel = qmat.adjoint() * m * qmat;
    }
    const std::size_t q = space.group().order();
    Matrix out(rel.rows(), rel.cols());
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        for (std::size_t c = 0; c < rel.cols(); ++c) {
            const bool trivial_block = (r % q == 0) && (c % q == 0);
            if (trivial_block || r == c) out(r, c) = rel(r, c);
        }
    }
    if (basis == Basis::Relational) return out;
    return qmat * out * qmat.adjoint();
}

DensityMatrix project_inv(const DensityMatrix& rho) {
    return DensityMatrix(rho.space(), rho.basis(),
                         project_inv_matrix(rho.space(), rho.matrix(), rho.basis()));
}

DensityMatrix brute_force_twirl(const DensityMatrix& rho, std::uint64_t cap) {
    require_same_basis(rho.basis(), Basis::Config, "brute_force_twirl");
    const KinSpace& sp = rho.space();
    Matrix acc(sp.dim(), sp.dim());
    std::uint64_t count = 0;
    for_each_assignment(sp, cap, [&](const SymmetryAssignment& a) {
        const Matrix conj = conjugate_by_permutation(rho.matrix(), assignment_permutation(a));
        kern::axpy(acc.size(), cd{1.0, 0.0}, conj.data(), acc.data());
        ++count;
        return true;
    });
    acc *= cd{1.0 / static_cast<double>(count), 0.0};
    return DensityMatrix(sp, Basis::Config, std::move(acc));
}

Operator brute_force_unitary_average(const KinSpace& space, std::uint64_t cap) {
    Matrix acc(space.dim(), space.dim());
    std::uint64_t count = 0;
    for_each_assignment(space, cap, [&](const SymmetryAssignment& a) {
        const auto perm = assignment_permutation(a);
        for (std::size_t j = 0; j < space.dim(); ++j) acc(perm[j], j) += 1.0;
        ++count;
        return true;
    });
    acc *= cd{1.0 / static_cast<double>(count), 0.0};
    return Operator(space, Basis::Config, std::move(acc));
}

double invariant_pattern_violation(const Operator& a) {
    const Operator rel = to_relational(a);
    const std::size_t q = rel.space().group().order();
    double worst = 0.0;
    for (std::size_t r = 0; r < rel.space().dim(); ++r)
        for (std::size_t c = 0; c < rel.space().dim(); ++c) {
            const bool trivial_block = (r % q == 0) && (c % q == 0);
            if (trivial_block || r == c) continue;
            worst = std::max(worst, std::abs(rel.matrix()(r, c)));
        }
    return worst;
}

bool in_invariant_algebra(const Operator& a, double tol) {
    return invariant_pattern_violation(a) <= tol;
}

bool observationally_equivalent(const DensityMatrix& rho, const DensityMatrix& sigma,
                                double tol) {
    require_same_frame(rho.space(), sigma.space(), "observational equivalence");
    const DensityMatrix pr = project_inv(to_config(rho));
    const DensityMatrix ps = project_inv(to_config(sigma));
    return DensityMatrix::max_abs_diff(pr, ps) <= tol;
}

EquivalenceVerdict symmetry_equivalent_bruteforce(const DensityMatrix& rho,
                                                  const DensityMatrix& sigma,
                                                  std::uint64_t cap, double tol) {
    require_same_frame(rho.space(), sigma.space(), "symmetry equivalence");
    const KinSpace& sp = rho.space();
    const auto& grp = sp.group();
    const std::size_t q = grp.order();
    const Matrix r = to_relational(rho).matrix();
    const Matrix s = to_relational(sigma).matrix();

    // chi(g) lookup, chi and g by enumeration index.
    std::vector<cd> chi_val(q * q);
    for (std::size_t ci = 0; ci < q; ++ci)
        for (std::size_t gi = 0; gi < q; ++gi)
            chi_val[ci * q + gi] =
                grp.char_value(grp.character_at(ci), grp.element_at(gi));

    // Phase condition on every relational matrix element.
    auto matches = [&](const SymmetryAssignment& a) {
        std::vector<std::size_t> tg(a.table.size());
        for (std::size_t i = 0; i < a.table.size(); ++i)
            tg[i] = grp.element_index(a.table[i]);
        for (std::size_t row = 0; row < sp.dim(); ++row) {
            const auto [h, chi] = sp.rel_at(row);
            for (std::size_t col = 0; col < sp.dim(); ++col) {
                const auto [hp, chip] = sp.rel_at(col);
                const cd phase = chi_val[chi * q + tg[h]] *
                                 std::conj(chi_val[chip * q + tg[hp]]);
                if (std::abs(s(row, col) - phase * r(row, col)) > tol) return false;
            }
        }
        return true;
    };

    std::optional<SymmetryAssignment> witness;
    for_each_assignment(sp, cap, [&](const SymmetryAssignment& a) {
        if (!matches(a)) return true;
        witness = a;
        return false;
    });

    if (witness) return {EquivKind::SymmetryEquiv, std::move(witness)};
    if (observationally_equivalent(rho, sigma, tol))
        return {EquivKind::ObservationalEquiv, std::nullopt};
    return {EquivKind::Neither, std::nullopt};
}

bool purification_invariance_check(const DensityMatrix& rho, int samples,
                                   std::mt19937_64& rng, double tol) {
    const KinSpace& sp = rho.space();
    const DensityMatrix rc = to_config(rho);
    const HermitianEig eig = eig_hermitian(rc.matrix());
    const std::size_t d = sp.dim();

    // Eigenbasis purification with an ancilla of dimension dim(S):
    // |Psi> = sum_k sqrt(lambda_k) |psi_k>_S |k>_A, laid out as psi[i*d + k].
    CVec big(d * d, cd{0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
        if (eig.values[k] < 1e-12) continue;
        const double w = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < d; ++i) big[i * d + k] += w * eig.vectors(i, k);
    }

    auto invariant_under = [&](const SymmetryAssignment& a) {
        const auto perm = assignment_permutation(a);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (std::abs(big[perm[i] * d + k] - big[i * d + k]) > tol) return false;
        return true;
    };

    for (std::size_t gi = 0; gi < sp.group().order(); ++gi)
        if (!invariant_under(SymmetryAssignment::constant(sp, sp.group().element_at(gi))))
            return false;
    for (int s = 0; s < samples; ++s)
        if (!invariant_under(SymmetryAssignment::random(sp, rng))) return false;
    return true;
}

Operator character_swap_unitary(const KinSpace& space, const Character& chi0,
                                const Character& chi1) {
    const auto& grp = space.group();
    grp.check_character(chi0);
    grp.check_character(chi1);
    const std::size_t c0 = grp.character_index(chi0);
    const std::size_t c1 = grp.character_index(chi1);
    if (c0 == 0 || c1 == 0)
        throw InvalidArgument("character swap requires nontrivial characters");
    if (c0 == c1) throw InvalidArgument("character swap requires distinct characters");
    Matrix w = Matrix::identity(space.dim());
    for (std::size_t hi = 0; hi < space.sector_count(); ++hi) {
        const std::size_t a = space.rel_index(hi, c0);
        const std::size_t b = space.rel_index(hi, c1);
        w(a, a) = w(b, b) = 0.0;
        w(a, b) = w(b, a) = 1.0;
    }
    return Operator(space, Basis::Relational, std::move(w));
}

}  // namespace gframe
