#include "gframe/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "gframe/eigen.hpp"

namespace gframe {

// Implemented next to the eigensolver (eigen.cpp).
void density_positivity_check(const Matrix& m, double tol);

const char* basis_name(Basis b) {
    return b == Basis::Config ? "config" : "relational";
}

KinSpace::KinSpace(FiniteAbelianGroup group, int particles)
    : group_(std::move(group)), particles_(particles) {
    if (particles_ < 1) throw InvalidArgument("particle count must be >= 1");
    dim_ = 1;
    for (int i = 0; i < particles_; ++i) dim_ *= group_.order();
}

std::string KinSpace::name() const {
    return group_.name() + "^" + std::to_string(particles_);
}

std::size_t KinSpace::config_index(const std::vector<GroupElement>& cfg) const {
    if (cfg.size() != static_cast<std::size_t>(particles_))
        throw InvalidArgument("configuration has wrong particle count");
    std::size_t idx = 0;
    for (const auto& g : cfg) idx = idx * group_.order() + group_.element_index(g);
    return idx;
}

std::vector<GroupElement> KinSpace::config_at(std::size_t idx) const {
    if (idx >= dim_) throw InvalidArgument("configuration index out of range");
    std::vector<GroupElement> cfg(static_cast<std::size_t>(particles_));
    for (int p = particles_; p-- > 0;) {
        cfg[static_cast<std::size_t>(p)] = group_.element_at(idx % group_.order());
        idx /= group_.order();
    }
    return cfg;
}

std::size_t KinSpace::sector_count() const {
    return group_.tuple_count(particles_ - 1);
}

std::pair<std::vector<GroupElement>, GroupElement> KinSpace::sector_of(
    const std::vector<GroupElement>& cfg) const {
    if (cfg.size() != static_cast<std::size_t>(particles_))
        throw InvalidArgument("configuration has wrong particle count");
    const GroupElement g = cfg[0];
    const GroupElement ginv = group_.inv(g);
    std::vector<GroupElement> h(static_cast<std::size_t>(particles_ - 1));
    for (int i = 1; i < particles_; ++i)
        h[static_cast<std::size_t>(i - 1)] = group_.mul(cfg[static_cast<std::size_t>(i)], ginv);
    return {std::move(h), g};
}

std::vector<GroupElement> KinSpace::config_from_sector(
    const std::vector<GroupElement>& h, const GroupElement& g) const {
    if (h.size() != static_cast<std::size_t>(particles_ - 1))
        throw InvalidArgument("relation tuple has wrong length");
    std::vector<GroupElement> cfg(static_cast<std::size_t>(particles_));
    cfg[0] = g;
    for (int i = 1; i < particles_; ++i)
        cfg[static_cast<std::size_t>(i)] = group_.mul(h[static_cast<std::size_t>(i - 1)], g);
    return cfg;
}

std::size_t KinSpace::rel_index(std::size_t h_idx, std::size_t chi_idx) const {
    return h_idx * group_.order() + chi_idx;
}

std::pair<std::size_t, std::size_t> KinSpace::rel_at(std::size_t idx) const {
    return {idx / group_.order(), idx % group_.order()};
}

KinSpace KinSpace::complement() const {
    if (particles_ < 2)
        throw InvalidArgument("complement space requires at least 2 particles");
    return KinSpace(group_, particles_ - 1);
}

void require_same_frame(const KinSpace& a, const KinSpace& b, const char* op) {
    if (!(a == b))
        throw GroupMismatch(std::string(op) + ": spaces differ, " + a.name() + " vs " +
                            b.name());
}

void require_same_basis(Basis a, Basis b, const char* op) {
    if (a != b)
        throw BasisMismatch(std::string(op) + ": bases differ, " +
                            basis_name(a) + " vs " + basis_name(b));
}

Operator::Operator(KinSpace space, Basis basis, Matrix m)
    : space_(std::move(space)), basis_(basis), m_(std::move(m)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
        throw InvalidArgument("operator matrix shape does not match space dim " +
                              std::to_string(space_.dim()));
}

Operator Operator::operator+(const Operator& o) const {
    require_same_frame(space_, o.space_, "operator add");
    require_same_basis(basis_, o.basis_, "operator add");
    return Operator(space_, basis_, m_ + o.m_);
}

Operator Operator::operator-(const Operator& o) const {
    require_same_frame(space_, o.space_, "operator sub");
    require_same_basis(basis_, o.basis_, "operator sub");
    return Operator(space_, basis_, m_ - o.m_);
}

Operator Operator::operator*(const Operator& o) const {
    require_same_frame(space_, o.space_, "operator mul");
    require_same_basis(basis_, o.basis_, "operator mul");
    return Operator(space_, basis_, m_ * o.m_);
}

Operator Operator::operator*(cd s) const { return Operator(space_, basis_, m_ * s); }

Operator Operator::adjoint() const { return Operator(space_, basis_, m_.adjoint()); }

double Operator::max_abs_diff(const Operator& a, const Operator& b) {
    require_same_frame(a.space_, b.space_, "operator compare");
    require_same_basis(a.basis_, b.basis_, "operator compare");
    return Matrix::max_abs_diff(a.m_, b.m_);
}

StateVector::StateVector(KinSpace space, Basis basis, CVec v)
    : space_(std::move(space)), basis_(basis), v_(std::move(v)) {
    if (v_.size() != space_.dim())
        throw InvalidArgument("state vector length does not match space dim");
}

DensityMatrix::DensityMatrix(KinSpace space, Basis basis, Matrix m)
    : space_(std::move(space)), basis_(basis), m_(std::move(m)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
        throw InvalidArgument("density matrix shape does not match space dim");
}

void DensityMatrix::validate(double tol) const {
    if (!m_.is_hermitian(tol)) throw BadOperator("density matrix is not Hermitian");
    const double tr = trace_real();
    if (tr <= 0.0 || tr > 1.0 + tol)
        throw BadOperator("density matrix trace " + std::to_string(tr) +
                          " outside (0, 1]");
    density_positivity_check(m_, tol);
}

double DensityMatrix::max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_frame(a.space_, b.space_, "density compare");
    require_same_basis(a.basis_, b.basis_, "density compare");
    return Matrix::max_abs_diff(a.m_, b.m_);
}

std::vector<std::size_t> translation_permutation(const KinSpace& space,
                                                 const GroupElement& g) {
    const auto& grp = space.group();
    grp.check_element(g);
    // Single-particle permutation, then lift to N slots digit by digit.
    const std::size_t q = grp.order();
    std::vector<std::size_t> single(q);
    for (std::size_t j = 0; j < q; ++j)
        single[j] = grp.element_index(grp.mul(g, grp.element_at(j)));
    std::vector<std::size_t> perm(space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        std::size_t rest = idx, out = 0;
        std::size_t scale = space.dim();
        for (int p = 0; p < space.particles(); ++p) {
            scale /= q;
            const std::size_t digit = rest / scale;
            rest %= scale;
            out += single[digit] * scale;
        }
        perm[idx] = out;
    }
    return perm;
}

Operator translation(const KinSpace& space, const GroupElement& g) {
    const auto perm = translation_permutation(space, g);
    Matrix m(space.dim(), space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) m(perm[j], j) = 1.0;
    return Operator(space, Basis::Config, std::move(m));
}

StateVector relational_vector(const KinSpace& space, const RelationalIndex& idx) {
    const auto& grp = space.group();
    if (idx.relations.size() != static_cast<std::size_t>(space.particles() - 1))
        throw InvalidArgument("relational index has wrong relation count");
    grp.check_character(idx.character);
    CVec v(space.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(static_cast<double>(grp.order()));
    for (std::size_t gi = 0; gi < grp.order(); ++gi) {
        const GroupElement g = grp.element_at(gi);
        const cd amp = w * grp.char_value(idx.character, grp.inv(g));
        v[space.config_index(space.config_from_sector(idx.relations, g))] = amp;
    }
    return StateVector(space, Basis::Config, std::move(v));
}

Matrix relational_basis_matrix(const KinSpace& space) {
    const auto& grp = space.group();
    Matrix q(space.dim(), space.dim());
    for (std::size_t hi = 0; hi < space.sector_count(); ++hi) {
        const auto h = grp.tuple_at(hi, space.particles() - 1);
        for (std::size_t ci = 0; ci < grp.order(); ++ci) {
            const StateVector col =
                relational_vector(space, RelationalIndex{h, grp.character_at(ci)});
            const std::size_t jcol = space.rel_index(hi, ci);
            for (std::size_t r = 0; r < space.dim(); ++r)
                q(r, jcol) = col.amplitudes()[r];
        }
    }
    return q;
}

Operator to_relational(const Operator& a) {
    if (a.basis() == Basis::Relational) return a;
    const Matrix q = relational_basis_matrix(a.space());
    return Operator(a.space(), Basis::Relational, q.adjoint() * a.matrix() * q);
}

Operator to_config(const Operator& a) {
    if (a.basis() == Basis::Config) return a;
    const Matrix q = relational_basis_matrix(a.space());
    return Operator(a.space(), Basis::Config, q * a.matrix() * q.adjoint());
}

StateVector to_relational(const StateVector& v) {
    if (v.basis() == Basis::Relational) return v;
    const Matrix q = relational_basis_matrix(v.space());
    return StateVector(v.space(), Basis::Relational, q.apply_adjoint(v.amplitudes()));
}

StateVector to_config(const StateVector& v) {
    if (v.basis() == Basis::Config) return v;
    const Matrix q = relational_basis_matrix(v.space());
    return StateVector(v.space(), Basis::Config, q.apply(v.amplitudes()));
}

DensityMatrix to_relational(const DensityMatrix& r) {
    if (r.basis() == Basis::Relational) return r;
    const Matrix q = relational_basis_matrix(r.space());
    return DensityMatrix(r.space(), Basis::Relational, q.adjoint() * r.matrix() * q);
}

DensityMatrix to_config(const DensityMatrix& r) {
    if (r.basis() == Basis::Config) return r;
    const Matrix q = relational_basis_matrix(r.space());
    return DensityMatrix(r.space(), Basis::Config, q * r.matrix() * q.adjoint());
}

namespace {

struct TraceIndexing {
    std::vector<std::size_t> keep_stride_full;  // stride of each kept slot in full index
    std::vector<std::size_t> drop_stride_full;
    std::size_t keep_dim = 1;
    std::size_t drop_dim = 1;
    std::size_t q = 0;

    std::size_t full_index(std::size_t kept, std::size_t dropped) const {
        std::size_t out = 0;
        for (std::size_t s = keep_stride_full.size(); s-- > 0;) {
            out += (kept % q) * keep_stride_full[s];
            kept /= q;
        }
        for (std::size_t s = drop_stride_full.size(); s-- > 0;) {
            out += (dropped % q) * drop_stride_full[s];
            dropped /= q;
        }
        return out;
    }
};

TraceIndexing make_trace_indexing(const KinSpace& space, const std::vector<int>& keep) {
    const int n = space.particles();
    if (keep.empty()) throw InvalidArgument("partial trace: keep-set must not be empty");
    if (!std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw InvalidArgument("partial trace: keep-set must be strictly ascending");
    for (int p : keep)
        if (p < 1 || p > n) throw InvalidArgument("partial trace: particle out of range");

    TraceIndexing ix;
    ix.q = space.group().order();
    std::vector<std::size_t> stride(static_cast<std::size_t>(n));
    std::size_t s = 1;
    for (int p = n; p-- > 0;) {
        stride[static_cast<std::size_t>(p)] = s;
        s *= ix.q;
    }
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int p : keep) kept[static_cast<std::size_t>(p - 1)] = true;
    for (int p = 0; p < n; ++p) {
        if (kept[static_cast<std::size_t>(p)]) {
            ix.keep_stride_full.push_back(stride[static_cast<std::size_t>(p)]);
            ix.keep_dim *= ix.q;
        } else {
            ix.drop_stride_full.push_back(stride[static_cast<std::size_t>(p)]);
            ix.drop_dim *= ix.q;
        }
    }
    return ix;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    require_same_basis(rho.basis(), Basis::Config, "partial trace");
    const auto ix = make_trace_indexing(rho.space(), keep);
    const KinSpace out_space(rho.space().group(), static_cast<int>(keep.size()));
    Matrix out(ix.keep_dim, ix.keep_dim);
    for (std::size_t x = 0; x < ix.keep_dim; ++x)
        for (std::size_t y = 0; y < ix.keep_dim; ++y) {
            cd acc{0.0, 0.0};
            for (std::size_t z = 0; z < ix.drop_dim; ++z)
                acc += rho.matrix()(ix.full_index(x, z), ix.full_index(y, z));
            out(x, y) = acc;
        }
    return DensityMatrix(out_space, Basis::Config, std::move(out));
}

DensityMatrix partial_trace_pure(const StateVector& psi, const std::vector<int>& keep) {
    require_same_basis(psi.basis(), Basis::Config, "partial trace");
    const auto ix = make_trace_indexing(psi.space(), keep);
    const KinSpace out_space(psi.space().group(), static_cast<int>(keep.size()));
    Matrix out(ix.keep_dim, ix.keep_dim);
    const auto& v = psi.amplitudes();
    for (std::size_t x = 0; x < ix.keep_dim; ++x)
        for (std::size_t y = 0; y < ix.keep_dim; ++y) {
            cd acc{0.0, 0.0};
            for (std::size_t z = 0; z < ix.drop_dim; ++z)
                acc += v[ix.full_index(x, z)] * std::conj(v[ix.full_index(y, z)]);
            out(x, y) = acc;
        }
    return DensityMatrix(out_space, Basis::Config, std::move(out));
}

Operator embed_at(const Matrix& x, const std::vector<int>& slots, const KinSpace& space) {
    const int n = space.particles();
    const std::size_t q = space.group().order();
    {
        std::vector<int> s = slots;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidArgument("embed_at: slots must be distinct");
        for (int p : s)
            if (p < 1 || p > n) throw InvalidArgument("embed_at: slot out of range");
    }
    std::size_t xdim = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) xdim *= q;
    if (x.rows() != xdim || x.cols() != xdim)
        throw InvalidArgument("embed_at: operator shape does not match slot count");

    std::vector<std::size_t> stride(static_cast<std::size_t>(n));
    std::size_t s = 1;
    for (int p = n; p-- > 0;) {
        stride[static_cast<std::size_t>(p)] = s;
        s *= q;
    }
    // Strides of the embedded operator's own index digits within the full index.
    std::vector<std::size_t> slot_stride;
    slot_stride.reserve(slots.size());
    for (int p : slots) slot_stride.push_back(stride[static_cast<std::size_t>(p - 1)]);

    std::vector<bool> on(static_cast<std::size_t>(n), false);
    for (int p : slots) on[static_cast<std::size_t>(p - 1)] = true;
    std::vector<std::size_t> rest_stride;
    for (int p = 0; p < n; ++p)
        if (!on[static_cast<std::size_t>(p)])
            rest_stride.push_back(stride[static_cast<std::size_t>(p)]);
    std::size_t rest_dim = 1;
    for (std::size_t i = 0; i < rest_stride.size(); ++i) rest_dim *= q;

    auto expand = [&](std::size_t digits, const std::vector<std::size_t>& strides) {
        std::size_t out = 0;
        for (std::size_t k = strides.size(); k-- > 0;) {
            out += (digits % q) * strides[k];
            digits /= q;
        }
        return out;
    };

    Matrix m(space.dim(), space.dim());
    for (std::size_t xr = 0; xr < xdim; ++xr)
        for (std::size_t xc = 0; xc < xdim; ++xc) {
            const cd val = x(xr, xc);
            if (val == cd{0.0, 0.0}) continue;
            const std::size_t base_r = expand(xr, slot_stride);
            const std::size_t base_c = expand(xc, slot_stride);
            for (std::size_t r = 0; r < rest_dim; ++r) {
                const std::size_t off = expand(r, rest_stride);
                m(base_r + off, base_c + off) = val;
            }
        }
    return Operator(space, Basis::Config, std::move(m));
}

Operator apply_spectral(const Operator& a, const std::function<cd(cd)>& f,
                        double normal_tol) {
    if (!a.matrix().is_normal(normal_tol))
        throw BadOperator("apply_spectral: operator is not normal");
    return Operator(a.space(), a.basis(), spectral_apply_normal(a.matrix(), f));
}

}  // namespace gframe
