#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gframe/group.hpp"
#include "gframe/matrix.hpp"

namespace gframe {

/// Which orthonormal basis a state or operator is expressed in.
///  - Config: the distinguished configuration basis |g_1,...,g_N>.
///  - Relational: the |h;chi> basis of translation eigenstates.
enum class Basis { Config, Relational };

const char* basis_name(Basis b);

/// Kinematical Hilbert space of N distinguishable particles on the group:
/// H^{tensor N} with H = C(G). Basis index <-> configuration tuple bijection
/// is row-major with particle 1 most significant.
class KinSpace {
public:
    KinSpace(FiniteAbelianGroup group, int particles);

    const FiniteAbelianGroup& group() const { return group_; }
    int particles() const { return particles_; }
    std::size_t dim() const { return dim_; }
    bool operator==(const KinSpace& o) const {
        return group_ == o.group_ && particles_ == o.particles_;
    }
    std::string name() const;

    std::size_t config_index(const std::vector<GroupElement>& cfg) const;
    std::vector<GroupElement> config_at(std::size_t idx) const;

    /// Number of relation sectors, |G|^(N-1).
    std::size_t sector_count() const;
    /// Decompose a configuration (g_1,...,g_N) into (h, g): g = g_1 and
    /// h_{i-1} = g_i * g_1^{-1}, so the configuration is (g, h g).
    std::pair<std::vector<GroupElement>, GroupElement> sector_of(
        const std::vector<GroupElement>& cfg) const;
    /// Rebuild the configuration (g, h g) from sector h and position g.
    std::vector<GroupElement> config_from_sector(const std::vector<GroupElement>& h,
                                                 const GroupElement& g) const;

    /// Linear index of the relational basis vector |h;chi>.
    std::size_t rel_index(std::size_t h_idx, std::size_t chi_idx) const;
    std::pair<std::size_t, std::size_t> rel_at(std::size_t idx) const;

    /// Space with one particle removed (the complement H_ibar, ascending
    /// particle order with the frame slot removed).
    KinSpace complement() const;

private:
    FiniteAbelianGroup group_;
    int particles_;
    std::size_t dim_;
};

/// Label (h, chi) of a relational basis vector.
struct RelationalIndex {
    std::vector<GroupElement> relations;  // h, length N-1
    Character character;
};

/// Square complex operator on a kinematical space, tagged with the basis it
/// is expressed in. Binary operations require matching space and basis.
class Operator {
public:
    Operator(KinSpace space, Basis basis, Matrix m);

    const KinSpace& space() const { return space_; }
    Basis basis() const { return basis_; }
    const Matrix& matrix() const { return m_; }

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator*(const Operator& o) const;
    Operator operator*(cd s) const;
    Operator adjoint() const;
    cd trace() const { return m_.trace(); }

    static double max_abs_diff(const Operator& a, const Operator& b);

private:
    KinSpace space_;
    Basis basis_;
    Matrix m_;
};

/// Pure (possibly subnormalized) state on a kinematical space.
class StateVector {
public:
    StateVector(KinSpace space, Basis basis, CVec v);

    const KinSpace& space() const { return space_; }
    Basis basis() const { return basis_; }
    const CVec& amplitudes() const { return v_; }
    double norm() const { return gframe::norm(v_); }

private:
    KinSpace space_;
    Basis basis_;
    CVec v_;
};

/// Density matrix; subnormalized traces are allowed (relational-trace
/// outputs), so trace is in (0, 1].
class DensityMatrix {
public:
    DensityMatrix(KinSpace space, Basis basis, Matrix m);

    const KinSpace& space() const { return space_; }
    Basis basis() const { return basis_; }
    const Matrix& matrix() const { return m_; }
    double trace_real() const { return m_.trace().real(); }

    /// Hermiticity / positivity / trace checks; throws BadOperator.
    void validate(double tol = 1e-9) const;

    static double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

private:
    KinSpace space_;
    Basis basis_;
    Matrix m_;
};

void require_same_frame(const KinSpace& a, const KinSpace& b, const char* op);
void require_same_basis(Basis a, Basis b, const char* op);

// -- Configuration-basis constructions ---------------------------------------

/// Global translation U_g^{tensor N}: permutation matrix with
/// U|j_1..j_N> = |g j_1, ..., g j_N>.
Operator translation(const KinSpace& space, const GroupElement& g);

/// Index permutation of the global translation: new_index[i] is where basis
/// vector i is mapped. Cheap path used by projector and twirl code.
std::vector<std::size_t> translation_permutation(const KinSpace& space,
                                                 const GroupElement& g);

/// |h;chi> expressed in the configuration basis:
/// |h;chi> = |G|^{-1/2} sum_g chi(g^{-1}) |g, h g>.
StateVector relational_vector(const KinSpace& space, const RelationalIndex& idx);

/// Unitary whose columns are the relational basis vectors, column order
/// rel_index(h, chi).
Matrix relational_basis_matrix(const KinSpace& space);

// -- Basis changes ------------------------------------------------------------

Operator to_relational(const Operator& a);
Operator to_config(const Operator& a);
StateVector to_relational(const StateVector& v);
StateVector to_config(const StateVector& v);
DensityMatrix to_relational(const DensityMatrix& r);
DensityMatrix to_config(const DensityMatrix& r);

// -- Tensor-slot operations ---------------------------------------------------

/// Partial trace keeping the listed particles (1-based, strictly ascending).
/// Config basis only; result lives on KinSpace(group, |keep|).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Partial trace of a pure state |psi><psi| without materializing it.
DensityMatrix partial_trace_pure(const StateVector& psi, const std::vector<int>& keep);

/// Embed an operator acting on the listed particle slots (1-based, distinct,
/// in the listed order) into the full space, identity elsewhere.
Operator embed_at(const Matrix& x, const std::vector<int>& slots, const KinSpace& space);

/// f(A) in the sense of spectral calculus; A must be normal
/// (max-norm commutator tolerance 1e-9 by default).
Operator apply_spectral(const Operator& a, const std::function<cd(cd)>& f,
                        double normal_tol = 1e-9);

}  // namespace gframe
