#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gframe/spaces.hpp"

namespace gframe {

/// One element of the symmetry group U_sym: a relation-conditional
/// translation, i.e. a table h -> g(h) assigning a translation to every
/// relation sector. Table indexed in sector enumeration order.
struct SymmetryAssignment {
    KinSpace space;
    std::vector<GroupElement> table;  // length |G|^(N-1)

    static SymmetryAssignment all_identity(const KinSpace& space);
    static SymmetryAssignment constant(const KinSpace& space, const GroupElement& g);
    static SymmetryAssignment random(const KinSpace& space, std::mt19937_64& rng);
};

void check_assignment(const SymmetryAssignment& a);

/// Index permutation of the induced unitary (config basis).
std::vector<std::size_t> assignment_permutation(const SymmetryAssignment& a);

/// The unitary directsum_h U_{g(h)}^{tensor N} as a config-basis operator.
Operator symmetry_unitary(const SymmetryAssignment& a);

StateVector apply_symmetry(const SymmetryAssignment& a, const StateVector& psi);
DensityMatrix apply_symmetry(const SymmetryAssignment& a, const DensityMatrix& rho);

/// Number of symmetry-group elements |G|^(|G|^(N-1)); nullopt on overflow.
std::optional<std::uint64_t> symmetry_group_size(const KinSpace& space);

// -- Physical projector -------------------------------------------------------

/// Pi_phys = |G|^{-1} sum_g U_g^{tensor N}, the orthogonal projection onto
/// the translation-invariant (physical) subspace.
Operator physical_projector(const KinSpace& space);

StateVector project_phys(const StateVector& psi);
/// Sandwich Pi X Pi (config basis internally; result in the input's basis).
Operator project_phys(const Operator& x);
DensityMatrix project_phys(const DensityMatrix& rho);

/// Norm of the component of psi outside the physical subspace.
double nonphysical_residual(const StateVector& psi);

// -- Projection onto the invariant algebra ------------------------------------

/// Orthogonal projection onto the invariant algebra, computed structurally:
/// in the relational basis, keep the full trivial-character block plus the
/// (h, chi != trivial) diagonal, zero everything else. Equals the average
/// over all of U_sym.
DensityMatrix project_inv(const DensityMatrix& rho);

/// Same projection at the raw-matrix level; `m` is in the given basis.
Matrix project_inv_matrix(const KinSpace& space, const Matrix& m, Basis basis);

/// Literal average over all |G|^(|G|^(N-1)) symmetry elements. Exact but
/// doubly exponential; throws CapExceeded above the cap. Oracle for
/// project_inv.
DensityMatrix brute_force_twirl(const DensityMatrix& rho, std::uint64_t cap = 100000);

/// Average of the unitaries themselves over all of U_sym (oracle for the
/// second form of the physical projector).
Operator brute_force_unitary_average(const KinSpace& space, std::uint64_t cap = 100000);

/// Largest matrix element outside the invariant-algebra block pattern
/// (relational basis).
double invariant_pattern_violation(const Operator& a);
bool in_invariant_algebra(const Operator& a, double tol = 1e-10);

// -- State equivalences --------------------------------------------------------

bool observationally_equivalent(const DensityMatrix& rho, const DensityMatrix& sigma,
                                double tol = 1e-10);

enum class EquivKind { SymmetryEquiv, ObservationalEquiv, Neither };

struct EquivalenceVerdict {
    EquivKind kind;
    std::optional<SymmetryAssignment> witness;  // present iff SymmetryEquiv
};

/// Exhaustive search for a symmetry element mapping rho to sigma, using the
/// necessary-and-sufficient phase condition on relational matrix elements:
/// sigma_{(h,chi),(h',chi')} = chi(g(h)) chi'(g(h')^{-1}) rho_{(h,chi),(h',chi')}.
/// Falls back to the observational comparison when no witness exists.
EquivalenceVerdict symmetry_equivalent_bruteforce(const DensityMatrix& rho,
                                                  const DensityMatrix& sigma,
                                                  std::uint64_t cap = 100000,
                                                  double tol = 1e-10);

/// Builds the eigenbasis purification of rho with an ancilla of equal
/// dimension and tests strict invariance (U tensor 1)|Psi> = |Psi> for
/// `samples` random assignments plus all constant ones. True exactly when
/// the support of rho lies in the physical subspace.
bool purification_invariance_check(const DensityMatrix& rho, int samples,
                                   std::mt19937_64& rng, double tol = 1e-10);

/// Unitary swapping |h;chi0> <-> |h;chi1> for every sector h, identity
/// elsewhere (relational basis). Both characters must be nontrivial and
/// distinct. Conjugation by it preserves the invariant algebra.
Operator character_swap_unitary(const KinSpace& space, const Character& chi0,
                                const Character& chi1);

}  // namespace gframe
