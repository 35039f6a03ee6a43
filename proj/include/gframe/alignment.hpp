#pragma once

#include <optional>
#include <vector>

#include "gframe/symmetry.hpp"

namespace gframe {

/// Result of aligning a state to frame particle `frame` in orientation
/// `orientation`: applying symmetry_unitary(used_symmetry) to the input
/// gives |orientation><orientation|_frame tensor (translated) reduced state.
struct AlignmentResult {
    int frame = 0;
    GroupElement orientation;
    DensityMatrix reduced;  // on the complement space, ascending particle order
    SymmetryAssignment used_symmetry;
};

/// Alignability test: a state is alignable iff every relation sector has at
/// most one configuration with non-negligible diagonal weight. Returns the
/// per-sector table of supported positions (identity where a sector has no
/// support), or nullopt when some sector carries two distinct positions.
std::optional<std::vector<GroupElement>> alignment_table(const DensityMatrix& rho,
                                                         double support_tol = 1e-12);
/// Same test reading |psi|^2 directly off a pure state.
std::optional<std::vector<GroupElement>> alignment_table(const StateVector& psi,
                                                         double support_tol = 1e-12);

bool is_alignable(const DensityMatrix& rho, double support_tol = 1e-12);

/// Align rho to frame particle i (1-based) in orientation g. Throws
/// NotAlignable when the input fails the sector condition.
AlignmentResult align(const DensityMatrix& rho, int frame, const GroupElement& g,
                      double support_tol = 1e-12);

/// Pure-state alignment: the full aligned vector (frame slot pinned to g)
/// plus the witness assignment, without materializing density matrices.
struct PureAlignment {
    StateVector aligned_full;  // |g>_i tensor reduced, on the full space
    CVec reduced;              // amplitudes on the complement space
    SymmetryAssignment used_symmetry;
};
PureAlignment align_pure(const StateVector& psi, int frame, const GroupElement& g,
                         double support_tol = 1e-12);

/// The QRF transformation between aligned descriptions: unitary from the
/// complement of frame i to the complement of frame j, built from the
/// swap-and-conditional-translation form. For alignable states it maps the
/// state relative to i onto the state relative to j.
Operator qrf_transform_aligned(const KinSpace& space, int i, int j);

/// Relation-conditional translation moving the description from particle 1
/// to the mass-weighted center: g(h) = -floor((m_2 h_1 + ... + m_N h_{N-1})/m).
/// Cyclic groups only.
SymmetryAssignment center_of_mass_assignment(const KinSpace& space,
                                             const std::vector<double>& masses);

}  // namespace gframe
