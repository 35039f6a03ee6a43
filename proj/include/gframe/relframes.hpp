#pragma once

#include <optional>

#include "gframe/symmetry.hpp"

namespace gframe {

enum class ReductionKind { Schrodinger, Heisenberg };

/// Rectangular isometry from the physical subspace of H^{tensor N} (realized
/// on the full space) onto the complement space of the chosen frame.
/// On physical vectors: map * inverse = identity on the reduced side and
/// inverse * map = physical projector on the full side.
struct ReductionMap {
    ReductionKind kind;
    int frame;
    GroupElement orientation;
    KinSpace full;     // domain's ambient space
    KinSpace reduced;  // codomain
    Matrix matrix;     // reduced.dim() x full.dim()
};

ReductionMap schrodinger_reduction(const KinSpace& space, int frame,
                                   const GroupElement& g);
ReductionMap heisenberg_reduction(const KinSpace& space, int frame,
                                  const GroupElement& g);
/// Right inverse (full.dim() x reduced.dim()); image lies in the physical
/// subspace.
Matrix reduction_inverse(const ReductionMap& r);

/// Conditioning map: phi = sqrt(|G|) <g|_frame psi. Input must be supported
/// on the physical subspace (residual below `phys_tol`).
StateVector reduce_S(const StateVector& psi, int frame, const GroupElement& g,
                     double phys_tol = 1e-10);
/// sqrt(|G|) Pi_phys (|g>_frame tensor phi); maps back into the physical
/// subspace.
StateVector reduce_S_inverse(const StateVector& phi, const KinSpace& full, int frame,
                             const GroupElement& g);
/// Frame-orientation-conditional shift sum_g |g><g|_frame tensor
/// U_{g^{-1}}^{tensor (N-1)}; disentangles frame from complement on physical
/// states.
Operator trivialize(const KinSpace& space, int frame);
/// Heisenberg-picture reduction: condition after trivializing. Independent of
/// g on physical states.
StateVector reduce_H(const StateVector& psi, int frame, const GroupElement& g,
                     double phys_tol = 1e-10);

/// |g>_frame tensor reduce_S: realizes the reduced description inside the
/// full space (full.dim() x full.dim(), rank |G|^(N-1)).
Matrix aligned_embedding_matrix(const KinSpace& space, int frame,
                                const GroupElement& g);

/// Relativization of an observable of the complement: F = |G| *
/// Pi_phys (|g><g|_frame tensor f) Pi_phys, an element of the relational
/// algebra.
Operator relativize(const Matrix& f, const KinSpace& space, int frame,
                    const GroupElement& g);

/// Change of frame map from (frame i, orientation g_i) to (frame j, g_j),
/// unitary between the two complement spaces. Slot convention: both spaces
/// keep ascending particle order; the summed translation fills slot i of the
/// codomain and consumes slot j of the domain.
Operator frame_change(const KinSpace& space, int i, const GroupElement& gi, int j,
                      const GroupElement& gj);
/// Same map built as reduce-after-unreduce; oracle for the explicit form.
Operator frame_change_compositional(const KinSpace& space, int i,
                                    const GroupElement& gi, int j,
                                    const GroupElement& gj);

/// Observable relative to frame i re-expressed relative to frame j.
Operator transform_observable(const Operator& f_ibar, const KinSpace& space, int i,
                              const GroupElement& gi, int j, const GroupElement& gj);

/// Embedding of the N-particle relational algebra into the (N+M)-particle
/// one. Multiplicative and adjoint-preserving but not unital. Input must be
/// supported on the physical subspace.
Operator relational_embed(const Operator& x, int extra_particles,
                          double phys_tol = 1e-10);
/// The equivalent product form X tensor Pi_phys^{(M)} (cross-check).
Operator relational_embed_product_form(const Operator& x, int extra_particles,
                                       double phys_tol = 1e-10);

/// Partial-trace replacement dual to the relational embedding:
/// project (N+M), trace out the last M particles, project (N). Output may be
/// subnormalized.
DensityMatrix relational_trace(const DensityMatrix& rho, int traced_particles);

/// Three-particle scenario probing whether a relative phase survives the
/// reduction to two particles: the ordinary partial trace of the aligned
/// state loses it, the relational trace keeps it.
struct ParadoxReport {
    int n = 0, a = 0, b = 0, c = 0;
    double theta = 0.0, theta_prime = 0.0;
    bool phases_distinct = false;  // theta != theta_prime mod 2 pi
    bool alignable = false;
    double aligned_form_deviation = 0.0;   // vs the closed-form aligned state
    bool aligned_form_ok = false;
    double partial_trace_difference = 0.0;  // between the two phases
    bool partial_trace_phase_independent = false;
    // Relational traces are compared on the normalized physical projections
    // of the two inputs (the states proper of the perspective-neutral
    // description; the bare projection carries weight 1/n).
    double relational_trace_difference = 0.0;
    bool relational_trace_phase_dependent = false;
    Matrix partial_trace_state;             // at theta
    Matrix relational_trace_state;          // at theta
    Matrix relational_trace_state_prime;    // at theta_prime
};

ParadoxReport paradox_scenario(int n, int a, int b, int c, double theta,
                               double theta_prime);

/// The paradox input state (|-a>|b> + e^{i theta}|a>|-b>)/sqrt(2) tensor |c>.
StateVector paradox_state(int n, int a, int b, int c, double theta);

/// Relational trace of a pure (N+M)-particle state without materializing the
/// full density matrix.
DensityMatrix relational_trace_pure(const StateVector& psi, int traced_particles);

}  // namespace gframe
