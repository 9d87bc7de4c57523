// geometry.hpp - pure three-qubit Berry phase, effective two-level field and
// monopole structure, and the interferometric mixed-state phase of the
// two-qubit marginal. All phases refer to one 2pi rotation of the system
// around z, generated by S_z (standard Pauli sign).
#pragma once

#include <array>
#include <utility>

#include "lmg/model.hpp"
#include "lmg/types.hpp"

namespace lmg {

struct PhaseResult {
  double raw = 0.0;        // accumulated phase, not reduced
  double principal = 0.0;  // raw mod 2pi in (-pi, pi]
  Branch branch = Branch::low_field;
};

/// Effective two-level field of the active block: magnitude dE, unit
/// direction n = (sin T cos 2phi, +-sin T sin 2phi, cos T); the azimuth
/// advances with twice the rotation angle and reverses between branches.
struct EffectiveField {
  double magnitude = 0.0;
  Vector3d direction = Vector3d::Zero();
  double phi = 0.0;
};

struct MixedPhaseResult {
  double gamma_phase = 0.0;            // in (-pi, pi]
  std::array<double, 2> weights{};     // (p1, p2)
  std::array<double, 2> eigenphases{}; // (beta1, beta2 = 0)
  bool defined = false;
};

/// beta2 = 0: psi2 is an eigenvector of the two-qubit rotation generator.
inline constexpr double kBetaTwo = 0.0;

/// Raw ground-state Berry phase from the mixing angle alone:
/// -2pi(1 - cos T) on LowField, +2pi(1 - cos T) on HighField.
double berry_phase_raw_from_theta(double theta, Branch branch);

/// Closed-form Berry phase of the active ground state. Throws
/// DegenerateError at the branch crossing.
PhaseResult berry_phase_pure(const ModelParams& params);

/// Effective field plus the projected two-level Hamiltonian in the ordered
/// basis {|000>, |Wbar>} (LowField) or {|111>, |W>} (HighField). The
/// projection of the rotated Hamiltonian is E0*I - |B| n.Sigma: the field
/// term enters with a minus sign so that the closed-form eigenvectors are
/// its eigenstates. branch degenerate selects the active one.
std::pair<EffectiveField, Matrix2c> effective_two_level(
    const ModelParams& params, double phi, Branch branch = Branch::degenerate);

/// Berry gauge field -+(1/2) n / dE^2 of the chosen branch (monopole form).
/// Throws SingularityError naming the monopole location when dE <= tol.
Vector3d monopole_field(const ModelParams& params,
                        Branch branch = Branch::degenerate, double phi = 0.0);

/// Discrete Mukunda-Simon evaluation on V(phi_k) = exp(-i phi_k S_z) V:
/// arg<V(0)|V(2pi)> - Im sum_k log<V(phi_k)|V(phi_{k+1})>, reported as the
/// principal value. Converges to berry_phase_pure mod 2pi as O(1/K^2).
double berry_phase_discrete_oracle(const ModelParams& params, int steps);

/// Eigenstate phase beta1 = -+2pi(1 - cos T)/(2 + cos T) of psi1.
double eigenstate_berry_phase(double theta, Branch branch);

/// Interferometric phase Gamma = arg{(2+cos T) e^{i beta1} + (1-cos T)} of
/// the two-qubit marginal. Undefined (UndefinedPhaseError) when the marginal
/// has degenerate nonzero eigenvalues, |r| <= kDegenerateMarginalTol.
MixedPhaseResult mixed_berry_phase_two_qubit(const ModelParams& params);

inline constexpr double kDegenerateMarginalTol = 1e-9;

/// |Tr(u(phi) varrho)| for the two-qubit marginal under the rotation
/// u(phi) = exp(-i phi (sz x 1 + 1 x sz)/2); its minimum over phi is |r|.
double two_qubit_visibility(const ModelParams& params, double phi);

}  // namespace lmg
