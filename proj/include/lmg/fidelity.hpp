// fidelity.hpp - ground-state fidelity susceptibility (perturbative sum and
// closed form) plus the one- and two-qubit partial-state susceptibilities,
// with the Bures-Uhlmann fidelity underneath.
//
// Susceptibility convention: chi is the second-order coefficient of
// 1 - F(delta h), i.e. F = 1 - (chi/2) delta_h^2 + ..., for both the pure
// overlap fidelity and Tr sqrt(sqrt(rho) sigma sqrt(rho)). The closed forms
// are calibrated against the perturbative sum and finite-difference oracles:
//   chi_full = sin^2 T / (2 dE)^2
//   chi_1    = (1 + cos T) T'^2 / (4 (2 + cos T))     (cancellation-safe)
//   chi_2    = chi_1 + T'^2 / (4 (2 + cos T))
// where T' = dTheta/dh = sin T / dE on the block's own field argument.
#pragma once

#include "lmg/model.hpp"
#include "lmg/reduced.hpp"
#include "lmg/types.hpp"

namespace lmg {

enum class SusceptibilityKind { full, one_qubit, two_qubit };
enum class SusceptibilityMethod { closed_form, perturbative_sum, finite_difference };

struct SusceptibilityResult {
  double value = 0.0;  // >= 0 (values within -1e-12 of zero are clamped)
  SusceptibilityKind kind = SusceptibilityKind::full;
  SusceptibilityMethod method = SusceptibilityMethod::closed_form;
};

/// H(gamma, h) = h0 + h * h_interaction, exactly. h_interaction equals S_z
/// in the standard Pauli sign (the field axis of the block convention).
struct DrivingSplit {
  Matrix8c h0;
  Matrix8c h_interaction;
};

DrivingSplit make_driving_split(double gamma);

/// Sum over the seven excited closed-form eigenstates of
/// |<V_n| H_I |V_g>|^2 / (E_n - E_g)^2. The doublets and the opposite block
/// contribute exactly zero. branch degenerate selects the active one;
/// explicit low/high evaluates that branch's V_- even when it is not the
/// global ground state (used to probe the monopole divergence).
SusceptibilityResult fidelity_susceptibility_sum(
    const ModelParams& params, Branch branch = Branch::degenerate);

/// Closed form sin^2 T / (2 dE)^2, equal to the sum within 1e-10.
SusceptibilityResult fidelity_susceptibility_closed(
    const ModelParams& params, Branch branch = Branch::degenerate);

/// Tr sqrt(sqrt(a) b sqrt(a)). Symmetric within 1e-12; commuting diagonal
/// inputs take the exact-product fast path.
double bures_fidelity(const DensityOperator& a, const DensityOperator& b);

/// Analytic dTheta/d(field argument) at (gamma, +-h):
/// 6 N D / (sqrt(R) (N^2 + D^2)) = sin T / dE. Undefined on the isotropic
/// line (|gamma - 1| < 1e-9) where Theta is piecewise constant.
double theta_derivative(const ModelParams& params, BlockSign block);

/// chi_1; on the isotropic line returns the limit value 0 with the analytic
/// path disabled.
SusceptibilityResult partial_fs_one_qubit(const ModelParams& params,
                                          Branch branch = Branch::degenerate);

/// chi_2 = chi_1 + T'^2/(4(2+cos T)) >= chi_1.
SusceptibilityResult partial_fs_two_qubit(const ModelParams& params,
                                          Branch branch = Branch::degenerate);

inline constexpr double kIsotropicTol = 1e-9;

}  // namespace lmg
