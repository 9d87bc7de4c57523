// oracle.hpp - brute-force numerical machinery: dense Hermitian eigensolver,
// PSD matrix square root, finite-difference susceptibility engine.
// These validate the closed forms and never call into them.
#pragma once

#include <functional>

#include "lmg/types.hpp"

namespace lmg {

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  MatrixXc vectors;         // orthonormal columns, values(i) <-> col(i)
};

/// Full decomposition of a dense complex Hermitian matrix (dim <= 8 in this
/// project, any small dim accepted). Degenerate clusters (gap < cluster_tol)
/// are re-orthonormalized by Gram-Schmidt on index-ordered basis projections
/// so the output is deterministic; every column's largest component is made
/// real nonnegative.
EigenDecomposition hermitian_eigensystem(const MatrixXc& m,
                                         double herm_tol = 1e-12,
                                         double cluster_tol = 1e-9);

/// Positive-semidefinite square root via eigendecomposition. Eigenvalues in
/// [-1e-12, 0) are clamped to zero; below -1e-12 throws InvalidStateError.
MatrixXc psd_sqrt(const MatrixXc& m);

/// Symmetric second difference (2 - f(delta) - f(-delta))/delta^2 of a
/// fidelity-at-offset function with f(0) = 1. Throws OracleError when f
/// leaves [0, 1 + 1e-9].
double fd_susceptibility(const std::function<double(double)>& fidelity_at,
                         double delta);

/// Resolution bound of fd_susceptibility in double precision: the fidelity
/// is quantized at ~eps/2 near 1, so the second difference cannot resolve
/// susceptibilities below ~4 eps / delta^2. Comparisons against the oracle
/// add this as an absolute tolerance term.
inline double fd_noise_floor(double delta) {
  return 4.0 * 2.220446049250313e-16 / (delta * delta);
}

}  // namespace lmg
