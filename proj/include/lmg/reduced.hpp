// reduced.hpp - one- and two-qubit reduced density operators of the ground
// state: generic partial trace plus the closed forms, reconciled against
// each other.
#pragma once

#include <vector>

#include "lmg/model.hpp"
#include "lmg/types.hpp"

namespace lmg {

/// Dense Hermitian PSD matrix with unit trace (dim 2, 4 or 8).
/// Construction validates the invariants.
struct DensityOperator {
  MatrixXc matrix;
  int dim = 0;

  static DensityOperator from_matrix(const MatrixXc& m);
  static DensityOperator from_pure(const Eigen::VectorXcd& psi);
};

/// One-qubit marginal. r is the paper's purity parameter
/// (1 + 2 cos Theta)/3 of the active branch; the matrix carries the
/// oracle-fixed sign: diag((1+r)/2, (1-r)/2) on LowField and
/// diag((1-r)/2, (1+r)/2) on HighField.
struct ReducedOneQubit {
  double r = 0.0;
  DensityOperator rho;
};

/// Two-qubit marginal: varrho = p1 |psi1><psi1| + p2 |psi2><psi2| with
/// p_{1,2} = (1 +- r)/2 and psi2 = (|01> + |10>)/sqrt(2) exactly.
struct ReducedTwoQubit {
  double p1 = 0.0, p2 = 0.0;
  Vector4c psi1, psi2;
  DensityOperator varrho;
};

/// Partial trace onto the kept qubits (1-indexed subset of {1,2,3},
/// nonempty and proper). Reduced basis is lexicographic (|00>,|01>,|10>,|11>).
DensityOperator partial_trace(const Vector8c& state,
                              const std::vector<int>& keep);
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep);

ReducedOneQubit one_qubit_reduced(const GroundState& gs);
ReducedTwoQubit two_qubit_reduced(const GroundState& gs);

}  // namespace lmg
