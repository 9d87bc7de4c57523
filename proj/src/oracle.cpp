// oracle.cpp
#include "lmg/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

namespace lmg {
namespace {

void check_hermitian(const MatrixXc& m, double tol, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument(std::string(who) +
                                ": input is not Hermitian within tolerance");
}

// deterministic basis for a degenerate cluster: Gram-Schmidt of the
// projections P e_0, P e_1, ... taken in index order
void canonicalize_cluster(MatrixXc& vectors, int first, int count) {
  const int n = static_cast<int>(vectors.rows());
  const MatrixXc block = vectors.middleCols(first, count);
  const MatrixXc proj = block * block.adjoint();
  std::vector<Eigen::VectorXcd> basis;
  for (int e = 0; e < n && static_cast<int>(basis.size()) < count; ++e) {
    Eigen::VectorXcd v = proj.col(e);
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double nrm = v.norm();
    if (nrm > 1e-8) basis.push_back(v / nrm);
  }
  if (static_cast<int>(basis.size()) == count) {
    for (int k = 0; k < count; ++k) vectors.col(first + k) = basis[k];
  }
}

void fix_phase(MatrixXc& vectors, int col) {
  int imax = 0;
  double amax = 0.0;
  for (int i = 0; i < vectors.rows(); ++i) {
    const double a = std::abs(vectors(i, col));
    if (a > amax + 1e-15) {
      amax = a;
      imax = i;
    }
  }
  const Complex z = vectors(imax, col);
  if (std::abs(z) > 0.0) vectors.col(col) *= std::conj(z) / std::abs(z);
}

}  // namespace

EigenDecomposition hermitian_eigensystem(const MatrixXc& m, double herm_tol,
                                         double cluster_tol) {
  check_hermitian(m, herm_tol, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: solver failed");
  EigenDecomposition d;
  d.values = solver.eigenvalues();
  d.vectors = solver.eigenvectors();

  const int n = static_cast<int>(d.values.size());
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && d.values(j) - d.values(j - 1) <= cluster_tol) ++j;
    if (j - i > 1) canonicalize_cluster(d.vectors, i, j - i);
    i = j;
  }
  for (int c = 0; c < n; ++c) fix_phase(d.vectors, c);
  return d;
}

MatrixXc psd_sqrt(const MatrixXc& m) {
  check_hermitian(m, 1e-12, "psd_sqrt");
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("psd_sqrt: solver failed");
  Eigen::VectorXd ev = solver.eigenvalues();
  const double cutoff = 1e-13 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-12)
      throw InvalidStateError("psd_sqrt: matrix has eigenvalue " +
                              std::to_string(ev(i)) + " < -1e-12");
    // rank cutoff: numerically-zero eigenvalues would otherwise blow up to
    // sqrt(eps) and pollute the root
    if (ev(i) < cutoff) ev(i) = 0.0;
  }
  const MatrixXc& v = solver.eigenvectors();
  return v * ev.cwiseSqrt().asDiagonal() * v.adjoint();
}

double fd_susceptibility(const std::function<double(double)>& fidelity_at,
                         double delta) {
  if (!(delta > 0.0))
    throw std::invalid_argument("fd_susceptibility: delta must be > 0");
  const double f0 = fidelity_at(0.0);
  if (std::abs(f0 - 1.0) > 1e-12)
    throw OracleError("fd_susceptibility: f(0) must be 1");
  const double fp = fidelity_at(delta);
  const double fm = fidelity_at(-delta);
  for (double f : {fp, fm}) {
    if (f > 1.0 + 1e-9 || f < 0.0)
      throw OracleError("fd_susceptibility: fidelity value " +
                        std::to_string(f) + " outside [0, 1]");
  }
  // (2 - fp - fm) grouped as (1-fp) + (1-fm): each subtraction against 1 is
  // exact for fidelities this close to 1, keeping the quantization floor low
  return ((1.0 - fp) + (1.0 - fm)) / (delta * delta);
}

}  // namespace lmg
