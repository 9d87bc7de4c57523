// reduced.cpp
#include "lmg/reduced.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace lmg {
namespace {

// paper-order position -> computational bits (b1 = most significant)
constexpr int kBits[8] = {0b000, 0b011, 0b101, 0b110, 0b111, 0b100, 0b010, 0b001};

int bit_of(int bits, int qubit) { return (bits >> (3 - qubit)) & 1; }

std::vector<int> validated_keep(const std::vector<int>& keep) {
  if (keep.empty() || keep.size() >= 3)
    throw std::invalid_argument(
        "partial_trace: keep must be a nonempty proper subset of {1,2,3}");
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  if (std::unique(k.begin(), k.end()) != k.end())
    throw std::invalid_argument("partial_trace: duplicate qubit in keep");
  for (int q : k)
    if (q < 1 || q > 3)
      throw std::invalid_argument("partial_trace: qubits are 1, 2 or 3");
  return k;
}

MatrixXc trace_out(const MatrixXc& rho8, const std::vector<int>& keep) {
  const auto k = validated_keep(keep);
  const int dim = 1 << static_cast<int>(k.size());
  MatrixXc out = MatrixXc::Zero(dim, dim);
  std::vector<int> traced;
  for (int q = 1; q <= 3; ++q)
    if (std::find(k.begin(), k.end(), q) == k.end()) traced.push_back(q);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      bool same = true;
      for (int q : traced)
        if (bit_of(kBits[a], q) != bit_of(kBits[b], q)) same = false;
      if (!same) continue;
      int ra = 0, rb = 0;
      for (std::size_t j = 0; j < k.size(); ++j) {
        const int shift = static_cast<int>(k.size()) - 1 - static_cast<int>(j);
        ra |= bit_of(kBits[a], k[j]) << shift;
        rb |= bit_of(kBits[b], k[j]) << shift;
      }
      out(ra, rb) += rho8(a, b);
    }
  }
  return out;
}

Vector4c reverse4(const Vector4c& v) {
  Vector4c out;
  for (int i = 0; i < 4; ++i) out(i) = v(3 - i);
  return out;
}

}  // namespace

DensityOperator DensityOperator::from_matrix(const MatrixXc& m) {
  const int dim = static_cast<int>(m.rows());
  if (m.cols() != dim || (dim != 2 && dim != 4 && dim != 8))
    throw InvalidStateError("DensityOperator: dim must be 2, 4 or 8");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-13)
    throw InvalidStateError("DensityOperator: not Hermitian within 1e-13");
  if (std::abs(m.trace().real() - 1.0) > 1e-12 ||
      std::abs(m.trace().imag()) > 1e-12)
    throw InvalidStateError("DensityOperator: trace must be 1 within 1e-12");
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(0.5 * (m + m.adjoint()),
                                                 Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-12)
    throw InvalidStateError("DensityOperator: negative eigenvalue beyond tolerance");
  DensityOperator d;
  d.matrix = 0.5 * (m + m.adjoint());
  d.dim = dim;
  return d;
}

DensityOperator DensityOperator::from_pure(const Eigen::VectorXcd& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-10)
    throw InvalidStateError("DensityOperator: pure state must be normalized");
  return from_matrix(psi * psi.adjoint() / (n * n));
}

DensityOperator partial_trace(const Vector8c& state,
                              const std::vector<int>& keep) {
  const MatrixXc rho8 = state * state.adjoint();
  return DensityOperator::from_matrix(trace_out(rho8, keep));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep) {
  if (rho.dim != 8)
    throw std::invalid_argument("partial_trace: density operator must be 8x8");
  return DensityOperator::from_matrix(trace_out(rho.matrix, keep));
}

ReducedOneQubit one_qubit_reduced(const GroundState& gs) {
  if (gs.branch == Branch::degenerate)
    throw DegenerateError("one_qubit_reduced: ground state is degenerate");
  ReducedOneQubit out;
  out.r = (1.0 + 2.0 * std::cos(gs.theta)) / 3.0;
  // LowField reduces to (1 + r sigma_z)/2; HighField needs the flipped sign
  // (|111> must reduce to |1><1|). A negative-h block swap flips once more.
  bool zero_heavy = gs.branch == Branch::low_field;
  if (gs.flipped) zero_heavy = !zero_heavy;
  Matrix2c m = Matrix2c::Zero();
  const double p_hi = 0.5 * (1.0 + out.r);
  const double p_lo = 0.5 * (1.0 - out.r);
  m(0, 0) = zero_heavy ? p_hi : p_lo;
  m(1, 1) = zero_heavy ? p_lo : p_hi;
  out.rho = DensityOperator::from_matrix(m);
  return out;
}

ReducedTwoQubit two_qubit_reduced(const GroundState& gs) {
  if (gs.branch == Branch::degenerate)
    throw DegenerateError("two_qubit_reduced: ground state is degenerate");
  const double c = std::cos(gs.theta);
  const double ch = std::cos(0.5 * gs.theta);
  const double sh = std::sin(0.5 * gs.theta);
  const double r = (1.0 + 2.0 * c) / 3.0;
  const double norm = std::sqrt(2.0 + c);  // 2 + cos >= 1, no error path

  ReducedTwoQubit out;
  out.p1 = 0.5 * (1.0 + r);
  out.p2 = 0.5 * (1.0 - r);
  out.psi1 = Vector4c::Zero();
  if (gs.branch == Branch::low_field) {
    out.psi1(0) = std::sqrt(3.0) * ch / norm;
    out.psi1(3) = sh / norm;
  } else {
    out.psi1(3) = std::sqrt(3.0) * ch / norm;
    out.psi1(0) = sh / norm;
  }
  if (gs.flipped) out.psi1 = reverse4(out.psi1);
  out.psi2 = Vector4c::Zero();
  out.psi2(1) = 1.0 / std::sqrt(2.0);
  out.psi2(2) = 1.0 / std::sqrt(2.0);
  const MatrixXc m = out.p1 * (out.psi1 * out.psi1.adjoint()) +
                     out.p2 * (out.psi2 * out.psi2.adjoint());
  out.varrho = DensityOperator::from_matrix(m);
  return out;
}

}  // namespace lmg
