// fidelity.cpp
#include "lmg/fidelity.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "lmg/oracle.hpp"

namespace lmg {
namespace {

Branch resolve_branch(const ModelParams& params, Branch requested,
                      const char* who) {
  if (requested == Branch::low_field || requested == Branch::high_field)
    return requested;
  const GroundState g = ground_state(params);
  if (g.branch == Branch::degenerate)
    throw DegenerateError(std::string(who) +
                          ": ground state is degenerate at the crossing; "
                          "pass an explicit branch");
  return g.branch;
}

BlockSign block_of(Branch b) {
  return b == Branch::low_field ? BlockSign::plus : BlockSign::minus;
}

double clamp_nonnegative(double v) {
  if (v < 0.0 && v > -1e-12) return 0.0;
  return v;
}

bool numerically_diagonal(const MatrixXc& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > 1e-14) return false;
  return true;
}

}  // namespace

DrivingSplit make_driving_split(double gamma) {
  DrivingSplit d;
  d.h0 = build_hamiltonian({gamma, 0.0, 1e-9});
  d.h_interaction = Matrix8c::Zero();
  const double diag[8] = {1.5, -0.5, -0.5, -0.5, -1.5, 0.5, 0.5, 0.5};
  for (int i = 0; i < 8; ++i) d.h_interaction(i, i) = diag[i];
  return d;
}

SusceptibilityResult fidelity_susceptibility_sum(const ModelParams& params,
                                                 Branch branch) {
  params.validate();
  const Branch b = resolve_branch(params, branch, "fidelity_susceptibility_sum");
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  const EnergyFunctions e = energy_functions(at, block_of(b));
  if (2.0 * e.de <= params.tol_degeneracy)
    throw DegenerateError("fidelity_susceptibility_sum: block gap at or below "
                          "tol_degeneracy (monopole)");

  const auto pairs = eigensystem_closed_form(at);
  const int gidx = b == Branch::low_field ? 0 : 4;
  const Matrix8c hi = make_driving_split(params.gamma).h_interaction;
  const Vector8c hg = hi * pairs[gidx].second;
  double sum = 0.0;
  for (int n = 0; n < 8; ++n) {
    if (n == gidx) continue;
    const double me2 = std::norm(pairs[n].second.dot(hg));
    // exactly-zero couplings (doublets, opposite block) are skipped before
    // the denominator so degenerate-with-ground levels cannot produce 0/0
    if (me2 < 1e-28) continue;
    const double gap = pairs[n].first - pairs[gidx].first;
    sum += me2 / (gap * gap);
  }
  return {clamp_nonnegative(sum), SusceptibilityKind::full,
          SusceptibilityMethod::perturbative_sum};
}

SusceptibilityResult fidelity_susceptibility_closed(const ModelParams& params,
                                                    Branch branch) {
  params.validate();
  const Branch b =
      resolve_branch(params, branch, "fidelity_susceptibility_closed");
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  const EnergyFunctions e = energy_functions(at, block_of(b));
  if (2.0 * e.de <= params.tol_degeneracy)
    throw DegenerateError("fidelity_susceptibility_closed: block gap at or "
                          "below tol_degeneracy (monopole)");
  const double s = std::sin(mixing_angle(at, block_of(b)));
  const double gap = 2.0 * e.de;
  return {s * s / (gap * gap), SusceptibilityKind::full,
          SusceptibilityMethod::closed_form};
}

double bures_fidelity(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("bures_fidelity: dimension mismatch");
  if (numerically_diagonal(a.matrix) && numerically_diagonal(b.matrix)) {
    double f = 0.0;
    for (int i = 0; i < a.dim; ++i) {
      const double p = std::max(a.matrix(i, i).real(), 0.0);
      const double q = std::max(b.matrix(i, i).real(), 0.0);
      f += std::sqrt(p * q);
    }
    return f;
  }
  const MatrixXc s = psd_sqrt(a.matrix);
  MatrixXc m = s * b.matrix * s;
  m = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();
  const double cutoff = 1e-13 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  double f = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > cutoff) f += std::sqrt(ev(i));
  return f;
}

double theta_derivative(const ModelParams& params, BlockSign block) {
  params.validate();
  if (std::abs(params.gamma - 1.0) < kIsotropicTol)
    throw DerivativeUndefinedError(
        "theta_derivative: Theta is piecewise constant on the isotropic line");
  const double f = block == BlockSign::plus ? params.h : -params.h;
  const auto a = detail::mixing_angle_args(params.gamma, f);
  if (a.radicand <= 1e-30)
    throw SingularityError("theta_derivative: vanishing gap radicand");
  const double n2d2 = a.numerator * a.numerator + a.denominator * a.denominator;
  return 6.0 * a.numerator * a.denominator / (std::sqrt(a.radicand) * n2d2);
}

namespace {

// shared between chi_1 and chi_2; both vanish identically on the isotropic
// line where the analytic derivative is disabled
struct PartialTerms {
  bool isotropic = false;
  double theta = 0.0;
  double dtheta = 0.0;
};

PartialTerms partial_terms(const ModelParams& params, Branch branch,
                           const char* who) {
  PartialTerms t;
  if (std::abs(params.gamma - 1.0) < kIsotropicTol) {
    t.isotropic = true;
    return t;
  }
  const Branch b = resolve_branch(params, branch, who);
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  t.theta = mixing_angle(at, block_of(b));
  t.dtheta = theta_derivative(at, block_of(b));
  return t;
}

}  // namespace

SusceptibilityResult partial_fs_one_qubit(const ModelParams& params,
                                          Branch branch) {
  params.validate();
  const PartialTerms t = partial_terms(params, branch, "partial_fs_one_qubit");
  if (t.isotropic)
    return {0.0, SusceptibilityKind::one_qubit, SusceptibilityMethod::closed_form};
  const double c = std::cos(t.theta);
  const double v = (1.0 + c) * t.dtheta * t.dtheta / (4.0 * (2.0 + c));
  return {clamp_nonnegative(v), SusceptibilityKind::one_qubit,
          SusceptibilityMethod::closed_form};
}

SusceptibilityResult partial_fs_two_qubit(const ModelParams& params,
                                          Branch branch) {
  params.validate();
  const PartialTerms t = partial_terms(params, branch, "partial_fs_two_qubit");
  if (t.isotropic)
    return {0.0, SusceptibilityKind::two_qubit, SusceptibilityMethod::closed_form};
  const double c = std::cos(t.theta);
  const double chi1 = (1.0 + c) * t.dtheta * t.dtheta / (4.0 * (2.0 + c));
  const double v = chi1 + t.dtheta * t.dtheta / (4.0 * (2.0 + c));
  return {clamp_nonnegative(v), SusceptibilityKind::two_qubit,
          SusceptibilityMethod::closed_form};
}

}  // namespace lmg
