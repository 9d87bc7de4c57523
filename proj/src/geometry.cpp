// geometry.cpp
#include "lmg/geometry.hpp"

#include <cmath>

#include "lmg/reduced.hpp"

namespace lmg {
namespace {

// S_z eigenvalues in the fixed basis order (standard Pauli sign)
constexpr double kSzDiag[8] = {1.5, -0.5, -0.5, -0.5, -1.5, 0.5, 0.5, 0.5};

// (sz x 1 + 1 x sz)/2 eigenvalues in the lexicographic two-qubit basis
constexpr double kJDiag[4] = {1.0, 0.0, 0.0, -1.0};

Branch active_branch(const ModelParams& params, Branch requested) {
  if (requested != Branch::degenerate) return requested;
  const GroundState g = ground_state(params);
  return g.branch == Branch::degenerate ? Branch::low_field : g.branch;
}

BlockSign block_of(Branch branch) {
  return branch == Branch::low_field ? BlockSign::plus : BlockSign::minus;
}

Vector8c rotate(const Vector8c& v, double phi) {
  Vector8c out;
  for (int i = 0; i < 8; ++i)
    out(i) = v(i) * std::exp(Complex(0.0, -phi * kSzDiag[i]));
  return out;
}

}  // namespace

double berry_phase_raw_from_theta(double theta, Branch branch) {
  if (branch == Branch::degenerate)
    throw std::invalid_argument("berry_phase_raw_from_theta: pick a branch");
  const double mag = kTwoPi * (1.0 - std::cos(theta));
  return branch == Branch::low_field ? -mag : mag;
}

PhaseResult berry_phase_pure(const ModelParams& params) {
  const GroundState g = ground_state(params);
  if (g.branch == Branch::degenerate)
    throw DegenerateError("berry_phase_pure: undefined at the branch crossing");
  PhaseResult r;
  r.branch = g.branch;
  r.raw = berry_phase_raw_from_theta(g.theta, g.branch);
  if (g.flipped) r.raw = -r.raw;
  r.principal = principal_phase(r.raw);
  return r;
}

std::pair<EffectiveField, Matrix2c> effective_two_level(
    const ModelParams& params, double phi, Branch branch) {
  params.validate();
  const Branch b = active_branch(params, branch);
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  const EnergyFunctions e = energy_functions(at, block_of(b));
  const double theta = mixing_angle(at, block_of(b));
  const double ysign = b == Branch::low_field ? 1.0 : -1.0;

  EffectiveField field;
  field.magnitude = e.de;
  field.phi = phi;
  field.direction << std::sin(theta) * std::cos(2.0 * phi),
      ysign * std::sin(theta) * std::sin(2.0 * phi), std::cos(theta);

  const double bx = e.de * field.direction(0);
  const double by = e.de * field.direction(1);
  const double bz = e.de * field.direction(2);
  Matrix2c h2;
  h2 << e.e0 - bz, -(bx - Complex(0, 1) * by),
        -(bx + Complex(0, 1) * by), e.e0 + bz;
  return {field, h2};
}

Vector3d monopole_field(const ModelParams& params, Branch branch, double phi) {
  params.validate();
  const Branch b = active_branch(params, branch);
  const auto [field, h2] = effective_two_level(params, phi, b);
  (void)h2;
  if (field.magnitude <= params.tol_degeneracy) {
    const char* where = b == Branch::low_field ? "(1, -1/3)" : "(1, +1/3)";
    throw SingularityError(
        std::string("monopole_field: dE vanishes; effective monopole of this "
                    "branch sits at (gamma, h) = ") + where);
  }
  const double charge = b == Branch::low_field ? -0.5 : 0.5;
  return charge * field.direction / (field.magnitude * field.magnitude);
}

double berry_phase_discrete_oracle(const ModelParams& params, int steps) {
  if (steps < 16)
    throw std::invalid_argument("berry_phase_discrete_oracle: K >= 16 required");
  const GroundState g = ground_state(params);
  if (g.branch == Branch::degenerate)
    throw DegenerateError("berry_phase_discrete_oracle: degenerate ground state");

  double connection = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double p0 = kTwoPi * k / steps;
    const double p1 = kTwoPi * (k + 1) / steps;
    const Complex overlap = rotate(g.vector, p0).dot(rotate(g.vector, p1));
    if (std::abs(overlap) < 1e-12)
      throw OracleError("berry_phase_discrete_oracle: vanishing step overlap");
    connection += std::arg(overlap);
  }
  const Complex endpoint = g.vector.dot(rotate(g.vector, kTwoPi));
  return principal_phase(std::arg(endpoint) - connection);
}

double eigenstate_berry_phase(double theta, Branch branch) {
  if (branch == Branch::degenerate)
    throw std::invalid_argument("eigenstate_berry_phase: pick a branch");
  const double c = std::cos(theta);
  const double quenched = kTwoPi * (1.0 - c) / (2.0 + c);  // 2 + cos >= 1
  return branch == Branch::low_field ? -quenched : quenched;
}

MixedPhaseResult mixed_berry_phase_two_qubit(const ModelParams& params) {
  const GroundState g = ground_state(params);
  const Branch b =
      g.branch == Branch::degenerate ? Branch::low_field : g.branch;
  const double theta =
      g.branch == Branch::degenerate
          ? mixing_angle({params.gamma, std::abs(params.h),
                          params.tol_degeneracy}, BlockSign::plus)
          : g.theta;
  const double c = std::cos(theta);
  const double r = (1.0 + 2.0 * c) / 3.0;
  if (std::abs(r) <= kDegenerateMarginalTol)
    throw UndefinedPhaseError(
        "mixed_berry_phase_two_qubit: marginal has nonzero degenerate "
        "eigenvalues; the interferometric phase is undefined");
  if (g.branch == Branch::degenerate)
    throw DegenerateError("mixed_berry_phase_two_qubit: ground state is "
                          "degenerate at the branch crossing");

  MixedPhaseResult out;
  out.eigenphases = {eigenstate_berry_phase(theta, b), kBetaTwo};
  out.weights = {(2.0 + c) / 3.0, (1.0 - c) / 3.0};
  const Complex sum = (2.0 + c) * std::exp(Complex(0, out.eigenphases[0])) +
                      (1.0 - c) * std::exp(Complex(0, kBetaTwo));
  double gam = std::arg(sum);
  if (g.flipped) gam = -gam;
  out.gamma_phase = principal_phase(gam);
  out.defined = true;
  return out;
}

double two_qubit_visibility(const ModelParams& params, double phi) {
  const GroundState g = ground_state(params);
  const GroundState pick =
      g.branch == Branch::degenerate ? branch_state(params, Branch::low_field)
                                     : g;
  const ReducedTwoQubit red = two_qubit_reduced(pick);
  Complex tr = 0.0;
  for (int i = 0; i < 4; ++i)
    tr += std::exp(Complex(0.0, -phi * kJDiag[i])) * red.varrho.matrix(i, i);
  return std::abs(tr);
}

}  // namespace lmg
