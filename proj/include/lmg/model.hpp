// model.hpp - three-qubit LMG Hamiltonian, closed-form spectrum and ground state
//
// Fixed computational basis order throughout:
//   {|000>, |011>, |101>, |110>, |111>, |100>, |010>, |001>}
// so the Hamiltonian is literally block-diagonal in memory: the first four
// states span the even spin-parity block P(gamma, h), the last four the odd
// block P(gamma, -h).
#pragma once

#include <array>
#include <utility>

#include "lmg/types.hpp"

namespace lmg {

/// Closed-form energy functions of one parity block, evaluated at the
/// block's field argument: E_pm = e0 -+/+- de.
struct EnergyFunctions {
  double e0 = 0.0;       // (3h - 1 - gamma)/6
  double de = 0.0;       // sqrt(9h^2 + 3h(1+gamma) + 1 - gamma + gamma^2)/3
  double e_minus = 0.0;  // e0 - de
  double e_plus = 0.0;   // e0 + de
};

/// Both blocks' energy functions plus mixing angles and doublet energies.
struct Spectrum {
  double e0_plus = 0.0, de_plus = 0.0;
  double e0_minus = 0.0, de_minus = 0.0;
  double theta_plus = 0.0, theta_minus = 0.0;
  double e_degenerate_plus = 0.0;   // -e0(gamma, +h), two-fold
  double e_degenerate_minus = 0.0;  // -e0(gamma, -h), two-fold

  /// All eight closed-form eigenvalues, unsorted fixed order:
  /// {E-+, E++, doublet+ x2, E--, E+-, doublet- x2}.
  std::array<double, 8> eight() const {
    return {e0_plus - de_plus,   e0_plus + de_plus,   e_degenerate_plus,
            e_degenerate_plus,   e0_minus - de_minus, e0_minus + de_minus,
            e_degenerate_minus,  e_degenerate_minus};
  }
};

struct GroundState {
  Branch branch = Branch::low_field;
  Vector8c vector = Vector8c::Zero();
  double theta = 0.0;   // mixing angle of the occupied block
  double energy = 0.0;
  bool flipped = false;  // true when h < 0 was mapped through the block swap
};

struct GroundStateClass {
  enum class Kind { w, product, ghz, generic };
  Kind kind = Kind::generic;
  double witness = 0.0;  // squared overlap with the matched reference state
};

inline const char* to_string(GroundStateClass::Kind k) {
  switch (k) {
    case GroundStateClass::Kind::w: return "W";
    case GroundStateClass::Kind::product: return "Product";
    case GroundStateClass::Kind::ghz: return "GHZ";
    default: return "Generic";
  }
}

/// h_c^(1): the h = 0 crossing line (any gamma).
inline constexpr double kCrossingFieldFirst = 0.0;

/// H(gamma, h): dense 8x8, exactly block-diagonal, Hermitian by construction.
Matrix8c build_hamiltonian(const ModelParams& params);

/// Total-spin component operators in the fixed basis order, standard Pauli
/// signs (sigma_z = |0><0| - |1><1|, so S_z|000> = +3/2 |000>). Note the
/// block Hamiltonian's field term is +h S_z in this convention.
Matrix8c spin_x();
Matrix8c spin_y();
Matrix8c spin_z();
Matrix8c spin_squared();

/// sigma_z x sigma_z x sigma_z: the conserved spin parity whose +-1 sectors
/// are the two 4x4 blocks. Commutes with H exactly for every (gamma, h).
Matrix8c parity_zzz();

/// sigma_x x sigma_x x sigma_x: the block-swap operator,
/// X.H(gamma, h).X = H(gamma, -h). It commutes with H only at h = 0.
Matrix8c parity_xxx();

/// Evaluates the block energy functions at field argument +h or -h.
EnergyFunctions energy_functions(const ModelParams& params, BlockSign block);

/// Mixing angle Theta(gamma, +-h) in [0, 2pi), quadrant fixed by
/// mod(2*atan2(sqrt(3)(gamma-1), 6h + 1 + gamma - 2*sqrt(radicand)), 2pi).
/// The isotropic 0/0 degeneration returns the analytic limit:
/// pi when 3h_block + 1 > 0, else 0.
double mixing_angle(const ModelParams& params, BlockSign block);

Spectrum spectrum(const ModelParams& params);

/// All eight closed-form eigenpairs, fixed order matching Spectrum::eight().
std::array<std::pair<double, Vector8c>, 8> eigensystem_closed_form(
    const ModelParams& params);

/// h_c^(2)(gamma) = (2/3) sqrt(gamma). Throws std::domain_error for gamma < 0.
double crossing_field(double gamma);

/// Ground state at (gamma, h). Negative h is mapped through the h <-> -h
/// block swap (vector bit-flipped, flipped flag set). Within tol_degeneracy
/// of the branch crossing the state is flagged Degenerate and carries the
/// LowField vector; use branch_state() to retrieve either branch there.
GroundState ground_state(const ModelParams& params);

/// The V_- state of an explicitly chosen branch, defined at every point
/// (also exactly on the crossing). branch must not be degenerate.
GroundState branch_state(const ModelParams& params, Branch branch);

/// Classifies the (possibly branch-picked) ground state. W if Theta is
/// within class_tol of pi, Product if within class_tol of 0 (mod 2pi), GHZ
/// if Theta is within class_tol of 2pi/3 with (gamma, h) at the origin
/// (|gamma|, |h| <= class_tol). At degenerate points defaults to LowField.
GroundStateClass classify_ground_state(const ModelParams& params,
                                       double class_tol,
                                       Branch branch = Branch::degenerate);

// Reference states (unit vectors in the fixed basis order).
Vector8c w_state();         // (|100> + |010> + |001>)/sqrt(3)
Vector8c w_bar_state();     // (|011> + |101> + |110>)/sqrt(3)
Vector8c ghz_x_state(int sign);  // (|+++> +- |--->)/sqrt(2) = V_-^(+-)(0,0)
Vector8c basis_state(int index);

/// Euclidean distance from (gamma, h) to the crossing curve h_c^(2).
double distance_to_crossing(double gamma, double h);

/// Euclidean distance from (gamma, h) to the nearer monopole (1, +-1/3).
double distance_to_monopole(double gamma, double h);

namespace detail {
/// atan2 arguments of half the mixing angle; reused by the analytic
/// theta derivative.
struct MixingAngleArgs {
  double numerator = 0.0;    // sqrt(3) (gamma - 1)
  double denominator = 0.0;  // 6h + 1 + gamma - 2 sqrt(radicand)
  double radicand = 0.0;     // clamped at 0 within floating noise
};
MixingAngleArgs mixing_angle_args(double gamma, double field);
double theta_of(double gamma, double field);
/// Resolves h < 0 through the block swap: field magnitude plus flip flag.
struct ResolvedField {
  double habs = 0.0;
  bool flipped = false;
};
ResolvedField resolve_field(const ModelParams& params);
}  // namespace detail

}  // namespace lmg
