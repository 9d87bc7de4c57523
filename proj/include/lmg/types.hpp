// types.hpp - shared scalar/matrix typedefs, model parameters, error types
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace lmg {

using Complex = std::complex<double>;
using Vector2c = Eigen::Matrix<Complex, 2, 1>;
using Vector3d = Eigen::Matrix<double, 3, 1>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;
using Vector8c = Eigen::Matrix<Complex, 8, 1>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A point (gamma, h) in parameter space plus the degeneracy tolerance
/// used when deciding whether the two candidate ground states cross.
struct ModelParams {
  double gamma = 1.0;
  double h = 0.0;
  double tol_degeneracy = 1e-9;  // absolute energy-gap threshold

  void validate() const {
    if (!std::isfinite(gamma) || !std::isfinite(h))
      throw std::invalid_argument("ModelParams: gamma and h must be finite");
    if (!(tol_degeneracy > 0.0) || !std::isfinite(tol_degeneracy))
      throw std::invalid_argument("ModelParams: tol_degeneracy must be > 0");
  }
};

/// Which of the two candidate ground states is active.
/// LowField lives in the even-parity block, HighField in the odd one.
enum class Branch { low_field, high_field, degenerate };

/// Selects the field argument of the two-branch closed forms:
/// plus evaluates at (gamma, +h), minus at (gamma, -h).
enum class BlockSign { plus, minus };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::low_field: return "LowField";
    case Branch::high_field: return "HighField";
    default: return "Degenerate";
  }
}

// Error taxonomy. Operations that are undefined at crossings, monopoles or
// degenerate marginals throw dedicated types so callers can tell them apart
// from plain argument errors.

struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedPhaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DerivativeUndefinedError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Reduce a phase to the principal interval (-pi, pi].
inline double principal_phase(double raw) {
  double r = std::remainder(raw, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Distance between two phases on the circle.
inline double circle_distance(double a, double b) {
  return std::abs(principal_phase(a - b));
}

}  // namespace lmg
