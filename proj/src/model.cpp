// model.cpp - Hamiltonian construction and closed-form eigensystem
#include "lmg/model.hpp"

#include <algorithm>
#include <cmath>

namespace lmg {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// paper-order position -> lexicographic basis index (b1 b2 b3 bits)
constexpr int kLexIndex[8] = {0, 3, 5, 6, 7, 4, 2, 1};

// single-qubit Pauli applied to qubit q (1..3) of a lexicographic 8x8
Matrix8c pauli_on(int q, const Matrix2c& p) {
  Matrix8c out = Matrix8c::Zero();
  const int shift = 3 - q;  // qubit 1 is the most significant bit
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int abit = (a >> shift) & 1;
      const int bbit = (b >> shift) & 1;
      const int arest = a & ~(1 << shift);
      const int brest = b & ~(1 << shift);
      if (arest == brest) out(a, b) = p(abit, bbit);
    }
  }
  return out;
}

Matrix8c to_paper_order(const Matrix8c& lex) {
  Matrix8c out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out(i, j) = lex(kLexIndex[i], kLexIndex[j]);
  return out;
}

Matrix8c total_spin(const Matrix2c& p) {
  Matrix8c s = Matrix8c::Zero();
  for (int q = 1; q <= 3; ++q) s += pauli_on(q, p);
  return to_paper_order(0.5 * s);
}

Matrix2c pauli_x_2() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2c pauli_y_2() {
  Matrix2c m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix2c pauli_z_2() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix4c block_p(double gamma, double h) {
  const double a = -(1.0 - gamma) / 6.0;
  const double b = -(1.0 + gamma) / 6.0;
  Matrix4c p;
  p << 1.5 * h, a, a, a,
       a, -0.5 * h, b, b,
       a, b, -0.5 * h, b,
       a, b, b, -0.5 * h;
  return p;
}

// V_- and V_+ of one block, embedded at offset 0 (even) or 4 (odd)
Vector8c block_vector(double theta, int offset, bool upper) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Vector8c v = Vector8c::Zero();
  if (upper) {  // V_+ = -sin |pole> + cos |W-type>
    v(offset) = -s;
    for (int i = 1; i < 4; ++i) v(offset + i) = c / kSqrt3;
  } else {  // V_- = cos |pole> + sin |W-type>
    v(offset) = c;
    for (int i = 1; i < 4; ++i) v(offset + i) = s / kSqrt3;
  }
  return v;
}

// bit-flip permutation |b1 b2 b3> -> |~b1 ~b2 ~b3>; in the fixed order this
// is the exchange of positions i and i+4
Vector8c bit_flip(const Vector8c& v) {
  Vector8c out;
  for (int i = 0; i < 4; ++i) {
    out(i) = v(i + 4);
    out(i + 4) = v(i);
  }
  return out;
}

}  // namespace

Matrix8c build_hamiltonian(const ModelParams& params) {
  params.validate();
  Matrix8c h = Matrix8c::Zero();
  h.block<4, 4>(0, 0) = block_p(params.gamma, params.h);
  h.block<4, 4>(4, 4) = block_p(params.gamma, -params.h);
  return h;
}

Matrix8c spin_x() { return total_spin(pauli_x_2()); }
Matrix8c spin_y() { return total_spin(pauli_y_2()); }
Matrix8c spin_z() { return total_spin(pauli_z_2()); }

Matrix8c spin_squared() {
  const Matrix8c sx = spin_x(), sy = spin_y(), sz = spin_z();
  return sx * sx + sy * sy + sz * sz;
}

Matrix8c parity_zzz() {
  Matrix8c p = pauli_on(1, pauli_z_2()) * pauli_on(2, pauli_z_2()) *
               pauli_on(3, pauli_z_2());
  return to_paper_order(p);
}

Matrix8c parity_xxx() {
  Matrix8c p = pauli_on(1, pauli_x_2()) * pauli_on(2, pauli_x_2()) *
               pauli_on(3, pauli_x_2());
  return to_paper_order(p);
}

namespace detail {

MixingAngleArgs mixing_angle_args(double gamma, double field) {
  MixingAngleArgs a;
  double rad = 9.0 * field * field + 3.0 * field * (1.0 + gamma) + 1.0 -
               gamma + gamma * gamma;
  if (rad < 0.0) rad = 0.0;  // analytic minimum is 3(1-gamma)^2/4 >= 0
  a.radicand = rad;
  a.numerator = kSqrt3 * (gamma - 1.0);
  a.denominator = 6.0 * field + 1.0 + gamma - 2.0 * std::sqrt(rad);
  return a;
}

double theta_of(double gamma, double field) {
  const MixingAngleArgs a = mixing_angle_args(gamma, field);
  if (std::abs(a.numerator) < 1e-13 && std::abs(a.denominator) < 1e-13) {
    // isotropic degeneration: the gamma -> 1 limit is pi on the side of the
    // block where the pole state is the excited one
    return (3.0 * field + 1.0 > 0.0) ? kPi : 0.0;
  }
  double t = std::fmod(2.0 * std::atan2(a.numerator, a.denominator), kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

ResolvedField resolve_field(const ModelParams& params) {
  ResolvedField r;
  r.flipped = params.h < 0.0;
  r.habs = std::abs(params.h);
  return r;
}

}  // namespace detail

EnergyFunctions energy_functions(const ModelParams& params, BlockSign block) {
  params.validate();
  const double f = (block == BlockSign::plus) ? params.h : -params.h;
  const auto args = detail::mixing_angle_args(params.gamma, f);
  EnergyFunctions e;
  e.e0 = (3.0 * f - 1.0 - params.gamma) / 6.0;
  e.de = std::sqrt(args.radicand) / 3.0;
  e.e_minus = e.e0 - e.de;
  e.e_plus = e.e0 + e.de;
  return e;
}

double mixing_angle(const ModelParams& params, BlockSign block) {
  params.validate();
  const double f = (block == BlockSign::plus) ? params.h : -params.h;
  return detail::theta_of(params.gamma, f);
}

Spectrum spectrum(const ModelParams& params) {
  const EnergyFunctions ep = energy_functions(params, BlockSign::plus);
  const EnergyFunctions em = energy_functions(params, BlockSign::minus);
  Spectrum s;
  s.e0_plus = ep.e0;
  s.de_plus = ep.de;
  s.e0_minus = em.e0;
  s.de_minus = em.de;
  s.theta_plus = mixing_angle(params, BlockSign::plus);
  s.theta_minus = mixing_angle(params, BlockSign::minus);
  s.e_degenerate_plus = -ep.e0;
  s.e_degenerate_minus = -em.e0;
  return s;
}

std::array<std::pair<double, Vector8c>, 8> eigensystem_closed_form(
    const ModelParams& params) {
  const Spectrum s = spectrum(params);
  std::array<std::pair<double, Vector8c>, 8> out;
  for (int blk = 0; blk < 2; ++blk) {
    const int off = 4 * blk;
    const double theta = blk == 0 ? s.theta_plus : s.theta_minus;
    const double e0 = blk == 0 ? s.e0_plus : s.e0_minus;
    const double de = blk == 0 ? s.de_plus : s.de_minus;
    out[off + 0] = {e0 - de, block_vector(theta, off, false)};
    out[off + 1] = {e0 + de, block_vector(theta, off, true)};
    Vector8c v1 = Vector8c::Zero();
    v1(off + 1) = 1.0 / std::sqrt(2.0);
    v1(off + 3) = -1.0 / std::sqrt(2.0);
    Vector8c v2 = Vector8c::Zero();
    v2(off + 1) = 1.0 / std::sqrt(6.0);
    v2(off + 2) = -2.0 / std::sqrt(6.0);
    v2(off + 3) = 1.0 / std::sqrt(6.0);
    out[off + 2] = {-e0, v1};
    out[off + 3] = {-e0, v2};
  }
  return out;
}

double crossing_field(double gamma) {
  if (!(gamma >= 0.0))
    throw std::domain_error("crossing_field: gamma must be >= 0");
  return (2.0 / 3.0) * std::sqrt(gamma);
}

GroundState ground_state(const ModelParams& params) {
  params.validate();
  if (params.gamma < 0.0)
    throw std::domain_error("ground_state: gamma must be >= 0");
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  const EnergyFunctions ep = energy_functions(at, BlockSign::plus);
  const EnergyFunctions em = energy_functions(at, BlockSign::minus);

  GroundState g;
  g.flipped = rf.flipped;
  // h = 0 is the h_c^(1) line; the h >= 0 convention assigns it LowField.
  if (rf.habs > 0.0 &&
      std::abs(ep.e_minus - em.e_minus) <= params.tol_degeneracy) {
    g.branch = Branch::degenerate;
    g.theta = mixing_angle(at, BlockSign::plus);
    g.energy = ep.e_minus;
    g.vector = block_vector(g.theta, 0, false);
  } else if (ep.e_minus <= em.e_minus) {
    g.branch = Branch::low_field;
    g.theta = mixing_angle(at, BlockSign::plus);
    g.energy = ep.e_minus;
    g.vector = block_vector(g.theta, 0, false);
  } else {
    g.branch = Branch::high_field;
    g.theta = mixing_angle(at, BlockSign::minus);
    g.energy = em.e_minus;
    g.vector = block_vector(g.theta, 4, false);
  }
  if (g.flipped) g.vector = bit_flip(g.vector);
  return g;
}

GroundState branch_state(const ModelParams& params, Branch branch) {
  params.validate();
  if (branch == Branch::degenerate)
    throw std::invalid_argument("branch_state: pick low_field or high_field");
  if (params.gamma < 0.0)
    throw std::domain_error("branch_state: gamma must be >= 0");
  const auto rf = detail::resolve_field(params);
  const ModelParams at{params.gamma, rf.habs, params.tol_degeneracy};
  const BlockSign block =
      branch == Branch::low_field ? BlockSign::plus : BlockSign::minus;
  const EnergyFunctions e = energy_functions(at, block);
  GroundState g;
  g.branch = branch;
  g.flipped = rf.flipped;
  g.theta = mixing_angle(at, block);
  g.energy = e.e_minus;
  g.vector = block_vector(g.theta, branch == Branch::low_field ? 0 : 4, false);
  if (g.flipped) g.vector = bit_flip(g.vector);
  return g;
}

GroundStateClass classify_ground_state(const ModelParams& params,
                                       double class_tol, Branch branch) {
  if (!(class_tol > 0.0))
    throw std::invalid_argument("classify_ground_state: class_tol must be > 0");
  GroundState g = branch == Branch::degenerate
                      ? ground_state(params)
                      : branch_state(params, branch);
  Branch active = g.branch == Branch::degenerate ? Branch::low_field : g.branch;
  if (g.branch == Branch::degenerate) g = branch_state(params, active);

  const auto overlap2 = [&g](const Vector8c& ref) {
    const Vector8c v = g.flipped ? Vector8c(bit_flip(g.vector)) : g.vector;
    return std::norm(ref.dot(v));
  };
  const Vector8c w_ref =
      active == Branch::low_field ? w_bar_state() : w_state();
  const Vector8c product_ref =
      active == Branch::low_field ? basis_state(0) : basis_state(4);
  const Vector8c ghz_ref = ghz_x_state(active == Branch::low_field ? +1 : -1);

  GroundStateClass out;
  const auto rf = detail::resolve_field(params);
  const bool at_origin =
      std::abs(params.gamma) <= class_tol && rf.habs <= class_tol;
  if (at_origin && circle_distance(g.theta, 2.0 * kPi / 3.0) <= class_tol) {
    out.kind = GroundStateClass::Kind::ghz;
    out.witness = overlap2(ghz_ref);
  } else if (circle_distance(g.theta, kPi) <= class_tol) {
    out.kind = GroundStateClass::Kind::w;
    out.witness = overlap2(w_ref);
  } else if (circle_distance(g.theta, 0.0) <= class_tol) {
    out.kind = GroundStateClass::Kind::product;
    out.witness = overlap2(product_ref);
  } else {
    out.kind = GroundStateClass::Kind::generic;
    out.witness = std::max({overlap2(w_ref), overlap2(product_ref),
                            overlap2(ghz_ref)});
  }
  return out;
}

Vector8c w_state() {
  Vector8c v = Vector8c::Zero();
  for (int i = 5; i < 8; ++i) v(i) = 1.0 / kSqrt3;
  return v;
}

Vector8c w_bar_state() {
  Vector8c v = Vector8c::Zero();
  for (int i = 1; i < 4; ++i) v(i) = 1.0 / kSqrt3;
  return v;
}

Vector8c ghz_x_state(int sign) {
  // (|+++> + |--->)/sqrt(2) is uniform over the even-parity states,
  // (|+++> - |--->)/sqrt(2) over the odd-parity ones
  Vector8c v = Vector8c::Zero();
  const int off = sign >= 0 ? 0 : 4;
  for (int i = 0; i < 4; ++i) v(off + i) = 0.5;
  return v;
}

Vector8c basis_state(int index) {
  if (index < 0 || index > 7)
    throw std::invalid_argument("basis_state: index out of range");
  Vector8c v = Vector8c::Zero();
  v(index) = 1.0;
  return v;
}

double distance_to_crossing(double gamma, double h) {
  // minimize (u^2-gamma)^2 + (h - 2u/3)^2 over u = sqrt(gamma') >= 0
  const auto d2 = [gamma, h](double u) {
    const double dg = u * u - gamma;
    const double dh = h - (2.0 / 3.0) * u;
    return dg * dg + dh * dh;
  };
  const double umax = std::sqrt(std::max(gamma, 2.0)) + 2.0;
  const int n = 400;
  int best = 0;
  double bestval = d2(0.0);
  for (int i = 1; i <= n; ++i) {
    const double u = umax * i / n;
    const double v = d2(u);
    if (v < bestval) {
      bestval = v;
      best = i;
    }
  }
  double lo = umax * std::max(0, best - 1) / n;
  double hi = umax * std::min(n, best + 1) / n;
  for (int it = 0; it < 80; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (d2(m1) < d2(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::sqrt(d2(0.5 * (lo + hi)));
}

double distance_to_monopole(double gamma, double h) {
  const double dg = gamma - 1.0;
  const double da = h - 1.0 / 3.0;
  const double db = h + 1.0 / 3.0;
  return std::sqrt(dg * dg + std::min(da * da, db * db));
}

}  // namespace lmg
