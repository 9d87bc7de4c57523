// verify.cpp
#include "lmg/verify.hpp"

#include <algorithm>
#include <cmath>

#include "lmg/fidelity.hpp"
#include "lmg/geometry.hpp"
#include "lmg/model.hpp"
#include "lmg/oracle.hpp"
#include "lmg/reduced.hpp"

namespace lmg {
namespace {

void add(PointReport& rep, const std::string& name, double error, double tol) {
  CheckResult c;
  c.name = name;
  c.error = error;
  c.tolerance = tol;
  c.pass = error <= tol;
  rep.entries.push_back(std::move(c));
}

void skip(PointReport& rep, const std::string& name, const std::string& why) {
  CheckResult c;
  c.name = name;
  c.skipped = true;
  c.reason = why;
  rep.entries.push_back(std::move(c));
}

double rel_error(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-12});
  return std::abs(a - b) / scale;
}

}  // namespace

PointReport verify_point(const ModelParams& params, const VerifyConfig& cfg) {
  params.validate();
  PointReport rep;
  rep.params = params;
  const double ts = cfg.tol_scale;

  // spectrum: closed form vs dense eigensolver
  const Matrix8c h = build_hamiltonian(params);
  const EigenDecomposition dense = hermitian_eigensystem(h);
  const auto pairs = eigensystem_closed_form(params);
  std::array<double, 8> closed{};
  for (int i = 0; i < 8; ++i) closed[i] = pairs[i].first;
  std::sort(closed.begin(), closed.end());
  double worst = 0.0;
  for (int i = 0; i < 8; ++i)
    worst = std::max(worst, std::abs(closed[i] - dense.values(i)));
  add(rep, "spectrum_closed_vs_dense", worst, 1e-10 * ts);

  double resid = 0.0, gram = 0.0;
  for (int i = 0; i < 8; ++i) {
    resid = std::max(resid,
                     (h * pairs[i].second - pairs[i].first * pairs[i].second)
                         .norm());
    for (int j = 0; j < 8; ++j) {
      const Complex g = pairs[i].second.dot(pairs[j].second);
      gram = std::max(gram, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  add(rep, "eigenvector_residual", resid, 1e-10 * ts);
  add(rep, "gram_orthonormality", gram, 1e-12 * ts);

  const GroundState gs = ground_state(params);
  const bool degenerate = gs.branch == Branch::degenerate;
  const double dist = std::min(distance_to_crossing(params.gamma, params.h),
                               distance_to_monopole(params.gamma, params.h));

  // reduced closed forms vs partial-trace oracle
  if (degenerate) {
    skip(rep, "reduced_one_vs_trace", "degenerate ground state");
    skip(rep, "reduced_two_vs_trace", "degenerate ground state");
  } else {
    const ReducedOneQubit one = one_qubit_reduced(gs);
    double err1 = 0.0;
    for (int q = 1; q <= 3; ++q) {
      const DensityOperator tr = partial_trace(gs.vector, {q});
      err1 = std::max(err1,
                      (tr.matrix - one.rho.matrix).cwiseAbs().maxCoeff());
    }
    add(rep, "reduced_one_vs_trace", err1, 1e-12 * ts);

    const ReducedTwoQubit two = two_qubit_reduced(gs);
    double err2 = 0.0;
    for (const auto& keep :
         {std::vector<int>{1, 2}, std::vector<int>{1, 3}, std::vector<int>{2, 3}}) {
      const DensityOperator tr = partial_trace(gs.vector, keep);
      err2 = std::max(err2,
                      (tr.matrix - two.varrho.matrix).cwiseAbs().maxCoeff());
    }
    add(rep, "reduced_two_vs_trace", err2, 1e-12 * ts);
  }

  // Berry phase: closed form vs discrete transport
  if (degenerate) {
    skip(rep, "berry_closed_vs_discrete", "degenerate ground state");
  } else if (dist <= cfg.dist_exclusion) {
    skip(rep, "berry_closed_vs_discrete",
         "within exclusion distance of crossing/monopole");
  } else {
    const PhaseResult bp = berry_phase_pure(params);
    const double disc = berry_phase_discrete_oracle(params, cfg.berry_steps);
    add(rep, "berry_closed_vs_discrete", circle_distance(bp.principal, disc),
        1e-4 * ts);
  }

  // mixed phase: arg-of-sum vs weighted reconstruction
  if (degenerate) {
    skip(rep, "mixed_phase_reconstruction", "degenerate ground state");
  } else {
    try {
      const MixedPhaseResult mp = mixed_berry_phase_two_qubit(params);
      const Complex wsum =
          mp.weights[0] * std::exp(Complex(0, mp.eigenphases[0])) +
          mp.weights[1] * std::exp(Complex(0, mp.eigenphases[1]));
      double recon = std::arg(wsum);
      if (gs.flipped) recon = -recon;
      add(rep, "mixed_phase_reconstruction",
          circle_distance(mp.gamma_phase, recon), 1e-12 * ts);
    } catch (const UndefinedPhaseError&) {
      skip(rep, "mixed_phase_reconstruction", "degenerate marginal (GHZ point)");
    }
  }

  // susceptibilities
  const double branch_gap = std::abs(
      energy_functions(params, BlockSign::plus).e_minus -
      energy_functions(params, BlockSign::minus).e_minus);
  const double block_gap =
      degenerate ? 0.0
                 : 2.0 * energy_functions(params, gs.branch == Branch::low_field
                                                      ? BlockSign::plus
                                                      : BlockSign::minus)
                           .de;
  const bool excluded =
      degenerate || std::min(branch_gap, block_gap) <= cfg.gap_exclusion;

  if (degenerate) {
    skip(rep, "chi_sum_vs_closed", "degenerate ground state");
  } else {
    const double a = fidelity_susceptibility_sum(params).value;
    const double b = fidelity_susceptibility_closed(params).value;
    add(rep, "chi_sum_vs_closed", std::abs(a - b), 1e-10 * ts);
  }

  if (excluded) {
    skip(rep, "chi_sum_vs_fd", "gap below exclusion threshold");
    skip(rep, "chi1_vs_bures_fd", "gap below exclusion threshold");
    skip(rep, "chi2_vs_bures_fd", "gap below exclusion threshold");
    skip(rep, "chi_ordering", "gap below exclusion threshold");
  } else {
    const double habs = std::abs(params.h);
    const GroundState center =
        ground_state({params.gamma, habs, params.tol_degeneracy});
    const auto fd_full = [&](double d) {
      const GroundState b =
          ground_state({params.gamma, habs + d, params.tol_degeneracy});
      return std::abs(center.vector.dot(b.vector));
    };
    const double chi_sum = fidelity_susceptibility_sum(params).value;
    const double chi_fd = fd_susceptibility(fd_full, cfg.delta_h);
    add(rep, "chi_sum_vs_fd", rel_error(chi_sum, chi_fd), 1e-3 * ts);

    const auto marginal1 = [&](double d) {
      return one_qubit_reduced(
                 ground_state({params.gamma, habs + d, params.tol_degeneracy}))
          .rho;
    };
    const auto marginal2 = [&](double d) {
      return two_qubit_reduced(
                 ground_state({params.gamma, habs + d, params.tol_degeneracy}))
          .varrho;
    };
    const DensityOperator rho1 = marginal1(0.0);
    const DensityOperator rho2 = marginal2(0.0);
    const double chi1 = partial_fs_one_qubit(params).value;
    const double chi1_fd = fd_susceptibility(
        [&](double d) { return bures_fidelity(rho1, marginal1(d)); },
        cfg.delta_h_marginal);
    add(rep, "chi1_vs_bures_fd",
        std::abs(chi1 - chi1_fd) /
            std::max({std::abs(chi1), std::abs(chi1_fd), 1e-9}),
        1e-3 * ts);

    const double chi2 = partial_fs_two_qubit(params).value;
    const double chi2_fd = fd_susceptibility(
        [&](double d) { return bures_fidelity(rho2, marginal2(d)); },
        cfg.delta_h_marginal);
    add(rep, "chi2_vs_bures_fd",
        std::abs(chi2 - chi2_fd) /
            std::max({std::abs(chi2), std::abs(chi2_fd), 1e-9}),
        1e-3 * ts);

    // chi_full >= chi_2 >= chi_1 >= 0 (chi_full = chi_2 analytically)
    const double chi_full = fidelity_susceptibility_closed(params).value;
    double violation = 0.0;
    violation = std::max(violation, chi2 - chi_full);
    violation = std::max(violation, chi1 - chi2);
    violation = std::max(violation, -chi1);
    add(rep, "chi_ordering", violation, 1e-10 * ts);
  }

  // driving split exactness
  const DrivingSplit split = make_driving_split(params.gamma);
  const Matrix8c rebuilt = split.h0 + params.h * split.h_interaction;
  add(rep, "driving_split_exact",
      (rebuilt - h).cwiseAbs().maxCoeff(), 1e-13 * ts);

  return rep;
}

}  // namespace lmg
