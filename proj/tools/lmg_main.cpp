// lmg_main.cpp - command-line driver: point evaluations, grid sweeps and the
// closed-form/oracle verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lmg/fidelity.hpp"
#include "lmg/geometry.hpp"
#include "lmg/model.hpp"
#include "lmg/oracle.hpp"
#include "lmg/reduced.hpp"
#include "lmg/sweep.hpp"
#include "lmg/verify.hpp"

namespace {

struct RangeSpec {
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

RangeSpec parse_range(const std::string& text) {
  RangeSpec r;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("range", "expected format a:b:n, got '" + text + "'");
  try {
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.steps = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "cannot parse '" + text + "' as a:b:n");
  }
  return r;
}

int run_spectrum(double gamma, double h) {
  const lmg::ModelParams params{gamma, h, 1e-9};
  const lmg::Spectrum s = lmg::spectrum(params);
  const lmg::GroundState g = lmg::ground_state(params);
  std::printf("gamma=%.17g h=%.17g\n", gamma, h);
  std::printf("E_minus_plus=%.17g\nE_plus_plus=%.17g\nE_doublet_plus=%.17g\n",
              s.e0_plus - s.de_plus, s.e0_plus + s.de_plus, s.e_degenerate_plus);
  std::printf("E_minus_minus=%.17g\nE_plus_minus=%.17g\nE_doublet_minus=%.17g\n",
              s.e0_minus - s.de_minus, s.e0_minus + s.de_minus,
              s.e_degenerate_minus);
  std::printf("theta_plus=%.17g\ntheta_minus=%.17g\n", s.theta_plus,
              s.theta_minus);
  std::printf("branch=%s\nground_energy=%.17g\n", lmg::to_string(g.branch),
              g.energy);
  return 0;
}

int run_berry(double gamma, double h, int oracle_steps) {
  const lmg::ModelParams params{gamma, h, 1e-9};
  const lmg::PhaseResult p = lmg::berry_phase_pure(params);
  std::printf("gamma=%.17g h=%.17g branch=%s\n", gamma, h,
              lmg::to_string(p.branch));
  std::printf("raw=%.17g\nprincipal=%.17g\n", p.raw, p.principal);
  if (oracle_steps > 0) {
    const double d = lmg::berry_phase_discrete_oracle(params, oracle_steps);
    std::printf("oracle=%.17g\ncircle_diff=%.3e\n", d,
                lmg::circle_distance(p.principal, d));
  }
  try {
    const lmg::MixedPhaseResult m = lmg::mixed_berry_phase_two_qubit(params);
    std::printf("mixed_gamma=%.17g\n", m.gamma_phase);
  } catch (const lmg::UndefinedPhaseError&) {
    std::printf("mixed_gamma=undefined (degenerate marginal)\n");
  }
  return 0;
}

int run_fidelity(double gamma, double h, double delta_h, double delta_h_marginal) {
  const lmg::ModelParams params{gamma, h, 1e-9};
  const double chi_sum = lmg::fidelity_susceptibility_sum(params).value;
  const double chi_closed = lmg::fidelity_susceptibility_closed(params).value;
  const double chi1 = lmg::partial_fs_one_qubit(params).value;
  const double chi2 = lmg::partial_fs_two_qubit(params).value;
  std::printf("gamma=%.17g h=%.17g\n", gamma, h);
  std::printf("chi_full_sum=%.17g\nchi_full_closed=%.17g\n", chi_sum, chi_closed);
  std::printf("chi_1q=%.17g\nchi_2q=%.17g\n", chi1, chi2);

  const double habs = std::abs(h);
  const auto ground_at = [&](double d) {
    return lmg::ground_state({gamma, habs + d, 1e-9});
  };
  const lmg::GroundState center = ground_at(0.0);
  const double fd_full = lmg::fd_susceptibility(
      [&](double d) { return std::abs(center.vector.dot(ground_at(d).vector)); },
      delta_h);
  const lmg::DensityOperator r1 = lmg::one_qubit_reduced(center).rho;
  const lmg::DensityOperator r2 = lmg::two_qubit_reduced(center).varrho;
  const double fd1 = lmg::fd_susceptibility(
      [&](double d) {
        return lmg::bures_fidelity(r1, lmg::one_qubit_reduced(ground_at(d)).rho);
      },
      delta_h_marginal);
  const double fd2 = lmg::fd_susceptibility(
      [&](double d) {
        return lmg::bures_fidelity(r2,
                                   lmg::two_qubit_reduced(ground_at(d)).varrho);
      },
      delta_h_marginal);
  std::printf("fd_full=%.17g (delta_h=%g)\n", fd_full, delta_h);
  std::printf("fd_1q=%.17g fd_2q=%.17g (delta_h_marginal=%g)\n", fd1, fd2,
              delta_h_marginal);
  return 0;
}

int run_verify(int grid, double tol_scale, bool verbose) {
  lmg::VerifyConfig cfg;
  cfg.tol_scale = tol_scale;
  int checks = 0, skipped = 0, failures = 0;
  for (int i = 0; i < grid; ++i) {
    const double gamma = 2.0 * i / (grid - 1 > 0 ? grid - 1 : 1);
    for (int j = 0; j < grid; ++j) {
      const double h = 1.2 * j / (grid - 1 > 0 ? grid - 1 : 1);
      const lmg::PointReport rep = lmg::verify_point({gamma, h, 1e-9}, cfg);
      for (const auto& e : rep.entries) {
        ++checks;
        if (e.skipped) {
          ++skipped;
          if (verbose)
            std::printf("SKIP  (%.3f, %.3f) %s: %s\n", gamma, h,
                        e.name.c_str(), e.reason.c_str());
          continue;
        }
        if (!e.pass) {
          ++failures;
          std::printf("FAIL  (%.3f, %.3f) %s: error=%.3e tol=%.3e\n", gamma, h,
                      e.name.c_str(), e.error, e.tolerance);
        } else if (verbose) {
          std::printf("pass  (%.3f, %.3f) %s: error=%.3e tol=%.3e\n", gamma, h,
                      e.name.c_str(), e.error, e.tolerance);
        }
      }
    }
  }
  std::printf("verify: %d points, %d checks, %d skipped, %d failures\n",
              grid * grid, checks, skipped, failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit LMG ground state toolkit: spectrum, Berry phases, "
               "fidelity susceptibilities, sweeps and verification"};
  app.require_subcommand(1);
  // --h is a model flag, so the help flag keeps only its long form
  app.set_help_flag("--help", "Print help and exit");

  double gamma = 1.0, h = 0.0;
  int oracle_steps = 0;
  double delta_h = 1e-4, delta_h_marginal = 3e-3;

  auto* sc_spectrum = app.add_subcommand(
      "spectrum", "Eight closed-form energies, mixing angles and the branch");
  sc_spectrum->set_help_flag("--help", "Print help and exit");
  sc_spectrum->add_option("--gamma", gamma, "anisotropy parameter")->required();
  sc_spectrum->add_option("--h", h, "field strength")->required();

  auto* sc_berry = app.add_subcommand(
      "berry", "Ground-state Berry phase (closed form, optional discrete oracle)");
  sc_berry->set_help_flag("--help", "Print help and exit");
  sc_berry->add_option("--gamma", gamma)->required();
  sc_berry->add_option("--h", h)->required();
  sc_berry->add_option("--oracle-steps", oracle_steps,
                       "discretization steps K (0 = closed form only)")
      ->default_val(0);

  auto* sc_fidelity = app.add_subcommand(
      "fidelity", "Fidelity susceptibilities plus finite-difference oracles");
  sc_fidelity->set_help_flag("--help", "Print help and exit");
  sc_fidelity->add_option("--gamma", gamma)->required();
  sc_fidelity->add_option("--h", h)->required();
  sc_fidelity->add_option("--delta-h", delta_h, "full-state FD step")
      ->default_val(1e-4);
  sc_fidelity
      ->add_option("--delta-h-marginal", delta_h_marginal,
                   "Bures marginal FD step")
      ->default_val(3e-3);

  std::string gamma_range = "0:2:41", h_range = "0:1.2:41";
  std::string quantities_arg = "energies";
  std::string format_arg = "csv", out_path = "-";
  double skip_radius = 0.01;
  int preset = 0;
  auto* sc_sweep =
      app.add_subcommand("sweep", "Evaluate quantities on a (gamma, h) grid");
  sc_sweep->set_help_flag("--help", "Print help and exit");
  sc_sweep->add_option("--gamma-range", gamma_range, "a:b:n (n grid points)")
      ->default_val("0:2:41");
  sc_sweep->add_option("--h-range", h_range, "a:b:n")->default_val("0:1.2:41");
  sc_sweep->add_option(
      "--quantities", quantities_arg,
      "comma list of energies,theta,berry_raw,berry_abs,mixed_berry_abs,"
      "chi_full,chi_1q,chi_2q,monopole_mag");
  sc_sweep->add_option("--format", format_arg, "csv or json")->default_val("csv");
  sc_sweep->add_option("--out", out_path, "output path or - for stdout")
      ->default_val("-");
  sc_sweep->add_option("--skip-radius", skip_radius,
                       "NA radius around crossings/monopoles")
      ->default_val(0.01);
  sc_sweep->add_option("--preset", preset,
                       "figure preset 1..6 (overrides --quantities)")
      ->default_val(0);

  int grid = 21;
  double tol_scale = 1.0;
  bool verbose = false;
  auto* sc_verify = app.add_subcommand(
      "verify", "Run every closed-form/oracle pair over a grid");
  sc_verify->set_help_flag("--help", "Print help and exit");
  sc_verify->add_option("--grid", grid, "grid points per axis")->default_val(21);
  sc_verify->add_option("--tol-scale", tol_scale, "tolerance multiplier")
      ->default_val(1.0);
  sc_verify->add_flag("--verbose", verbose, "print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_spectrum->parsed()) return run_spectrum(gamma, h);
    if (sc_berry->parsed()) return run_berry(gamma, h, oracle_steps);
    if (sc_fidelity->parsed())
      return run_fidelity(gamma, h, delta_h, delta_h_marginal);
    if (sc_verify->parsed()) return run_verify(grid, tol_scale, verbose);
    if (sc_sweep->parsed()) {
      lmg::SweepSpec spec;
      if (preset != 0) {
        spec = lmg::figure_preset(preset);
      } else {
        for (std::size_t pos = 0; pos < quantities_arg.size();) {
          auto comma = quantities_arg.find(',', pos);
          if (comma == std::string::npos) comma = quantities_arg.size();
          const std::string name = quantities_arg.substr(pos, comma - pos);
          const auto q = lmg::quantity_from_string(name);
          if (!q) {
            std::fprintf(stderr, "unknown quantity '%s'\n", name.c_str());
            return 2;
          }
          spec.quantities.push_back(*q);
          pos = comma + 1;
        }
      }
      const RangeSpec gr = parse_range(gamma_range);
      const RangeSpec hr = parse_range(h_range);
      spec.gamma_min = gr.lo;
      spec.gamma_max = gr.hi;
      spec.gamma_steps = gr.steps;
      spec.h_min = hr.lo;
      spec.h_max = hr.hi;
      spec.h_steps = hr.steps;
      spec.skip_radius = skip_radius;
      lmg::TableFormat fmt;
      if (format_arg == "csv")
        fmt = lmg::TableFormat::csv;
      else if (format_arg == "json")
        fmt = lmg::TableFormat::json;
      else {
        std::fprintf(stderr, "unknown format '%s'\n", format_arg.c_str());
        return 2;
      }
      const lmg::SweepTable table = lmg::run_sweep(spec);
      lmg::emit_table_to(table, spec, fmt, out_path);
      return 0;
    }
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
