// sweep.hpp - (gamma, h) grid sweeps and the CSV/JSON table emitters behind
// the figure datasets.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lmg/types.hpp"

namespace lmg {

enum class Quantity {
  energies,
  theta,
  berry_raw,
  berry_abs,
  mixed_berry_abs,
  chi_full,
  chi_1q,
  chi_2q,
  monopole_mag,
};

const char* to_string(Quantity q);
std::optional<Quantity> quantity_from_string(const std::string& name);

struct SweepSpec {
  double gamma_min = 0.0, gamma_max = 2.0;
  int gamma_steps = 41;  // number of grid points
  double h_min = 0.0, h_max = 1.2;
  int h_steps = 41;
  std::vector<Quantity> quantities;
  double skip_radius = 0.01;  // exclusion radius around crossings/monopoles

  void validate() const;
};

/// One table cell: a value or NA.
struct Cell {
  double value = 0.0;
  bool na = false;
};

struct SweepTable {
  std::vector<std::string> columns;  // gamma, h, then quantity columns
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> reasons;  // per row; empty when fully defined
};

/// Evaluates the requested quantities on the grid, gamma-major row order.
/// Points within skip_radius of h_c^(2)(gamma) emit NA DEGENERATE and points
/// within skip_radius of the monopoles (1, +-1/3) emit NA MONOPOLE for the
/// branch-dependent quantities; energies and theta are defined everywhere.
SweepTable run_sweep(const SweepSpec& spec);

enum class TableFormat { csv, json };

/// CSV: header + one row per point, shortest round-trip decimals, the NA
/// token verbatim, trailing reason column. JSON: {"spec", "columns", "rows"}
/// with NA as null plus a sparse row-index -> reason map. Deterministic
/// byte output for identical inputs.
void emit_table(const SweepTable& table, const SweepSpec& spec,
                TableFormat format, std::ostream& out);

/// Writes to a file (or stdout when path is "-"). I/O failures raise
/// std::ios_base::failure mentioning the path.
void emit_table_to(const SweepTable& table, const SweepSpec& spec,
                   TableFormat format, const std::string& path);

/// Figure presets fig1..fig6 on the default gamma/h window.
SweepSpec figure_preset(int figure);

}  // namespace lmg
