// sweep.cpp
#include "lmg/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "lmg/fidelity.hpp"
#include "lmg/geometry.hpp"
#include "lmg/model.hpp"

namespace lmg {
namespace {

constexpr Quantity kCanonicalOrder[] = {
    Quantity::energies,       Quantity::theta,    Quantity::berry_raw,
    Quantity::berry_abs,      Quantity::mixed_berry_abs, Quantity::chi_full,
    Quantity::chi_1q,         Quantity::chi_2q,   Quantity::monopole_mag,
};

bool branch_dependent(Quantity q) {
  return q != Quantity::energies && q != Quantity::theta;
}

std::vector<std::string> columns_of(Quantity q) {
  switch (q) {
    case Quantity::energies: return {"e_low", "e_high", "e_ground"};
    case Quantity::theta: return {"theta_low", "theta_high"};
    case Quantity::berry_raw: return {"berry_raw"};
    case Quantity::berry_abs: return {"berry_abs"};
    case Quantity::mixed_berry_abs: return {"mixed_berry_abs"};
    case Quantity::chi_full: return {"chi_full"};
    case Quantity::chi_1q: return {"chi_1q"};
    case Quantity::chi_2q: return {"chi_2q"};
    case Quantity::monopole_mag: return {"monopole_mag"};
  }
  return {};
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double grid_value(double lo, double hi, int steps, int i) {
  if (steps <= 1) return lo;
  return lo + (hi - lo) * i / (steps - 1);
}

struct NaTag {
  bool excluded = false;
  std::string reason;
};

void append_reason(std::set<std::string>& reasons, const std::string& r) {
  reasons.insert(r);
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::energies: return "energies";
    case Quantity::theta: return "theta";
    case Quantity::berry_raw: return "berry_raw";
    case Quantity::berry_abs: return "berry_abs";
    case Quantity::mixed_berry_abs: return "mixed_berry_abs";
    case Quantity::chi_full: return "chi_full";
    case Quantity::chi_1q: return "chi_1q";
    case Quantity::chi_2q: return "chi_2q";
    case Quantity::monopole_mag: return "monopole_mag";
  }
  return "?";
}

std::optional<Quantity> quantity_from_string(const std::string& name) {
  for (Quantity q : kCanonicalOrder)
    if (name == to_string(q)) return q;
  return std::nullopt;
}

void SweepSpec::validate() const {
  if (!(gamma_max >= gamma_min) || !(h_max >= h_min))
    throw std::invalid_argument("SweepSpec: max must be >= min");
  if (gamma_steps < 1 || h_steps < 1)
    throw std::invalid_argument("SweepSpec: steps must be >= 1");
  if (skip_radius < 0.0)
    throw std::invalid_argument("SweepSpec: skip_radius must be >= 0");
  if (quantities.empty())
    throw std::invalid_argument("SweepSpec: at least one quantity required");
  if (gamma_min < 0.0)
    throw std::invalid_argument("SweepSpec: gamma range must be >= 0");
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();

  // canonical column order, duplicates removed
  std::vector<Quantity> wanted;
  for (Quantity q : kCanonicalOrder)
    if (std::find(spec.quantities.begin(), spec.quantities.end(), q) !=
        spec.quantities.end())
      wanted.push_back(q);

  SweepTable table;
  table.columns = {"gamma", "h"};
  for (Quantity q : wanted)
    for (const auto& c : columns_of(q)) table.columns.push_back(c);

  for (int i = 0; i < spec.gamma_steps; ++i) {
    const double gamma = grid_value(spec.gamma_min, spec.gamma_max,
                                    spec.gamma_steps, i);
    for (int j = 0; j < spec.h_steps; ++j) {
      const double h = grid_value(spec.h_min, spec.h_max, spec.h_steps, j);
      const ModelParams params{gamma, h, 1e-9};
      std::vector<Cell> row;
      row.push_back({gamma, false});
      row.push_back({h, false});
      std::set<std::string> reasons;

      NaTag tag;
      if (distance_to_crossing(gamma, h) <= spec.skip_radius)
        tag = {true, "DEGENERATE"};
      else if (distance_to_monopole(gamma, h) <= spec.skip_radius)
        tag = {true, "MONOPOLE"};

      for (Quantity q : wanted) {
        const std::size_t ncols = columns_of(q).size();
        const std::size_t before = row.size();
        if (branch_dependent(q) && tag.excluded) {
          for (std::size_t c = 0; c < ncols; ++c) row.push_back({0.0, true});
          append_reason(reasons, tag.reason);
          continue;
        }
        try {
          switch (q) {
            case Quantity::energies: {
              const double el = energy_functions(params, BlockSign::plus).e_minus;
              const double eh = energy_functions(params, BlockSign::minus).e_minus;
              row.push_back({el, false});
              row.push_back({eh, false});
              row.push_back({std::min(el, eh), false});
              break;
            }
            case Quantity::theta: {
              row.push_back({mixing_angle(params, BlockSign::plus), false});
              row.push_back({mixing_angle(params, BlockSign::minus), false});
              break;
            }
            case Quantity::berry_raw:
              row.push_back({berry_phase_pure(params).raw, false});
              break;
            case Quantity::berry_abs:
              row.push_back({std::abs(berry_phase_pure(params).raw), false});
              break;
            case Quantity::mixed_berry_abs:
              row.push_back(
                  {std::abs(mixed_berry_phase_two_qubit(params).gamma_phase),
                   false});
              break;
            case Quantity::chi_full:
              row.push_back({fidelity_susceptibility_closed(params).value, false});
              break;
            case Quantity::chi_1q:
              row.push_back({partial_fs_one_qubit(params).value, false});
              break;
            case Quantity::chi_2q:
              row.push_back({partial_fs_two_qubit(params).value, false});
              break;
            case Quantity::monopole_mag:
              row.push_back({monopole_field(params).norm(), false});
              break;
          }
        } catch (const UndefinedPhaseError&) {
          row.resize(before);
          for (std::size_t c = 0; c < ncols; ++c) row.push_back({0.0, true});
          append_reason(reasons, "DEGENERATE");
        } catch (const DegenerateError&) {
          row.resize(before);
          for (std::size_t c = 0; c < ncols; ++c) row.push_back({0.0, true});
          append_reason(reasons, "DEGENERATE");
        } catch (const SingularityError&) {
          row.resize(before);
          for (std::size_t c = 0; c < ncols; ++c) row.push_back({0.0, true});
          append_reason(reasons, "MONOPOLE");
        }
      }

      std::string reason;
      for (const auto& r : reasons) {
        if (!reason.empty()) reason += ";";
        reason += r;
      }
      table.rows.push_back(std::move(row));
      table.reasons.push_back(std::move(reason));
    }
  }
  return table;
}

namespace {

void emit_csv(const SweepTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << ",reason\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (row[c].na)
        out << "NA";
      else
        out << format_double(row[c].value);
    }
    out << ',' << table.reasons[r] << '\n';
  }
}

void emit_json(const SweepTable& table, const SweepSpec& spec,
               std::ostream& out) {
  nlohmann::json j;
  j["spec"] = {
      {"gamma_min", spec.gamma_min}, {"gamma_max", spec.gamma_max},
      {"gamma_steps", spec.gamma_steps}, {"h_min", spec.h_min},
      {"h_max", spec.h_max}, {"h_steps", spec.h_steps},
      {"skip_radius", spec.skip_radius},
  };
  std::vector<std::string> names;
  for (Quantity q : kCanonicalOrder)
    if (std::find(spec.quantities.begin(), spec.quantities.end(), q) !=
        spec.quantities.end())
      names.push_back(to_string(q));
  j["spec"]["quantities"] = names;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell.na)
        jrow.push_back(nullptr);
      else
        jrow.push_back(cell.value);
    }
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  nlohmann::json reasons = nlohmann::json::object();
  for (std::size_t r = 0; r < table.reasons.size(); ++r)
    if (!table.reasons[r].empty()) reasons[std::to_string(r)] = table.reasons[r];
  j["reasons"] = std::move(reasons);
  out << j.dump(2) << '\n';
}

}  // namespace

void emit_table(const SweepTable& table, const SweepSpec& spec,
                TableFormat format, std::ostream& out) {
  if (format == TableFormat::csv)
    emit_csv(table, out);
  else
    emit_json(table, spec, out);
  if (!out)
    throw std::ios_base::failure("emit_table: stream write failed");
}

void emit_table_to(const SweepTable& table, const SweepSpec& spec,
                   TableFormat format, const std::string& path) {
  if (path == "-") {
    emit_table(table, spec, format, std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::ios_base::failure("emit_table_to: cannot open '" + path + "'");
  emit_table(table, spec, format, f);
  f.flush();
  if (!f)
    throw std::ios_base::failure("emit_table_to: write failed for '" + path + "'");
}

SweepSpec figure_preset(int figure) {
  SweepSpec spec;  // default window matches the figure domains
  switch (figure) {
    case 1: spec.quantities = {Quantity::energies}; break;
    case 2: spec.quantities = {Quantity::berry_abs}; break;
    case 3: spec.quantities = {Quantity::mixed_berry_abs}; break;
    case 4: spec.quantities = {Quantity::chi_full}; break;
    case 5: spec.quantities = {Quantity::chi_1q}; break;
    case 6: spec.quantities = {Quantity::chi_2q}; break;
    default:
      throw std::invalid_argument("figure_preset: figure must be 1..6");
  }
  return spec;
}

}  // namespace lmg
