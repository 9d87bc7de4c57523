// test_sweep.cpp - grid sweeps and the CSV/JSON emitters
#include <doctest.h>

#include <json.hpp>
#include <cmath>
#include <sstream>

#include "lmg/model.hpp"
#include "lmg/sweep.hpp"
#include "lmg/types.hpp"

using namespace lmg;

namespace {

int column_index(const SweepTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return static_cast<int>(i);
  return -1;
}

SweepSpec small_spec(std::vector<Quantity> qs) {
  SweepSpec s;
  s.gamma_min = 0.0;
  s.gamma_max = 1.0;
  s.gamma_steps = 2;
  s.h_min = 0.1;
  s.h_max = 0.2;
  s.h_steps = 2;
  s.quantities = std::move(qs);
  return s;
}

}  // namespace

TEST_CASE("energies sweep covers the full grid with no NA") {
  SweepSpec spec;
  spec.gamma_steps = 21;
  spec.h_steps = 21;
  spec.quantities = {Quantity::energies};
  const SweepTable t = run_sweep(spec);
  CHECK(t.rows.size() == 441);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (const Cell& c : t.rows[r]) CHECK(!c.na);
    CHECK(t.reasons[r].empty());
  }
  const int eg = column_index(t, "e_ground");
  const int el = column_index(t, "e_low");
  const int eh = column_index(t, "e_high");
  REQUIRE(eg >= 0);
  for (const auto& row : t.rows)
    CHECK(row[eg].value ==
          doctest::Approx(std::min(row[el].value, row[eh].value)));
}

TEST_CASE("chi_full vanishes along the gamma = 1 row") {
  SweepSpec spec;
  spec.gamma_min = spec.gamma_max = 1.0;
  spec.gamma_steps = 1;
  spec.h_steps = 13;
  spec.quantities = {Quantity::chi_full};
  const SweepTable t = run_sweep(spec);
  const int c = column_index(t, "chi_full");
  for (const auto& row : t.rows)
    if (!row[c].na) CHECK(row[c].value <= 1e-10);
}

TEST_CASE("berry_raw jumps by 4pi across the isotropic crossing") {
  SweepSpec spec;
  spec.gamma_min = spec.gamma_max = 1.0;
  spec.gamma_steps = 1;
  spec.h_min = 0.0;
  spec.h_max = 1.2;
  spec.h_steps = 21;
  spec.quantities = {Quantity::berry_raw};
  const SweepTable t = run_sweep(spec);
  const int c = column_index(t, "berry_raw");
  const int hcol = column_index(t, "h");
  double below = 0.0, above = 0.0;
  bool got_below = false, got_above = false;
  for (const auto& row : t.rows) {
    if (row[c].na) continue;
    if (row[hcol].value < 2.0 / 3.0 && row[hcol].value > 0.3) {
      below = row[c].value;
      got_below = true;
    }
    if (row[hcol].value > 2.0 / 3.0 && !got_above) {
      above = row[c].value;
      got_above = true;
    }
  }
  REQUIRE(got_below);
  REQUIRE(got_above);
  CHECK(std::abs(above - below) == doctest::Approx(4.0 * kPi).epsilon(1e-12));
}

TEST_CASE("rows near the crossing and the monopole carry NA reasons") {
  SweepSpec spec;
  spec.gamma_min = spec.gamma_max = 1.0;
  spec.gamma_steps = 1;
  spec.h_min = 0.66;
  spec.h_max = 0.67;
  spec.h_steps = 2;
  spec.skip_radius = 0.01;
  spec.quantities = {Quantity::berry_raw, Quantity::energies};
  const SweepTable t = run_sweep(spec);
  const int braw = column_index(t, "berry_raw");
  const int elow = column_index(t, "e_low");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(t.rows[r][braw].na);
    CHECK(!t.rows[r][elow].na);  // energies stay defined
    CHECK(t.reasons[r] == "DEGENERATE");
  }

  SweepSpec mono;
  mono.gamma_min = mono.gamma_max = 1.0;
  mono.gamma_steps = 1;
  mono.h_min = mono.h_max = 1.0 / 3.0;
  mono.h_steps = 1;
  mono.skip_radius = 0.01;
  mono.quantities = {Quantity::monopole_mag};
  const SweepTable mt = run_sweep(mono);
  CHECK(mt.rows[0][column_index(mt, "monopole_mag")].na);
  CHECK(mt.reasons[0] == "MONOPOLE");
}

TEST_CASE("csv emission: shape, NA token and determinism") {
  const SweepSpec spec = small_spec({Quantity::energies});
  const SweepTable t = run_sweep(spec);
  std::ostringstream a, b;
  emit_table(t, spec, TableFormat::csv, a);
  emit_table(t, spec, TableFormat::csv, b);
  CHECK(a.str() == b.str());

  int lines = 0;
  for (char c : a.str())
    if (c == '\n') ++lines;
  CHECK(lines == 5);  // header + 4 rows
  CHECK(a.str().substr(0, 8) == "gamma,h,");
  CHECK(a.str().back() == '\n');

  // NA token appears verbatim for an excluded point
  SweepSpec na_spec = small_spec({Quantity::berry_raw});
  na_spec.gamma_min = na_spec.gamma_max = 1.0;
  na_spec.gamma_steps = 1;
  na_spec.h_min = na_spec.h_max = 2.0 / 3.0;
  na_spec.h_steps = 1;
  std::ostringstream na_out;
  emit_table(run_sweep(na_spec), na_spec, TableFormat::csv, na_out);
  CHECK(na_out.str().find(",NA,") != std::string::npos);
}

TEST_CASE("json emission: rows, nulls and the reasons map") {
  SweepSpec spec = small_spec({Quantity::berry_raw});
  spec.gamma_min = 0.9;
  spec.gamma_max = 1.0;
  spec.h_min = 0.6;
  spec.h_max = 2.0 / 3.0;
  const SweepTable t = run_sweep(spec);
  std::ostringstream out;
  emit_table(t, spec, TableFormat::json, out);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["rows"].size() == 4);
  CHECK(j["columns"].size() == 3);
  CHECK(j["spec"]["gamma_steps"] == 2);
  // the (1.0, 2/3) corner sits on the crossing: null cell + reason entry
  bool found_null = false;
  for (const auto& row : j["rows"])
    for (const auto& cell : row)
      if (cell.is_null()) found_null = true;
  CHECK(found_null);
  CHECK(!j["reasons"].empty());
  for (const auto& [key, value] : j["reasons"].items())
    CHECK(value == "DEGENERATE");
}

TEST_CASE("sweep spec validation") {
  SweepSpec bad = small_spec({Quantity::energies});
  bad.gamma_steps = 0;
  CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
  SweepSpec swapped = small_spec({Quantity::energies});
  swapped.h_min = 1.0;
  swapped.h_max = 0.0;
  CHECK_THROWS_AS(run_sweep(swapped), std::invalid_argument);
  SweepSpec none = small_spec({});
  CHECK_THROWS_AS(run_sweep(none), std::invalid_argument);
  SweepSpec negr = small_spec({Quantity::energies});
  negr.skip_radius = -0.1;
  CHECK_THROWS_AS(run_sweep(negr), std::invalid_argument);
}

TEST_CASE("column order is canonical regardless of request order") {
  SweepSpec spec = small_spec({Quantity::chi_full, Quantity::theta,
                               Quantity::berry_raw, Quantity::theta});
  const SweepTable t = run_sweep(spec);
  REQUIRE(t.columns.size() == 6);
  CHECK(t.columns[2] == "theta_low");
  CHECK(t.columns[3] == "theta_high");
  CHECK(t.columns[4] == "berry_raw");
  CHECK(t.columns[5] == "chi_full");
}

TEST_CASE("figure presets produce finite surfaces with the expected features") {
  for (int fig = 1; fig <= 6; ++fig) {
    SweepSpec spec = figure_preset(fig);
    spec.gamma_steps = 21;  // keep the test quick
    spec.h_steps = 21;
    const SweepTable t = run_sweep(spec);
    CHECK(t.rows.size() == 441);
    double lo = 1e300, hi = -1e300;
    for (const auto& row : t.rows)
      for (std::size_t c = 2; c < row.size(); ++c)
        if (!row[c].na) {
          CHECK(std::isfinite(row[c].value));
          lo = std::min(lo, row[c].value);
          hi = std::max(hi, row[c].value);
        }
    CHECK(lo <= hi);

    if (fig >= 4) {
      // zeros along gamma = 1 for the susceptibility surfaces
      const int gcol = column_index(t, "gamma");
      for (const auto& row : t.rows)
        if (std::abs(row[gcol].value - 1.0) < 1e-12)
          for (std::size_t c = 2; c < row.size(); ++c)
            if (!row[c].na) CHECK(row[c].value <= 1e-10);
    }
    if (fig == 2) {
      // the |raw| surface jumps by 4pi across the isotropic crossing
      const int gcol = column_index(t, "gamma");
      const int hcol = column_index(t, "h");
      const int vcol = column_index(t, "berry_abs");
      double below = -1.0, above = -1.0;
      for (const auto& row : t.rows) {
        if (std::abs(row[gcol].value - 1.0) > 1e-12 || row[vcol].na) continue;
        if (row[hcol].value > 0.3 && row[hcol].value < 2.0 / 3.0)
          below = row[vcol].value;
        if (row[hcol].value > 2.0 / 3.0 && above < 0.0)
          above = row[vcol].value;
      }
      CHECK(below == doctest::Approx(4.0 * kPi).epsilon(1e-12));
      CHECK(above == doctest::Approx(0.0));
    }
  }
  CHECK_THROWS_AS(figure_preset(7), std::invalid_argument);
}

TEST_CASE("identical sweeps are bitwise identical") {
  SweepSpec spec = small_spec({Quantity::chi_full, Quantity::mixed_berry_abs});
  const SweepTable a = run_sweep(spec);
  const SweepTable b = run_sweep(spec);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t r = 0; r < a.rows.size(); ++r)
    for (std::size_t c = 0; c < a.rows[r].size(); ++c) {
      CHECK(a.rows[r][c].na == b.rows[r][c].na);
      CHECK(a.rows[r][c].value == b.rows[r][c].value);
    }
}
