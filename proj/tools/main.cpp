// wallosc: command-line front end for the walled-oscillator library.
//
// Subcommands expose the solver, the scan behind the level/gap figures, the
// Rayleigh-Ritz bounds, the identity checks, the physical-unit conversion,
// and the finite-difference cross-check. Output is CSV (header + rows) or a
// JSON document {meta, rows}; both are deterministic byte-for-byte for fixed
// flags.
//
// Exit codes: 0 success, 2 usage error, 3 numeric-domain error,
// 4 convergence failure.

#include <charconv>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallosc/errors.hpp"
#include "wallosc/identities.hpp"
#include "wallosc/oracle.hpp"
#include "wallosc/physical.hpp"
#include "wallosc/spectrum.hpp"
#include "wallosc/variational.hpp"

namespace {

namespace sp = wallosc::spectrum;
namespace var = wallosc::variational;
namespace id = wallosc::identities;
namespace oc = wallosc::oracle;
namespace ph = wallosc::physical;

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct OutputOptions {
  std::string format = "csv";
  int precision = 12;
};

/// Number of significant digits in a decimal float literal (mantissa digits,
/// ignoring sign, the decimal point, leading zeros, and any exponent).
int significant_digits(std::string_view text) {
  int count = 0;
  bool leading = true;
  for (char c : text) {
    if (c == 'e' || c == 'E')
      break;
    if (c < '0' || c > '9')
      continue;
    if (leading && c == '0')
      continue;
    leading = false;
    ++count;
  }
  return count;
}

/// Shortest decimal form that parses back to `value`, capped at `precision`
/// significant digits. When the cap bites, the value is first snapped to the
/// nearest double of its `precision`-digit rendering and the shortest form of
/// that double is returned, which makes the formatting idempotent under
/// print -> parse -> print (the CSV round-trip contract).
std::string format_real(double value, int precision) {
  char buf[64];
  auto* end = std::to_chars(buf, buf + sizeof buf, value).ptr;
  if (significant_digits({buf, end}) <= precision)
    return {buf, end};
  auto* capped = std::to_chars(buf, buf + sizeof buf, value,
                               std::chars_format::general, precision).ptr;
  double snapped = 0.0;
  std::from_chars(buf, capped, snapped);
  end = std::to_chars(buf, buf + sizeof buf, snapped).ptr;
  return {buf, end};
}

double snap_real(double value, int precision) {
  const std::string text = format_real(value, precision);
  double snapped = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), snapped);
  return snapped;
}

std::string csv_cell(const ordered_json& value, int precision) {
  if (value.is_number_float())
    return format_real(value.get<double>(), precision);
  if (value.is_number_integer())
    return std::to_string(value.get<long long>());
  return value.get<std::string>();
}

/// Prints one result table. `rows` is an array of objects sharing the column
/// keys; `flags` echoes the parsed command line into the JSON metadata.
void emit_table(const OutputOptions& out, const std::string& command,
                const ordered_json& flags,
                const std::vector<std::string>& columns,
                const ordered_json& rows,
                const ordered_json& extra_meta = ordered_json::object()) {
  if (out.format == "json") {
    ordered_json doc;
    ordered_json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["constants"] = {{"hbar_J_s", ph::constants::hbar},
                         {"atomic_mass_unit_kg", ph::constants::atomic_mass_unit},
                         {"electron_volt_J", ph::constants::electron_volt}};
    meta["flags"] = flags;
    for (const auto& [key, value] : extra_meta.items())
      meta[key] = value.is_number_float()
                      ? ordered_json(snap_real(value.get<double>(), out.precision))
                      : value;
    doc["meta"] = meta;
    ordered_json out_rows = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json out_row;
      for (const auto& column : columns) {
        const auto& value = row.at(column);
        out_row[column] = value.is_number_float()
                              ? ordered_json(snap_real(value.get<double>(),
                                                       out.precision))
                              : value;
      }
      out_rows.push_back(std::move(out_row));
    }
    doc["rows"] = std::move(out_rows);
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i)
    std::cout << (i ? "," : "") << columns[i];
  std::cout << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      std::cout << (i ? "," : "") << csv_cell(row.at(columns[i]), out.precision);
    std::cout << '\n';
  }
}

/// Runs a command body and maps library failures onto the exit-code contract.
int run_mapped(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const wallosc::NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const wallosc::RootNotFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const wallosc::GridTooCoarse& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const wallosc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

void do_eigen(double q0, int n_max, bool use_oracle, const OutputOptions& out) {
  const sp::WellConfig cfg{q0};
  ordered_json rows = ordered_json::array();
  if (use_oracle) {
    const auto eps = oc::fd_eigenvalues_richardson(cfg, n_max);
    const auto grid = oc::default_grid(cfg);
    for (int n = 0; n <= n_max; ++n)
      rows.push_back({{"n", n},
                      {"epsilon", eps[n]},
                      {"weber_order", eps[n] - 0.5},
                      {"node_count", oc::fd_node_count(cfg, n, grid)}});
  } else {
    for (const auto& sol : sp::eigenvalues(n_max, cfg))
      rows.push_back({{"n", sol.n},
                      {"epsilon", sol.epsilon},
                      {"weber_order", sol.weber_order},
                      {"node_count", sol.node_count}});
  }
  emit_table(out, "eigen",
             {{"q0", q0}, {"n_max", n_max}, {"oracle", use_oracle},
              {"format", out.format}, {"precision", out.precision}},
             {"n", "epsilon", "weber_order", "node_count"}, rows);
}

void do_scan(double q0_start, double q0_end, int steps, int n_max,
             const OutputOptions& out) {
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = q0_start + (q0_end - q0_start) * i / (steps - 1);
  grid.back() = q0_end;
  const auto table = sp::spectrum_scan(grid, n_max);
  std::vector<std::string> columns{"q0"};
  for (int n = 0; n <= n_max; ++n)
    columns.push_back("eps" + std::to_string(n));
  for (int n = 0; n < n_max; ++n)
    columns.push_back("gap" + std::to_string(n));
  ordered_json rows = ordered_json::array();
  for (const auto& scan_row : table) {
    ordered_json row{{"q0", scan_row.q0}};
    for (int n = 0; n <= n_max; ++n)
      row["eps" + std::to_string(n)] = scan_row.epsilon[n];
    for (int n = 0; n < n_max; ++n)
      row["gap" + std::to_string(n)] = scan_row.gap[n];
    rows.push_back(std::move(row));
  }
  emit_table(out, "scan",
             {{"q0_start", q0_start}, {"q0_end", q0_end}, {"steps", steps},
              {"n_max", n_max}, {"format", out.format},
              {"precision", out.precision}},
             columns, rows);
}

void do_variational(double q0, int basis_size, const OutputOptions& out) {
  const auto result = var::ritz_values(var::RitzProblem{basis_size, q0});
  const bool have_exact = q0 <= 4.0;
  std::vector<std::string> columns{"n", "w"};
  if (have_exact) {
    columns.push_back("epsilon");
    columns.push_back("gap");
  }
  ordered_json rows = ordered_json::array();
  for (int n = 0; n < basis_size; ++n) {
    ordered_json row{{"n", n}, {"w", result.values[n]}};
    if (have_exact) {
      const double exact = sp::eigenvalue(n, sp::WellConfig{q0}).epsilon;
      row["epsilon"] = exact;
      row["gap"] = result.values[n] - exact;
    }
    rows.push_back(std::move(row));
  }
  emit_table(out, "variational",
             {{"q0", q0}, {"n", basis_size}, {"format", out.format},
              {"precision", out.precision}},
             columns, rows,
             {{"overlap_condition", result.overlap_condition}});
}

std::string tag_name(id::IdentityTag tag) {
  switch (tag) {
  case id::IdentityTag::Virial:
    return "virial";
  case id::IdentityTag::Hypervirial:
    return "hypervirial";
  case id::IdentityTag::BoundaryDerivative:
    return "boundary_derivative";
  }
  return "unknown";
}

void do_identities(double q0, int n_max, const OutputOptions& out) {
  const sp::WellConfig cfg{q0};
  ordered_json rows = ordered_json::array();
  auto add = [&rows](const id::IdentityReport& report) {
    rows.push_back({{"n", report.n},
                    {"q0", report.q0},
                    {"identity", tag_name(report.identity_tag)},
                    {"lhs", report.lhs},
                    {"rhs", report.rhs},
                    {"residual", report.residual}});
  };
  for (int n = 0; n <= n_max; ++n) {
    add(id::check_virial(n, cfg));
    add(id::check_hypervirial(n, cfg));
    // The finite-difference cross-check needs room for a centered step.
    if (q0 > 1e-4)
      add(id::boundary_derivative_report(n, cfg));
  }
  emit_table(out, "identities",
             {{"q0", q0}, {"n_max", n_max}, {"format", out.format},
              {"precision", out.precision}},
             {"n", "q0", "identity", "lhs", "rhs", "residual"}, rows);
}

void do_adsorb(const ph::AdsorptionSystem& sys, const OutputOptions& out,
               const ordered_json& flags) {
  const auto dim = ph::dimensionless(sys);
  const auto zpe = ph::zero_point_energy(sys);
  ordered_json rows = ordered_json::array();
  rows.push_back({{"label", sys.label},
                  {"mass_amu", sys.mass / ph::constants::atomic_mass_unit},
                  {"k_npm", sys.force_constant},
                  {"d_angstrom", sys.wall_distance * 1e10},
                  {"length_unit_m", dim.length_unit_L},
                  {"omega_rad_s", dim.omega},
                  {"q0", dim.q0},
                  {"epsilon0", zpe.epsilon0},
                  {"E0_joule", zpe.E0_joule},
                  {"E0_meV", zpe.E0_meV}});
  emit_table(out, "adsorb", flags,
             {"label", "mass_amu", "k_npm", "d_angstrom", "length_unit_m",
              "omega_rad_s", "q0", "epsilon0", "E0_joule", "E0_meV"},
             rows);
}

void do_oracle(double q0, int n_max, const OutputOptions& out) {
  const sp::WellConfig cfg{q0};
  const auto eps = oc::fd_eigenvalues_richardson(cfg, n_max);
  const auto grid = oc::default_grid(cfg);
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= n_max; ++n)
    rows.push_back({{"n", n},
                    {"epsilon", eps[n]},
                    {"node_count", oc::fd_node_count(cfg, n, grid)}});
  emit_table(out, "oracle",
             {{"q0", q0}, {"n_max", n_max}, {"format", out.format},
              {"precision", out.precision}},
             {"n", "epsilon", "node_count"}, rows);
}

void add_output_options(CLI::App* sub, OutputOptions& out) {
  sub->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--precision", out.precision,
                  "Significant digits in the output")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of a harmonic oscillator next to a hard wall"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  OutputOptions out;

  double q0 = 0.0;
  int n_max = 0;
  bool use_oracle = false;
  auto* eigen_cmd =
      app.add_subcommand("eigen", "Exact eigenvalues at one wall position");
  eigen_cmd->add_option("--q0", q0, "Wall distance in oscillator units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  eigen_cmd->add_option("--n-max", n_max, "Highest quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eigen_cmd->add_flag("--oracle", use_oracle,
                      "Use the finite-difference solver (any q0 >= 0)");
  add_output_options(eigen_cmd, out);

  double q0_start = 0.0;
  double q0_end = 4.0;
  int steps = 41;
  int scan_n_max = 3;
  auto* scan_cmd =
      app.add_subcommand("scan", "Levels and gaps over a range of q0");
  scan_cmd->add_option("--q0-start", q0_start, "First wall distance")
      ->check(CLI::Range(0.0, 4.0))
      ->capture_default_str();
  scan_cmd->add_option("--q0-end", q0_end, "Last wall distance")
      ->check(CLI::Range(0.0, 4.0))
      ->capture_default_str();
  scan_cmd->add_option("--steps", steps, "Number of grid points (>= 2)")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  scan_cmd->add_option("--n-max", scan_n_max, "Highest quantum number")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  add_output_options(scan_cmd, out);

  double var_q0 = 0.0;
  int basis_size = 8;
  auto* var_cmd = app.add_subcommand(
      "variational", "Rayleigh-Ritz upper bounds in the polynomial basis");
  var_cmd->add_option("--q0", var_q0, "Wall distance in oscillator units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  var_cmd->add_option("--n", basis_size, "Basis size N")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();
  add_output_options(var_cmd, out);

  double id_q0 = 0.0;
  int id_n_max = 0;
  auto* id_cmd = app.add_subcommand(
      "identities", "Virial, hypervirial, and boundary-derivative checks");
  id_cmd->add_option("--q0", id_q0, "Wall distance in oscillator units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  id_cmd->add_option("--n-max", id_n_max, "Highest quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(id_cmd, out);

  std::string preset_label;
  double mass_amu = 0.0;
  double k_npm = 0.0;
  double d_angstrom = 0.0;
  auto* adsorb_cmd = app.add_subcommand(
      "adsorb", "Physical adsorption system in oscillator units");
  auto* preset_opt =
      adsorb_cmd->add_option("--preset", preset_label, "Built-in system label");
  auto* mass_opt = adsorb_cmd->add_option("--mass-amu", mass_amu, "Atom mass (u)")
                       ->check(CLI::PositiveNumber);
  auto* k_opt = adsorb_cmd->add_option("--k-npm", k_npm, "Force constant (N/m)")
                    ->check(CLI::PositiveNumber);
  auto* d_opt =
      adsorb_cmd->add_option("--d-angstrom", d_angstrom, "Wall distance (A)")
          ->check(CLI::NonNegativeNumber);
  preset_opt->excludes(mass_opt)->excludes(k_opt)->excludes(d_opt);
  add_output_options(adsorb_cmd, out);

  double oracle_q0 = 0.0;
  int oracle_n_max = 0;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Finite-difference eigenvalues with Richardson extrapolation");
  oracle_cmd->add_option("--q0", oracle_q0, "Wall distance in oscillator units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--n-max", oracle_n_max, "Highest quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(oracle_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*eigen_cmd)
    return run_mapped([&] {
      try {
        do_eigen(q0, n_max, use_oracle, out);
      } catch (const wallosc::UnsupportedRange& e) {
        throw wallosc::UnsupportedRange(std::string(e.what()) +
                                        " (retry with --oracle)");
      }
    });
  if (*scan_cmd) {
    if (!(q0_start < q0_end)) {
      std::cerr << "scan: requires --q0-start < --q0-end\n";
      return 2;
    }
    return run_mapped([&] { do_scan(q0_start, q0_end, steps, scan_n_max, out); });
  }
  if (*var_cmd)
    return run_mapped([&] { do_variational(var_q0, basis_size, out); });
  if (*id_cmd)
    return run_mapped([&] { do_identities(id_q0, id_n_max, out); });
  if (*adsorb_cmd) {
    ph::AdsorptionSystem sys;
    ordered_json flags{{"format", out.format}, {"precision", out.precision}};
    if (!preset_label.empty()) {
      flags["preset"] = preset_label;
      return run_mapped([&, flags] {
        do_adsorb(ph::preset(preset_label), out, flags);
      });
    }
    if (mass_opt->count() == 0 || k_opt->count() == 0 || d_opt->count() == 0) {
      std::cerr
          << "adsorb: requires --preset or all of --mass-amu --k-npm --d-angstrom\n";
      return 2;
    }
    sys = {mass_amu * ph::constants::atomic_mass_unit, k_npm,
           d_angstrom * 1e-10, "custom"};
    flags["mass_amu"] = mass_amu;
    flags["k_npm"] = k_npm;
    flags["d_angstrom"] = d_angstrom;
    return run_mapped([&, flags] { do_adsorb(sys, out, flags); });
  }
  if (*oracle_cmd)
    return run_mapped([&] { do_oracle(oracle_q0, oracle_n_max, out); });
  return 2;
}
