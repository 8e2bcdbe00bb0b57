#include "kratzer/cli.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/matrix_elements.hpp"
#include "kratzer/spectrum.hpp"
#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>

namespace kratzer::cli {

Format parse_format(std::string_view text) {
  if (text == "csv")
    return Format::csv;
  if (text == "json")
    return Format::json;
  throw UsageError("unknown format '" + std::string(text) +
                   "' (expected csv or json)");
}

std::string format_number(double value) {
  if (!std::isfinite(value))
    return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string format_cell(const Cell &cell) {
  if (const auto *i = std::get_if<std::int64_t>(&cell))
    return std::to_string(*i);
  return format_number(std::get<double>(cell));
}

namespace {

std::string json_string(const std::string &s) { return nlohmann::json(s).dump(); }

std::string json_number(double value) {
  return std::isfinite(value) ? format_number(value) : "null";
}

std::string json_cell(const Cell &cell) {
  if (const auto *d = std::get_if<double>(&cell))
    return json_number(*d);
  return format_cell(cell);
}

std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

void write_csv(std::ostream &os, const OutputTable &table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream &os, const OutputTable &table) {
  os << "{\n  \"columns\": [";
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? ", " : "") << json_string(table.header[i]);
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    const auto &row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? ", " : "") << json_cell(row[i]);
    os << ']';
  }
  os << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_table(std::ostream &os, const OutputTable &table, Format format) {
  if (format == Format::csv)
    write_csv(os, table);
  else
    write_json(os, table);
}

void write_report(std::ostream &os, const ValidationReport &report,
                  Format format) {
  const auto &entries = report.entries();
  if (format == Format::csv) {
    os << "name,status,computed,expected,abs_err,rel_err,tolerance,criterion\n";
    for (const auto &e : entries)
      os << csv_quote(e.name) << ',' << to_string(e.status) << ','
         << format_number(e.computed) << ',' << format_number(e.expected)
         << ',' << format_number(e.abs_err) << ',' << format_number(e.rel_err)
         << ',' << format_number(e.tolerance) << ','
         << (e.relative ? "relative" : "absolute") << '\n';
    return;
  }
  os << "{\n  \"summary\": {\"entries\": " << entries.size()
     << ", \"pass\": " << report.count(CheckStatus::pass)
     << ", \"fail\": " << report.count(CheckStatus::fail)
     << ", \"expected_divergence\": "
     << report.count(CheckStatus::expected_divergence)
     << ", \"all_pass\": " << (report.all_pass() ? "true" : "false")
     << "},\n  \"entries\": [";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &e = entries[i];
    os << (i ? ",\n    " : "\n    ") << "{\"name\": " << json_string(e.name)
       << ", \"status\": " << json_string(std::string(to_string(e.status)))
       << ", \"computed\": " << json_number(e.computed)
       << ", \"expected\": " << json_number(e.expected)
       << ", \"abs_err\": " << json_number(e.abs_err)
       << ", \"rel_err\": " << json_number(e.rel_err)
       << ", \"tolerance\": " << json_number(e.tolerance)
       << ", \"criterion\": " << (e.relative ? "\"relative\"" : "\"absolute\"")
       << '}';
  }
  os << (entries.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

//==============================================================================
namespace {

MoleculeSpec lookup(const MoleculeRegistry &registry,
                    const std::string &name) {
  if (auto m = registry.find(name))
    return *m;
  throw UsageError("unknown molecule '" + name +
                   "'; registered molecules: " + registry.names());
}

void check_range(const LevelRange &range, int n_min) {
  if (range.n_max < n_min || range.n_max > 50 || range.ell_max < 0 ||
      range.ell_max > 50)
    throw UsageError("--n-max must be in [" + std::to_string(n_min) +
                     ", 50] and --ell-max in [0, 50]");
}

int ell_limit(const LevelRange &range, int n) {
  return range.all_ell ? range.ell_max : std::min(n, range.ell_max);
}

} // namespace

OutputTable cmd_spectrum(const MoleculeRegistry &registry,
                         const std::string &molecule, PotentialKind kind,
                         LevelRange range) {
  check_range(range, 0);
  const auto m = lookup(registry, molecule);
  const auto &k = registry.constants();
  const auto params = make_params(m, kind);
  const double mu_ev = mu_energy(m, k);

  OutputTable table{{"n", "ell", "energy_ev"}, {}};
  for (int n = 0; n <= range.n_max; ++n)
    for (int ell = 0; ell <= ell_limit(range, n); ++ell)
      table.rows.push_back({std::int64_t{n}, std::int64_t{ell},
                            energy(params, mu_ev, n, ell, k)});
  return table;
}

OutputTable cmd_matrix_elements(const MoleculeRegistry &registry,
                                const std::string &molecule,
                                PotentialKind kind, LevelRange range) {
  check_range(range, 1);
  const auto m = lookup(registry, molecule);
  const auto &k = registry.constants();
  const auto params = make_params(m, kind);
  const double mu_ev = mu_energy(m, k);

  OutputTable table{{"n", "ell", "r_elem", "rddr_elem", "gamma1", "gamma2"}, {}};
  for (int n = 1; n <= range.n_max; ++n)
    for (int ell = 0; ell <= ell_limit(range, n); ++ell) {
      const auto row =
          table_row(n, ell, spectral_context(params, mu_ev, n, ell, k));
      table.rows.push_back({std::int64_t{n}, std::int64_t{ell}, row.r_elem,
                            row.rddr_elem, row.gamma1, row.gamma2});
    }
  return table;
}

OutputTable cmd_potential_curve(const MoleculeRegistry &registry,
                                const std::string &molecule,
                                PotentialKind kind, double r_min, double r_max,
                                int samples) {
  if (!(r_min > 0.0) || !(r_max > r_min) || samples < 2)
    throw UsageError("potential-curve needs 0 < r-min < r-max and samples >= 2");
  const auto params = make_params(lookup(registry, molecule), kind);
  OutputTable table{{"r_angstrom", "v_ev"}, {}};
  for (int i = 0; i < samples; ++i) {
    const double r = r_min + (r_max - r_min) * double(i) / double(samples - 1);
    table.rows.push_back({r, evaluate_potential(params, r)});
  }
  return table;
}

ValidationReport cmd_validate(const MoleculeRegistry &registry,
                              const std::string &molecule, int n_max,
                              int ell_max, const QuadratureSpec &spec) {
  if (n_max < 0 || n_max > 50 || ell_max < 0 || ell_max > 50)
    throw UsageError("--n-max and --ell-max must be in [0, 50]");
  std::vector<MoleculeSpec> targets;
  if (molecule == "all")
    targets = registry.molecules();
  else
    targets.push_back(lookup(registry, molecule));

  const auto &k = registry.constants();
  ValidationReport report;
  for (const auto &m : targets) {
    for (auto kind : {PotentialKind::kratzer, PotentialKind::modified_kratzer})
      report.append(full_validation(m, kind, n_max, ell_max, spec, k));

    if (n_max < 1)
      continue;
    // Matrix-element tables must not depend on the constant shift.
    const LevelRange range{n_max, ell_max, false};
    const auto kr = cmd_matrix_elements(registry, m.name,
                                        PotentialKind::kratzer, range);
    const auto mk = cmd_matrix_elements(registry, m.name,
                                        PotentialKind::modified_kratzer, range);
    for (std::size_t r = 0; r < kr.rows.size(); ++r)
      for (std::size_t c = 2; c < kr.header.size(); ++c) {
        const double a = std::get<double>(kr.rows[r][c]);
        const double b = std::get<double>(mk.rows[r][c]);
        report.add(make_entry(
            m.name + "/shift_invariance/" + kr.header[c] + "/n=" +
                format_cell(kr.rows[r][0]) + ",l=" + format_cell(kr.rows[r][1]),
            a, b, 0.0, false));
      }
  }
  return report;
}

//==============================================================================
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Bound-state spectra, ladder algebra and matrix elements of "
               "the generalised Kratzer potential"};
  app.require_subcommand(1);

  std::string molecule = "CO";
  std::string potential = "kratzer";
  std::string format = "csv";
  std::string config;
  std::string out_path;
  LevelRange range;
  double r_min = 0.5;
  double r_max = 5.0;
  int samples = 200;

  const auto add_common = [&](CLI::App *cmd, bool with_potential) {
    cmd->add_option("--molecule", molecule, "Molecule name");
    if (with_potential)
      cmd->add_option("--potential", potential,
                      "kratzer or modified-kratzer");
    cmd->add_option("--format", format, "csv or json");
    cmd->add_option("--config", config, "Molecule config file");
    cmd->add_option("--out", out_path, "Output file (default stdout)");
  };
  const auto add_levels = [&](CLI::App *cmd) {
    cmd->add_option("--n-max", range.n_max, "Largest n");
    cmd->add_option("--ell-max", range.ell_max, "Largest l");
    cmd->add_flag("--all-ell", range.all_ell,
                  "Use l <= ell-max for every n instead of l <= n");
  };

  auto *spectrum = app.add_subcommand("spectrum", "Energy levels");
  add_common(spectrum, true);
  add_levels(spectrum);
  auto *elements =
      app.add_subcommand("matrix-elements", "Per-level matrix elements");
  add_common(elements, true);
  add_levels(elements);
  auto *curve = app.add_subcommand("potential-curve", "Sampled V(r)");
  add_common(curve, true);
  curve->add_option("--r-min", r_min, "Smallest radius (A)");
  curve->add_option("--r-max", r_max, "Largest radius (A)");
  curve->add_option("--samples", samples, "Number of radii");
  auto *validate = app.add_subcommand("validate", "Run the validation suite");
  add_common(validate, false);
  validate->add_option("--n-max", range.n_max, "Largest n");
  validate->add_option("--ell-max", range.ell_max, "Largest l");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    MoleculeRegistry registry;
    if (!config.empty())
      registry.load_config_file(config);
    const auto fmt = parse_format(format);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file)
        throw UsageError("cannot open output file " + out_path);
    }
    std::ostream &sink = out_path.empty() ? out : file;

    const auto kind = [&] {
      try {
        return parse_potential_kind(potential);
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
    };

    if (spectrum->parsed()) {
      write_table(sink, cmd_spectrum(registry, molecule, kind(), range), fmt);
    } else if (elements->parsed()) {
      write_table(sink,
                  cmd_matrix_elements(registry, molecule, kind(), range), fmt);
    } else if (curve->parsed()) {
      write_table(sink,
                  cmd_potential_curve(registry, molecule, kind(), r_min, r_max,
                                      samples),
                  fmt);
    } else if (validate->parsed()) {
      if (validate->count("--molecule") == 0)
        molecule = "all";
      const auto report =
          cmd_validate(registry, molecule, range.n_max, range.ell_max);
      write_report(sink, report, fmt);
      if (!report.all_pass()) {
        err << "validation failed: " << report.count(CheckStatus::fail)
            << " of " << report.entries().size() << " checks\n";
        return 1;
      }
    }
    return 0;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace kratzer::cli
