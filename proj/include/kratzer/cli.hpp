#pragma once
#include "kratzer/model.hpp"
#include "kratzer/oracle.hpp"
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace kratzer::cli {

enum class Format { csv, json };
Format parse_format(std::string_view text);

using Cell = std::variant<std::int64_t, double>;

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

//! Numbers are written with 15 significant digits ("%.15g"); the CSV and JSON
//! encodings share the same numeric tokens.
std::string format_number(double value);
std::string format_cell(const Cell &cell);

void write_csv(std::ostream &os, const OutputTable &table);
//! {"columns": [...], "rows": [[...], ...]}
void write_json(std::ostream &os, const OutputTable &table);
void write_table(std::ostream &os, const OutputTable &table, Format format);

void write_report(std::ostream &os, const ValidationReport &report,
                  Format format);

//! Thrown for invalid command arguments (exit code 2).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct LevelRange {
  int n_max = 5;
  int ell_max = 5;
  //! When false, l runs to min(n, ell_max).
  bool all_ell = false;
};

//! Columns n, ell, energy_ev.
OutputTable cmd_spectrum(const MoleculeRegistry &registry,
                         const std::string &molecule, PotentialKind kind,
                         LevelRange range);

//! Columns n, ell, r_elem, rddr_elem, gamma1, gamma2 for n = 1..n_max.
OutputTable cmd_matrix_elements(const MoleculeRegistry &registry,
                                const std::string &molecule,
                                PotentialKind kind, LevelRange range);

//! Columns r_angstrom, v_ev on a uniform grid of `samples` radii.
OutputTable cmd_potential_curve(const MoleculeRegistry &registry,
                                const std::string &molecule,
                                PotentialKind kind, double r_min, double r_max,
                                int samples);

//! Both potentials for `molecule` (or every registered molecule for "all"),
//! plus potential-shift invariance entries for the matrix-element tables.
ValidationReport cmd_validate(const MoleculeRegistry &registry,
                              const std::string &molecule, int n_max,
                              int ell_max, const QuadratureSpec &spec = {});

//! Entry point shared by the executable and tests. Returns the exit status:
//! 0 success, 1 validation failure, 2 usage error.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace kratzer::cli
