#pragma once
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kratzer {

//! Unit system: lengths in Angstrom, energies in eV, masses as rest energies
//! (eV), so hbar^2/mu becomes (hbar c)^2 / (mu c^2).
struct PhysicalConstants {
  double hbar_c = 1973.29;       // eV.A
  double amu_to_ev = 9.31494028e8; // eV per amu
};

struct MoleculeSpec {
  std::string name;
  double d0;     // dissociation energy, eV
  double r0;     // equilibrium separation, A
  double mu_amu; // reduced mass, amu
};

//! V(r) = a/r + b/r^2 + c
struct PotentialParams {
  double a; // eV.A
  double b; // eV.A^2
  double c; // eV
};

enum class PotentialKind { kratzer, modified_kratzer };

std::string_view to_string(PotentialKind kind);
//! Parses "kratzer" / "modified-kratzer". Throws std::invalid_argument.
PotentialKind parse_potential_kind(std::string_view text);

//! CO and NO ground-state data.
std::vector<MoleculeSpec> builtin_molecules();

PotentialParams kratzer_params(const MoleculeSpec &m);
//! Kratzer shifted up by d0 so the well minimum sits at zero.
PotentialParams modified_kratzer_params(const MoleculeSpec &m);
PotentialParams make_params(const MoleculeSpec &m, PotentialKind kind);

//! Throws DomainError for r <= 0.
double evaluate_potential(const PotentialParams &p, double r);

//! mu c^2 in eV.
double mu_energy(const MoleculeSpec &m, const PhysicalConstants &k);

//! Throws ConfigError if d0, r0 or mu are not strictly positive.
void validate(const MoleculeSpec &m);
void validate(const PhysicalConstants &k);

//==============================================================================
//! Named molecules plus the constants they are evaluated with. Starts with the
//! builtins; a config file can add or replace entries and override constants.
class MoleculeRegistry {
public:
  MoleculeRegistry();

  const std::vector<MoleculeSpec> &molecules() const { return m_molecules; }
  const PhysicalConstants &constants() const { return m_constants; }

  std::optional<MoleculeSpec> find(std::string_view name) const;
  //! Comma separated list of names, for error messages.
  std::string names() const;

  //! Adds, or replaces an entry with the same name.
  void add(MoleculeSpec m);
  void set_constants(const PhysicalConstants &k);

  //! Key-value text. `#` starts a comment. Each `name = ...` opens a new
  //! molecule that takes d0_ev, r0_angstrom, mu_amu. hbar_c_ev_angstrom and
  //! amu_to_ev override the constants for the whole registry.
  void load_config(std::string_view text);
  void load_config_file(const std::filesystem::path &path);

private:
  std::vector<MoleculeSpec> m_molecules;
  PhysicalConstants m_constants{};
};

} // namespace kratzer
