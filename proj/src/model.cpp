#include "kratzer/model.hpp"
#include "kratzer/errors.hpp"
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kratzer {

std::string_view to_string(PotentialKind kind) {
  switch (kind) {
  case PotentialKind::kratzer:
    return "kratzer";
  case PotentialKind::modified_kratzer:
    return "modified-kratzer";
  }
  return "unknown";
}

PotentialKind parse_potential_kind(std::string_view text) {
  if (text == "kratzer")
    return PotentialKind::kratzer;
  if (text == "modified-kratzer" || text == "modified_kratzer")
    return PotentialKind::modified_kratzer;
  throw std::invalid_argument("unknown potential '" + std::string(text) +
                              "' (expected kratzer or modified-kratzer)");
}

std::vector<MoleculeSpec> builtin_molecules() {
  return {{"CO", 10.84514471, 1.1282, 6.860586000},
          {"NO", 8.043782568, 1.1508, 7.468441000}};
}

PotentialParams kratzer_params(const MoleculeSpec &m) {
  return {-2.0 * m.d0 * m.r0, m.d0 * m.r0 * m.r0, 0.0};
}

PotentialParams modified_kratzer_params(const MoleculeSpec &m) {
  auto p = kratzer_params(m);
  p.c = m.d0;
  return p;
}

PotentialParams make_params(const MoleculeSpec &m, PotentialKind kind) {
  return kind == PotentialKind::kratzer ? kratzer_params(m)
                                        : modified_kratzer_params(m);
}

double evaluate_potential(const PotentialParams &p, double r) {
  if (!(r > 0.0))
    throw DomainError("evaluate_potential: r must be positive, got " +
                      std::to_string(r));
  return p.a / r + p.b / (r * r) + p.c;
}

double mu_energy(const MoleculeSpec &m, const PhysicalConstants &k) {
  return m.mu_amu * k.amu_to_ev;
}

void validate(const MoleculeSpec &m) {
  if (m.name.empty())
    throw ConfigError("molecule without a name");
  if (!(m.d0 > 0.0) || !(m.r0 > 0.0) || !(m.mu_amu > 0.0))
    throw ConfigError("molecule '" + m.name +
                      "': d0_ev, r0_angstrom and mu_amu must be positive");
}

void validate(const PhysicalConstants &k) {
  if (!(k.hbar_c > 0.0) || !(k.amu_to_ev > 0.0))
    throw ConfigError("hbar_c_ev_angstrom and amu_to_ev must be positive");
}

//==============================================================================
MoleculeRegistry::MoleculeRegistry() : m_molecules(builtin_molecules()) {}

std::optional<MoleculeSpec>
MoleculeRegistry::find(std::string_view name) const {
  const auto it = std::find_if(m_molecules.begin(), m_molecules.end(),
                               [&](const auto &m) { return m.name == name; });
  if (it == m_molecules.end())
    return std::nullopt;
  return *it;
}

std::string MoleculeRegistry::names() const {
  std::string out;
  for (const auto &m : m_molecules) {
    if (!out.empty())
      out += ", ";
    out += m.name;
  }
  return out;
}

void MoleculeRegistry::add(MoleculeSpec m) {
  validate(m);
  const auto it = std::find_if(m_molecules.begin(), m_molecules.end(),
                               [&](const auto &x) { return x.name == m.name; });
  if (it != m_molecules.end())
    *it = std::move(m);
  else
    m_molecules.push_back(std::move(m));
}

void MoleculeRegistry::set_constants(const PhysicalConstants &k) {
  validate(k);
  m_constants = k;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text, int line) {
  double value = 0.0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    throw ConfigError("line " + std::to_string(line) + ": '" +
                      std::string(key) + "' expects a number, got '" +
                      std::string(text) + "'");
  return value;
}

// Fields of a molecule being read; NaN marks "not given".
struct PendingMolecule {
  std::string name;
  double d0 = std::nan("");
  double r0 = std::nan("");
  double mu = std::nan("");
  int line = 0;

  MoleculeSpec finish() const {
    if (std::isnan(d0) || std::isnan(r0) || std::isnan(mu))
      throw ConfigError("molecule '" + name + "' (line " +
                        std::to_string(line) +
                        ") needs d0_ev, r0_angstrom and mu_amu");
    return {name, d0, r0, mu};
  }
};

} // namespace

void MoleculeRegistry::load_config(std::string_view text) {
  std::vector<MoleculeSpec> parsed;
  std::optional<PendingMolecule> current;
  PhysicalConstants constants = m_constants;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (key == "name") {
      if (value.empty())
        throw ConfigError("line " + std::to_string(line_no) + ": empty name");
      if (current)
        parsed.push_back(current->finish());
      current = PendingMolecule{std::string(value)};
      current->line = line_no;
    } else if (key == "hbar_c_ev_angstrom") {
      constants.hbar_c = parse_double(key, value, line_no);
    } else if (key == "amu_to_ev") {
      constants.amu_to_ev = parse_double(key, value, line_no);
    } else if (key == "d0_ev" || key == "r0_angstrom" || key == "mu_amu") {
      if (!current)
        throw ConfigError("line " + std::to_string(line_no) + ": '" +
                          std::string(key) + "' before any 'name'");
      const double v = parse_double(key, value, line_no);
      if (key == "d0_ev")
        current->d0 = v;
      else if (key == "r0_angstrom")
        current->r0 = v;
      else
        current->mu = v;
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  if (current)
    parsed.push_back(current->finish());

  // Validate everything before touching the registry.
  validate(constants);
  for (const auto &m : parsed)
    validate(m);
  m_constants = constants;
  for (auto &m : parsed)
    add(std::move(m));
}

void MoleculeRegistry::load_config_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  load_config(buffer.str());
}

} // namespace kratzer
