#pragma once
#include "kratzer/model.hpp"
#include <optional>
#include <span>
#include <string_view>

namespace kratzer {

//! Reference energy levels and per-level matrix elements for the builtin
//! molecules (n <= 5, l <= n), computed with hbar c = 1973.29 eV.A.
struct ReferenceLevel {
  int n;
  int ell;
  double energy_ev;
};

struct ReferenceMatrixRow {
  int n;
  int ell;
  double r_elem;
  double rddr_elem;
  double gamma1;
  double gamma2;
};

//! Empty span for molecules without reference data.
std::span<const ReferenceLevel> reference_energies(std::string_view molecule,
                                                   PotentialKind kind);
std::span<const ReferenceMatrixRow>
reference_matrix_elements(std::string_view molecule);

//! True when m matches a builtin molecule exactly (name and parameters).
bool is_reference_molecule(const MoleculeSpec &m);

} // namespace kratzer
