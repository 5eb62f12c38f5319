// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>

namespace polygraph {

struct Element {
  std::string_view symbol;
  int atomic_number;
  double atomic_mass;           // amu
  int default_valence;          // lowest normal valence
  std::span<const int> valences;  // allowed neutral valences, ascending
  double covalent_radius;       // angstrom
  double vdw_radius;            // angstrom, Bondi-style
  double electronegativity;     // Pauling
  bool organic_subset;          // may appear outside brackets in SMILES
};

// Throws Error(kUnsupportedElement) for symbols outside the supported table.
const Element& element_by_symbol(std::string_view symbol);
const Element& element_by_number(int atomic_number);
// Element whose standard mass is closest to `mass` (LAMMPS Masses recovery).
const Element& element_by_mass(double mass);
bool is_supported_element(std::string_view symbol);
std::span<const Element> supported_elements();

inline bool is_hydrogen(const Element& e) { return e.atomic_number == 1; }

}  // namespace polygraph
