// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "polygraph/simbox/system.h"

namespace polygraph {

// LAMMPS data file, atom style "full", with pair style lj/cut/coul/cut, bond
// and angle style harmonic, dihedral style fourier and improper style cvff.
// Atoms are written in id order (renumbered from 1 when any id is below 1);
// types are numbered by first appearance. Trailing comments carry what the
// format cannot: element, site label, formal charge and aromaticity on Atoms
// lines and the bond order on Bonds lines.
std::string write_lammps_data(const MolecularSystem& system, std::string_view title = "polygraph");

// Inverse of write_lammps_data. Files without Pair Coeffs load as
// unparameterized systems. Unknown sections, truncated sections and
// malformed lines raise kFormat with the line number; any atom style other
// than full raises kUnsupportedStyle.
MolecularSystem read_lammps_data(std::string_view text, std::string_view source = "<string>");

void save_lammps_data(const std::filesystem::path& path, const MolecularSystem& system);
MolecularSystem load_lammps_data(const std::filesystem::path& path);

}  // namespace polygraph
