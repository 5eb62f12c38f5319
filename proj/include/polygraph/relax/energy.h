// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polygraph/simbox/system.h"

namespace polygraph {

inline constexpr double kCoulombConstant = 332.06371;  // kcal*A/(mol*e^2)

struct EnergyOptions {
  double cutoff = 10.0;  // angstrom, truncated LJ and Coulomb
  double dielectric = 1.0;
  double lj14_scale = 0.5;
  double coulomb14_scale = 1.0 / 1.2;
  double skin = 1.0;  // Verlet-list buffer
};

// 1-4 scaling conventions per force-field family ("gaff" or "dreiding").
EnergyOptions energy_options_for_family(const std::string& family);

struct EnergyBreakdown {
  double bond = 0.0;
  double angle = 0.0;
  double dihedral = 0.0;
  double improper = 0.0;
  double lj = 0.0;
  double coulomb = 0.0;

  double total() const { return bond + angle + dihedral + improper + lj + coulomb; }
};

// Harmonic bonds and angles, cosine-series dihedrals, cvff impropers (atom
// order i, j, center, k), Lennard-Jones 12-6 with Lorentz-Berthelot mixing
// and Coulomb, all under the minimum-image convention. 1-2 and 1-3 pairs are
// excluded; 1-4 pairs are scaled. Holds a Verlet list that is rebuilt when an
// atom has moved more than half the skin.
class EnergyModel {
 public:
  EnergyModel(const MolecularSystem& system, EnergyOptions options = {});

  // Energy, and forces (kcal/mol/A, by atom index) when `forces` is non-null.
  // Throws kNonFiniteEnergy on coincident atoms.
  EnergyBreakdown evaluate(const MolecularSystem& system, std::vector<Vec3>* forces);

  const EnergyOptions& options() const { return options_; }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t rebuild_count() const { return rebuilds_; }

 private:
  struct PairTerm {
    int i, j;
    double lj_scale, coul_scale;
  };
  void rebuild(const MolecularSystem& system);
  bool needs_rebuild(const MolecularSystem& system) const;

  EnergyOptions options_;
  std::vector<PairTerm> pairs_;        // nonbonded pairs within cutoff + skin
  std::vector<PairTerm> scaled14_;     // always evaluated (within cutoff)
  std::vector<std::uint64_t> excluded_;  // sorted (i << 32 | j), i < j
  std::vector<Vec3> reference_;
  double skin_ = 0.0;
  std::size_t rebuilds_ = 0;
};

EnergyBreakdown compute_energy(const MolecularSystem& system, const EnergyOptions& options = {});
std::vector<Vec3> compute_forces(const MolecularSystem& system, const EnergyOptions& options = {});

}  // namespace polygraph
