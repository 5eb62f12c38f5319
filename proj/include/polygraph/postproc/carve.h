// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "polygraph/fftyping/lookup_table.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

enum class VoidKind { kSlab, kSphere, kCylinder };

struct VoidGeometry {
  VoidKind kind = VoidKind::kSphere;
  int axis = 2;           // slab normal or cylinder axis (0 = x)
  double lo = 0.0;        // slab interval, angstrom, measured upward from lo with wrapping
  double hi = 0.0;
  Vec3 center{};          // sphere center; cylinder passes through it
  double radius = 0.0;
};

VoidGeometry slab(int axis, double lo, double hi);
VoidGeometry sphere(const Vec3& center, double radius);
VoidGeometry cylinder(int axis, const Vec3& center, double radius);

// Throws kConfig on nonpositive radii, empty slabs or bad axes.
void validate(const VoidGeometry& geometry);

// Membership under periodic boundaries.
bool inside(const VoidGeometry& geometry, const PeriodicBox& box, const Vec3& point);

enum class RemovalPredicate { kAnyAtom, kCentroid };

struct DanglingSite {
  int atom = -1;                 // surviving atom id
  int former_neighbor = -1;      // removed atom id
  Vec3 former_neighbor_position; // minimum image relative to the surviving atom
};

struct CarveResult {
  MolecularSystem system;
  std::vector<DanglingSite> dangling;
  std::vector<int> removed_instances;
};

// Removes whole monomer instances selected by the predicate (atoms without a
// monomer instance are judged individually). Surviving bonded terms keep
// their parameters.
CarveResult carve(const MolecularSystem& system, const VoidGeometry& geometry,
                  RemovalPredicate predicate = RemovalPredicate::kAnyAtom);

struct CapSpec {
  std::string cap_element = "H";
  // Bond length (angstrom) per dangling-atom element.
  std::map<std::string, double> bond_lengths{{"C", 1.09}, {"N", 1.01}, {"O", 0.96}, {"S", 1.34},
                                             {"Si", 1.48}, {"B", 1.19}, {"P", 1.42}};
  double length_for(const std::string& element) const;
};

// One cap atom per dangling site, on the unit vector toward the former
// neighbor. Reassigns parameters from the table when given.
MolecularSystem cap(const MolecularSystem& system, const std::vector<DanglingSite>& dangling,
                    const CapSpec& spec, const LookupTable* table);

}  // namespace polygraph
