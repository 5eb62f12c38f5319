// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polygraph/core/vec3.h"
#include "polygraph/molgraph/element.h"

namespace polygraph {

enum class BondOrder : std::uint8_t { kSingle = 1, kDouble = 2, kTriple = 3, kAromatic = 4 };

std::string_view bond_order_name(BondOrder order);
BondOrder bond_order_from_name(std::string_view name);

struct Atom {
  int id = -1;
  const Element* element = nullptr;
  int formal_charge = 0;
  double partial_charge = 0.0;  // e, set by parameter assignment
  Vec3 position{};
  int monomer_instance = 0;     // 0 = not part of a packed monomer copy
  std::string site_role;        // reaction-site label, empty when none
  bool aromatic = false;
  // Hydrogen count written in a SMILES bracket atom that has not been
  // materialized as explicit H atoms yet; -1 for organic-subset atoms.
  int pending_hydrogens = -1;
};

struct Bond {
  int a = -1;
  int b = -1;
  BondOrder order = BondOrder::kSingle;
};

struct Neighbor {
  int index;  // atom index (not id)
  BondOrder order;
  int bond;  // bond index
};

// Atoms carry stable ids; indices are positions in atoms() and shift when
// atoms are removed. Adjacency is always consistent with bonds().
class MolecularGraph {
 public:
  // Assigns the next free id when atom.id < 0. Returns the id.
  int add_atom(Atom atom);
  // Throws on unknown ids, self bonds and duplicate bonds.
  void add_bond(int a_id, int b_id, BondOrder order = BondOrder::kSingle);
  void remove_bond(int a_id, int b_id);
  void remove_atoms(std::span<const int> ids);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom_at(int index) const { return atoms_[static_cast<std::size_t>(index)]; }
  Atom& atom_at(int index) { return atoms_[static_cast<std::size_t>(index)]; }
  const Atom& atom(int id) const { return atom_at(index_of(id)); }
  Atom& atom(int id) { return atom_at(index_of(id)); }

  int index_of(int id) const;
  bool contains(int id) const { return index_.contains(id); }

  const std::vector<Bond>& bonds() const { return bonds_; }
  std::span<const Neighbor> neighbors(int index) const {
    return adjacency_[static_cast<std::size_t>(index)];
  }
  int degree(int index) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(index)].size()); }
  std::optional<std::size_t> find_bond(int a_id, int b_id) const;

  bool has_positions() const { return has_positions_; }
  void set_has_positions(bool value) { has_positions_ = value; }

  int next_id() const { return next_id_; }

 private:
  void rebuild_adjacency();

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<int, int> index_;
  int next_id_ = 0;
  bool has_positions_ = false;
};

inline constexpr int kNoPath = std::numeric_limits<int>::max();

struct ComponentLabels {
  std::vector<int> label;  // per atom index, numbered by first appearance
  int count = 0;
};

ComponentLabels connected_components(const MolecularGraph& graph);

// Hop count between two atom ids, kNoPath across components.
int shortest_bond_distance(const MolecularGraph& graph, int a_id, int b_id);

// BFS hop counts from one atom index; entries beyond max_depth stay kNoPath.
std::vector<int> bond_distances_from(const MolecularGraph& graph, int source_index,
                                     int max_depth = kNoPath);

// Sum of bond orders with aromatic bonds counted by the Kekule-free rule
// (see implicit-hydrogen handling in smiles.cpp).
int bonded_valence(const MolecularGraph& graph, int index);
int max_valence(const Atom& atom);

double total_element_mass(const MolecularGraph& graph);

}  // namespace polygraph
