// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polygraph/core/hash128.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/fftyping/params.h"
#include "polygraph/molgraph/graph.h"

namespace polygraph {

struct BondKey {
  Digest128 a, b;  // a <= b
  int order = 1;
  friend auto operator<=>(const BondKey&, const BondKey&) = default;
};
using AngleKey = std::array<Digest128, 3>;     // ends ordered
using DihedralKey = std::array<Digest128, 4>;  // min of both orientations
using ImproperKey = std::array<Digest128, 4>;  // center, then sorted others

BondKey make_bond_key(const Digest128& a, const Digest128& b, BondOrder order);
AngleKey make_angle_key(const Digest128& a, const Digest128& b, const Digest128& c);
DihedralKey make_dihedral_key(const Digest128& a, const Digest128& b, const Digest128& c,
                              const Digest128& d);
ImproperKey make_improper_key(const Digest128& center, Digest128 a, Digest128 b, Digest128 c);

// Where a table entry came from, for conflict reports.
struct Provenance {
  std::string fragment;
  std::vector<int> atoms;  // fragment atom indices

  std::string text() const;
};

template <typename P>
struct TableEntry {
  P params;
  Provenance source;
};

class LookupTable {
 public:
  explicit LookupTable(int depth, double tolerance = kDefaultParamTolerance);

  int depth() const { return depth_; }
  double tolerance() const { return tolerance_; }

  // Inserts every term of a parameterized fragment; consistent duplicates are
  // ignored, inconsistent ones throw kConflict.
  void add_fragment(const FragmentSpec& fragment);

  const TableEntry<AtomParams>* find_atom(const Digest128& label) const;
  const TableEntry<BondParams>* find_bond(const BondKey& key) const;
  const TableEntry<AngleParams>* find_angle(const AngleKey& key) const;
  const TableEntry<DihedralParams>* find_dihedral(const DihedralKey& key) const;
  const TableEntry<ImproperParams>* find_improper(const ImproperKey& key) const;

  // Atom labels that carry an improper in some fragment.
  bool is_planar_center(const Digest128& label) const { return planar_.contains(label); }

  // Fragment whose atoms include this depth-(d-1) label, or empty.
  std::string fragment_with_shallow_label(const Digest128& shallow) const;

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t bond_count() const { return bonds_.size(); }
  std::size_t angle_count() const { return angles_.size(); }
  std::size_t dihedral_count() const { return dihedrals_.size(); }
  std::size_t improper_count() const { return impropers_.size(); }
  const std::vector<std::string>& fragment_names() const { return fragment_names_; }

 private:
  int depth_;
  double tolerance_;
  std::map<Digest128, TableEntry<AtomParams>> atoms_;
  std::map<BondKey, TableEntry<BondParams>> bonds_;
  std::map<AngleKey, TableEntry<AngleParams>> angles_;
  std::map<DihedralKey, TableEntry<DihedralParams>> dihedrals_;
  std::map<ImproperKey, TableEntry<ImproperParams>> impropers_;
  std::set<Digest128> planar_;
  std::map<Digest128, std::string> shallow_;
  std::vector<std::string> fragment_names_;
};

LookupTable build_lookup_table(const std::vector<FragmentSpec>& fragments, int depth,
                               double tolerance = kDefaultParamTolerance);

}  // namespace polygraph
