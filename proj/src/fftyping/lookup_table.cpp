// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/lookup_table.h"

#include <algorithm>

#include "polygraph/core/error.h"
#include "polygraph/fftyping/wl.h"

namespace polygraph {

BondKey make_bond_key(const Digest128& a, const Digest128& b, BondOrder order) {
  return a <= b ? BondKey{a, b, static_cast<int>(order)} : BondKey{b, a, static_cast<int>(order)};
}

AngleKey make_angle_key(const Digest128& a, const Digest128& b, const Digest128& c) {
  return a <= c ? AngleKey{a, b, c} : AngleKey{c, b, a};
}

DihedralKey make_dihedral_key(const Digest128& a, const Digest128& b, const Digest128& c,
                              const Digest128& d) {
  return std::min(DihedralKey{a, b, c, d}, DihedralKey{d, c, b, a});
}

ImproperKey make_improper_key(const Digest128& center, Digest128 a, Digest128 b, Digest128 c) {
  std::array<Digest128, 3> others{a, b, c};
  std::sort(others.begin(), others.end());
  return {center, others[0], others[1], others[2]};
}

std::string Provenance::text() const {
  std::string out = "fragment '" + fragment + "' atoms (";
  for (std::size_t i = 0; i < atoms.size(); ++i) out += (i ? "," : "") + std::to_string(atoms[i]);
  return out + ")";
}

LookupTable::LookupTable(int depth, double tolerance) : depth_(depth), tolerance_(tolerance) {
  if (depth < 1) throw Error(ErrorCode::kConfig, "lookup table depth must be >= 1");
}

namespace {

template <typename Map, typename Key, typename P>
void insert_checked(Map& map, const Key& key, const P& params, Provenance source, double tol,
                    const char* kind) {
  auto [it, inserted] = map.try_emplace(key, TableEntry<P>{params, source});
  if (inserted) return;
  if (auto diff = difference(it->second.params, params, tol)) {
    throw Error(ErrorCode::kConflict, std::string("conflicting ") + kind + " parameters: " +
                                          it->second.source.text() + " vs " + source.text() + ": " +
                                          *diff);
  }
}

template <typename Map, typename Key>
const typename Map::mapped_type* find_in(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

}  // namespace

void LookupTable::add_fragment(const FragmentSpec& f) {
  check_fragment_complete(f);
  const auto history = wl_history(f.graph, depth_);
  const auto& labels = history[static_cast<std::size_t>(depth_)];
  const auto& shallow = history[static_cast<std::size_t>(depth_ - 1)];
  const auto& g = f.graph;
  auto lab = [&](int index) { return labels[static_cast<std::size_t>(index)]; };

  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    insert_checked(atoms_, lab(i), f.params.atoms[static_cast<std::size_t>(i)], Provenance{f.name, {i}},
                   tolerance_, "atom");
    shallow_.try_emplace(shallow[static_cast<std::size_t>(i)], f.name);
  }
  for (const auto& [ij, p] : f.params.bonds) {
    const Bond& b = g.bonds()[*g.find_bond(ij.first, ij.second)];
    insert_checked(bonds_, make_bond_key(lab(ij.first), lab(ij.second), b.order), p,
                   Provenance{f.name, {ij.first, ij.second}}, tolerance_, "bond");
  }
  for (const auto& [t, p] : f.params.angles)
    insert_checked(angles_, make_angle_key(lab(t[0]), lab(t[1]), lab(t[2])), p,
                   Provenance{f.name, {t[0], t[1], t[2]}}, tolerance_, "angle");
  for (const auto& [t, p] : f.params.dihedrals)
    insert_checked(dihedrals_, make_dihedral_key(lab(t[0]), lab(t[1]), lab(t[2]), lab(t[3])), p,
                   Provenance{f.name, {t[0], t[1], t[2], t[3]}}, tolerance_, "dihedral");
  for (const auto& [t, p] : f.params.impropers) {
    insert_checked(impropers_, make_improper_key(lab(t[0]), lab(t[1]), lab(t[2]), lab(t[3])), p,
                   Provenance{f.name, {t[0], t[1], t[2], t[3]}}, tolerance_, "improper");
    planar_.insert(lab(t[0]));
  }
  fragment_names_.push_back(f.name);
}

const TableEntry<AtomParams>* LookupTable::find_atom(const Digest128& label) const {
  return find_in(atoms_, label);
}
const TableEntry<BondParams>* LookupTable::find_bond(const BondKey& key) const {
  return find_in(bonds_, key);
}
const TableEntry<AngleParams>* LookupTable::find_angle(const AngleKey& key) const {
  return find_in(angles_, key);
}
const TableEntry<DihedralParams>* LookupTable::find_dihedral(const DihedralKey& key) const {
  return find_in(dihedrals_, key);
}
const TableEntry<ImproperParams>* LookupTable::find_improper(const ImproperKey& key) const {
  return find_in(impropers_, key);
}

std::string LookupTable::fragment_with_shallow_label(const Digest128& shallow) const {
  auto it = shallow_.find(shallow);
  return it == shallow_.end() ? std::string() : it->second;
}

LookupTable build_lookup_table(const std::vector<FragmentSpec>& fragments, int depth, double tolerance) {
  LookupTable table(depth, tolerance);
  for (const auto& f : fragments) table.add_fragment(f);
  return table;
}

}  // namespace polygraph
