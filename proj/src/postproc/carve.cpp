// SPDX-License-Identifier: Apache-2.0
#include "polygraph/postproc/carve.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "polygraph/core/error.h"
#include "polygraph/core/log.h"
#include "polygraph/fftyping/assign.h"

namespace polygraph {

VoidGeometry slab(int axis, double lo, double hi) {
  VoidGeometry g;
  g.kind = VoidKind::kSlab;
  g.axis = axis;
  g.lo = lo;
  g.hi = hi;
  return g;
}

VoidGeometry sphere(const Vec3& center, double radius) {
  VoidGeometry g;
  g.kind = VoidKind::kSphere;
  g.center = center;
  g.radius = radius;
  return g;
}

VoidGeometry cylinder(int axis, const Vec3& center, double radius) {
  VoidGeometry g;
  g.kind = VoidKind::kCylinder;
  g.axis = axis;
  g.center = center;
  g.radius = radius;
  return g;
}

void validate(const VoidGeometry& g) {
  if (g.axis < 0 || g.axis > 2) throw Error(ErrorCode::kConfig, "void axis must be 0, 1 or 2");
  if (g.kind == VoidKind::kSlab) {
    if (!(g.hi > g.lo)) throw Error(ErrorCode::kConfig, "slab interval must be nonempty");
  } else if (!(g.radius > 0.0)) {
    throw Error(ErrorCode::kConfig, "void radius must be positive");
  }
}

bool inside(const VoidGeometry& g, const PeriodicBox& box, const Vec3& p) {
  switch (g.kind) {
    case VoidKind::kSlab: {
      const double l = box.lengths[g.axis];
      double t = std::fmod(p[g.axis] - g.lo, l);
      if (t < 0.0) t += l;
      return t <= g.hi - g.lo;
    }
    case VoidKind::kSphere:
      return norm2(box.minimum_image(p - g.center)) <= g.radius * g.radius;
    case VoidKind::kCylinder: {
      Vec3 d = box.minimum_image(p - g.center);
      d[g.axis] = 0.0;
      return norm2(d) <= g.radius * g.radius;
    }
  }
  return false;
}

CarveResult carve(const MolecularSystem& system, const VoidGeometry& geometry, RemovalPredicate predicate) {
  validate(geometry);
  const auto& g = system.graph;
  // Unit of removal: the monomer instance, or the atom itself (keyed by -id - 1).
  auto unit_of = [&](const Atom& a) { return a.monomer_instance > 0 ? a.monomer_instance : -a.id - 1; };
  std::set<int> doomed;
  if (predicate == RemovalPredicate::kAnyAtom) {
    for (const Atom& a : g.atoms())
      if (inside(geometry, system.box, a.position)) doomed.insert(unit_of(a));
  } else {
    std::map<int, std::pair<Vec3, Vec3>> anchor_sum;  // unit -> (anchor, summed offsets)
    std::map<int, int> count;
    for (const Atom& a : g.atoms()) {
      const int u = unit_of(a);
      auto [it, fresh] = anchor_sum.try_emplace(u, a.position, Vec3{});
      it->second.second += system.box.minimum_image(a.position - it->second.first);
      ++count[u];
    }
    for (const auto& [u, as] : anchor_sum) {
      const Vec3 centroid = as.first + as.second / static_cast<double>(count[u]);
      if (inside(geometry, system.box, system.box.wrap(centroid))) doomed.insert(u);
    }
  }

  CarveResult result;
  result.removed_instances.assign(doomed.begin(), doomed.end());
  std::vector<int> removed;
  for (const Atom& a : g.atoms())
    if (doomed.contains(unit_of(a))) removed.push_back(a.id);
  std::set<int> removed_set(removed.begin(), removed.end());

  for (const Bond& b : g.bonds()) {
    const bool ra = removed_set.contains(b.a), rb = removed_set.contains(b.b);
    if (ra == rb) continue;
    const int keep = ra ? b.b : b.a;
    const int gone = ra ? b.a : b.b;
    const Vec3 keep_pos = g.atom(keep).position;
    result.dangling.push_back({keep, gone, keep_pos + system.box.minimum_image(g.atom(gone).position - keep_pos)});
  }
  std::sort(result.dangling.begin(), result.dangling.end(), [](const DanglingSite& x, const DanglingSite& y) {
    return std::tie(x.atom, x.former_neighbor) < std::tie(y.atom, y.former_neighbor);
  });

  // Filter terms so surviving parameters stay aligned.
  MolecularSystem out;
  out.box = system.box;
  out.parameterized = system.parameterized;
  out.graph = g;
  auto alive = [&](std::initializer_list<int> ids) {
    return std::none_of(ids.begin(), ids.end(), [&](int id) { return removed_set.contains(id); });
  };
  const bool has_params = system.parameterized;
  std::vector<BondParams> bond_params;
  if (has_params)
    for (std::size_t i = 0; i < g.bonds().size(); ++i)
      if (alive({g.bonds()[i].a, g.bonds()[i].b})) bond_params.push_back(system.params.bonds[i]);
  std::vector<AtomParams> atom_params;
  if (has_params)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (alive({g.atom_at(static_cast<int>(i)).id})) atom_params.push_back(system.params.atoms[i]);
  for (std::size_t i = 0; i < system.topology.angles.size(); ++i) {
    const auto& t = system.topology.angles[i];
    if (!alive({t[0], t[1], t[2]})) continue;
    out.topology.angles.push_back(t);
    if (has_params) out.params.angles.push_back(system.params.angles[i]);
  }
  for (std::size_t i = 0; i < system.topology.dihedrals.size(); ++i) {
    const auto& t = system.topology.dihedrals[i];
    if (!alive({t[0], t[1], t[2], t[3]})) continue;
    out.topology.dihedrals.push_back(t);
    if (has_params) out.params.dihedrals.push_back(system.params.dihedrals[i]);
  }
  for (std::size_t i = 0; i < system.topology.impropers.size(); ++i) {
    const auto& t = system.topology.impropers[i];
    if (!alive({t[0], t[1], t[2], t[3]})) continue;
    out.topology.impropers.push_back(t);
    if (has_params) out.params.impropers.push_back(system.params.impropers[i]);
  }
  out.graph.remove_atoms(removed);
  out.params.atoms = std::move(atom_params);
  out.params.bonds = std::move(bond_params);
  if (out.graph.empty() && !g.empty()) log::warn("carve removed every monomer; the system is empty");
  result.system = std::move(out);
  return result;
}

double CapSpec::length_for(const std::string& element) const {
  auto it = bond_lengths.find(element);
  if (it == bond_lengths.end())
    throw Error(ErrorCode::kConfig, "no cap bond length for element " + element);
  if (!(it->second > 0.0)) throw Error(ErrorCode::kConfig, "cap bond lengths must be positive");
  return it->second;
}

MolecularSystem cap(const MolecularSystem& system, const std::vector<DanglingSite>& dangling, const CapSpec& spec,
                    const LookupTable* table) {
  MolecularSystem out = system;
  const Element& cap_element = element_by_symbol(spec.cap_element);
  for (const DanglingSite& d : dangling) {
    const Atom& site = out.graph.atom(d.atom);
    const Vec3 dir = d.former_neighbor_position - site.position;
    const double len = norm(dir);
    if (len == 0.0) throw Error(ErrorCode::kConfig, "dangling site coincides with its former neighbor");
    Atom h;
    h.element = &cap_element;
    h.monomer_instance = site.monomer_instance;
    h.position = out.box.wrap(site.position + dir * (spec.length_for(std::string(site.element->symbol)) / len));
    const int id = out.graph.add_atom(std::move(h));
    out.graph.add_bond(d.atom, id, BondOrder::kSingle);
  }
  out.parameterized = false;
  if (table) {
    assign_parameters(out, *table);
  } else {
    out.topology = enumerate_topology(out.graph);
  }
  return out;
}

}  // namespace polygraph
