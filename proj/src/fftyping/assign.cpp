// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/assign.h"

#include <algorithm>

#include "polygraph/core/error.h"
#include "polygraph/fftyping/wl.h"

namespace polygraph {

std::string element_context(const MolecularGraph& g, int index) {
  std::vector<std::string> names;
  for (const Neighbor& nb : g.neighbors(index)) names.emplace_back(g.atom_at(nb.index).element->symbol);
  std::sort(names.begin(), names.end());
  std::string out(g.atom_at(index).element->symbol);
  out += "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + ")";
}

namespace {

[[noreturn]] void missing(const MolecularGraph& g, const LookupTable& table,
                          const std::vector<Digest128>& shallow, const char* kind,
                          std::initializer_list<int> indices) {
  std::vector<int> ids;
  std::string context;
  std::string suggestion;
  for (int i : indices) {
    ids.push_back(g.atom_at(i).id);
    context += (context.empty() ? "" : " ") + element_context(g, i);
    if (suggestion.empty()) suggestion = table.fragment_with_shallow_label(shallow[static_cast<std::size_t>(i)]);
  }
  std::string msg = std::string("no ") + kind + " parameters for the environment of atoms";
  for (int id : ids) msg += " " + std::to_string(id);
  msg += " [" + context + "]";
  if (!suggestion.empty()) msg += "; nearest fragment: '" + suggestion + "'";
  throw MissingEnvironmentError(msg, ids, context, suggestion);
}

}  // namespace

ParameterAssignment assign_parameters(const MolecularGraph& g, const LookupTable& table) {
  const int depth = table.depth();
  const auto history = wl_history(g, depth);
  const auto& labels = history[static_cast<std::size_t>(depth)];
  const auto& shallow = history[static_cast<std::size_t>(depth - 1)];
  auto lab = [&](int index) { return labels[static_cast<std::size_t>(index)]; };

  ParameterAssignment out;
  out.topology = enumerate_topology(g, [&](int index) { return table.is_planar_center(lab(index)); });
  auto& p = out.params;

  p.atoms.reserve(g.size());
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    const auto* e = table.find_atom(lab(i));
    if (!e) missing(g, table, shallow, "atom", {i});
    p.atoms.push_back(e->params);
  }
  p.bonds.reserve(g.bonds().size());
  for (const Bond& b : g.bonds()) {
    const int i = g.index_of(b.a), j = g.index_of(b.b);
    const auto* e = table.find_bond(make_bond_key(lab(i), lab(j), b.order));
    if (!e) missing(g, table, shallow, "bond", {i, j});
    p.bonds.push_back(e->params);
  }
  p.angles.reserve(out.topology.angles.size());
  for (const auto& t : out.topology.angles) {
    const int i = g.index_of(t[0]), j = g.index_of(t[1]), k = g.index_of(t[2]);
    const auto* e = table.find_angle(make_angle_key(lab(i), lab(j), lab(k)));
    if (!e) missing(g, table, shallow, "angle", {i, j, k});
    p.angles.push_back(e->params);
  }
  p.dihedrals.reserve(out.topology.dihedrals.size());
  for (const auto& t : out.topology.dihedrals) {
    const int i = g.index_of(t[0]), j = g.index_of(t[1]), k = g.index_of(t[2]), l = g.index_of(t[3]);
    const auto* e = table.find_dihedral(make_dihedral_key(lab(i), lab(j), lab(k), lab(l)));
    if (!e) missing(g, table, shallow, "dihedral", {i, j, k, l});
    p.dihedrals.push_back(e->params);
  }
  p.impropers.reserve(out.topology.impropers.size());
  for (const auto& t : out.topology.impropers) {
    const int c = g.index_of(t[0]), i = g.index_of(t[1]), j = g.index_of(t[2]), k = g.index_of(t[3]);
    const auto* e = table.find_improper(make_improper_key(lab(c), lab(i), lab(j), lab(k)));
    if (!e) missing(g, table, shallow, "improper", {c, i, j, k});
    p.impropers.push_back(e->params);
  }
  return out;
}

void assign_parameters(MolecularSystem& system, const LookupTable& table) {
  ParameterAssignment a = assign_parameters(system.graph, table);
  system.topology = std::move(a.topology);
  system.params = std::move(a.params);
  for (int i = 0; i < static_cast<int>(system.graph.size()); ++i)
    system.graph.atom_at(i).partial_charge = system.params.atoms[static_cast<std::size_t>(i)].charge;
  system.parameterized = true;
}

}  // namespace polygraph
