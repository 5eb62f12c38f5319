// SPDX-License-Identifier: Apache-2.0
#include "polygraph/molgraph/graph.h"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "polygraph/core/error.h"

namespace polygraph {

std::string_view bond_order_name(BondOrder order) {
  switch (order) {
    case BondOrder::kSingle: return "single";
    case BondOrder::kDouble: return "double";
    case BondOrder::kTriple: return "triple";
    case BondOrder::kAromatic: return "aromatic";
  }
  return "single";
}

BondOrder bond_order_from_name(std::string_view name) {
  if (name == "single" || name == "1") return BondOrder::kSingle;
  if (name == "double" || name == "2") return BondOrder::kDouble;
  if (name == "triple" || name == "3") return BondOrder::kTriple;
  if (name == "aromatic" || name == "ar") return BondOrder::kAromatic;
  throw Error(ErrorCode::kFormat, "unknown bond order '" + std::string(name) + "'");
}

int MolecularGraph::add_atom(Atom atom) {
  if (atom.element == nullptr) throw Error(ErrorCode::kConfig, "atom without element");
  if (atom.id < 0) atom.id = next_id_;
  if (index_.contains(atom.id))
    throw Error(ErrorCode::kConfig, "duplicate atom id " + std::to_string(atom.id));
  next_id_ = std::max(next_id_, atom.id + 1);
  index_.emplace(atom.id, static_cast<int>(atoms_.size()));
  atoms_.push_back(std::move(atom));
  adjacency_.emplace_back();
  return atoms_.back().id;
}

int MolecularGraph::index_of(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kUnknownAtom, "unknown atom id " + std::to_string(id));
  return it->second;
}

void MolecularGraph::add_bond(int a_id, int b_id, BondOrder order) {
  if (a_id == b_id) throw Error(ErrorCode::kConfig, "self bond on atom " + std::to_string(a_id));
  const int ia = index_of(a_id);
  const int ib = index_of(b_id);
  for (const auto& n : adjacency_[static_cast<std::size_t>(ia)])
    if (n.index == ib)
      throw Error(ErrorCode::kConfig,
                  "duplicate bond " + std::to_string(a_id) + "-" + std::to_string(b_id));
  const int bond_index = static_cast<int>(bonds_.size());
  bonds_.push_back({a_id, b_id, order});
  adjacency_[static_cast<std::size_t>(ia)].push_back({ib, order, bond_index});
  adjacency_[static_cast<std::size_t>(ib)].push_back({ia, order, bond_index});
}

std::optional<std::size_t> MolecularGraph::find_bond(int a_id, int b_id) const {
  const int ia = index_of(a_id);
  const int ib = index_of(b_id);
  for (const auto& n : adjacency_[static_cast<std::size_t>(ia)])
    if (n.index == ib) return static_cast<std::size_t>(n.bond);
  return std::nullopt;
}

void MolecularGraph::remove_bond(int a_id, int b_id) {
  auto found = find_bond(a_id, b_id);
  if (!found)
    throw Error(ErrorCode::kUnknownAtom,
                "no bond " + std::to_string(a_id) + "-" + std::to_string(b_id));
  bonds_.erase(bonds_.begin() + static_cast<std::ptrdiff_t>(*found));
  rebuild_adjacency();
}

void MolecularGraph::remove_atoms(std::span<const int> ids) {
  if (ids.empty()) return;
  std::unordered_set<int> doomed;
  for (int id : ids) {
    index_of(id);
    doomed.insert(id);
  }
  std::erase_if(atoms_, [&](const Atom& a) { return doomed.contains(a.id); });
  std::erase_if(bonds_, [&](const Bond& b) { return doomed.contains(b.a) || doomed.contains(b.b); });
  index_.clear();
  for (std::size_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i].id, static_cast<int>(i));
  rebuild_adjacency();
}

void MolecularGraph::rebuild_adjacency() {
  adjacency_.assign(atoms_.size(), {});
  for (std::size_t b = 0; b < bonds_.size(); ++b) {
    const int ia = index_of(bonds_[b].a);
    const int ib = index_of(bonds_[b].b);
    adjacency_[static_cast<std::size_t>(ia)].push_back({ib, bonds_[b].order, static_cast<int>(b)});
    adjacency_[static_cast<std::size_t>(ib)].push_back({ia, bonds_[b].order, static_cast<int>(b)});
  }
}

ComponentLabels connected_components(const MolecularGraph& graph) {
  ComponentLabels out;
  out.label.assign(graph.size(), -1);
  std::vector<int> stack;
  for (int start = 0; start < static_cast<int>(graph.size()); ++start) {
    if (out.label[static_cast<std::size_t>(start)] >= 0) continue;
    const int c = out.count++;
    out.label[static_cast<std::size_t>(start)] = c;
    stack.push_back(start);
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (const auto& n : graph.neighbors(i)) {
        if (out.label[static_cast<std::size_t>(n.index)] < 0) {
          out.label[static_cast<std::size_t>(n.index)] = c;
          stack.push_back(n.index);
        }
      }
    }
  }
  return out;
}

std::vector<int> bond_distances_from(const MolecularGraph& graph, int source_index, int max_depth) {
  std::vector<int> dist(graph.size(), kNoPath);
  std::deque<int> queue{source_index};
  dist[static_cast<std::size_t>(source_index)] = 0;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    const int d = dist[static_cast<std::size_t>(i)];
    if (d >= max_depth) continue;
    for (const auto& n : graph.neighbors(i)) {
      if (dist[static_cast<std::size_t>(n.index)] == kNoPath) {
        dist[static_cast<std::size_t>(n.index)] = d + 1;
        queue.push_back(n.index);
      }
    }
  }
  return dist;
}

int shortest_bond_distance(const MolecularGraph& graph, int a_id, int b_id) {
  const int ia = graph.index_of(a_id);
  const int ib = graph.index_of(b_id);
  if (ia == ib) return 0;
  return bond_distances_from(graph, ia)[static_cast<std::size_t>(ib)];
}

int bonded_valence(const MolecularGraph& graph, int index) {
  int sum = 0;
  int aromatic = 0;
  for (const auto& n : graph.neighbors(index)) {
    if (n.order == BondOrder::kAromatic)
      ++aromatic;
    else
      sum += static_cast<int>(n.order);
  }
  if (aromatic > 0) {
    // Each aromatic bond counts 1; pi-donating atoms (C, N, P, B) carry one
    // extra unit for their share of the delocalized double bond, so aromatic
    // CH in a six-membered ring gets exactly one hydrogen.
    sum += aromatic;
    const int z = graph.atom_at(index).element->atomic_number;
    if (aromatic >= 2 && (z == 6 || z == 7 || z == 15 || z == 5)) sum += 1;
  }
  return sum;
}

int max_valence(const Atom& atom) {
  const auto& vals = atom.element->valences;
  return vals.back() + std::abs(atom.formal_charge);
}

double total_element_mass(const MolecularGraph& graph) {
  double m = 0.0;
  for (const auto& a : graph.atoms()) m += a.element->atomic_mass;
  return m;
}

}  // namespace polygraph
