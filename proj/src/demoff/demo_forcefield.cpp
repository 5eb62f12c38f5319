// SPDX-License-Identifier: Apache-2.0
#include "polygraph/demoff/demo_forcefield.h"

#include <algorithm>
#include <map>

#include "polygraph/molgraph/topology.h"

namespace polygraph::demoff {
namespace {

struct LJ {
  double epsilon;
  double sigma;
};

LJ lennard_jones(const MolecularGraph& g, int i) {
  const Atom& a = g.atom_at(i);
  const std::string_view s = a.element->symbol;
  if (s == "H") {
    const auto nb = g.neighbors(i);
    const bool polar = !nb.empty() && (g.atom_at(nb[0].index).element->symbol == "N" ||
                                       g.atom_at(nb[0].index).element->symbol == "O");
    return polar ? LJ{0.0157, 1.0691} : LJ{0.0157, 2.6495};
  }
  const Hybridization h = hybridization(g, i);
  if (s == "C") return h == Hybridization::kSp3 ? LJ{0.1094, 3.3997} : LJ{0.0860, 3.3997};
  if (s == "N") return {0.1700, 3.2500};
  if (s == "O") return h == Hybridization::kSp3 ? LJ{0.1700, 3.0000} : LJ{0.2100, 2.9599};
  if (s == "S") return {0.2500, 3.5636};
  if (s == "F") return {0.0610, 3.1181};
  if (s == "Cl") return {0.2650, 3.4709};
  if (s == "Br") return {0.3200, 3.5996};
  if (s == "I") return {0.4000, 3.8000};
  if (s == "Si") return {0.4000, 3.8000};
  if (s == "P") return {0.2000, 3.7418};
  return {0.0950, 3.5800};  // B
}

double bond_r0(const Atom& a, const Atom& b, BondOrder order) {
  std::string x(a.element->symbol), y(b.element->symbol);
  if (x > y) std::swap(x, y);
  const std::string key = x + "-" + y;
  if (y == "H" || x == "H") {
    const std::string heavy = x == "H" ? y : x;
    return hydrogen_bond_length(heavy);
  }
  static const std::map<std::string, std::array<double, 4>> table = {
      // single, double, triple, aromatic
      {"C-C", {1.526, 1.34, 1.20, 1.40}},  {"C-N", {1.47, 1.28, 1.16, 1.34}},
      {"C-O", {1.43, 1.23, 1.13, 1.36}},   {"Br-C", {1.90, 1.90, 1.90, 1.90}},
      {"C-S", {1.81, 1.61, 1.55, 1.72}},   {"O-S", {1.58, 1.45, 1.45, 1.45}},
      {"C-Cl", {1.76, 1.76, 1.76, 1.76}},  {"C-F", {1.35, 1.35, 1.35, 1.35}},
      {"C-I", {2.14, 2.14, 2.14, 2.14}},   {"N-N", {1.45, 1.25, 1.10, 1.35}},
      {"N-O", {1.40, 1.21, 1.21, 1.30}},   {"O-O", {1.48, 1.21, 1.21, 1.48}},
  };
  const int slot = order == BondOrder::kSingle ? 0 : order == BondOrder::kDouble ? 1 : order == BondOrder::kTriple ? 2 : 3;
  if (auto it = table.find(key); it != table.end()) return it->second[static_cast<std::size_t>(slot)];
  const double scale[] = {1.0, 0.87, 0.78, 0.92};
  return (a.element->covalent_radius + b.element->covalent_radius) * scale[slot];
}

double bond_k(const Atom& a, const Atom& b, BondOrder order) {
  if (is_hydrogen(*a.element) || is_hydrogen(*b.element)) {
    const std::string_view heavy = is_hydrogen(*a.element) ? b.element->symbol : a.element->symbol;
    if (heavy == "C") return 340.0;
    if (heavy == "N") return 365.0;
    if (heavy == "O") return 370.0;
    return 350.0;
  }
  switch (order) {
    case BondOrder::kSingle: return 300.0;
    case BondOrder::kDouble: return 550.0;
    case BondOrder::kTriple: return 800.0;
    case BondOrder::kAromatic: return 470.0;
  }
  return 300.0;
}

AngleParams angle(const MolecularGraph& g, int center) {
  const Hybridization h = hybridization(g, center);
  if (h == Hybridization::kSp) return {60.0, 180.0};
  if (h == Hybridization::kSp2) return {63.0, 120.0};
  if (g.atom_at(center).element->symbol == "O") return {50.0, 108.5};
  return {50.0, 109.5};
}

DihedralParams dihedral(const MolecularGraph& g, int j, int k) {
  const Hybridization hj = hybridization(g, j), hk = hybridization(g, k);
  if (hj == Hybridization::kSp || hk == Hybridization::kSp) return {{{0.0, 1, 0.0}}};
  if (hj == Hybridization::kSp2 && hk == Hybridization::kSp2) return {{{3.625, 2, 180.0}}};
  if (hj == Hybridization::kSp3 && hk == Hybridization::kSp3) return {{{0.156, 3, 0.0}}};
  return {{{0.1, 3, 0.0}}};
}

bool planar_center(const MolecularGraph& g, int i) {
  return g.degree(i) == 3 && hybridization(g, i) == Hybridization::kSp2;
}

}  // namespace

double hydrogen_bond_length(const std::string& heavy) {
  if (heavy == "C") return 1.09;
  if (heavy == "N") return 1.01;
  if (heavy == "O") return 0.96;
  if (heavy == "S") return 1.34;
  if (heavy == "Si") return 1.48;
  if (heavy == "B") return 1.19;
  if (heavy == "P") return 1.42;
  return element_by_symbol(heavy).covalent_radius + 0.31;
}

Hybridization hybridization(const MolecularGraph& g, int index) {
  int doubles = 0;
  for (const Neighbor& nb : g.neighbors(index)) {
    if (nb.order == BondOrder::kTriple) return Hybridization::kSp;
    if (nb.order == BondOrder::kDouble) ++doubles;
    if (nb.order == BondOrder::kAromatic) return Hybridization::kSp2;
  }
  if (doubles >= 2 && g.degree(index) == 2) return Hybridization::kSp;
  return doubles > 0 ? Hybridization::kSp2 : Hybridization::kSp3;
}

FragmentSpec parameterize(const MolecularGraph& input, const std::string& name) {
  FragmentSpec f;
  f.name = name;
  f.provenance = "polygraph demo force field";
  f.graph = reindexed(input);
  const MolecularGraph& g = f.graph;
  const int n = static_cast<int>(g.size());

  f.params.atoms.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Atom& a = g.atom_at(i);
    double q = a.formal_charge;
    for (const Neighbor& nb : g.neighbors(i))
      q += 0.2 * (g.atom_at(nb.index).element->electronegativity - a.element->electronegativity);
    const LJ lj = lennard_jones(g, i);
    f.params.atoms[static_cast<std::size_t>(i)] = {a.element->atomic_mass, lj.epsilon, lj.sigma, q};
  }
  for (const Bond& b : g.bonds()) {
    const Atom& x = g.atom(b.a);
    const Atom& y = g.atom(b.b);
    f.params.bonds[{std::min(b.a, b.b), std::max(b.a, b.b)}] = {bond_k(x, y, b.order), bond_r0(x, y, b.order)};
  }
  const TopologyTables topo = enumerate_topology(g, [&](int i) { return planar_center(g, i); });
  for (const auto& t : topo.angles) f.params.angles[t] = angle(g, t[1]);
  for (const auto& t : topo.dihedrals) f.params.dihedrals[t] = dihedral(g, t[1], t[2]);
  for (const auto& t : topo.impropers) f.params.impropers[t] = {1.1, -1, 2};
  return f;
}

std::vector<FragmentSpec> parameterize_all(const std::vector<Composite>& composites) {
  std::vector<FragmentSpec> out;
  out.reserve(composites.size());
  for (const auto& c : composites) out.push_back(parameterize(c.graph, c.name));
  return out;
}

}  // namespace polygraph::demoff
