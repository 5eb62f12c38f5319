// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/fragment.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polygraph/core/error.h"
#include "polygraph/molgraph/topology.h"

namespace polygraph {

using nlohmann::json;

namespace {

std::pair<int, int> bond_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::array<int, 3> angle_key(std::array<int, 3> t) {
  if (t[0] > t[2]) std::swap(t[0], t[2]);
  return t;
}

std::array<int, 4> dihedral_key(const std::array<int, 4>& t) {
  return std::min(t, std::array<int, 4>{t[3], t[2], t[1], t[0]});
}

std::array<int, 4> improper_key(std::array<int, 4> t) {
  std::sort(t.begin() + 1, t.end());
  return t;
}

template <std::size_t N>
std::string tuple_text(const std::array<int, N>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

template <typename P>
void require_valid(const P& p, const std::string& where) {
  if (auto problem = validate(p)) throw Error(ErrorCode::kConfig, where + ": " + *problem);
}

FragmentSpec fragment_from_node(const json& doc, const std::string& where) {
  FragmentSpec f;
  f.name = doc.value("name", std::string());
  f.provenance = doc.value("provenance", std::string());
  const std::string label = where + " fragment '" + f.name + "'";
  for (const auto& a : doc.at("atoms")) {
    Atom atom;
    atom.element = &element_by_symbol(a.at("element").get<std::string>());
    atom.formal_charge = a.value("formal_charge", 0);
    atom.aromatic = a.value("aromatic", false);
    atom.site_role = a.value("site", std::string());
    f.graph.add_atom(std::move(atom));
  }
  for (const auto& b : doc.at("bonds")) {
    const BondOrder order = b.size() > 2 ? bond_order_from_name(b.at(2).get<std::string>())
                                         : BondOrder::kSingle;
    f.graph.add_bond(b.at(0).get<int>(), b.at(1).get<int>(), order);
  }
  if (!doc.contains("params")) return f;

  const json& p = doc.at("params");
  f.params.atoms.assign(f.graph.size(), AtomParams{});
  std::vector<bool> seen(f.graph.size(), false);
  for (const auto& a : p.value("atoms", json::array())) {
    const int i = a.at("index").get<int>();
    if (i < 0 || i >= static_cast<int>(f.graph.size()))
      throw Error(ErrorCode::kConfig, label + ": atom parameter index out of range");
    f.params.atoms[static_cast<std::size_t>(i)] = {a.at("mass").get<double>(), a.at("epsilon").get<double>(),
                                                   a.at("sigma").get<double>(), a.at("charge").get<double>()};
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end() && !f.graph.empty())
    throw Error(ErrorCode::kConfig, label + ": every atom needs parameters");
  for (const auto& b : p.value("bonds", json::array())) {
    const auto t = b.at("atoms").get<std::array<int, 2>>();
    f.params.bonds[bond_key(t[0], t[1])] = {b.at("k").get<double>(), b.at("r0").get<double>()};
  }
  for (const auto& a : p.value("angles", json::array()))
    f.params.angles[angle_key(a.at("atoms").get<std::array<int, 3>>())] = {a.at("k").get<double>(),
                                                                         a.at("theta0").get<double>()};
  for (const auto& d : p.value("dihedrals", json::array())) {
    DihedralParams dp;
    for (const auto& t : d.at("terms"))
      dp.terms.push_back({t.at("K").get<double>(), t.at("n").get<int>(), t.value("phase", 0.0)});
    f.params.dihedrals[dihedral_key(d.at("atoms").get<std::array<int, 4>>())] = dp;
  }
  for (const auto& d : p.value("impropers", json::array()))
    f.params.impropers[improper_key(d.at("atoms").get<std::array<int, 4>>())] = {
        d.at("K").get<double>(), d.value("d", -1), d.value("n", 2)};
  check_fragment_complete(f);
  return f;
}

json node_from_fragment(const FragmentSpec& f, bool include_params) {
  json doc;
  doc["schema_version"] = kFragmentSchemaVersion;
  doc["name"] = f.name;
  if (!f.provenance.empty()) doc["provenance"] = f.provenance;
  json atoms = json::array();
  for (const Atom& a : f.graph.atoms()) {
    json node{{"element", std::string(a.element->symbol)}};
    if (a.formal_charge != 0) node["formal_charge"] = a.formal_charge;
    if (a.aromatic) node["aromatic"] = true;
    if (!a.site_role.empty()) node["site"] = a.site_role;
    atoms.push_back(node);
  }
  doc["atoms"] = atoms;
  json bonds = json::array();
  for (const Bond& b : f.graph.bonds())
    bonds.push_back({f.graph.index_of(b.a), f.graph.index_of(b.b), std::string(bond_order_name(b.order))});
  doc["bonds"] = bonds;
  if (!include_params) return doc;

  json p;
  json ap = json::array();
  for (std::size_t i = 0; i < f.params.atoms.size(); ++i) {
    const auto& a = f.params.atoms[i];
    ap.push_back({{"index", i}, {"mass", a.mass}, {"epsilon", a.epsilon}, {"sigma", a.sigma}, {"charge", a.charge}});
  }
  p["atoms"] = ap;
  json bp = json::array();
  for (const auto& [k, v] : f.params.bonds) bp.push_back({{"atoms", {k.first, k.second}}, {"k", v.k}, {"r0", v.r0}});
  p["bonds"] = bp;
  json anp = json::array();
  for (const auto& [k, v] : f.params.angles) anp.push_back({{"atoms", k}, {"k", v.k}, {"theta0", v.theta0}});
  p["angles"] = anp;
  json dp = json::array();
  for (const auto& [k, v] : f.params.dihedrals) {
    json terms = json::array();
    for (const auto& t : v.terms) terms.push_back({{"K", t.k}, {"n", t.n}, {"phase", t.phase}});
    dp.push_back({{"atoms", k}, {"terms", terms}});
  }
  p["dihedrals"] = dp;
  json ip = json::array();
  for (const auto& [k, v] : f.params.impropers) ip.push_back({{"atoms", k}, {"K", v.k}, {"d", v.d}, {"n", v.n}});
  p["impropers"] = ip;
  doc["params"] = p;
  return doc;
}

}  // namespace

void check_fragment_complete(const FragmentSpec& f) {
  const std::string label = "fragment '" + f.name + "'";
  if (f.params.atoms.size() != f.graph.size())
    throw Error(ErrorCode::kConfig, label + ": atom parameter count does not match atom count");
  for (std::size_t i = 0; i < f.params.atoms.size(); ++i)
    require_valid(f.params.atoms[i], label + " atom " + std::to_string(i));
  for (const Bond& b : f.graph.bonds()) {
    auto it = f.params.bonds.find(bond_key(b.a, b.b));
    if (it == f.params.bonds.end())
      throw Error(ErrorCode::kConfig, label + ": bond (" + std::to_string(b.a) + "," +
                                          std::to_string(b.b) + ") has no parameters");
    require_valid(it->second, label + " bond");
  }
  if (f.params.bonds.size() != f.graph.bonds().size())
    throw Error(ErrorCode::kConfig, label + ": bond parameters reference missing bonds");
  const TopologyTables topo = enumerate_topology(f.graph);
  for (const auto& a : topo.angles) {
    auto it = f.params.angles.find(a);
    if (it == f.params.angles.end())
      throw Error(ErrorCode::kConfig, label + ": angle " + tuple_text(a) + " has no parameters");
    require_valid(it->second, label + " angle " + tuple_text(a));
  }
  if (f.params.angles.size() != topo.angles.size())
    throw Error(ErrorCode::kConfig, label + ": angle parameters reference missing angles");
  for (const auto& d : topo.dihedrals) {
    auto it = f.params.dihedrals.find(d);
    if (it == f.params.dihedrals.end())
      throw Error(ErrorCode::kConfig, label + ": dihedral " + tuple_text(d) + " has no parameters");
    require_valid(it->second, label + " dihedral " + tuple_text(d));
  }
  if (f.params.dihedrals.size() != topo.dihedrals.size())
    throw Error(ErrorCode::kConfig, label + ": dihedral parameters reference missing dihedrals");
  for (const auto& [key, value] : f.params.impropers) {
    const int c = key[0];
    if (c < 0 || c >= static_cast<int>(f.graph.size()) || f.graph.degree(c) != 3)
      throw Error(ErrorCode::kConfig, label + ": improper " + tuple_text(key) +
                                          " is not centered on a 3-coordinate atom");
    for (int x = 1; x < 4; ++x)
      if (!f.graph.find_bond(c, key[static_cast<std::size_t>(x)]))
        throw Error(ErrorCode::kConfig, label + ": improper " + tuple_text(key) + " is not a star");
    require_valid(value, label + " improper " + tuple_text(key));
  }
}

std::vector<FragmentSpec> fragments_from_json(std::string_view text, std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what(), e.byte);
  }
  try {
    const int version = doc.value("schema_version", 0);
    if (version != kFragmentSchemaVersion)
      throw Error(ErrorCode::kConfig, where + ": unsupported fragment schema_version " + std::to_string(version));
    std::vector<FragmentSpec> out;
    if (doc.contains("fragments")) {
      for (const auto& node : doc.at("fragments")) out.push_back(fragment_from_node(node, where));
    } else {
      out.push_back(fragment_from_node(doc, where));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, where + ": " + e.what());
  }
}

std::vector<FragmentSpec> load_fragments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open fragment file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return fragments_from_json(buffer.str(), path);
}

std::string fragment_to_json(const FragmentSpec& fragment, bool include_params) {
  return node_from_fragment(fragment, include_params).dump(1);
}

std::string fragment_library_to_json(const std::vector<FragmentSpec>& fragments, bool include_params) {
  json doc;
  doc["schema_version"] = kFragmentSchemaVersion;
  json list = json::array();
  for (const auto& f : fragments) {
    json node = node_from_fragment(f, include_params);
    node.erase("schema_version");
    list.push_back(node);
  }
  doc["fragments"] = list;
  return doc.dump(1);
}

MolecularGraph reindexed(const MolecularGraph& graph) {
  MolecularGraph out;
  for (const Atom& a : graph.atoms()) {
    Atom copy = a;
    copy.id = -1;
    out.add_atom(std::move(copy));
  }
  for (const Bond& b : graph.bonds()) out.add_bond(graph.index_of(b.a), graph.index_of(b.b), b.order);
  out.set_has_positions(graph.has_positions());
  return out;
}

}  // namespace polygraph
