// SPDX-License-Identifier: Apache-2.0
#include "polygraph/molgraph/monomer.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polygraph/core/error.h"
#include "polygraph/molgraph/smiles.h"

namespace polygraph {

using nlohmann::json;

MonomerTemplate make_monomer(std::string name, std::string smiles, std::vector<ReactionSite> sites) {
  MonomerTemplate m;
  m.name = std::move(name);
  m.smiles = std::move(smiles);
  m.graph = add_implicit_hydrogens(parse_smiles(m.smiles));
  for (const ReactionSite& site : sites) {
    if (!m.graph.contains(site.atom))
      throw Error(ErrorCode::kConfig, "monomer '" + m.name + "': reaction site atom " +
                                          std::to_string(site.atom) + " does not exist");
    if (site.type.empty())
      throw Error(ErrorCode::kConfig, "monomer '" + m.name + "': empty reaction site type");
    m.graph.atom(site.atom).site_role = site.type;
  }
  m.reaction_sites = std::move(sites);
  return m;
}

MonomerTemplate monomer_from_json(std::string_view text, std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what(), e.byte);
  }
  try {
    const int version = doc.value("schema_version", 0);
    if (version != kMonomerSchemaVersion)
      throw Error(ErrorCode::kConfig, where + ": unsupported monomer schema_version " +
                                          std::to_string(version));
    std::vector<ReactionSite> sites;
    for (const auto& s : doc.value("reaction_sites", json::array()))
      sites.push_back({s.at("atom").get<int>(), s.at("type").get<std::string>()});
    MonomerTemplate m = make_monomer(doc.at("name").get<std::string>(),
                                     doc.at("smiles").get<std::string>(), std::move(sites));
    if (doc.contains("geometry")) {
      const auto& geo = doc.at("geometry");
      if (geo.size() != m.graph.size())
        throw Error(ErrorCode::kConfig, where + ": geometry has " + std::to_string(geo.size()) +
                                            " entries for " + std::to_string(m.graph.size()) +
                                            " atoms");
      for (std::size_t i = 0; i < geo.size(); ++i) {
        const auto& p = geo[i];
        m.graph.atom_at(static_cast<int>(i)).position = {p.at(0).get<double>(), p.at(1).get<double>(),
                                                         p.at(2).get<double>()};
      }
      m.graph.set_has_positions(true);
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, where + ": " + e.what());
  }
}

MonomerTemplate load_monomer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open monomer file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return monomer_from_json(buffer.str(), path);
}

std::string monomer_to_json(const MonomerTemplate& m) {
  json doc;
  doc["schema_version"] = kMonomerSchemaVersion;
  doc["name"] = m.name;
  doc["smiles"] = m.smiles;
  json sites = json::array();
  for (const auto& s : m.reaction_sites) sites.push_back({{"atom", s.atom}, {"type", s.type}});
  doc["reaction_sites"] = sites;
  if (m.graph.has_positions()) {
    json geo = json::array();
    for (const Atom& a : m.graph.atoms()) geo.push_back({a.position.x, a.position.y, a.position.z});
    doc["geometry"] = geo;
  }
  return doc.dump(2);
}

}  // namespace polygraph
