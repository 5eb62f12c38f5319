// SPDX-License-Identifier: Apache-2.0
#include "polygraph/io/lammps_data.h"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "polygraph/core/error.h"
#include "polygraph/io/atomic_file.h"

namespace polygraph {
namespace {

void appendf(std::string& out, const char* fmt, ...) __attribute__((format(printf, 2, 3)));
void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  const int n = std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (n < static_cast<int>(sizeof buf)) {
    out.append(buf, static_cast<std::size_t>(n));
    return;
  }
  std::string big(static_cast<std::size_t>(n) + 1, '\0');
  va_start(args, fmt);
  std::vsnprintf(big.data(), big.size(), fmt, args);
  va_end(args);
  out.append(big.data(), static_cast<std::size_t>(n));
}

// Distinct values in first-appearance order; returns 1-based type ids.
template <typename T>
class TypeTable {
 public:
  int intern(const T& value) {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == value) return static_cast<int>(i) + 1;
    values_.push_back(value);
    return static_cast<int>(values_.size());
  }
  const std::vector<T>& values() const { return values_; }

 private:
  std::vector<T> values_;
};

struct AtomType {
  const Element* element = nullptr;
  double mass = 0.0;
  double epsilon = 0.0;
  double sigma = 0.0;
  bool operator==(const AtomType&) const = default;
};

}  // namespace

std::string write_lammps_data(const MolecularSystem& s, std::string_view title) {
  const MolecularGraph& g = s.graph;
  if (!g.empty()) require_parameterized(s);

  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.atom_at(a).id < g.atom_at(b).id; });
  const bool renumber = !g.empty() && g.atom_at(order.front()).id < 1;
  std::map<int, int> out_id;  // atom id -> written id
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Atom& a = g.atom_at(order[k]);
    out_id[a.id] = renumber ? static_cast<int>(k) + 1 : a.id;
  }

  TypeTable<AtomType> atom_types;
  std::vector<int> atom_type(g.size());
  for (int i : order) {
    const AtomParams& p = s.params.atoms[static_cast<std::size_t>(i)];
    atom_type[static_cast<std::size_t>(i)] = atom_types.intern({g.atom_at(i).element, p.mass, p.epsilon, p.sigma});
  }
  TypeTable<BondParams> bond_types;
  std::vector<int> bond_type;
  for (const BondParams& p : s.params.bonds) bond_type.push_back(bond_types.intern(p));
  TypeTable<AngleParams> angle_types;
  std::vector<int> angle_type;
  for (const AngleParams& p : s.params.angles) angle_type.push_back(angle_types.intern(p));
  TypeTable<DihedralParams> dihedral_types;
  std::vector<int> dihedral_type;
  for (const DihedralParams& p : s.params.dihedrals) dihedral_type.push_back(dihedral_types.intern(p));
  TypeTable<ImproperParams> improper_types;
  std::vector<int> improper_type;
  for (const ImproperParams& p : s.params.impropers) improper_type.push_back(improper_types.intern(p));

  std::string out;
  appendf(out, "%.*s\n\n", static_cast<int>(title.size()), title.data());
  appendf(out, "%zu atoms\n%zu bonds\n%zu angles\n%zu dihedrals\n%zu impropers\n\n", g.size(), g.bonds().size(),
          s.topology.angles.size(), s.topology.dihedrals.size(), s.topology.impropers.size());
  appendf(out, "%zu atom types\n%zu bond types\n%zu angle types\n%zu dihedral types\n%zu improper types\n\n",
          atom_types.values().size(), bond_types.values().size(), angle_types.values().size(),
          dihedral_types.values().size(), improper_types.values().size());
  static constexpr std::array<const char*, 3> kAxis{"x", "y", "z"};
  for (int axis = 0; axis < 3; ++axis)
    appendf(out, "%.6f %.6f %slo %shi\n", 0.0, s.box.lengths[axis], kAxis[static_cast<std::size_t>(axis)],
            kAxis[static_cast<std::size_t>(axis)]);
  if (g.empty()) return out;

  out += "\nMasses\n\n";
  for (std::size_t t = 0; t < atom_types.values().size(); ++t) {
    const AtomType& at = atom_types.values()[t];
    appendf(out, "%zu %.16e # %.*s\n", t + 1, at.mass, static_cast<int>(at.element->symbol.size()),
            at.element->symbol.data());
  }
  out += "\nPair Coeffs # lj/cut/coul/cut\n\n";
  for (std::size_t t = 0; t < atom_types.values().size(); ++t)
    appendf(out, "%zu %.16e %.16e\n", t + 1, atom_types.values()[t].epsilon, atom_types.values()[t].sigma);
  if (!bond_types.values().empty()) {
    out += "\nBond Coeffs # harmonic\n\n";
    for (std::size_t t = 0; t < bond_types.values().size(); ++t)
      appendf(out, "%zu %.16e %.16e\n", t + 1, bond_types.values()[t].k, bond_types.values()[t].r0);
  }
  if (!angle_types.values().empty()) {
    out += "\nAngle Coeffs # harmonic\n\n";
    for (std::size_t t = 0; t < angle_types.values().size(); ++t)
      appendf(out, "%zu %.16e %.16e\n", t + 1, angle_types.values()[t].k, angle_types.values()[t].theta0);
  }
  if (!dihedral_types.values().empty()) {
    out += "\nDihedral Coeffs # fourier\n\n";
    for (std::size_t t = 0; t < dihedral_types.values().size(); ++t) {
      const auto& terms = dihedral_types.values()[t].terms;
      // fourier needs at least one term; an empty set becomes one zero term.
      if (terms.empty()) {
        appendf(out, "%zu 1 %.16e 1 %.16e\n", t + 1, 0.0, 0.0);
        continue;
      }
      appendf(out, "%zu %zu", t + 1, terms.size());
      for (const DihedralTerm& term : terms) appendf(out, " %.16e %d %.16e", term.k, term.n, term.phase);
      out += '\n';
    }
  }
  if (!improper_types.values().empty()) {
    out += "\nImproper Coeffs # cvff\n\n";
    for (std::size_t t = 0; t < improper_types.values().size(); ++t) {
      const ImproperParams& p = improper_types.values()[t];
      appendf(out, "%zu %.16e %d %d\n", t + 1, p.k, p.d, p.n);
    }
  }

  out += "\nAtoms # full\n\n";
  for (int i : order) {
    const Atom& a = g.atom_at(i);
    const Vec3 p = s.box.wrap(a.position);
    appendf(out, "%d %d %d %.10f %.6f %.6f %.6f # %.*s", out_id[a.id], a.monomer_instance,
            atom_type[static_cast<std::size_t>(i)], s.params.atoms[static_cast<std::size_t>(i)].charge, p.x, p.y, p.z,
            static_cast<int>(a.element->symbol.size()), a.element->symbol.data());
    if (!a.site_role.empty()) appendf(out, " site=%s", a.site_role.c_str());
    if (a.formal_charge != 0) appendf(out, " fc=%d", a.formal_charge);
    if (a.aromatic) out += " aromatic";
    out += '\n';
  }

  if (!g.bonds().empty()) {
    out += "\nBonds\n\n";
    for (std::size_t b = 0; b < g.bonds().size(); ++b) {
      const Bond& bond = g.bonds()[b];
      const std::string_view order_name = bond_order_name(bond.order);
      appendf(out, "%zu %d %d %d # %.*s\n", b + 1, bond_type[b], out_id[bond.a],
              out_id[bond.b], static_cast<int>(order_name.size()), order_name.data());
    }
  }
  if (!s.topology.angles.empty()) {
    out += "\nAngles\n\n";
    for (std::size_t t = 0; t < s.topology.angles.size(); ++t) {
      const auto& a = s.topology.angles[t];
      appendf(out, "%zu %d %d %d %d\n", t + 1, angle_type[t], out_id[a[0]], out_id[a[1]], out_id[a[2]]);
    }
  }
  if (!s.topology.dihedrals.empty()) {
    out += "\nDihedrals\n\n";
    for (std::size_t t = 0; t < s.topology.dihedrals.size(); ++t) {
      const auto& d = s.topology.dihedrals[t];
      appendf(out, "%zu %d %d %d %d %d\n", t + 1, dihedral_type[t], out_id[d[0]], out_id[d[1]], out_id[d[2]],
              out_id[d[3]]);
    }
  }
  if (!s.topology.impropers.empty()) {
    out += "\nImpropers\n\n";
    for (std::size_t t = 0; t < s.topology.impropers.size(); ++t) {
      const auto& m = s.topology.impropers[t];  // (center, i, j, k) written as i j center k
      appendf(out, "%zu %d %d %d %d %d\n", t + 1, improper_type[t], out_id[m[1]], out_id[m[2]], out_id[m[0]],
              out_id[m[3]]);
    }
  }
  return out;
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> fields;
  std::string comment;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  int number = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line;
    line.number = number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      line.comment = trim(raw.substr(hash + 1));
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    std::string f;
    while (in >> f) line.fields.push_back(f);
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Reader {
 public:
  Reader(std::string_view text, std::string_view source) : lines_(split_lines(text)), source_(source) {}

  MolecularSystem read();

 private:
  [[noreturn]] void fail(const Line& line, const std::string& what) const {
    throw Error(ErrorCode::kFormat, source_ + ":" + std::to_string(line.number) + ": " + what);
  }

  double number(const Line& line, std::size_t field) const {
    if (field >= line.fields.size()) fail(line, "missing column " + std::to_string(field + 1));
    const std::string& s = line.fields[field];
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE) fail(line, "'" + s + "' is not a number");
    return v;
  }

  long integer(const Line& line, std::size_t field) const {
    if (field >= line.fields.size()) fail(line, "missing column " + std::to_string(field + 1));
    const std::string& s = line.fields[field];
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE) fail(line, "'" + s + "' is not an integer");
    return v;
  }

  int type_id(const Line& line, std::size_t field, long count, const char* what) const {
    const long t = integer(line, field);
    if (t < 1 || t > count) fail(line, std::string(what) + " type " + std::to_string(t) + " out of range");
    return static_cast<int>(t);
  }

  static std::optional<std::string> section_name(const Line& line);

  std::vector<Line> lines_;
  std::string source_;
};

std::optional<std::string> Reader::section_name(const Line& line) {
  static const std::array<const char*, 12> kKnown{"Masses",     "Pair Coeffs", "Bond Coeffs", "Angle Coeffs",
                                                  "Dihedral Coeffs", "Improper Coeffs", "Atoms", "Velocities",
                                                  "Bonds",      "Angles",      "Dihedrals",   "Impropers"};
  std::string joined;
  for (const std::string& f : line.fields) joined += (joined.empty() ? "" : " ") + f;
  for (const char* k : kKnown)
    if (joined == k) return joined;
  return std::nullopt;
}

MolecularSystem Reader::read() {
  struct Counts {
    long atoms = 0, bonds = 0, angles = 0, dihedrals = 0, impropers = 0;
    long atom_types = 0, bond_types = 0, angle_types = 0, dihedral_types = 0, improper_types = 0;
  } n;
  std::array<double, 3> lo{0, 0, 0}, hi{0, 0, 0};
  std::array<bool, 3> have_bounds{false, false, false};

  std::size_t i = 1;  // line 0 is the title
  for (; i < lines_.size(); ++i) {
    const Line& line = lines_[i];
    if (line.fields.empty()) continue;
    if (section_name(line)) break;
    const auto& f = line.fields;
    if (f.size() == 4 && (f[2] == "xlo" || f[2] == "ylo" || f[2] == "zlo")) {
      const int axis = f[2][0] - 'x';
      if (f[3] != std::string(1, f[2][0]) + "hi") fail(line, "malformed box bounds");
      lo[static_cast<std::size_t>(axis)] = number(line, 0);
      hi[static_cast<std::size_t>(axis)] = number(line, 1);
      have_bounds[static_cast<std::size_t>(axis)] = true;
      continue;
    }
    if (f.size() == 6 && f[3] == "xy")
      throw Error(ErrorCode::kUnsupportedStyle, source_ + ":" + std::to_string(line.number) + ": triclinic boxes are not supported");
    if (f.size() == 2 || f.size() == 3) {
      const std::string key = f.size() == 2 ? f[1] : f[1] + " " + f[2];
      static const std::map<std::string, long Counts::*> kKeys{
          {"atoms", &Counts::atoms},           {"bonds", &Counts::bonds},
          {"angles", &Counts::angles},         {"dihedrals", &Counts::dihedrals},
          {"impropers", &Counts::impropers},   {"atom types", &Counts::atom_types},
          {"bond types", &Counts::bond_types}, {"angle types", &Counts::angle_types},
          {"dihedral types", &Counts::dihedral_types}, {"improper types", &Counts::improper_types}};
      if (auto it = kKeys.find(key); it != kKeys.end()) {
        const long v = integer(line, 0);
        if (v < 0) fail(line, "negative count");
        n.*(it->second) = v;
        continue;
      }
    }
    const char c = f[0][0];
    if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.') fail(line, "unrecognized header line");
    fail(line, "unknown section '" + trim(std::string(f[0]) + (f.size() > 1 ? " " + f[1] : "")) + "'");
  }
  for (int axis = 0; axis < 3; ++axis)
    if (!have_bounds[static_cast<std::size_t>(axis)])
      throw Error(ErrorCode::kFormat, source_ + ": missing box bounds for axis " + std::string(1, static_cast<char>('x' + axis)));

  std::map<std::string, std::vector<const Line*>> sections;
  std::map<std::string, std::string> section_style;
  while (i < lines_.size()) {
    const Line& header = lines_[i];
    if (header.fields.empty()) {
      ++i;
      continue;
    }
    const std::optional<std::string> name = section_name(header);
    if (!name) {
      std::string joined;
      for (const std::string& f : header.fields) joined += (joined.empty() ? "" : " ") + f;
      fail(header, "unknown section '" + joined + "'");
    }
    if (sections.contains(*name)) fail(header, "duplicate section '" + *name + "'");
    long expected = 0;
    if (*name == "Masses" || *name == "Pair Coeffs") expected = n.atom_types;
    else if (*name == "Bond Coeffs") expected = n.bond_types;
    else if (*name == "Angle Coeffs") expected = n.angle_types;
    else if (*name == "Dihedral Coeffs") expected = n.dihedral_types;
    else if (*name == "Improper Coeffs") expected = n.improper_types;
    else if (*name == "Atoms" || *name == "Velocities") expected = n.atoms;
    else if (*name == "Bonds") expected = n.bonds;
    else if (*name == "Angles") expected = n.angles;
    else if (*name == "Dihedrals") expected = n.dihedrals;
    else if (*name == "Impropers") expected = n.impropers;
    section_style[*name] = header.comment;
    std::vector<const Line*>& entries = sections[*name];
    ++i;
    while (static_cast<long>(entries.size()) < expected) {
      if (i >= lines_.size() || section_name(lines_[i]))
        throw Error(ErrorCode::kFormat, source_ + ":" + std::to_string(i >= lines_.size() ? lines_.back().number : lines_[i].number) +
                                            ": section '" + *name + "' is truncated: expected " + std::to_string(expected) +
                                            " entries, found " + std::to_string(entries.size()));
      if (!lines_[i].fields.empty()) entries.push_back(&lines_[i]);
      ++i;
    }
  }

  auto require_style = [&](const std::string& section, std::initializer_list<const char*> accepted) {
    auto it = section_style.find(section);
    if (it == section_style.end() || it->second.empty()) return;
    for (const char* a : accepted)
      if (it->second == a) return;
    throw Error(ErrorCode::kUnsupportedStyle,
                source_ + ": " + section + " style '" + it->second + "' is not supported");
  };
  require_style("Atoms", {"full"});
  require_style("Pair Coeffs", {"lj/cut/coul/cut", "lj/cut/coul/long", "lj/cut"});
  require_style("Bond Coeffs", {"harmonic"});
  require_style("Angle Coeffs", {"harmonic"});
  require_style("Dihedral Coeffs", {"fourier"});
  require_style("Improper Coeffs", {"cvff"});
  if (n.atoms > 0 && !sections.contains("Atoms"))
    throw Error(ErrorCode::kFormat, source_ + ": header declares " + std::to_string(n.atoms) + " atoms but there is no Atoms section");
  if (n.bonds > 0 && !sections.contains("Bonds"))
    throw Error(ErrorCode::kFormat, source_ + ": header declares bonds but there is no Bonds section");

  MolecularSystem s;
  s.box = make_box(hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]);
  const Vec3 origin{lo[0], lo[1], lo[2]};

  std::vector<double> type_mass(static_cast<std::size_t>(n.atom_types) + 1, 0.0);
  std::vector<const Element*> type_element(static_cast<std::size_t>(n.atom_types) + 1, nullptr);
  for (const Line* l : sections["Masses"]) {
    const int t = type_id(*l, 0, n.atom_types, "atom");
    type_mass[static_cast<std::size_t>(t)] = number(*l, 1);
    if (!l->comment.empty()) {
      std::istringstream c(l->comment);
      std::string sym;
      c >> sym;
      if (is_supported_element(sym)) type_element[static_cast<std::size_t>(t)] = &element_by_symbol(sym);
    }
  }
  const bool has_pair = sections.contains("Pair Coeffs");
  std::vector<std::pair<double, double>> pair(static_cast<std::size_t>(n.atom_types) + 1);
  for (const Line* l : sections["Pair Coeffs"]) {
    const int t = type_id(*l, 0, n.atom_types, "atom");
    if (l->fields.size() < 3) fail(*l, "Pair Coeffs needs epsilon and sigma");
    pair[static_cast<std::size_t>(t)] = {number(*l, 1), number(*l, 2)};
  }

  struct AtomRow {
    long id;
    int mol;
    int type;
    double q;
    Vec3 pos;
    const Line* line;
  };
  std::vector<AtomRow> rows;
  for (const Line* l : sections["Atoms"]) {
    if (l->fields.size() != 7 && l->fields.size() != 10)
      throw Error(ErrorCode::kUnsupportedStyle, source_ + ":" + std::to_string(l->number) + ": Atoms line has " +
                                                    std::to_string(l->fields.size()) +
                                                    " columns; only atom style full is supported");
    rows.push_back({integer(*l, 0), static_cast<int>(integer(*l, 1)), type_id(*l, 2, n.atom_types, "atom"), number(*l, 3),
                    Vec3{number(*l, 4), number(*l, 5), number(*l, 6)}, l});
  }
  std::sort(rows.begin(), rows.end(), [](const AtomRow& a, const AtomRow& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k].id == rows[k - 1].id) fail(*rows[k].line, "duplicate atom id " + std::to_string(rows[k].id));

  for (const AtomRow& r : rows) {
    Atom a;
    a.id = static_cast<int>(r.id);
    a.monomer_instance = r.mol;
    a.partial_charge = r.q;
    a.position = s.box.wrap(r.pos - origin);
    std::istringstream c(r.line->comment);
    std::string tok;
    bool first = true;
    while (c >> tok) {
      if (first && is_supported_element(tok)) a.element = &element_by_symbol(tok);
      else if (tok.rfind("site=", 0) == 0) a.site_role = tok.substr(5);
      else if (tok.rfind("fc=", 0) == 0) a.formal_charge = std::atoi(tok.c_str() + 3);
      else if (tok == "aromatic") a.aromatic = true;
      first = false;
    }
    if (a.element == nullptr) a.element = type_element[static_cast<std::size_t>(r.type)];
    if (a.element == nullptr) {
      if (type_mass[static_cast<std::size_t>(r.type)] <= 0.0) fail(*r.line, "cannot determine the element of atom " + std::to_string(r.id));
      a.element = &element_by_mass(type_mass[static_cast<std::size_t>(r.type)]);
    }
    s.graph.add_atom(std::move(a));
    s.params.atoms.push_back({type_mass[static_cast<std::size_t>(r.type)], pair[static_cast<std::size_t>(r.type)].first,
                              pair[static_cast<std::size_t>(r.type)].second, r.q});
  }
  s.graph.set_has_positions(true);

  auto atom_ref = [&](const Line& l, std::size_t field) {
    const long id = integer(l, field);
    if (!s.graph.contains(static_cast<int>(id))) fail(l, "reference to unknown atom " + std::to_string(id));
    return static_cast<int>(id);
  };

  std::vector<BondParams> bond_coeffs(static_cast<std::size_t>(n.bond_types) + 1);
  for (const Line* l : sections["Bond Coeffs"])
    bond_coeffs[static_cast<std::size_t>(type_id(*l, 0, n.bond_types, "bond"))] = {number(*l, 1), number(*l, 2)};
  for (const Line* l : sections["Bonds"]) {
    const int t = type_id(*l, 1, n.bond_types, "bond");
    BondOrder order = BondOrder::kSingle;
    if (!l->comment.empty()) {
      std::istringstream c(l->comment);
      std::string tok;
      c >> tok;
      try {
        order = bond_order_from_name(tok);
      } catch (const Error&) {
        fail(*l, "unknown bond order '" + tok + "'");
      }
    }
    try {
      s.graph.add_bond(atom_ref(*l, 2), atom_ref(*l, 3), order);
    } catch (const Error& e) {
      fail(*l, e.what());
    }
    s.params.bonds.push_back(bond_coeffs[static_cast<std::size_t>(t)]);
  }

  std::vector<AngleParams> angle_coeffs(static_cast<std::size_t>(n.angle_types) + 1);
  for (const Line* l : sections["Angle Coeffs"])
    angle_coeffs[static_cast<std::size_t>(type_id(*l, 0, n.angle_types, "angle"))] = {number(*l, 1), number(*l, 2)};
  std::vector<DihedralParams> dihedral_coeffs(static_cast<std::size_t>(n.dihedral_types) + 1);
  for (const Line* l : sections["Dihedral Coeffs"]) {
    const int t = type_id(*l, 0, n.dihedral_types, "dihedral");
    const long m = integer(*l, 1);
    if (m < 1 || l->fields.size() != static_cast<std::size_t>(2 + 3 * m)) fail(*l, "malformed fourier coefficients");
    DihedralParams p;
    for (long k = 0; k < m; ++k) {
      const std::size_t base = static_cast<std::size_t>(2 + 3 * k);
      p.terms.push_back({number(*l, base), static_cast<int>(integer(*l, base + 1)), number(*l, base + 2)});
    }
    // The writer's placeholder for an empty term list.
    if (p.terms.size() == 1 && p.terms[0].k == 0.0 && p.terms[0].n == 1 && p.terms[0].phase == 0.0) p.terms.clear();
    dihedral_coeffs[static_cast<std::size_t>(t)] = std::move(p);
  }
  std::vector<ImproperParams> improper_coeffs(static_cast<std::size_t>(n.improper_types) + 1);
  for (const Line* l : sections["Improper Coeffs"]) {
    const int t = type_id(*l, 0, n.improper_types, "improper");
    improper_coeffs[static_cast<std::size_t>(t)] = {number(*l, 1), static_cast<int>(integer(*l, 2)),
                                                     static_cast<int>(integer(*l, 3))};
  }

  std::vector<std::pair<std::array<int, 3>, AngleParams>> angles;
  for (const Line* l : sections["Angles"]) {
    const int t = type_id(*l, 1, n.angle_types, "angle");
    std::array<int, 3> a{atom_ref(*l, 2), atom_ref(*l, 3), atom_ref(*l, 4)};
    if (a[0] > a[2]) std::swap(a[0], a[2]);
    angles.emplace_back(a, angle_coeffs[static_cast<std::size_t>(t)]);
  }
  std::vector<std::pair<std::array<int, 4>, DihedralParams>> dihedrals;
  for (const Line* l : sections["Dihedrals"]) {
    const int t = type_id(*l, 1, n.dihedral_types, "dihedral");
    std::array<int, 4> d{atom_ref(*l, 2), atom_ref(*l, 3), atom_ref(*l, 4), atom_ref(*l, 5)};
    const std::array<int, 4> r{d[3], d[2], d[1], d[0]};
    dihedrals.emplace_back(std::min(d, r), dihedral_coeffs[static_cast<std::size_t>(t)]);
  }
  std::vector<std::pair<std::array<int, 4>, ImproperParams>> impropers;
  for (const Line* l : sections["Impropers"]) {
    const int t = type_id(*l, 1, n.improper_types, "improper");
    std::array<int, 4> m{atom_ref(*l, 4), atom_ref(*l, 2), atom_ref(*l, 3), atom_ref(*l, 5)};
    std::sort(m.begin() + 1, m.end());
    impropers.emplace_back(m, improper_coeffs[static_cast<std::size_t>(t)]);
  }

  const bool complete = s.graph.empty() ||
                        (has_pair && (n.bonds == 0 || sections.contains("Bond Coeffs")) &&
                         (n.angles == 0 || sections.contains("Angle Coeffs")) &&
                         (n.dihedrals == 0 || sections.contains("Dihedral Coeffs")) &&
                         (n.impropers == 0 || sections.contains("Improper Coeffs")));
  if (complete) {
    for (auto& [key, p] : angles) {
      s.topology.angles.push_back(key);
      s.params.angles.push_back(p);
    }
    for (auto& [key, p] : dihedrals) {
      s.topology.dihedrals.push_back(key);
      s.params.dihedrals.push_back(p);
    }
    for (auto& [key, p] : impropers) {
      s.topology.impropers.push_back(key);
      s.params.impropers.push_back(p);
    }
    s.parameterized = true;
  } else {
    s.topology = enumerate_topology(s.graph);
    s.params = {};
    s.parameterized = false;
  }
  return s;
}

}  // namespace

MolecularSystem read_lammps_data(std::string_view text, std::string_view source) {
  return Reader(text, source).read();
}

void save_lammps_data(const std::filesystem::path& path, const MolecularSystem& system) {
  write_file_atomic(path, write_lammps_data(system));
}

MolecularSystem load_lammps_data(const std::filesystem::path& path) {
  return read_lammps_data(read_text_file(path), path.string());
}

}  // namespace polygraph
