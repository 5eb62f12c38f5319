// SPDX-License-Identifier: Apache-2.0
#include "polygraph/relax/energy.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polygraph/core/error.h"
#include "polygraph/simbox/cell_list.h"

namespace polygraph {
namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

std::uint64_t pair_key(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

[[noreturn]] void coincident(const MolecularSystem& s, int i, int j) {
  throw Error(ErrorCode::kNonFiniteEnergy,
              "atoms " + std::to_string(s.graph.atom_at(i).id) + " and " + std::to_string(s.graph.atom_at(j).id) +
                  " coincide; energy is not finite (increase min_separation)");
}

// Dihedral angle of i-j-k-l and its gradient with respect to each atom.
struct Torsion {
  double phi;
  Vec3 gi, gj, gk, gl;
};

Torsion torsion(const Vec3& f, const Vec3& g, const Vec3& h) {
  // f = ri - rj, g = rj - rk, h = rl - rk
  const Vec3 a = cross(f, g);
  const Vec3 b = cross(h, g);
  const double a2 = norm2(a), b2 = norm2(b), gn = norm(g);
  Torsion t{};
  const double cosp = dot(a, b) / std::sqrt(a2 * b2);
  const double sinp = dot(cross(b, a), g) / (std::sqrt(a2 * b2) * gn);
  // Blondel-Karplus measure the angle with the opposite sign; negate it (and
  // its gradient) to follow the IUPAC convention used by LAMMPS.
  t.phi = -std::atan2(sinp, cosp);
  const double fg = dot(f, g), hg = dot(h, g);
  t.gi = a * (gn / a2);
  t.gl = b * (-gn / b2);
  t.gj = b * (hg / (b2 * gn)) - a * (gn / a2 + fg / (a2 * gn));
  t.gk = a * (fg / (a2 * gn)) - b * (hg / (b2 * gn) - gn / b2);
  return t;
}

}  // namespace

EnergyOptions energy_options_for_family(const std::string& family) {
  EnergyOptions o;
  if (family == "dreiding" || family == "uff") {
    o.lj14_scale = 1.0;
    o.coulomb14_scale = 1.0;
  } else if (family != "gaff" && !family.empty()) {
    throw Error(ErrorCode::kConfig, "unknown force-field family '" + family + "'");
  }
  return o;
}

EnergyModel::EnergyModel(const MolecularSystem& s, EnergyOptions options) : options_(options) {
  require_parameterized(s);
  if (!(options_.cutoff > 0.0)) throw Error(ErrorCode::kConfig, "nonbonded cutoff must be positive");
  if (options_.cutoff > 0.5 * s.box.min_length() + 1e-12)
    throw Error(ErrorCode::kConfig, "nonbonded cutoff " + std::to_string(options_.cutoff) +
                                        " exceeds half the shortest box length");
  if (!(options_.dielectric > 0.0)) throw Error(ErrorCode::kConfig, "dielectric must be positive");
  skin_ = std::clamp(options_.skin, 0.0, 0.5 * s.box.min_length() - options_.cutoff);

  const auto& g = s.graph;
  for (const Bond& b : g.bonds()) excluded_.push_back(pair_key(g.index_of(b.a), g.index_of(b.b)));
  for (const auto& t : s.topology.angles) excluded_.push_back(pair_key(g.index_of(t[0]), g.index_of(t[2])));
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
  std::vector<std::uint64_t> fourteen;
  for (const auto& t : s.topology.dihedrals) {
    const std::uint64_t key = pair_key(g.index_of(t[0]), g.index_of(t[3]));
    if (!std::binary_search(excluded_.begin(), excluded_.end(), key)) fourteen.push_back(key);
  }
  std::sort(fourteen.begin(), fourteen.end());
  fourteen.erase(std::unique(fourteen.begin(), fourteen.end()), fourteen.end());
  for (std::uint64_t key : fourteen)
    scaled14_.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), options_.lj14_scale,
                         options_.coulomb14_scale});
  excluded_.insert(excluded_.end(), fourteen.begin(), fourteen.end());
  std::sort(excluded_.begin(), excluded_.end());
  rebuild(s);
}

bool EnergyModel::needs_rebuild(const MolecularSystem& s) const {
  if (reference_.size() != s.graph.size()) return true;
  const double limit = 0.25 * skin_ * skin_;
  for (std::size_t i = 0; i < reference_.size(); ++i)
    if (norm2(s.box.minimum_image(s.graph.atom_at(static_cast<int>(i)).position - reference_[i])) > limit) return true;
  return false;
}

void EnergyModel::rebuild(const MolecularSystem& s) {
  pairs_.clear();
  reference_.clear();
  for (const Atom& a : s.graph.atoms()) reference_.push_back(a.position);
  if (reference_.empty()) return;
  const double radius = options_.cutoff + skin_;
  CellList cells(s.box, reference_, radius);
  cells.for_each_pair(radius, [&](int i, int j, const Vec3&) {
    if (!std::binary_search(excluded_.begin(), excluded_.end(), pair_key(i, j))) pairs_.push_back({i, j, 1.0, 1.0});
  });
  std::sort(pairs_.begin(), pairs_.end(), [](const PairTerm& a, const PairTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  ++rebuilds_;
}

EnergyBreakdown EnergyModel::evaluate(const MolecularSystem& s, std::vector<Vec3>* forces) {
  require_parameterized(s);
  if (needs_rebuild(s)) rebuild(s);
  const auto& g = s.graph;
  const auto& p = s.params;
  const PeriodicBox& box = s.box;
  auto pos = [&](int i) -> const Vec3& { return g.atom_at(i).position; };
  if (forces) forces->assign(g.size(), Vec3{});
  auto push = [&](int i, const Vec3& f) {
    if (forces) (*forces)[static_cast<std::size_t>(i)] += f;
  };
  EnergyBreakdown e;

  for (std::size_t b = 0; b < g.bonds().size(); ++b) {
    const int i = g.index_of(g.bonds()[b].a), j = g.index_of(g.bonds()[b].b);
    const Vec3 d = box.minimum_image(pos(j) - pos(i));
    const double r = norm(d);
    if (r == 0.0) coincident(s, i, j);
    const double dr = r - p.bonds[b].r0;
    e.bond += p.bonds[b].k * dr * dr;
    const Vec3 f = d * (2.0 * p.bonds[b].k * dr / r);  // force on i
    push(i, f);
    push(j, -f);
  }

  for (std::size_t a = 0; a < s.topology.angles.size(); ++a) {
    const auto& t = s.topology.angles[a];
    const int i = g.index_of(t[0]), j = g.index_of(t[1]), k = g.index_of(t[2]);
    const Vec3 u = box.minimum_image(pos(i) - pos(j));
    const Vec3 v = box.minimum_image(pos(k) - pos(j));
    const double ru = norm(u), rv = norm(v);
    if (ru == 0.0) coincident(s, i, j);
    if (rv == 0.0) coincident(s, k, j);
    const double c = std::clamp(dot(u, v) / (ru * rv), -1.0, 1.0);
    const double theta = std::acos(c);
    const double dt = theta - p.angles[a].theta0 * kDegree;
    e.angle += p.angles[a].k * dt * dt;
    if (!forces) continue;
    const double sn = std::max(std::sqrt(1.0 - c * c), 1e-12);
    const double de = 2.0 * p.angles[a].k * dt;  // dE/dtheta
    // dtheta/du = -(v/|v| - c u/|u|) / (|u| sin)
    const Vec3 gu = (v / rv - u * (c / ru)) * (-1.0 / (ru * sn));
    const Vec3 gv = (u / ru - v * (c / rv)) * (-1.0 / (rv * sn));
    push(i, gu * -de);
    push(k, gv * -de);
    push(j, (gu + gv) * de);
  }

  for (std::size_t d = 0; d < s.topology.dihedrals.size(); ++d) {
    const auto& terms = p.dihedrals[d].terms;
    if (terms.empty()) continue;
    const auto& t = s.topology.dihedrals[d];
    const int i = g.index_of(t[0]), j = g.index_of(t[1]), k = g.index_of(t[2]), l = g.index_of(t[3]);
    const Vec3 f = box.minimum_image(pos(i) - pos(j));
    const Vec3 gg = box.minimum_image(pos(j) - pos(k));
    const Vec3 h = box.minimum_image(pos(l) - pos(k));
    if (norm2(cross(f, gg)) == 0.0 || norm2(cross(h, gg)) == 0.0) continue;  // collinear: undefined, zero torque
    const Torsion tor = torsion(f, gg, h);
    double de = 0.0;
    for (const auto& term : terms) {
      const double arg = term.n * tor.phi - term.phase * kDegree;
      e.dihedral += term.k * (1.0 + std::cos(arg));
      de += -term.k * term.n * std::sin(arg);
    }
    push(i, tor.gi * -de);
    push(j, tor.gj * -de);
    push(k, tor.gk * -de);
    push(l, tor.gl * -de);
  }

  for (std::size_t m = 0; m < s.topology.impropers.size(); ++m) {
    const auto& t = s.topology.impropers[m];
    const auto& ip = p.impropers[m];
    const int c = g.index_of(t[0]), i = g.index_of(t[1]), j = g.index_of(t[2]), k = g.index_of(t[3]);
    // Ordered as i, j, center, k.
    const Vec3 f = box.minimum_image(pos(i) - pos(j));
    const Vec3 gg = box.minimum_image(pos(j) - pos(c));
    const Vec3 h = box.minimum_image(pos(k) - pos(c));
    if (norm2(cross(f, gg)) == 0.0 || norm2(cross(h, gg)) == 0.0) continue;
    const Torsion tor = torsion(f, gg, h);
    e.improper += ip.k * (1.0 + ip.d * std::cos(ip.n * tor.phi));
    const double de = -ip.k * ip.d * ip.n * std::sin(ip.n * tor.phi);
    push(i, tor.gi * -de);
    push(j, tor.gj * -de);
    push(c, tor.gk * -de);
    push(k, tor.gl * -de);
  }

  const double rc2 = options_.cutoff * options_.cutoff;
  const double coul = kCoulombConstant / options_.dielectric;
  auto nonbonded = [&](const PairTerm& pt) {
    const Vec3 d = box.minimum_image(pos(pt.j) - pos(pt.i));
    const double r2 = norm2(d);
    if (r2 > rc2) return;
    if (r2 == 0.0) coincident(s, pt.i, pt.j);
    const AtomParams& a = p.atoms[static_cast<std::size_t>(pt.i)];
    const AtomParams& b = p.atoms[static_cast<std::size_t>(pt.j)];
    const double eps = std::sqrt(a.epsilon * b.epsilon) * pt.lj_scale;
    const double sig = 0.5 * (a.sigma + b.sigma);
    const double s2 = sig * sig / r2;
    const double s6 = s2 * s2 * s2;
    const double r = std::sqrt(r2);
    const double elj = 4.0 * eps * (s6 * s6 - s6);
    const double ec = coul * a.charge * b.charge * pt.coul_scale / r;
    e.lj += elj;
    e.coulomb += ec;
    if (!forces) return;
    // -dE/dr / r, applied along d (force on j)
    const double fr = (24.0 * eps * (2.0 * s6 * s6 - s6) + ec) / r2;
    const Vec3 fj = d * fr;
    push(pt.j, fj);
    push(pt.i, -fj);
  };
  for (const PairTerm& pt : pairs_) nonbonded(pt);
  for (const PairTerm& pt : scaled14_) nonbonded(pt);

  if (!std::isfinite(e.total()))
    throw Error(ErrorCode::kNonFiniteEnergy, "energy is not finite (increase min_separation)");
  return e;
}

EnergyBreakdown compute_energy(const MolecularSystem& system, const EnergyOptions& options) {
  EnergyModel model(system, options);
  return model.evaluate(system, nullptr);
}

std::vector<Vec3> compute_forces(const MolecularSystem& system, const EnergyOptions& options) {
  EnergyModel model(system, options);
  std::vector<Vec3> f;
  model.evaluate(system, &f);
  return f;
}

}  // namespace polygraph
