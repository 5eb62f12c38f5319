// SPDX-License-Identifier: Apache-2.0
#include "polygraph/analysis/porosity.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "polygraph/core/error.h"
#include "polygraph/core/random.h"
#include "polygraph/simbox/cell_list.h"

namespace polygraph {
namespace {

struct Spheres {
  std::vector<Vec3> centers;
  std::vector<double> radii;  // inflated by the probe
  double max_radius = 0.0;
};

Spheres inflated_spheres(const MolecularSystem& system, double probe, const RadiiTable& radii) {
  Spheres s;
  for (const Atom& atom : system.graph.atoms()) {
    s.centers.push_back(system.box.wrap(atom.position));
    s.radii.push_back(radii.radius(*atom.element) + probe);
    s.max_radius = std::max(s.max_radius, s.radii.back());
  }
  return s;
}

// Visits candidate sphere indices near p; stops early when visit returns true.
template <typename Fn>
bool any_candidate(const CellList& cells, const Vec3& p, Fn&& visit) {
  if (cells.brute_force()) {
    for (int j = 0; j < static_cast<int>(cells.size()); ++j)
      if (visit(j)) return true;
    return false;
  }
  for (int c : cells.stencil(cells.cell_of(p)))
    for (int j : cells.bucket(c))
      if (visit(j)) return true;
  return false;
}

Vec3 sample_unit_vector(CounterStream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

void RadiiTable::set(std::string_view symbol, double radius) {
  element_by_symbol(symbol);  // validates
  if (!(radius >= 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::kConfig, "vdW radius for " + std::string(symbol) + " must be finite and nonnegative");
  overrides_[std::string(symbol)] = radius;
}

double RadiiTable::radius(const Element& element) const {
  if (auto it = overrides_.find(element.symbol); it != overrides_.end()) return it->second;
  return element.vdw_radius;
}

RadiiTable radii_from_json(std::string_view text, std::string_view source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string(source) + ": " + e.what());
  }
  if (!j.is_object() || j.value("schema_version", 0) != 1 || !j.contains("radii") || !j["radii"].is_object())
    throw Error(ErrorCode::kFormat, std::string(source) + ": expected schema_version 1 with a radii object");
  RadiiTable table;
  for (const auto& [symbol, value] : j["radii"].items()) {
    if (!value.is_number()) throw Error(ErrorCode::kFormat, std::string(source) + ": radius for " + symbol + " is not a number");
    table.set(symbol, value.get<double>());
  }
  return table;
}

RadiiTable load_radii(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return radii_from_json(buf.str(), path.string());
}

PorosityResult pore_volume(const MolecularSystem& system, double probe_radius, std::int64_t n_samples,
                           std::uint64_t seed, const RadiiTable& radii) {
  if (n_samples <= 0) throw Error(ErrorCode::kConfig, "pore volume needs a positive sample count");
  if (!(probe_radius >= 0.0)) throw Error(ErrorCode::kConfig, "probe radius must be nonnegative");
  PorosityResult r;
  r.probe_radius = probe_radius;
  r.volume_samples = n_samples;
  r.seed = seed;
  const Spheres s = inflated_spheres(system, probe_radius, radii);
  std::int64_t hits = 0;
  if (s.centers.empty() || s.max_radius == 0.0) {
    hits = n_samples;
  } else {
    const CellList cells(system.box, s.centers, s.max_radius);
    for (std::int64_t i = 0; i < n_samples; ++i) {
      CounterStream rng(seed, static_cast<std::uint64_t>(i));
      Vec3 p;
      for (int axis = 0; axis < 3; ++axis) p[axis] = rng.uniform() * system.box.lengths[axis];
      const bool blocked = any_candidate(cells, p, [&](int j) {
        const double rj = s.radii[static_cast<std::size_t>(j)];
        return norm2(system.box.minimum_image(cells.position(j) - p)) <= rj * rj;
      });
      if (!blocked) ++hits;
    }
  }
  r.pore_hits = hits;
  r.pore_fraction = static_cast<double>(hits) / static_cast<double>(n_samples);
  r.pore_volume = r.pore_fraction * system.box.volume();
  r.standard_error = std::sqrt(r.pore_fraction * (1.0 - r.pore_fraction) / static_cast<double>(n_samples));
  return r;
}

double surface_area(const MolecularSystem& system, double probe_radius, int n_points_per_atom,
                    std::uint64_t seed, const RadiiTable& radii) {
  if (n_points_per_atom <= 0) throw Error(ErrorCode::kConfig, "surface area needs a positive point count");
  if (!(probe_radius >= 0.0)) throw Error(ErrorCode::kConfig, "probe radius must be nonnegative");
  const Spheres s = inflated_spheres(system, probe_radius, radii);
  if (s.centers.empty() || s.max_radius == 0.0) return 0.0;
  const CellList cells(system.box, s.centers, 2.0 * s.max_radius);
  double area = 0.0;
  const auto n = static_cast<std::uint64_t>(n_points_per_atom);
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    const double ri = s.radii[i];
    const Vec3& ci = s.centers[i];
    std::vector<int> occluders;
    any_candidate(cells, ci, [&](int j) {
      if (static_cast<std::size_t>(j) == i) return false;
      const double reach = ri + s.radii[static_cast<std::size_t>(j)];
      const Vec3 d = system.box.minimum_image(cells.position(j) - ci);
      const double d2 = norm2(d);
      if (d2 == 0.0) {
        // Coincident: the larger sphere buries the smaller; equal radii go to
        // the lower index.
        const double rj = s.radii[static_cast<std::size_t>(j)];
        if (rj > ri || (rj == ri && static_cast<std::size_t>(j) < i)) occluders.push_back(j);
      } else if (d2 < reach * reach) {
        occluders.push_back(j);
      }
      return false;
    });
    std::int64_t exposed = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      CounterStream rng(seed, static_cast<std::uint64_t>(i) * n + k);
      const Vec3 p = ci + ri * sample_unit_vector(rng);
      bool buried = false;
      for (int j : occluders) {
        const double rj = s.radii[static_cast<std::size_t>(j)];
        const Vec3 cj = cells.position(j);
        if (norm2(system.box.minimum_image(cj - ci)) == 0.0 || norm2(system.box.minimum_image(cj - p)) < rj * rj) {
          buried = true;
          break;
        }
      }
      if (!buried) ++exposed;
    }
    area += 4.0 * std::numbers::pi * ri * ri * static_cast<double>(exposed) / static_cast<double>(n);
  }
  return area;
}

PorosityResult porosity(const MolecularSystem& system, double probe_radius, std::int64_t n_samples,
                        int n_points_per_atom, std::uint64_t seed, const RadiiTable& radii) {
  PorosityResult r = pore_volume(system, probe_radius, n_samples, seed, radii);
  r.surface_area = surface_area(system, probe_radius, n_points_per_atom, seed, radii);
  r.surface_points_per_atom = n_points_per_atom;
  return r;
}

std::vector<std::pair<int, double>> conversion_series(const std::vector<CycleReport>& reports) {
  std::vector<std::pair<int, double>> out;
  out.reserve(reports.size());
  for (const CycleReport& r : reports) out.emplace_back(r.cycle_index, r.conversion_after);
  return out;
}

}  // namespace polygraph
