// SPDX-License-Identifier: Apache-2.0
#include "polygraph/simbox/pack.h"

#include <array>
#include <cmath>
#include <numbers>

#include "polygraph/core/error.h"
#include "polygraph/core/random.h"
#include "polygraph/simbox/embed.h"

namespace polygraph {
namespace {

// Rotation matrix from a uniformly distributed unit quaternion.
std::array<Vec3, 3> random_rotation(Rng& rng) {
  const double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const double w = a * std::sin(2.0 * std::numbers::pi * u2);
  const double x = a * std::cos(2.0 * std::numbers::pi * u2);
  const double y = b * std::sin(2.0 * std::numbers::pi * u3);
  const double z = b * std::cos(2.0 * std::numbers::pi * u3);
  return {Vec3{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
          Vec3{2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
          Vec3{2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
}

// Grid that accepts insertions, for overlap tests during placement.
class PlacementGrid {
 public:
  PlacementGrid(const PeriodicBox& box, double radius) : box_(box), radius_(radius) {
    for (int axis = 0; axis < 3; ++axis) dims_[static_cast<std::size_t>(axis)] = std::max(1, static_cast<int>(box.lengths[axis] / radius));
    brute_ = dims_[0] < 3 || dims_[1] < 3 || dims_[2] < 3;
    if (!brute_) cells_.resize(static_cast<std::size_t>(dims_[0] * dims_[1] * dims_[2]));
  }

  bool clear(const Vec3& p) const {
    const double r2 = radius_ * radius_;
    if (brute_) {
      for (const Vec3& q : all_)
        if (norm2(box_.minimum_image(q - p)) < r2) return false;
      return true;
    }
    const auto c = coords(p);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const int cell = index(c[0] + dx, c[1] + dy, c[2] + dz);
          for (const Vec3& q : cells_[static_cast<std::size_t>(cell)])
            if (norm2(box_.minimum_image(q - p)) < r2) return false;
        }
    return true;
  }

  void insert(const Vec3& p) {
    if (brute_) {
      all_.push_back(p);
      return;
    }
    const auto c = coords(p);
    cells_[static_cast<std::size_t>(index(c[0], c[1], c[2]))].push_back(p);
  }

 private:
  std::array<int, 3> coords(const Vec3& p) const {
    std::array<int, 3> c{};
    for (int axis = 0; axis < 3; ++axis) {
      const int d = dims_[static_cast<std::size_t>(axis)];
      c[static_cast<std::size_t>(axis)] = std::min(d - 1, static_cast<int>(p[axis] / box_.lengths[axis] * d));
    }
    return c;
  }
  int index(int x, int y, int z) const {
    x = (x + dims_[0]) % dims_[0];
    y = (y + dims_[1]) % dims_[1];
    z = (z + dims_[2]) % dims_[2];
    return (x * dims_[1] + y) * dims_[2] + z;
  }

  PeriodicBox box_;
  double radius_;
  std::array<int, 3> dims_{1, 1, 1};
  bool brute_ = false;
  std::vector<std::vector<Vec3>> cells_;
  std::vector<Vec3> all_;
};

}  // namespace

PeriodicBox box_for_density(const std::vector<MonomerTemplate>& templates, const std::vector<int>& counts,
                            double density) {
  if (templates.size() != counts.size()) throw Error(ErrorCode::kConfig, "one count per monomer template required");
  if (!(density > 0.0)) throw Error(ErrorCode::kConfig, "density must be positive");
  double mass = 0.0;
  for (std::size_t t = 0; t < templates.size(); ++t) {
    if (counts[t] < 0) throw Error(ErrorCode::kConfig, "monomer counts must be non-negative");
    mass += counts[t] * total_element_mass(templates[t].graph);
  }
  if (mass <= 0.0) throw Error(ErrorCode::kConfig, "cannot derive a box from an empty composition");
  const double side = std::cbrt(mass * kAmuPerCubicAngstromToGramPerCc / density);
  return PeriodicBox{{side, side, side}};
}

MolecularSystem pack(const std::vector<MonomerTemplate>& templates, const std::vector<int>& counts,
                     const PeriodicBox& box, const PackOptions& options) {
  if (templates.size() != counts.size()) throw Error(ErrorCode::kConfig, "one count per monomer template required");
  if (!(options.min_separation >= 0.0)) throw Error(ErrorCode::kConfig, "min_separation must be non-negative");
  make_box(box.lengths.x, box.lengths.y, box.lengths.z);

  MolecularSystem system;
  system.box = box;
  system.graph.set_has_positions(true);
  Rng rng(options.seed);
  PlacementGrid grid(box, std::max(options.min_separation, 1e-6));
  int instance = 0;
  int next_id = 1;

  for (std::size_t t = 0; t < templates.size(); ++t) {
    if (counts[t] < 0) throw Error(ErrorCode::kConfig, "monomer counts must be non-negative");
    if (counts[t] == 0) continue;
    MolecularGraph local = templates[t].graph;
    if (!local.has_positions()) crude_embed(local, splitmix64(options.seed ^ (t + 1)));
    Vec3 centroid{};
    for (const Atom& a : local.atoms()) centroid += a.position;
    if (!local.empty()) centroid = centroid / static_cast<double>(local.size());
    std::vector<Vec3> body;
    for (const Atom& a : local.atoms()) body.push_back(a.position - centroid);

    for (int copy = 0; copy < counts[t]; ++copy) {
      std::vector<Vec3> placed(body.size());
      bool ok = false;
      for (int attempt = 0; attempt < options.max_attempts && !ok; ++attempt) {
        const auto rot = random_rotation(rng);
        const Vec3 shift{rng.uniform(0.0, box.lengths.x), rng.uniform(0.0, box.lengths.y),
                         rng.uniform(0.0, box.lengths.z)};
        ok = true;
        for (std::size_t i = 0; i < body.size() && ok; ++i) {
          const Vec3 r{dot(rot[0], body[i]), dot(rot[1], body[i]), dot(rot[2], body[i])};
          placed[i] = box.wrap(r + shift);
          ok = grid.clear(placed[i]);
        }
      }
      if (!ok)
        throw Error(ErrorCode::kPackingDensity,
                    "could not place copy " + std::to_string(copy + 1) + " of monomer '" + templates[t].name +
                        "' after " + std::to_string(options.max_attempts) +
                        " attempts; use a larger box or a lower density");
      ++instance;
      std::vector<int> ids;
      for (std::size_t i = 0; i < body.size(); ++i) {
        Atom a = local.atom_at(static_cast<int>(i));
        a.id = next_id++;
        a.position = placed[i];
        a.monomer_instance = instance;
        ids.push_back(system.graph.add_atom(std::move(a)));
        grid.insert(placed[i]);
      }
      for (const Bond& b : local.bonds())
        system.graph.add_bond(ids[static_cast<std::size_t>(local.index_of(b.a))],
                              ids[static_cast<std::size_t>(local.index_of(b.b))], b.order);
    }
  }
  system.topology = enumerate_topology(system.graph);
  return system;
}

}  // namespace polygraph
