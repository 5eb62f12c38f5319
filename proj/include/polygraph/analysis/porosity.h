// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polygraph/polymerizer/polymerizer.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

inline constexpr double kDefaultProbeRadius = 1.4;  // angstrom

// Per-element van der Waals radii. Elements without an override fall back to
// the built-in Bondi-style value.
class RadiiTable {
 public:
  RadiiTable() = default;
  void set(std::string_view symbol, double radius);
  double radius(const Element& element) const;
  const std::map<std::string, double, std::less<>>& overrides() const { return overrides_; }

 private:
  std::map<std::string, double, std::less<>> overrides_;
};

// {"schema_version": 1, "radii": {"C": 1.70, ...}}
RadiiTable radii_from_json(std::string_view text, std::string_view source = "<string>");
RadiiTable load_radii(const std::filesystem::path& path);

struct PorosityResult {
  double pore_fraction = 1.0;
  double pore_volume = 0.0;   // A^3
  double surface_area = 0.0;  // A^2
  double probe_radius = kDefaultProbeRadius;
  std::int64_t volume_samples = 0;
  std::int64_t pore_hits = 0;
  int surface_points_per_atom = 0;
  std::uint64_t seed = 0;
  // Binomial standard error of pore_fraction.
  double standard_error = 0.0;
};

// Monte Carlo insertion: a uniform point is pore when its minimum-image
// distance to every atom center exceeds vdW radius + probe. Sample i depends
// only on (seed, i).
PorosityResult pore_volume(const MolecularSystem& system, double probe_radius, std::int64_t n_samples,
                           std::uint64_t seed, const RadiiTable& radii = {});

// Shrake-Rupley accessible area. Points on atom i's inflated sphere count as
// exposed when outside every other inflated sphere; exactly coincident atoms
// with equal radii occlude toward the lower index, so duplicates count once.
double surface_area(const MolecularSystem& system, double probe_radius, int n_points_per_atom,
                    std::uint64_t seed, const RadiiTable& radii = {});

// Both estimators in one result.
PorosityResult porosity(const MolecularSystem& system, double probe_radius, std::int64_t n_samples,
                        int n_points_per_atom, std::uint64_t seed, const RadiiTable& radii = {});

std::vector<std::pair<int, double>> conversion_series(const std::vector<CycleReport>& reports);

}  // namespace polygraph
