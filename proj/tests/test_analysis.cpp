// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polygraph/analysis/density.h"
#include "polygraph/analysis/porosity.h"
#include "polygraph/analysis/tg.h"
#include "polygraph/core/error.h"
#include "polygraph/core/random.h"
#include "polygraph/simbox/pack.h"
#include "test_support.h"

namespace polygraph {
namespace {

constexpr double kPi = std::numbers::pi;

MolecularSystem atoms_at(const std::vector<std::pair<const char*, Vec3>>& atoms, double edge) {
  MolecularSystem s;
  s.box = make_box(edge, edge, edge);
  for (const auto& [symbol, p] : atoms) {
    Atom a;
    a.element = &element_by_symbol(symbol);
    a.position = p;
    s.graph.add_atom(a);
  }
  return s;
}

// --- density ---

TEST(Density, MassOverVolumeInGramsPerCc) {
  MolecularSystem s = atoms_at({}, 10.0);
  EXPECT_EQ(density(s), 0.0);
  for (int i = 0; i < 50; ++i) s.graph.add_atom(Atom{-1, &element_by_symbol("C"), 0, 0, {1.0 * i / 5, 1, 1}});
  EXPECT_NEAR(density(s), 50 * 12.011 / 1000.0 * 1.66054, 1e-12);
  // 1000 amu in a 10 angstrom cube.
  EXPECT_NEAR(1000.0 / s.box.volume() * kAmuPerCubicAngstromToGramPerCc, 1.66054, 1e-12);
}

// --- Tg ---

using testing::two_segment;

TEST(Tg, NoiseFreeBreakIsExact) {
  const TgResult r = fit_tg_piecewise(two_segment(430.0, 0.0, 1));
  EXPECT_NEAR(r.tg, 430.0, 1e-8);
  EXPECT_FALSE(r.degenerate);
  EXPECT_NEAR(r.glassy_slope, -2.5e-4, 1e-12);
  EXPECT_NEAR(r.rubbery_slope, -6.0e-4, 1e-12);
  EXPECT_NEAR(r.sse, 0.0, 1e-20);
}

TEST(Tg, NoisyBreakRecoveredWithinTenKelvin) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TgResult r = fit_tg_piecewise(two_segment(430.0, 1e-4, seed));
    EXPECT_NEAR(r.tg, 430.0, 10.0) << seed;
    EXPECT_FALSE(r.degenerate) << seed;
  }
}

TEST(Tg, InputOrderDoesNotMatter) {
  std::vector<DensityPoint> pts = two_segment(470.0, 0.0, 1);
  std::reverse(pts.begin(), pts.end());
  EXPECT_NEAR(fit_tg_piecewise(pts).tg, 470.0, 1e-8);
}

TEST(Tg, StraightLineIsDegenerate) {
  std::vector<DensityPoint> pts;
  for (double t = 300; t <= 500; t += 25) pts.push_back({t, 1.2 - 3e-4 * t});
  EXPECT_TRUE(fit_tg_piecewise(pts).degenerate);
}

TEST(Tg, TooFewOrRepeatedTemperaturesAreRejected) {
  std::vector<DensityPoint> five{{300, 1}, {320, 1}, {340, 1}, {360, 1}, {380, 1}};
  EXPECT_THROW(fit_tg_piecewise(five), Error);
  std::vector<DensityPoint> repeated = two_segment(430, 0, 1);
  repeated[3].temperature = repeated[2].temperature;
  try {
    fit_tg_piecewise(repeated);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

TEST(Tg, CsvParsing) {
  const auto pts = parse_density_csv("temperature,density\n# comment\n300, 1.2\n320 1.19\n\n340\t1.18\n");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_DOUBLE_EQ(pts[1].temperature, 320.0);
  EXPECT_DOUBLE_EQ(pts[2].density, 1.18);
  try {
    parse_density_csv("300,1.2\n320,abc\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
  }
}

// --- porosity ---

TEST(Porosity, EmptyBoxIsAllPore) {
  const PorosityResult r = pore_volume(atoms_at({}, 12.0), 1.4, 1000, 1);
  EXPECT_EQ(r.pore_fraction, 1.0);
  EXPECT_EQ(r.pore_hits, 1000);
  EXPECT_DOUBLE_EQ(r.pore_volume, 12.0 * 12.0 * 12.0);
  EXPECT_EQ(surface_area(atoms_at({}, 12.0), 1.4, 100, 1), 0.0);
}

TEST(Porosity, SingleSphereMatchesAnalyticVolume) {
  const double edge = 12.0;
  const MolecularSystem s = atoms_at({{"C", {0.3, 11.9, 6.0}}}, edge);  // sphere wraps across faces
  const double reach = element_by_symbol("C").vdw_radius + 1.4;
  const double expected = 1.0 - 4.0 / 3.0 * kPi * reach * reach * reach / (edge * edge * edge);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const PorosityResult r = pore_volume(s, 1.4, 100000, seed);
    EXPECT_NEAR(r.pore_fraction, expected, 3.0 * r.standard_error) << seed;
    EXPECT_NEAR(r.standard_error, std::sqrt(expected * (1 - expected) / 1e5), 1e-4);
  }
}

TEST(Porosity, ClusterMatchesVoxelOracle) {
  const MolecularSystem s = atoms_at({{"C", {5, 5, 5}}, {"O", {6.3, 5.2, 5}}, {"N", {5.4, 6.4, 4.2}},
                                      {"C", {9.5, 1.0, 0.4}}, {"H", {3.9, 4.4, 5.6}}},
                                     10.0);
  const double probe = 1.0;
  // Voxel centers on a 0.2 angstrom grid.
  const double h = 0.2;
  const int n = 50;
  std::int64_t free = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec3 p{(i + 0.5) * h, (j + 0.5) * h, (k + 0.5) * h};
        bool blocked = false;
        for (const Atom& a : s.graph.atoms())
          blocked = blocked || norm(s.box.minimum_image(p - a.position)) <= a.element->vdw_radius + probe;
        free += !blocked;
      }
  const double voxel = static_cast<double>(free) / (n * n * n);
  const PorosityResult r = pore_volume(s, probe, 100000, 7);
  // Sampling error plus a discretization allowance of half a voxel layer on the blocked surface.
  EXPECT_NEAR(r.pore_fraction, voxel, 3.0 * r.standard_error + 0.002);
}

TEST(Porosity, SamplesDependOnlyOnSeedAndIndex) {
  const MolecularSystem s = testing::demo_system("CCOc1ccccc1", 14.0);
  const PorosityResult a = pore_volume(s, 1.4, 5000, 11);
  const PorosityResult b = pore_volume(s, 1.4, 5000, 11);
  EXPECT_EQ(a.pore_hits, b.pore_hits);
  // The first 2000 samples of a longer run are the same 2000 samples.
  const PorosityResult shorter = pore_volume(s, 1.4, 2000, 11);
  const PorosityResult longer = pore_volume(s, 1.4, 4000, 11);
  EXPECT_LE(shorter.pore_hits, longer.pore_hits);
  EXPECT_LE(longer.pore_hits - shorter.pore_hits, 2000);
}

TEST(Porosity, LargerProbeNeverIncreasesPoreVolume) {
  const MolecularSystem s = testing::demo_system("CC(C)(c1ccccc1)c1ccccc1", 16.0);
  double previous = INFINITY;
  for (double probe : {0.0, 0.5, 1.0, 1.4, 2.0, 3.0}) {
    const double v = pore_volume(s, probe, 20000, 3).pore_volume;
    EXPECT_LE(v, previous) << probe;
    previous = v;
  }
}

TEST(SurfaceArea, SingleAtomIsFullSphere) {
  const MolecularSystem s = atoms_at({{"N", {5, 5, 5}}}, 20.0);
  const double reach = element_by_symbol("N").vdw_radius + 1.4;
  EXPECT_NEAR(surface_area(s, 1.4, 1000, 1), 4 * kPi * reach * reach, 0.005 * 4 * kPi * reach * reach);
}

TEST(SurfaceArea, DistantAtomsAdd) {
  const MolecularSystem one = atoms_at({{"C", {3, 3, 3}}}, 24.0);
  const MolecularSystem two = atoms_at({{"C", {3, 3, 3}}, {"O", {15, 15, 15}}}, 24.0);
  const double rc = element_by_symbol("C").vdw_radius + 1.4, ro = element_by_symbol("O").vdw_radius + 1.4;
  EXPECT_NEAR(surface_area(two, 1.4, 1000, 1), 4 * kPi * (rc * rc + ro * ro), 1e-9);
  EXPECT_NEAR(surface_area(one, 1.4, 1000, 1), 4 * kPi * rc * rc, 1e-9);
}

TEST(SurfaceArea, CoincidentDuplicatesCountOnce) {
  const MolecularSystem s = atoms_at({{"C", {5, 5, 5}}, {"C", {5, 5, 5}}}, 20.0);
  const double reach = element_by_symbol("C").vdw_radius + 1.4;
  EXPECT_NEAR(surface_area(s, 1.4, 1000, 1), 4 * kPi * reach * reach, 1e-9);
}

TEST(SurfaceArea, OverlappingPairMatchesLensFormula) {
  const double d = 2.0;
  const MolecularSystem s = atoms_at({{"C", {5, 5, 5}}, {"O", {5 + d, 5, 5}}}, 20.0);
  const double r1 = element_by_symbol("C").vdw_radius + 1.4, r2 = element_by_symbol("O").vdw_radius + 1.4;
  const double x = (d * d + r1 * r1 - r2 * r2) / (2 * d);  // plane of intersection from atom 1
  const double cap1 = 2 * kPi * r1 * (r1 - x), cap2 = 2 * kPi * r2 * (r2 - (d - x));
  const double expected = 4 * kPi * (r1 * r1 + r2 * r2) - cap1 - cap2;
  const int n = 2000;
  // Binomial error of the exposed fraction on each sphere.
  const double f1 = cap1 / (4 * kPi * r1 * r1), f2 = cap2 / (4 * kPi * r2 * r2);
  const double se = std::hypot(4 * kPi * r1 * r1 * std::sqrt(f1 * (1 - f1) / n), 4 * kPi * r2 * r2 * std::sqrt(f2 * (1 - f2) / n));
  EXPECT_NEAR(surface_area(s, 1.4, n, 5), expected, 3 * se);
}

TEST(SurfaceArea, RadiiOverridesApply) {
  RadiiTable radii;
  radii.set("C", 2.0);
  const MolecularSystem s = atoms_at({{"C", {5, 5, 5}}}, 20.0);
  EXPECT_NEAR(surface_area(s, 1.0, 500, 1, radii), 4 * kPi * 9.0, 1e-9);
  const RadiiTable parsed = radii_from_json(R"({"schema_version":1,"radii":{"C":2.0}})");
  EXPECT_DOUBLE_EQ(parsed.radius(element_by_symbol("C")), 2.0);
  EXPECT_DOUBLE_EQ(parsed.radius(element_by_symbol("O")), element_by_symbol("O").vdw_radius);
  EXPECT_THROW(radii_from_json(R"({"schema_version":1,"radii":{"C":-1}})"), Error);
}

TEST(Analysis, ConversionSeriesFollowsReports) {
  std::vector<CycleReport> reports(3);
  for (int k = 0; k < 3; ++k) {
    reports[static_cast<std::size_t>(k)].cycle_index = k + 1;
    reports[static_cast<std::size_t>(k)].conversion_after = 0.1 * (k + 1);
  }
  const auto series = conversion_series(reports);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[2].first, 3);
  EXPECT_DOUBLE_EQ(series[2].second, 0.30000000000000004);
}

}  // namespace
}  // namespace polygraph
