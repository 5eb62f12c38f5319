// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polygraph/core/error.h"
#include "polygraph/core/random.h"
#include "polygraph/relax/energy.h"
#include "polygraph/relax/minimize.h"
#include "test_support.h"

namespace polygraph {
namespace {

using testing::TermKind;

constexpr double kDeg = std::numbers::pi / 180.0;

using testing::amide_pair;
using testing::jiggle;

EnergyOptions fd_options() {
  EnergyOptions o;
  o.cutoff = 9.0;
  return o;
}

class ForceCheck : public ::testing::TestWithParam<TermKind> {};

TEST_P(ForceCheck, AnalyticForcesMatchFiniteDifferences) {
  Rng rng(static_cast<std::uint64_t>(GetParam()) + 100);
  for (int config = 0; config < 50; ++config) {
    MolecularSystem s = testing::isolate(amide_pair(1 + static_cast<std::uint64_t>(config % 5)), GetParam());
    jiggle(s, rng, 0.15);
    const std::vector<Vec3> analytic = compute_forces(s, fd_options());
    const std::vector<Vec3> numeric = testing::numeric_forces(s, fd_options());
    EXPECT_LT(testing::force_error(analytic, numeric), 1e-6) << "config " << config;
  }
}

INSTANTIATE_TEST_SUITE_P(Terms, ForceCheck,
                         ::testing::Values(TermKind::kBond, TermKind::kAngle, TermKind::kDihedral, TermKind::kImproper,
                                           TermKind::kLennardJones, TermKind::kCoulomb));

// Signed dihedral angle i-j-k-l in radians.
double dihedral_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 b1 = b - a, b2 = c - b, b3 = d - c;
  const Vec3 n1 = cross(b1, b2), n2 = cross(b2, b3);
  const Vec3 m = cross(n1, b2 / norm(b2));
  return std::atan2(dot(m, n2), dot(n1, n2));
}

MolecularSystem four_atoms(double phi_deg) {
  MolecularSystem s;
  s.box = make_box(20, 20, 20);
  const double phi = phi_deg * kDeg;
  // l is i rotated by phi about the j-k axis.
  const Vec3 pts[4] = {{10, 11, 10}, {10, 10, 10}, {11.5, 10, 10}, {11.5, 10 + std::cos(phi), 10 - std::sin(phi)}};
  for (const Vec3& p : pts) {
    Atom a;
    a.element = &element_by_symbol("C");
    a.position = p;
    s.graph.add_atom(a);
  }
  s.graph.add_bond(0, 1);
  s.graph.add_bond(1, 2);
  s.graph.add_bond(2, 3);
  s.topology = enumerate_topology(s.graph);
  s.params.atoms.assign(4, AtomParams{12.011, 0.0, 3.4, 0.0});
  s.params.bonds.assign(3, BondParams{0.0, 1.5});
  s.params.angles.assign(s.topology.angles.size(), AngleParams{0.0, 109.5});
  s.params.dihedrals.assign(1, DihedralParams{{{1.3, 2, 30.0}}});
  s.parameterized = true;
  return s;
}

TEST(Energy, DihedralFollowsCosineSeriesWithSignedAngle) {
  for (double phi : {-150.0, -60.0, 15.0, 75.0, 140.0}) {
    const MolecularSystem s = four_atoms(phi);
    const auto& p = s.graph;
    const double measured = dihedral_angle(p.atom_at(0).position, p.atom_at(1).position, p.atom_at(2).position,
                                           p.atom_at(3).position);
    ASSERT_NEAR(measured, phi * kDeg, 1e-9);
    EnergyOptions o;
    o.cutoff = 9.0;
    const double e = compute_energy(s, o).dihedral;
    EXPECT_NEAR(e, 1.3 * (1.0 + std::cos(2.0 * measured - 30.0 * kDeg)), 1e-10) << phi;
  }
}

// Nonbonded energy recomputed pair by pair: 1-2 and 1-3 excluded, 1-4 scaled,
// Lorentz-Berthelot mixing, plain truncation at the cutoff.
EnergyBreakdown nonbonded_oracle(const MolecularSystem& s, const EnergyOptions& o) {
  EnergyBreakdown e;
  const auto& g = s.graph;
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(g.size()); ++j) {
      const int hops = shortest_bond_distance(g, g.atom_at(i).id, g.atom_at(j).id);
      if (hops <= 2) continue;
      const double r = norm(minimum_image(s.box, g.atom_at(i).position, g.atom_at(j).position));
      if (r > o.cutoff) continue;
      const AtomParams& a = s.params.atoms[static_cast<std::size_t>(i)];
      const AtomParams& b = s.params.atoms[static_cast<std::size_t>(j)];
      const double eps = std::sqrt(a.epsilon * b.epsilon), sigma = 0.5 * (a.sigma + b.sigma);
      const double sr6 = std::pow(sigma / r, 6);
      e.lj += (hops == 3 ? o.lj14_scale : 1.0) * 4.0 * eps * (sr6 * sr6 - sr6);
      e.coulomb += (hops == 3 ? o.coulomb14_scale : 1.0) * kCoulombConstant * a.charge * b.charge / (o.dielectric * r);
    }
  return e;
}

TEST(Energy, NonbondedMatchesPairwiseOracle) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const MolecularSystem s = amide_pair(seed);
    EnergyOptions o = fd_options();
    o.dielectric = 2.0;
    const EnergyBreakdown got = compute_energy(s, o);
    const EnergyBreakdown want = nonbonded_oracle(s, o);
    EXPECT_NEAR(got.lj, want.lj, 1e-9 * std::max(1.0, std::abs(want.lj)));
    EXPECT_NEAR(got.coulomb, want.coulomb, 1e-9 * std::max(1.0, std::abs(want.coulomb)));
  }
}

TEST(Energy, BondAndAngleUseUnhalvedHarmonicForm) {
  const MolecularSystem s = amide_pair(2);
  double bond = 0.0, angle = 0.0;
  const auto& g = s.graph;
  for (std::size_t b = 0; b < g.bonds().size(); ++b) {
    const double r = norm(minimum_image(s.box, g.atom(g.bonds()[b].a).position, g.atom(g.bonds()[b].b).position));
    bond += s.params.bonds[b].k * std::pow(r - s.params.bonds[b].r0, 2);
  }
  for (std::size_t t = 0; t < s.topology.angles.size(); ++t) {
    const auto& [i, j, k] = s.topology.angles[t];
    const Vec3 u = minimum_image(s.box, g.atom(j).position, g.atom(i).position);
    const Vec3 v = minimum_image(s.box, g.atom(j).position, g.atom(k).position);
    const double theta = std::acos(dot(u, v) / (norm(u) * norm(v)));
    angle += s.params.angles[t].k * std::pow(theta - s.params.angles[t].theta0 * kDeg, 2);
  }
  const EnergyBreakdown e = compute_energy(s, fd_options());
  EXPECT_NEAR(e.bond, bond, 1e-9 * bond);
  EXPECT_NEAR(e.angle, angle, 1e-9 * angle);
}

TEST(Energy, ImproperUsesCvffFormOverIJCenterK) {
  const MolecularSystem s = testing::demo_system("CC(=O)N", 20.0, 3);
  ASSERT_FALSE(s.topology.impropers.empty());
  double want = 0.0;
  const auto& g = s.graph;
  for (std::size_t t = 0; t < s.topology.impropers.size(); ++t) {
    const auto& [c, i, j, k] = s.topology.impropers[t];
    const Vec3 pc = g.atom(c).position;
    const Vec3 pi = pc + minimum_image(s.box, pc, g.atom(i).position);
    const Vec3 pj = pc + minimum_image(s.box, pc, g.atom(j).position);
    const Vec3 pk = pc + minimum_image(s.box, pc, g.atom(k).position);
    const ImproperParams& p = s.params.impropers[t];
    want += p.k * (1.0 + p.d * std::cos(p.n * dihedral_angle(pi, pj, pc, pk)));
  }
  EXPECT_NEAR(compute_energy(s, fd_options()).improper, want, 1e-10);
}

TEST(Energy, CutoffBeyondHalfBoxIsRejected) {
  const MolecularSystem s = testing::demo_system("CCO", 12.0);
  EnergyOptions o;
  o.cutoff = 6.5;
  try {
    compute_energy(s, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
  o.cutoff = 6.0;
  EXPECT_NO_THROW(compute_energy(s, o));
}

TEST(Energy, CoincidentAtomsAreNonFinite) {
  MolecularSystem s = amide_pair(1);
  const int other = static_cast<int>(s.graph.size()) - 1;
  s.graph.atom_at(other).position = s.graph.atom_at(0).position;
  try {
    compute_energy(s, fd_options());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteEnergy);
  }
}

TEST(Energy, VerletListMatchesFreshEvaluation) {
  MolecularSystem s = amide_pair(4);
  EnergyModel model(s, fd_options());
  Rng rng(8);
  for (int step = 0; step < 20; ++step) {
    jiggle(s, rng, 0.05);
    const double cached = model.evaluate(s, nullptr).total();
    EXPECT_NEAR(cached, compute_energy(s, fd_options()).total(), 1e-9 * std::max(1.0, std::abs(cached)));
  }
  EXPECT_GE(model.rebuild_count(), 1u);
}

MolecularSystem hydrogen_dimer(double r) {
  MolecularSystem s;
  s.box = make_box(20, 20, 20);
  for (double x : {10.0, 10.0 + r}) {
    Atom a;
    a.element = &element_by_symbol("H");
    a.position = {x, 10, 10};
    s.graph.add_atom(a);
  }
  s.graph.add_bond(0, 1);
  s.params.atoms.assign(2, AtomParams{1.008, 0.0157, 2.65, 0.0});
  s.params.bonds.assign(1, BondParams{350.0, 0.74});
  s.parameterized = true;
  return s;
}

void expect_nonincreasing(const MinimizationReport& r) {
  ASSERT_FALSE(r.energy_trace.empty());
  EXPECT_DOUBLE_EQ(r.energy_trace.front(), r.initial_energy);
  for (std::size_t k = 1; k < r.energy_trace.size(); ++k) EXPECT_LE(r.energy_trace[k], r.energy_trace[k - 1]);
}

TEST(Minimizer, DisplacedDimerReturnsToEquilibrium) {
  for (MinimizerMethod method : {MinimizerMethod::kSteepestDescent, MinimizerMethod::kFire}) {
    for (double r : {0.5, 1.2, 2.0}) {
      MolecularSystem s = hydrogen_dimer(r);
      MinimizerConfig c;
      c.method = method;
      c.force_tolerance = 1e-4;
      c.max_steps = 999;
      const MinimizationReport rep = minimize(s, fd_options(), c);
      EXPECT_TRUE(rep.converged);
      EXPECT_LT(rep.steps, 1000);
      const double d = norm(minimum_image(s.box, s.graph.atom_at(0).position, s.graph.atom_at(1).position));
      EXPECT_LT(std::abs(d - 0.74), 1e-3);
      expect_nonincreasing(rep);
    }
  }
}

TEST(Minimizer, TraceIsNonincreasingOnMolecularSystems) {
  for (MinimizerMethod method : {MinimizerMethod::kSteepestDescent, MinimizerMethod::kFire}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      MolecularSystem s = amide_pair(seed);
      Rng rng(seed);
      jiggle(s, rng, 0.2);
      MinimizerConfig c;
      c.method = method;
      c.max_steps = 300;
      const MinimizationReport rep = minimize(s, fd_options(), c);
      expect_nonincreasing(rep);
      EXPECT_LT(rep.final_energy, rep.initial_energy);
      EXPECT_DOUBLE_EQ(rep.final_energy, rep.energy_trace.back());
      for (const Atom& a : s.graph.atoms())
        for (int axis = 0; axis < 3; ++axis) {
          EXPECT_GE(a.position[axis], 0.0);
          EXPECT_LT(a.position[axis], s.box.lengths[axis]);
        }
    }
  }
}

TEST(Minimizer, MethodNames) {
  EXPECT_EQ(minimizer_method_from_name("fire"), MinimizerMethod::kFire);
  EXPECT_EQ(minimizer_method_from_name("sd"), MinimizerMethod::kSteepestDescent);
  try {
    minimizer_method_from_name("newton");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

TEST(Energy, FamilyConventions) {
  EXPECT_DOUBLE_EQ(energy_options_for_family("gaff").lj14_scale, 0.5);
  EXPECT_NEAR(energy_options_for_family("gaff").coulomb14_scale, 1.0 / 1.2, 1e-15);
  EXPECT_NO_THROW(energy_options_for_family("dreiding"));
  EXPECT_THROW(energy_options_for_family("mmff"), Error);
}

}  // namespace
}  // namespace polygraph
