// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polygraph {

inline constexpr double kDefaultParamTolerance = 1e-6;

struct AtomParams {
  double mass = 0.0;     // amu
  double epsilon = 0.0;  // kcal/mol
  double sigma = 0.0;    // Angstrom
  double charge = 0.0;   // e
};

struct BondParams {
  double k = 0.0;   // kcal/mol/A^2, E = k (r - r0)^2
  double r0 = 0.0;  // Angstrom
};

struct AngleParams {
  double k = 0.0;       // kcal/mol/rad^2, E = k (theta - theta0)^2
  double theta0 = 0.0;  // degrees
};

// One cosine term K [1 + cos(n phi - phase)].
struct DihedralTerm {
  double k = 0.0;
  int n = 1;
  double phase = 0.0;  // degrees
};

struct DihedralParams {
  std::vector<DihedralTerm> terms;
};

// cvff form K [1 + d cos(n phi)].
struct ImproperParams {
  double k = 0.0;
  int d = 1;
  int n = 2;
};

// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> validate(const AtomParams& p);
std::optional<std::string> validate(const BondParams& p);
std::optional<std::string> validate(const AngleParams& p);
std::optional<std::string> validate(const DihedralParams& p);
std::optional<std::string> validate(const ImproperParams& p);

// Relative comparison; returns the name and values of the first differing
// coefficient, or nullopt when all agree within tol.
std::optional<std::string> difference(const AtomParams& a, const AtomParams& b, double tol);
std::optional<std::string> difference(const BondParams& a, const BondParams& b, double tol);
std::optional<std::string> difference(const AngleParams& a, const AngleParams& b, double tol);
std::optional<std::string> difference(const DihedralParams& a, const DihedralParams& b, double tol);
std::optional<std::string> difference(const ImproperParams& a, const ImproperParams& b, double tol);

bool operator==(const AtomParams&, const AtomParams&);
bool operator==(const BondParams&, const BondParams&);
bool operator==(const AngleParams&, const AngleParams&);
bool operator==(const DihedralTerm&, const DihedralTerm&);
bool operator==(const DihedralParams&, const DihedralParams&);
bool operator==(const ImproperParams&, const ImproperParams&);

// Parameters of one fragment, keyed by atom indices of the fragment graph.
// Tuple keys use the canonical orientation produced by enumerate_topology
// (translated to indices).
struct ForceFieldParamSet {
  std::vector<AtomParams> atoms;
  std::map<std::pair<int, int>, BondParams> bonds;            // (i < j)
  std::map<std::array<int, 3>, AngleParams> angles;           // (i, j, k), i < k
  std::map<std::array<int, 4>, DihedralParams> dihedrals;     // min(ijkl, lkji)
  std::map<std::array<int, 4>, ImproperParams> impropers;     // (c, i, j, k), i < j < k
};

}  // namespace polygraph
