// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/params.h"

#include <cmath>
#include <sstream>

namespace polygraph {
namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-12});
}

std::optional<std::string> cmp(const char* name, double a, double b, double tol) {
  if (close(a, b, tol)) return std::nullopt;
  std::ostringstream out;
  out.precision(10);
  out << name << " " << a << " vs " << b;
  return out.str();
}

}  // namespace

std::optional<std::string> validate(const AtomParams& p) {
  if (!(p.mass > 0.0)) return "mass must be positive";
  if (!(p.epsilon >= 0.0)) return "epsilon must be non-negative";
  if (!(p.sigma > 0.0)) return "sigma must be positive";
  if (!std::isfinite(p.charge)) return "charge must be finite";
  return std::nullopt;
}

std::optional<std::string> validate(const BondParams& p) {
  if (!(p.k >= 0.0)) return "bond k must be non-negative";
  if (!(p.r0 > 0.0)) return "bond r0 must be positive";
  return std::nullopt;
}

std::optional<std::string> validate(const AngleParams& p) {
  if (!(p.k >= 0.0)) return "angle k must be non-negative";
  if (!(p.theta0 > 0.0 && p.theta0 <= 180.0)) return "angle theta0 must lie in (0, 180]";
  return std::nullopt;
}

std::optional<std::string> validate(const DihedralParams& p) {
  for (const auto& t : p.terms) {
    if (t.n < 1) return "dihedral periodicity must be >= 1";
    if (!std::isfinite(t.k) || !std::isfinite(t.phase)) return "dihedral term must be finite";
  }
  return std::nullopt;
}

std::optional<std::string> validate(const ImproperParams& p) {
  if (!std::isfinite(p.k)) return "improper K must be finite";
  if (p.d != 1 && p.d != -1) return "improper d must be +1 or -1";
  if (p.n < 0) return "improper n must be >= 0";
  return std::nullopt;
}

std::optional<std::string> difference(const AtomParams& a, const AtomParams& b, double tol) {
  if (auto d = cmp("mass", a.mass, b.mass, tol)) return d;
  if (auto d = cmp("epsilon", a.epsilon, b.epsilon, tol)) return d;
  if (auto d = cmp("sigma", a.sigma, b.sigma, tol)) return d;
  return cmp("charge", a.charge, b.charge, tol);
}

std::optional<std::string> difference(const BondParams& a, const BondParams& b, double tol) {
  if (auto d = cmp("k", a.k, b.k, tol)) return d;
  return cmp("r0", a.r0, b.r0, tol);
}

std::optional<std::string> difference(const AngleParams& a, const AngleParams& b, double tol) {
  if (auto d = cmp("k", a.k, b.k, tol)) return d;
  return cmp("theta0", a.theta0, b.theta0, tol);
}

std::optional<std::string> difference(const DihedralParams& a, const DihedralParams& b, double tol) {
  if (a.terms.size() != b.terms.size())
    return "term count " + std::to_string(a.terms.size()) + " vs " + std::to_string(b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (auto d = cmp("K", a.terms[i].k, b.terms[i].k, tol)) return d;
    if (a.terms[i].n != b.terms[i].n)
      return "n " + std::to_string(a.terms[i].n) + " vs " + std::to_string(b.terms[i].n);
    if (auto d = cmp("phase", a.terms[i].phase, b.terms[i].phase, tol)) return d;
  }
  return std::nullopt;
}

std::optional<std::string> difference(const ImproperParams& a, const ImproperParams& b, double tol) {
  if (auto d = cmp("K", a.k, b.k, tol)) return d;
  if (a.d != b.d) return "d " + std::to_string(a.d) + " vs " + std::to_string(b.d);
  if (a.n != b.n) return "n " + std::to_string(a.n) + " vs " + std::to_string(b.n);
  return std::nullopt;
}

bool operator==(const AtomParams& a, const AtomParams& b) {
  return a.mass == b.mass && a.epsilon == b.epsilon && a.sigma == b.sigma && a.charge == b.charge;
}
bool operator==(const BondParams& a, const BondParams& b) { return a.k == b.k && a.r0 == b.r0; }
bool operator==(const AngleParams& a, const AngleParams& b) {
  return a.k == b.k && a.theta0 == b.theta0;
}
bool operator==(const DihedralTerm& a, const DihedralTerm& b) {
  return a.k == b.k && a.n == b.n && a.phase == b.phase;
}
bool operator==(const DihedralParams& a, const DihedralParams& b) { return a.terms == b.terms; }
bool operator==(const ImproperParams& a, const ImproperParams& b) {
  return a.k == b.k && a.d == b.d && a.n == b.n;
}

}  // namespace polygraph
