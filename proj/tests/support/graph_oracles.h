// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "polygraph/core/random.h"
#include "polygraph/molgraph/graph.h"

namespace polygraph::testing {

// Random connected graph over C/N/O with mostly single bonds. When `tree` is
// set no ring-closing edges are added.
inline MolecularGraph random_molecular_graph(Rng& rng, int n, bool tree) {
  static const char* kElements[] = {"C", "C", "C", "N", "O"};
  MolecularGraph g;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    Atom a;
    a.element = &element_by_symbol(kElements[rng.below(5)]);
    ids.push_back(g.add_atom(a));
  }
  auto order = [&] { return rng.uniform() < 0.8 ? BondOrder::kSingle : BondOrder::kDouble; };
  for (int i = 1; i < n; ++i) g.add_bond(ids[rng.below(static_cast<std::uint64_t>(i))], ids[static_cast<std::size_t>(i)], order());
  if (!tree) {
    const int extra = static_cast<int>(rng.below(3));
    for (int e = 0; e < extra; ++e) {
      const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int ia = ids[static_cast<std::size_t>(a)], ib = ids[static_cast<std::size_t>(b)];
      if (a != b && !g.find_bond(ia, ib)) g.add_bond(ia, ib, order());
    }
  }
  return g;
}

// Exact orbit id per atom index under label- and bond-order-preserving
// automorphisms, by backtracking.
class AutomorphismOracle {
 public:
  explicit AutomorphismOracle(const MolecularGraph& g) : g_(g), n_(static_cast<int>(g.size())) {
    adj_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (const Bond& b : g.bonds()) {
      const int i = g.index_of(b.a), j = g.index_of(b.b);
      adj_[static_cast<std::size_t>(i * n_ + j)] = adj_[static_cast<std::size_t>(j * n_ + i)] =
          static_cast<int>(b.order);
    }
  }

  std::vector<int> orbits() {
    std::vector<int> orbit(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int u = 0; u < n_; ++u) {
      if (orbit[static_cast<std::size_t>(u)] >= 0) continue;
      orbit[static_cast<std::size_t>(u)] = next;
      for (int v = u + 1; v < n_; ++v)
        if (orbit[static_cast<std::size_t>(v)] < 0 && maps(u, v)) orbit[static_cast<std::size_t>(v)] = next;
      ++next;
    }
    return orbit;
  }

 private:
  bool compatible(int a, int b) const {
    const Atom& x = g_.atom_at(a);
    const Atom& y = g_.atom_at(b);
    return x.element == y.element && x.formal_charge == y.formal_charge && g_.degree(a) == g_.degree(b);
  }

  bool maps(int u, int v) {
    if (!compatible(u, v)) return false;
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    map_[static_cast<std::size_t>(u)] = v;
    used_[static_cast<std::size_t>(v)] = true;
    return extend(0);
  }

  bool consistent(int a, int b) const {
    for (int x = 0; x < n_; ++x) {
      const int y = map_[static_cast<std::size_t>(x)];
      if (y < 0) continue;
      if (adj_[static_cast<std::size_t>(a * n_ + x)] != adj_[static_cast<std::size_t>(b * n_ + y)]) return false;
    }
    return true;
  }

  bool extend(int a) {
    while (a < n_ && map_[static_cast<std::size_t>(a)] >= 0) ++a;
    if (a == n_) return true;
    for (int b = 0; b < n_; ++b) {
      if (used_[static_cast<std::size_t>(b)] || !compatible(a, b) || !consistent(a, b)) continue;
      map_[static_cast<std::size_t>(a)] = b;
      used_[static_cast<std::size_t>(b)] = true;
      if (extend(a + 1)) return true;
      map_[static_cast<std::size_t>(a)] = -1;
      used_[static_cast<std::size_t>(b)] = false;
    }
    return false;
  }

  const MolecularGraph& g_;
  int n_;
  std::vector<int> adj_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

// Partition a refines b: every class of a lies within one class of b.
template <typename A, typename B>
bool refines(const std::vector<A>& a, const std::vector<B>& b) {
  std::map<A, B> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, inserted] = seen.emplace(a[i], b[i]);
    if (!inserted && it->second != b[i]) return false;
  }
  return true;
}

template <typename A, typename B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  return refines(a, b) && refines(b, a);
}

}  // namespace polygraph::testing
