// SPDX-License-Identifier: Apache-2.0
#include "polygraph/simbox/embed.h"

#include <cmath>
#include <deque>
#include <set>
#include <vector>

#include "polygraph/core/random.h"

namespace polygraph {
namespace {

constexpr int kRelaxSteps = 400;
constexpr double kRepulsionRange = 2.6;

double ideal_length(const MolecularGraph& g, int i, int j) {
  return g.atom_at(i).element->covalent_radius + g.atom_at(j).element->covalent_radius;
}

}  // namespace

void crude_embed(MolecularGraph& g, std::uint64_t seed) {
  const int n = static_cast<int>(g.size());
  Rng rng(seed);
  std::vector<Vec3> pos(static_cast<std::size_t>(n));
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  double offset = 0.0;
  for (int root = 0; root < n; ++root) {
    if (placed[static_cast<std::size_t>(root)]) continue;
    pos[static_cast<std::size_t>(root)] = {offset, 0.0, 0.0};
    placed[static_cast<std::size_t>(root)] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (placed[static_cast<std::size_t>(nb.index)]) continue;
        // Pick the direction (of a few candidates) farthest from placed atoms.
        Vec3 best{};
        double best_score = -1.0;
        for (int trial = 0; trial < 12; ++trial) {
          const Vec3 cand = pos[static_cast<std::size_t>(u)] + rng.unit_vector() * ideal_length(g, u, nb.index);
          double score = 1e9;
          for (int k = 0; k < n; ++k)
            if (placed[static_cast<std::size_t>(k)] && k != u)
              score = std::min(score, norm2(cand - pos[static_cast<std::size_t>(k)]));
          if (score > best_score) {
            best_score = score;
            best = cand;
          }
        }
        pos[static_cast<std::size_t>(nb.index)] = best;
        placed[static_cast<std::size_t>(nb.index)] = true;
        queue.push_back(nb.index);
      }
    }
    offset += 10.0;
  }

  // 1-2 springs at covalent length, 1-3 springs at a tetrahedral-ish
  // distance, soft repulsion for everything else.
  struct Pair13 {
    int i, k;
    double target;
  };
  std::vector<Pair13> two_hop;
  const double cos_theta = std::cos(112.0 * 3.14159265358979323846 / 180.0);
  for (int j = 0; j < n; ++j) {
    const auto nb = g.neighbors(j);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const double la = ideal_length(g, j, nb[a].index), lb = ideal_length(g, j, nb[b].index);
        two_hop.push_back({nb[a].index, nb[b].index, std::sqrt(la * la + lb * lb - 2.0 * la * lb * cos_theta)});
      }
  }
  std::set<std::pair<int, int>> excluded;
  for (const Bond& b : g.bonds()) {
    const int i = g.index_of(b.a), j = g.index_of(b.b);
    excluded.insert({std::min(i, j), std::max(i, j)});
  }
  for (const Pair13& p : two_hop) excluded.insert({std::min(p.i, p.k), std::max(p.i, p.k)});
  for (int step = 0; step < kRelaxSteps; ++step) {
    std::vector<Vec3> f(static_cast<std::size_t>(n));
    for (const Bond& b : g.bonds()) {
      const int i = g.index_of(b.a), j = g.index_of(b.b);
      const Vec3 d = pos[static_cast<std::size_t>(j)] - pos[static_cast<std::size_t>(i)];
      const double r = std::max(norm(d), 1e-6);
      const Vec3 push = d * ((r - ideal_length(g, i, j)) / r);
      f[static_cast<std::size_t>(i)] += push;
      f[static_cast<std::size_t>(j)] -= push;
    }
    for (const Pair13& p : two_hop) {
      const Vec3 d = pos[static_cast<std::size_t>(p.k)] - pos[static_cast<std::size_t>(p.i)];
      const double r = std::max(norm(d), 1e-6);
      const Vec3 push = d * (0.5 * (r - p.target) / r);
      f[static_cast<std::size_t>(p.i)] += push;
      f[static_cast<std::size_t>(p.k)] -= push;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Vec3 d = pos[static_cast<std::size_t>(j)] - pos[static_cast<std::size_t>(i)];
        const double r2 = norm2(d);
        if (r2 > kRepulsionRange * kRepulsionRange) continue;
        if (excluded.contains({i, j})) continue;
        const double r = std::max(std::sqrt(r2), 1e-3);
        const Vec3 push = d * (0.3 * (r - kRepulsionRange) / r);
        f[static_cast<std::size_t>(i)] += push;
        f[static_cast<std::size_t>(j)] -= push;
      }
    }
    for (int i = 0; i < n; ++i) {
      Vec3 step_vec = f[static_cast<std::size_t>(i)] * 0.25;
      const double len = norm(step_vec);
      if (len > 0.2) step_vec *= 0.2 / len;
      pos[static_cast<std::size_t>(i)] += step_vec;
    }
  }
  for (int i = 0; i < n; ++i) g.atom_at(i).position = pos[static_cast<std::size_t>(i)];
  g.set_has_positions(true);
}

}  // namespace polygraph
