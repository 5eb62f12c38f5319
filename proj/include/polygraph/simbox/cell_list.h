// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

#include "polygraph/simbox/box.h"

namespace polygraph {

// Uniform grid over the periodic box. When the cutoff exceeds half the
// shortest box length the list degrades to an all-pairs scan (with a warning).
class CellList {
 public:
  CellList(const PeriodicBox& box, std::span<const Vec3> positions, double cutoff);

  double cutoff() const { return cutoff_; }
  bool brute_force() const { return brute_force_; }
  std::size_t size() const { return positions_.size(); }

  // Indices j != i with minimum-image distance <= radius (radius <= cutoff),
  // ascending.
  std::vector<int> neighbors_within(int i, double radius) const;

  // Indices within radius of an arbitrary point, ascending.
  std::vector<int> near_point(const Vec3& point, double radius) const;

  // Calls fn(i, j, d) for every pair i < j within radius, d = r_j - r_i.
  template <typename Fn>
  void for_each_pair(double radius, Fn&& fn) const;

  // Cell indices adjacent to (and including) cell c, deduplicated.
  const std::vector<int>& stencil(int cell) const { return stencils_[static_cast<std::size_t>(cell)]; }
  int cell_of(const Vec3& p) const;
  const std::vector<int>& bucket(int cell) const { return cells_[static_cast<std::size_t>(cell)]; }
  const Vec3& position(int i) const { return positions_[static_cast<std::size_t>(i)]; }
  const PeriodicBox& box() const { return box_; }

 private:
  PeriodicBox box_;
  double cutoff_;
  bool brute_force_ = false;
  std::array<int, 3> dims_{1, 1, 1};
  std::vector<Vec3> positions_;
  std::vector<std::vector<int>> cells_;
  std::vector<std::vector<int>> stencils_;
  std::vector<int> cell_index_;
};

template <typename Fn>
void CellList::for_each_pair(double radius, Fn&& fn) const {
  const double r2 = radius * radius;
  const int n = static_cast<int>(positions_.size());
  if (brute_force_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Vec3 d = box_.minimum_image(positions_[static_cast<std::size_t>(j)] - positions_[static_cast<std::size_t>(i)]);
        if (norm2(d) <= r2) fn(i, j, d);
      }
    return;
  }
  for (int i = 0; i < n; ++i) {
    for (int c : stencils_[static_cast<std::size_t>(cell_index_[static_cast<std::size_t>(i)])]) {
      for (int j : cells_[static_cast<std::size_t>(c)]) {
        if (j <= i) continue;
        const Vec3 d = box_.minimum_image(positions_[static_cast<std::size_t>(j)] - positions_[static_cast<std::size_t>(i)]);
        if (norm2(d) <= r2) fn(i, j, d);
      }
    }
  }
}

CellList build_cell_list(const PeriodicBox& box, std::span<const Vec3> positions, double cutoff);

}  // namespace polygraph
