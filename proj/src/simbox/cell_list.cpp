// SPDX-License-Identifier: Apache-2.0
#include "polygraph/simbox/cell_list.h"

#include <algorithm>

#include "polygraph/core/error.h"
#include "polygraph/core/log.h"

namespace polygraph {

CellList::CellList(const PeriodicBox& box, std::span<const Vec3> positions, double cutoff)
    : box_(box), cutoff_(cutoff) {
  if (!(cutoff > 0.0)) throw Error(ErrorCode::kConfig, "cell list cutoff must be positive");
  positions_.reserve(positions.size());
  for (const Vec3& p : positions) positions_.push_back(box.wrap(p));
  if (cutoff > 0.5 * box.min_length()) {
    log::warn("cutoff ", cutoff, " exceeds half the box length; using all-pairs neighbor search");
    brute_force_ = true;
    return;
  }
  for (int axis = 0; axis < 3; ++axis)
    dims_[static_cast<std::size_t>(axis)] = std::max(1, static_cast<int>(box.lengths[axis] / cutoff));
  const int ncell = dims_[0] * dims_[1] * dims_[2];
  cells_.assign(static_cast<std::size_t>(ncell), {});
  cell_index_.resize(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const int c = cell_of(positions_[i]);
    cell_index_[i] = c;
    cells_[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
  }
  stencils_.resize(static_cast<std::size_t>(ncell));
  for (int cx = 0; cx < dims_[0]; ++cx)
    for (int cy = 0; cy < dims_[1]; ++cy)
      for (int cz = 0; cz < dims_[2]; ++cz) {
        std::vector<int>& st = stencils_[static_cast<std::size_t>((cx * dims_[1] + cy) * dims_[2] + cz)];
        for (int dx = -1; dx <= 1; ++dx)
          for (int dy = -1; dy <= 1; ++dy)
            for (int dz = -1; dz <= 1; ++dz) {
              const int x = (cx + dx + dims_[0]) % dims_[0];
              const int y = (cy + dy + dims_[1]) % dims_[1];
              const int z = (cz + dz + dims_[2]) % dims_[2];
              st.push_back((x * dims_[1] + y) * dims_[2] + z);
            }
        std::sort(st.begin(), st.end());
        st.erase(std::unique(st.begin(), st.end()), st.end());
      }
}

int CellList::cell_of(const Vec3& p) const {
  const Vec3 w = box_.wrap(p);
  std::array<int, 3> c{};
  for (int axis = 0; axis < 3; ++axis) {
    const int d = dims_[static_cast<std::size_t>(axis)];
    c[static_cast<std::size_t>(axis)] =
        std::min(d - 1, static_cast<int>(w[axis] / box_.lengths[axis] * d));
  }
  return (c[0] * dims_[1] + c[1]) * dims_[2] + c[2];
}

std::vector<int> CellList::near_point(const Vec3& point, double radius) const {
  std::vector<int> out;
  const double r2 = radius * radius;
  auto consider = [&](int j) {
    if (norm2(box_.minimum_image(positions_[static_cast<std::size_t>(j)] - point)) <= r2) out.push_back(j);
  };
  if (brute_force_) {
    for (int j = 0; j < static_cast<int>(positions_.size()); ++j) consider(j);
  } else {
    for (int c : stencils_[static_cast<std::size_t>(cell_of(point))])
      for (int j : cells_[static_cast<std::size_t>(c)]) consider(j);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<int> CellList::neighbors_within(int i, double radius) const {
  std::vector<int> out = near_point(positions_[static_cast<std::size_t>(i)], radius);
  out.erase(std::remove(out.begin(), out.end(), i), out.end());
  return out;
}

CellList build_cell_list(const PeriodicBox& box, std::span<const Vec3> positions, double cutoff) {
  return CellList(box, positions, cutoff);
}

}  // namespace polygraph
