// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "polygraph/core/vec3.h"

namespace polygraph {

// Orthorhombic periodic cell with its origin at (0, 0, 0).
struct PeriodicBox {
  Vec3 lengths{1.0, 1.0, 1.0};

  double volume() const { return lengths.x * lengths.y * lengths.z; }
  double min_length() const { return std::min({lengths.x, lengths.y, lengths.z}); }

  // Each component mapped into (-L/2, L/2].
  Vec3 minimum_image(Vec3 d) const {
    for (int axis = 0; axis < 3; ++axis) {
      const double l = lengths[axis];
      d[axis] -= l * std::ceil(d[axis] / l - 0.5);
    }
    return d;
  }

  // Each component mapped into [0, L).
  Vec3 wrap(Vec3 p) const {
    for (int axis = 0; axis < 3; ++axis) {
      const double l = lengths[axis];
      p[axis] -= l * std::floor(p[axis] / l);
      if (p[axis] >= l) p[axis] = 0.0;
    }
    return p;
  }
};

// Throws kConfig unless every length is positive and finite.
PeriodicBox make_box(double lx, double ly, double lz);

// Displacement from r1 to r2 under the minimum-image convention.
inline Vec3 minimum_image(const PeriodicBox& box, const Vec3& r1, const Vec3& r2) {
  return box.minimum_image(r2 - r1);
}

}  // namespace polygraph
