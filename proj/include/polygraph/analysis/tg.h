// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace polygraph {

struct DensityPoint {
  double temperature = 0.0;  // K
  double density = 0.0;      // g/cm^3
};

struct TgResult {
  double tg = 0.0;  // K
  double glassy_slope = 0.0;  // low-temperature segment, g/cm^3/K
  double rubbery_slope = 0.0;
  double glassy_intercept = 0.0;
  double rubbery_intercept = 0.0;
  double sse = 0.0;
  int split = 0;  // number of points in the low-temperature segment
  bool degenerate = false;
};

inline constexpr double kDefaultSlopeContrast = 0.10;

// Two-segment least squares over every split that leaves at least three
// points per side; the split with the smallest total squared error wins and
// Tg is where the two lines cross. Degenerate when the slopes differ by less
// than `slope_contrast` (relative) or the crossing lies outside the data.
TgResult fit_tg_piecewise(std::vector<DensityPoint> series, double slope_contrast = kDefaultSlopeContrast);

// Two columns (temperature, density); '#' comments and a non-numeric header
// line are skipped.
std::vector<DensityPoint> parse_density_csv(std::string_view text);

}  // namespace polygraph
