// SPDX-License-Identifier: Apache-2.0
#include "polygraph/analysis/tg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "polygraph/core/error.h"

namespace polygraph {
namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double sse = 0.0;
};

Line least_squares(const std::vector<DensityPoint>& p, std::size_t begin, std::size_t end) {
  const double n = static_cast<double>(end - begin);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    mx += p[i].temperature;
    my += p[i].density;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    sxx += (p[i].temperature - mx) * (p[i].temperature - mx);
    sxy += (p[i].temperature - mx) * (p[i].density - my);
  }
  Line l;
  l.slope = sxy / sxx;
  l.intercept = my - l.slope * mx;
  for (std::size_t i = begin; i < end; ++i) {
    const double r = p[i].density - (l.intercept + l.slope * p[i].temperature);
    l.sse += r * r;
  }
  return l;
}

}  // namespace

TgResult fit_tg_piecewise(std::vector<DensityPoint> p, double slope_contrast) {
  constexpr std::size_t kMinSegment = 3;
  if (p.size() < 2 * kMinSegment)
    throw Error(ErrorCode::kConfig, "Tg fit needs at least 6 points, got " + std::to_string(p.size()));
  std::sort(p.begin(), p.end(), [](const DensityPoint& a, const DensityPoint& b) { return a.temperature < b.temperature; });
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!(p[i].temperature > p[i - 1].temperature))
      throw Error(ErrorCode::kConfig, "Tg fit needs strictly monotone temperatures");

  TgResult best;
  double best_sse = std::numeric_limits<double>::infinity();
  Line best_low, best_high;
  for (std::size_t k = kMinSegment; k + kMinSegment <= p.size(); ++k) {
    const Line low = least_squares(p, 0, k);
    const Line high = least_squares(p, k, p.size());
    if (low.sse + high.sse < best_sse) {
      best_sse = low.sse + high.sse;
      best_low = low;
      best_high = high;
      best.split = static_cast<int>(k);
    }
  }
  best.sse = best_sse;
  best.glassy_slope = best_low.slope;
  best.glassy_intercept = best_low.intercept;
  best.rubbery_slope = best_high.slope;
  best.rubbery_intercept = best_high.intercept;
  const double dm = best_low.slope - best_high.slope;
  best.tg = (best_high.intercept - best_low.intercept) / dm;
  const double scale = std::max(std::abs(best_low.slope), std::abs(best_high.slope));
  best.degenerate = !(std::abs(dm) >= slope_contrast * scale) || scale == 0.0 || !std::isfinite(best.tg) ||
                    best.tg <= p.front().temperature || best.tg >= p.back().temperature;
  if (!std::isfinite(best.tg))
    best.tg = 0.5 * (p[static_cast<std::size_t>(best.split) - 1].temperature + p[static_cast<std::size_t>(best.split)].temperature);
  return best;
}

std::vector<DensityPoint> parse_density_csv(std::string_view text) {
  std::vector<DensityPoint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw Error(ErrorCode::kFormat, "density CSV line " + std::to_string(line_no) + ": expected two columns");
    try {
      std::size_t used_a = 0, used_b = 0;
      const double t = std::stod(a, &used_a);
      const double d = std::stod(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing text");
      out.push_back({t, d});
    } catch (const std::exception&) {
      if (out.empty() && !header_skipped) {
        header_skipped = true;
        continue;
      }
      throw Error(ErrorCode::kFormat, "density CSV line " + std::to_string(line_no) + ": not numeric");
    }
  }
  return out;
}

}  // namespace polygraph
