// SPDX-License-Identifier: Apache-2.0
#include "polygraph/simbox/box.h"

#include "polygraph/core/error.h"

namespace polygraph {

PeriodicBox make_box(double lx, double ly, double lz) {
  for (double l : {lx, ly, lz})
    if (!(l > 0.0) || !std::isfinite(l)) throw Error(ErrorCode::kConfig, "box lengths must be positive");
  return PeriodicBox{{lx, ly, lz}};
}

}  // namespace polygraph
