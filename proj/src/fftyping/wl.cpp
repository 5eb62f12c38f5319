// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/wl.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "polygraph/core/log.h"

namespace polygraph {
namespace {

constexpr std::uint64_t kInitialTag = 0x574c30;  // "WL0"
constexpr std::uint64_t kRefineTag = 0x574c4b;   // "WLK"

std::vector<Digest128> initial_labels(const MolecularGraph& g) {
  std::vector<Digest128> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Atom& a = g.atom_at(static_cast<int>(i));
    out[i] = Hasher128()
                 .add_u64(kInitialTag)
                 .add_u64(static_cast<std::uint64_t>(a.element->atomic_number))
                 .add_i64(a.formal_charge)
                 .add_u64(static_cast<std::uint64_t>(g.degree(static_cast<int>(i))))
                 .finish();
  }
  return out;
}

std::vector<Digest128> refine_once(const MolecularGraph& g, const std::vector<Digest128>& prev) {
  std::vector<Digest128> out(g.size());
  std::vector<std::pair<Digest128, int>> multiset;
  for (std::size_t i = 0; i < g.size(); ++i) {
    multiset.clear();
    for (const Neighbor& nb : g.neighbors(static_cast<int>(i)))
      multiset.emplace_back(prev[static_cast<std::size_t>(nb.index)], static_cast<int>(nb.order));
    std::sort(multiset.begin(), multiset.end());
    Hasher128 h;
    h.add_u64(kRefineTag).add_digest(prev[i]).add_u64(multiset.size());
    for (const auto& [label, order] : multiset) h.add_digest(label).add_u64(static_cast<std::uint64_t>(order));
    out[i] = h.finish();
  }
  return out;
}

}  // namespace

std::vector<std::vector<Digest128>> wl_history(const MolecularGraph& graph, int iterations) {
  std::vector<std::vector<Digest128>> history;
  history.reserve(static_cast<std::size_t>(std::max(iterations, 0) + 1));
  history.push_back(initial_labels(graph));
  for (int k = 1; k <= iterations; ++k) history.push_back(refine_once(graph, history.back()));
  return history;
}

std::vector<WLLabel> wl_refine(const MolecularGraph& graph, int iterations) {
  std::vector<Digest128> labels = initial_labels(graph);
  for (int k = 1; k <= iterations; ++k) labels = refine_once(graph, labels);
  std::vector<WLLabel> out;
  out.reserve(labels.size());
  for (const auto& d : labels) out.push_back({d, iterations});
  return out;
}

int count_classes(const std::vector<Digest128>& labels) {
  std::unordered_set<Digest128, Digest128Hash> seen(labels.begin(), labels.end());
  return static_cast<int>(seen.size());
}

WLConvergence wl_converged_depth(const MolecularGraph& graph, int max_iter) {
  // Each depth refines the previous partition, so equal class counts mean
  // equal partitions.
  std::vector<Digest128> current = initial_labels(graph);
  int classes = count_classes(current);
  for (int k = 0; k <= max_iter; ++k) {
    std::vector<Digest128> next = refine_once(graph, current);
    const int next_classes = count_classes(next);
    if (next_classes == classes) return {k, true};
    current = std::move(next);
    classes = next_classes;
  }
  log::warn("WL refinement did not converge within ", max_iter, " iterations");
  return {max_iter, false};
}

}  // namespace polygraph
