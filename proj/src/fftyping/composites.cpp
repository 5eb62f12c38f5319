// SPDX-License-Identifier: Apache-2.0
#include "polygraph/fftyping/composites.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "polygraph/core/error.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/fftyping/wl.h"

namespace polygraph {

std::vector<int> append_graph(MolecularGraph& target, const MolecularGraph& part, int instance) {
  std::vector<int> ids;
  ids.reserve(part.size());
  for (const Atom& a : part.atoms()) {
    Atom copy = a;
    copy.id = -1;
    copy.monomer_instance = instance;
    ids.push_back(target.add_atom(std::move(copy)));
  }
  for (const Bond& b : part.bonds())
    target.add_bond(ids[static_cast<std::size_t>(part.index_of(b.a))],
                    ids[static_cast<std::size_t>(part.index_of(b.b))], b.order);
  return ids;
}

namespace {

constexpr int kDedupeExtraDepth = 4;

Digest128 canonical_hash(const MolecularGraph& g, int depth) {
  auto labels = wl_history(g, depth).back();
  std::sort(labels.begin(), labels.end());
  Hasher128 h;
  h.add_u64(labels.size());
  for (const auto& l : labels) h.add_digest(l);
  return h.finish();
}

struct PartnerSite {
  int template_index;
  int atom_id;  // in the template graph
  std::string label;
};

class Enumerator {
 public:
  Enumerator(const std::vector<MonomerTemplate>& templates, const ReactionRuleSet& rules,
             const CompositeOptions& options)
      : templates_(templates), rules_(rules), options_(options) {
    dedupe_depth_ = std::max(options.coverage_depth, kDefaultWLDepth) + kDedupeExtraDepth;
    // One representative per symmetry class of sites on each template.
    for (int t = 0; t < static_cast<int>(templates.size()); ++t) {
      const auto labels = wl_history(templates[static_cast<std::size_t>(t)].graph, dedupe_depth_).back();
      std::set<std::pair<Digest128, std::string>> seen;
      for (const auto& site : templates[static_cast<std::size_t>(t)].reaction_sites) {
        const auto& g = templates[static_cast<std::size_t>(t)].graph;
        if (seen.insert({labels[static_cast<std::size_t>(g.index_of(site.atom))], site.type}).second)
          classes_.push_back({t, site.atom, site.type});
      }
    }
  }

  std::vector<Composite> run() {
    validate();
    if (options_.include_monomers)
      for (const auto& t : templates_) emit(t.name, reindexed_copy(t, 1));
    dimers_and_trimers();
    if (options_.coverage_depth > 0)
      for (int t = 0; t < static_cast<int>(templates_.size()); ++t) coverage(t);
    return std::move(out_);
  }

 private:
  MolecularGraph reindexed_copy(const MonomerTemplate& t, int instance) const {
    MolecularGraph g;
    append_graph(g, t.graph, instance);
    return g;
  }

  void validate() const {
    std::set<std::string> available;
    for (const auto& t : templates_)
      for (const auto& s : t.reaction_sites) available.insert(s.type);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& r : rules_.rules) {
        for (const auto& [site, tr] : {std::pair{r.site_a, r.transform_a}, std::pair{r.site_b, r.transform_b}})
          if (available.contains(site) && !tr.empty() && available.insert(tr).second) grew = true;
      }
    }
    for (const auto& r : rules_.rules)
      for (const auto* label : {&r.site_a, &r.site_b})
        if (!available.contains(*label))
          throw Error(ErrorCode::kConfig, "rule '" + r.name + "' references site type '" + *label +
                                              "' that no monomer template provides");
  }

  bool emit(const std::string& name, MolecularGraph g) {
    if (out_.size() >= options_.max_composites)
      throw Error(ErrorCode::kConfig, "composite enumeration exceeded " +
                                          std::to_string(options_.max_composites) + " graphs");
    const Digest128 key = canonical_hash(g, dedupe_depth_);
    if (!seen_.insert(key).second) return false;
    out_.push_back({name, reindexed(g)});
    return true;
  }

  // Reacts site `site_id` (label `label`) of g with a fresh copy of the
  // partner class; returns the partner site id or -1 when the rule does not fit.
  int react_with(MolecularGraph& g, int site_id, const ReactionRule& rule, int orientation,
                 const PartnerSite& partner, int instance) {
    const auto ids = append_graph(g, templates_[static_cast<std::size_t>(partner.template_index)].graph, instance);
    const int pid = ids[static_cast<std::size_t>(
        templates_[static_cast<std::size_t>(partner.template_index)].graph.index_of(partner.atom_id))];
    if (orientation > 0)
      execute_reaction(g, site_id, pid, rule, nullptr);
    else
      execute_reaction(g, pid, site_id, rule, nullptr);
    return pid;
  }

  void dimers_and_trimers() {
    for (const auto& rule : rules_.rules) {
      for (const auto& ca : classes_) {
        if (ca.label != rule.site_a) continue;
        for (const auto& cb : classes_) {
          if (cb.label != rule.site_b) continue;
          if (rule.site_a == rule.site_b && cb.template_index < ca.template_index) continue;
          MolecularGraph g;
          const auto ids = append_graph(g, templates_[static_cast<std::size_t>(ca.template_index)].graph, 1);
          const int a = ids[static_cast<std::size_t>(
              templates_[static_cast<std::size_t>(ca.template_index)].graph.index_of(ca.atom_id))];
          const int b = react_with(g, a, rule, 1, cb, 2);
          const std::string name = templates_[static_cast<std::size_t>(ca.template_index)].name + "+" +
                                   templates_[static_cast<std::size_t>(cb.template_index)].name + "[" +
                                   rule.name + "]";
          emit(name, g);
          if (!options_.trimers) continue;
          for (const auto& [site, label] : {std::pair{a, rule.transform_a}, std::pair{b, rule.transform_b}}) {
            if (label.empty()) continue;
            for (const auto& rule2 : rules_.rules) {
              for (const auto& cc : classes_) {
                const int orient = rule_orientation(rule2, label, cc.label);
                if (orient == 0) continue;
                MolecularGraph t = g;
                react_with(t, site, rule2, orient, cc, 3);
                emit(name + "+" + templates_[static_cast<std::size_t>(cc.template_index)].name + "[" +
                         rule2.name + "]",
                     std::move(t));
              }
            }
          }
        }
      }
    }
  }

  struct Pending {
    int atom_id;
    std::string label;
  };

  std::vector<int> distances_from_center(const MolecularGraph& g) const {
    std::vector<int> dist(g.size(), kNoPath);
    std::deque<int> queue;
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (g.atom_at(i).monomer_instance == 1) {
        dist[static_cast<std::size_t>(i)] = 0;
        queue.push_back(i);
      }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.neighbors(u))
        if (dist[static_cast<std::size_t>(nb.index)] == kNoPath) {
          dist[static_cast<std::size_t>(nb.index)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(nb.index);
        }
    }
    return dist;
  }

  void expand(MolecularGraph g, std::deque<Pending> pending, int next_instance, const std::string& name) {
    while (!pending.empty()) {
      const Pending p = pending.front();
      pending.pop_front();
      if (!g.contains(p.atom_id) || p.label.empty()) continue;
      const auto dist = distances_from_center(g);
      if (dist[static_cast<std::size_t>(g.index_of(p.atom_id))] > options_.coverage_depth + 1) continue;

      // Branch: the site reacts (or is capped); the current path keeps it unreacted.
      for (const auto& rule : rules_.rules) {
        for (const auto& cls : classes_) {
          const int orient = rule_orientation(rule, p.label, cls.label);
          if (orient == 0) continue;
          if (rule.site_a == rule.site_b && orient < 0) continue;
          MolecularGraph h = g;
          const int pid = react_with(h, p.atom_id, rule, orient, cls, next_instance);
          std::deque<Pending> more = pending;
          const std::string& own = orient > 0 ? rule.transform_a : rule.transform_b;
          const std::string& theirs = orient > 0 ? rule.transform_b : rule.transform_a;
          more.push_front({p.atom_id, own});
          more.push_back({pid, theirs});
          for (const Atom& a : h.atoms())
            if (a.monomer_instance == next_instance && a.id != pid && !a.site_role.empty())
              more.push_back({a.id, a.site_role});
          expand(std::move(h), std::move(more), next_instance + 1, name);
        }
        if (options_.capped_states) {
          for (int side : {1, -1}) {
            if ((side > 0 ? rule.site_a : rule.site_b) != p.label) continue;
            MolecularGraph h = g;
            Atom cap;
            cap.element = &element_by_symbol("H");
            cap.monomer_instance = next_instance;
            const int hid = h.add_atom(std::move(cap));
            const auto& pattern = side > 0 ? rule.byproducts_a : rule.byproducts_b;
            std::vector<int> removed = select_byproducts(h, p.atom_id, hid, pattern, nullptr);
            h.add_bond(p.atom_id, hid, BondOrder::kSingle);
            h.atom(p.atom_id).site_role.clear();
            h.remove_atoms(removed);
            expand(std::move(h), pending, next_instance + 1, name);
          }
        }
      }
    }
    emit(name + "#" + std::to_string(out_.size()), std::move(g));
  }

  void coverage(int t) {
    const MonomerTemplate& tmpl = templates_[static_cast<std::size_t>(t)];
    MolecularGraph g = reindexed_copy(tmpl, 1);
    std::deque<Pending> pending;
    for (const Atom& a : g.atoms())
      if (!a.site_role.empty()) pending.push_back({a.id, a.site_role});
    expand(std::move(g), std::move(pending), 2, tmpl.name + "@tree");
  }

  const std::vector<MonomerTemplate>& templates_;
  const ReactionRuleSet& rules_;
  CompositeOptions options_;
  int dedupe_depth_ = 0;
  std::vector<PartnerSite> classes_;
  std::set<Digest128> seen_;
  std::vector<Composite> out_;
};

}  // namespace

std::vector<Composite> enumerate_composites(const std::vector<MonomerTemplate>& templates,
                                            const ReactionRuleSet& rules, const CompositeOptions& options) {
  return Enumerator(templates, rules, options).run();
}

}  // namespace polygraph
