// SPDX-License-Identifier: Apache-2.0
#include "polygraph/molgraph/smiles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "polygraph/core/error.h"

namespace polygraph {
namespace {

bool is_organic_letter(char c) {
  switch (c) {
    case 'B': case 'C': case 'N': case 'O': case 'P': case 'S': case 'F': case 'I':
      return true;
    default:
      return false;
  }
}

bool is_aromatic_letter(char c) {
  switch (c) {
    case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
      return true;
    default:
      return false;
  }
}

class SmilesParser {
 public:
  explicit SmilesParser(std::string_view text) : text_(text) {}

  MolecularGraph run() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev_ < 0) throw ParseError("branch without preceding atom", pos_);
        branches_.push_back({prev_, pos_});
        ++pos_;
      } else if (c == ')') {
        if (branches_.empty()) throw ParseError("unbalanced ')'", pos_);
        if (pending_bond_) throw ParseError("bond symbol before ')'", pos_);
        prev_ = branches_.back().atom;
        branches_.pop_back();
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        if (pending_bond_) throw ParseError("consecutive bond symbols", pos_);
        pending_bond_ = c == '-' ? BondOrder::kSingle
                        : c == '=' ? BondOrder::kDouble
                        : c == '#' ? BondOrder::kTriple
                                   : BondOrder::kAromatic;
        ++pos_;
      } else if (c == '.') {
        if (pending_bond_) throw ParseError("bond symbol before '.'", pos_);
        prev_ = -1;
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        ring_closure();
      } else if (c == '[') {
        bracket_atom();
      } else if (c == '/' || c == '\\' || c == '@') {
        throw ParseError("stereochemistry is not supported", pos_);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        organic_atom();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
    }
    if (!branches_.empty()) throw ParseError("unbalanced '('", branches_.back().offset);
    if (!rings_.empty()) {
      throw ParseError("unmatched ring-closure digit " + std::to_string(rings_.begin()->first),
                       rings_.begin()->second.offset);
    }
    if (pending_bond_) throw ParseError("dangling bond symbol", text_.size());
    return std::move(graph_);
  }

 private:
  struct Branch {
    int atom;
    std::size_t offset;
  };
  struct OpenRing {
    int atom;
    std::optional<BondOrder> order;
    std::size_t offset;
  };

  BondOrder implicit_order(int a, int b) const {
    return graph_.atom(a).aromatic && graph_.atom(b).aromatic ? BondOrder::kAromatic
                                                              : BondOrder::kSingle;
  }

  void attach(Atom atom) {
    const int id = graph_.add_atom(std::move(atom));
    if (prev_ >= 0) {
      graph_.add_bond(prev_, id, pending_bond_.value_or(implicit_order(prev_, id)));
    } else if (pending_bond_) {
      throw ParseError("bond symbol without preceding atom", pos_);
    }
    pending_bond_.reset();
    prev_ = id;
  }

  void organic_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    Atom atom;
    if (is_aromatic_letter(c)) {
      atom.element = &element_by_symbol(std::string(1, static_cast<char>(std::toupper(c))));
      atom.aromatic = true;
      ++pos_;
    } else if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      atom.element = &element_by_symbol("Cl");
      pos_ += 2;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      atom.element = &element_by_symbol("Br");
      pos_ += 2;
    } else if (is_organic_letter(c)) {
      atom.element = &element_by_symbol(std::string(1, c));
      ++pos_;
    } else {
      throw Error(ErrorCode::kUnsupportedElement, std::string("unsupported element '") + c +
                                                      "' at byte " + std::to_string(start));
    }
    attach(std::move(atom));
  }

  int read_int() {
    int value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      any = true;
    }
    return any ? value : -1;
  }

  void bracket_atom() {
    const std::size_t open = pos_++;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("isotopes are not supported", pos_);
    if (pos_ >= text_.size()) throw ParseError("unterminated bracket atom", open);

    Atom atom;
    std::string symbol;
    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      symbol = std::string(1, static_cast<char>(std::toupper(c)));
      atom.aromatic = true;
      ++pos_;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      symbol = std::string(1, c);
      ++pos_;
      if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
        std::string two = symbol + text_[pos_];
        // "Hx" never forms a two-letter symbol we support except via the table.
        if (is_supported_element(two) || (symbol != "H" && std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
                                          !is_supported_element(symbol))) {
          symbol = two;
          ++pos_;
        }
      }
    } else {
      throw ParseError("expected element symbol in bracket atom", pos_);
    }
    atom.element = &element_by_symbol(symbol);

    if (pos_ < text_.size() && text_[pos_] == '@') throw ParseError("stereochemistry is not supported", pos_);

    atom.pending_hydrogens = 0;
    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      const int n = read_int();
      atom.pending_hydrogens = n < 0 ? 1 : n;
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_];
      int magnitude = 0;
      while (pos_ < text_.size() && text_[pos_] == sign) {
        ++magnitude;
        ++pos_;
      }
      if (magnitude == 1) {
        const int n = read_int();
        if (n >= 0) magnitude = n;
      }
      atom.formal_charge = sign == '+' ? magnitude : -magnitude;
    }
    if (pos_ >= text_.size() || text_[pos_] != ']') throw ParseError("unterminated bracket atom", open);
    ++pos_;
    attach(std::move(atom));
  }

  void ring_closure() {
    const std::size_t start = pos_;
    if (prev_ < 0) throw ParseError("ring closure without preceding atom", pos_);
    int digit = 0;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
        throw ParseError("malformed %nn ring closure", pos_);
      digit = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      digit = text_[pos_] - '0';
      ++pos_;
    }
    auto it = rings_.find(digit);
    if (it == rings_.end()) {
      rings_.emplace(digit, OpenRing{prev_, pending_bond_, start});
      pending_bond_.reset();
      return;
    }
    const OpenRing open = it->second;
    rings_.erase(it);
    if (open.atom == prev_) throw ParseError("ring closure to the same atom", start);
    if (open.order && pending_bond_ && *open.order != *pending_bond_)
      throw ParseError("conflicting ring-closure bond orders", start);
    const BondOrder order = pending_bond_ ? *pending_bond_
                            : open.order  ? *open.order
                                          : implicit_order(open.atom, prev_);
    pending_bond_.reset();
    if (graph_.find_bond(open.atom, prev_)) throw ParseError("duplicate ring-closure bond", start);
    graph_.add_bond(open.atom, prev_, order);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MolecularGraph graph_;
  int prev_ = -1;
  std::optional<BondOrder> pending_bond_;
  std::vector<Branch> branches_;
  std::map<int, OpenRing> rings_;
};

int adjusted_valence(const Atom& atom, int valence) {
  const int z = atom.element->atomic_number;
  const int q = atom.formal_charge;
  if (z == 6 || z == 14) return valence - std::abs(q);
  if (z == 5) return valence - q;
  return valence + q;
}

std::string atom_token(const Atom& atom) {
  const std::string symbol(atom.element->symbol);
  std::string text = symbol;
  if (atom.aromatic) {
    for (auto& ch : text) ch = static_cast<char>(std::tolower(ch));
  }
  const bool bracket = !atom.element->organic_subset || atom.formal_charge != 0 ||
                       atom.pending_hydrogens >= 0 || (atom.aromatic && text.size() > 1);
  if (!bracket) return text;
  std::string out = "[" + text;
  if (atom.pending_hydrogens > 0) {
    out += "H";
    if (atom.pending_hydrogens > 1) out += std::to_string(atom.pending_hydrogens);
  }
  if (atom.formal_charge != 0) {
    out += atom.formal_charge > 0 ? "+" : "-";
    if (std::abs(atom.formal_charge) > 1) out += std::to_string(std::abs(atom.formal_charge));
  }
  return out + "]";
}

std::string bond_token(const MolecularGraph& g, int a, int b, BondOrder order) {
  const bool both_aromatic = g.atom_at(a).aromatic && g.atom_at(b).aromatic;
  switch (order) {
    case BondOrder::kSingle: return both_aromatic ? "-" : "";
    case BondOrder::kDouble: return "=";
    case BondOrder::kTriple: return "#";
    case BondOrder::kAromatic: return both_aromatic ? "" : ":";
  }
  return "";
}

std::string ring_label(int digit) {
  return digit < 10 ? std::to_string(digit) : "%" + std::to_string(digit);
}

}  // namespace

MolecularGraph parse_smiles(std::string_view text) { return SmilesParser(text).run(); }

std::string write_smiles(const MolecularGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(static_cast<std::size_t>(n), -1);  // DFS visit rank
  std::vector<int> parent_bond(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> ring_bonds(static_cast<std::size_t>(n));  // bond indices
  std::vector<int> roots;

  int rank = 0;
  for (int root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    roots.push_back(root);
    // Iterative DFS replicating recursive visit order.
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    order[static_cast<std::size_t>(root)] = rank++;
    while (!stack.empty()) {
      const int u = stack.back().first;
      std::size_t& next = stack.back().second;
      const auto nbrs = g.neighbors(u);
      if (next >= nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Neighbor nb = nbrs[next++];
      if (nb.bond == parent_bond[static_cast<std::size_t>(u)]) continue;
      if (order[static_cast<std::size_t>(nb.index)] < 0) {
        order[static_cast<std::size_t>(nb.index)] = rank++;
        parent_bond[static_cast<std::size_t>(nb.index)] = nb.bond;
        children[static_cast<std::size_t>(u)].push_back(nb.index);
        stack.push_back({nb.index, 0});
      } else {
        auto& rb = ring_bonds[static_cast<std::size_t>(u)];
        if (std::find(rb.begin(), rb.end(), nb.bond) == rb.end()) {
          rb.push_back(nb.bond);
          ring_bonds[static_cast<std::size_t>(nb.index)].push_back(nb.bond);
        }
      }
    }
  }

  std::map<int, int> open_digit;  // bond index -> digit
  std::vector<bool> digit_used(100, false);
  std::string out;

  auto emit = [&](auto&& self, int u) -> void {
    out += atom_token(g.atom_at(u));
    for (int bond : ring_bonds[static_cast<std::size_t>(u)]) {
      const Bond& b = g.bonds()[static_cast<std::size_t>(bond)];
      const int ia = g.index_of(b.a);
      const int ib = g.index_of(b.b);
      const int other = ia == u ? ib : ia;
      auto it = open_digit.find(bond);
      if (it == open_digit.end()) {
        int d = 1;
        while (digit_used[static_cast<std::size_t>(d)]) ++d;
        digit_used[static_cast<std::size_t>(d)] = true;
        open_digit.emplace(bond, d);
        out += bond_token(g, u, other, b.order) + ring_label(d);
      } else {
        out += ring_label(it->second);
        digit_used[static_cast<std::size_t>(it->second)] = false;
        open_digit.erase(it);
      }
    }
    const auto& kids = children[static_cast<std::size_t>(u)];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const int v = kids[k];
      const Bond& b = g.bonds()[*g.find_bond(g.atom_at(u).id, g.atom_at(v).id)];
      const bool last = k + 1 == kids.size();
      if (!last) out += "(";
      out += bond_token(g, u, v, b.order);
      self(self, v);
      if (!last) out += ")";
    }
  };

  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (r > 0) out += ".";
    emit(emit, roots[r]);
  }
  return out;
}

MolecularGraph add_implicit_hydrogens(const MolecularGraph& graph) {
  MolecularGraph out = graph;
  const Element& hydrogen = element_by_symbol("H");
  const int original = static_cast<int>(out.size());
  for (int i = 0; i < original; ++i) {
    Atom& atom = out.atom_at(i);
    const int used = bonded_valence(out, i);
    int add = 0;
    if (atom.pending_hydrogens >= 0) {
      add = atom.pending_hydrogens;
      if (used + add > max_valence(atom))
        throw Error(ErrorCode::kOverValence,
                    "atom " + std::to_string(atom.id) + " (" + std::string(atom.element->symbol) +
                        ") exceeds its valence");
    } else {
      std::optional<int> target;
      for (int v : atom.element->valences) {
        const int adjusted = adjusted_valence(atom, v);
        if (adjusted >= used) {
          target = adjusted;
          break;
        }
      }
      if (!target)
        throw Error(ErrorCode::kOverValence,
                    "atom " + std::to_string(atom.id) + " (" + std::string(atom.element->symbol) +
                        ") has valence " + std::to_string(used) + ", above the allowed maximum");
      add = *target - used;
    }
    const int heavy_id = atom.id;
    const int instance = atom.monomer_instance;
    atom.pending_hydrogens = atom.pending_hydrogens >= 0 ? 0 : -1;
    for (int h = 0; h < add; ++h) {
      Atom hatom;
      hatom.element = &hydrogen;
      hatom.monomer_instance = instance;
      const int hid = out.add_atom(std::move(hatom));
      out.add_bond(heavy_id, hid, BondOrder::kSingle);
    }
  }
  return out;
}

}  // namespace polygraph
