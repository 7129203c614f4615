// tower.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Inverse sequences of finite graphs with bonding homomorphisms. Level 0 is
// the coarsest; bonds[i] maps levels[i+1] down to levels[i]. Stabilization
// of the projected walk shifts (the Mittag-Leffler condition at orbit level)
// is the shadowing criterion decided here, as a finite-horizon semidecision
// with an explicit evidence margin.

#ifndef SVDYN_TOWER_HPP_
#define SVDYN_TOWER_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/sofic.hpp"

namespace svdyn {

class Tower {
 public:
  Tower(std::vector<Graph> levels, std::vector<std::vector<int>> bond_maps)
      : levels_(std::move(levels)), bonds_(std::move(bond_maps)) {
    if (levels_.empty()) throw input_error("tower must have at least one level");
    if (bonds_.size() + 1 != levels_.size())
      throw input_error("tower needs exactly one bond per adjacent level pair");
    for (size_t i = 0; i < bonds_.size(); ++i) {
      HomFlags f = check_hom(levels_[i + 1], levels_[i], bonds_[i]);
      if (!f.homomorphism)
        throw input_error("bond " + std::to_string(i + 1) + "->" +
                          std::to_string(i) + " is not a graph homomorphism");
    }
  }

  static Tower single(Graph g) { return Tower({std::move(g)}, {}); }

  int depth() const { return static_cast<int>(levels_.size()); }
  const Graph& level(int i) const { return levels_.at(i); }
  const std::vector<Graph>& levels() const { return levels_; }
  const std::vector<int>& bond_map(int i) const { return bonds_.at(i); }

  GraphHom bond(int i) const {
    return GraphHom(levels_.at(i + 1), levels_.at(i), bonds_.at(i));
  }

  /// Composed bond from level m down to level n (n <= m).
  std::vector<int> composed_map(int n, int m) const {
    check_range(n, m);
    std::vector<int> map(levels_[m].size());
    for (size_t v = 0; v < map.size(); ++v) map[v] = static_cast<int>(v);
    for (int i = m; i > n; --i)
      for (auto& v : map) v = bonds_[i - 1][v];
    return map;
  }

  void check_range(int n, int m) const {
    if (n < 0 || m < n || m >= depth())
      throw input_error("tower level range out of bounds");
  }

 private:
  std::vector<Graph> levels_;
  std::vector<std::vector<int>> bonds_;
};

/// Vertex-level Mittag-Leffler chain at one level: the images of deeper
/// vertex sets under the composed bonds.
struct MLReport {
  int level = 0;
  int depth = 0;
  std::vector<VertexSet> chain;  // images of V_m for m = level..depth
  int witnessed_at = 0;          // first m with chain constant through depth
  VertexSet stable_image;
};

inline MLReport vertex_ml(const Tower& t, int n, int D) {
  t.check_range(n, D);
  MLReport r;
  r.level = n;
  r.depth = D;
  for (int m = n; m <= D; ++m) {
    auto map = t.composed_map(n, m);
    std::vector<int> img(map.begin(), map.end());
    r.chain.push_back(VertexSet::of(std::move(img)));
  }
  r.witnessed_at = D;
  for (int m = D; m-- > n;) {
    if (r.chain[m - n] == r.chain[D - n])
      r.witnessed_at = m;
    else
      break;
  }
  r.stable_image = r.chain.back();
  return r;
}

/// S_m for m = n..D: the walk shift of level m, relabeled down to level n
/// vertex names through the composed bond.
inline std::vector<LabeledAutomaton> orbit_shift_chain(const Tower& t, int n,
                                                       int D) {
  t.check_range(n, D);
  std::vector<LabeledAutomaton> chain;
  LabeledAutomaton base = vertex_shift(t.level(n));
  for (int m = n; m <= D; ++m) {
    auto map = t.composed_map(n, m);
    chain.push_back(LabeledAutomaton(t.level(m), base.alphabet, std::move(map)));
  }
  return chain;
}

struct ShadowingStatus {
  enum class Kind { Witnessed, Undetermined };
  Kind kind = Kind::Undetermined;
  int m = 0;       // Witnessed: first stable index; Undetermined: unused
  int margin = 0;  // Witnessed: D - m actually observed
  int last_strict_decrease = 0;  // Undetermined: deepest m with S_m != S_{m-1}
};

struct ShadowingReport {
  int level = 0;
  int depth = 0;
  int margin_requested = 0;
  bool exact = false;  // single-level towers: the criterion is exact
  std::vector<std::pair<int, int>> chain_summary;  // (m, minimized DFA states)
  ShadowingStatus status;
  std::optional<LabeledAutomaton> stabilized_shift;
};

/// Decides stabilization of the projected walk shifts S_n >= S_{n+1} >= ...
/// through depth D. Witnessed means S_m = ... = S_D with D - m >= margin;
/// the report never claims more than what the finite horizon shows. A
/// single-level tower is a set-valued map of finite type: its only
/// consistent extension is the constant one, so it is Witnessed exactly.
inline ShadowingReport shadowing_status(const Tower& t, int n, int D,
                                        int margin) {
  if (margin < 1) throw input_error("margin must be >= 1");
  if (t.depth() == 1) {
    if (n != 0) throw input_error("tower level range out of bounds");
    ShadowingReport r;
    r.level = 0;
    r.depth = 0;
    r.margin_requested = margin;
    r.exact = true;
    LabeledAutomaton s0 = vertex_shift(t.level(0));
    r.chain_summary.emplace_back(0, allowed_words_dfa(s0).num_states());
    r.status.kind = ShadowingStatus::Kind::Witnessed;
    r.status.m = 0;
    r.status.margin = margin;
    r.stabilized_shift = std::move(s0);
    return r;
  }
  t.check_range(n, D);
  ShadowingReport r;
  r.level = n;
  r.depth = D;
  r.margin_requested = margin;
  auto chain = orbit_shift_chain(t, n, D);
  std::vector<WordDFA> minimized;
  minimized.reserve(chain.size());
  for (const auto& s : chain) {
    minimized.push_back(allowed_words_dfa(s));
    r.chain_summary.emplace_back(n + static_cast<int>(minimized.size()) - 1,
                                 minimized.back().num_states());
  }
  // first index whose language stays constant through D
  int stable_from = D;
  for (int m = D; m-- > n;) {
    if (minimized[m - n].trans == minimized[D - n].trans)
      stable_from = m;
    else
      break;
  }
  if (D - stable_from >= margin) {
    r.status.kind = ShadowingStatus::Kind::Witnessed;
    r.status.m = stable_from;
    r.status.margin = D - stable_from;
    r.stabilized_shift = chain.back();
  } else {
    r.status.kind = ShadowingStatus::Kind::Undetermined;
    int last = n;
    for (int m = n + 1; m <= D; ++m)
      if (minimized[m - n].trans != minimized[m - 1 - n].trans) last = m;
    r.status.last_strict_decrease = last;
  }
  return r;
}

/// Higher-block tower of a shift: level i is the graph on allowed
/// (i+1)-words with overlap edges, bonds drop the last letter.
inline Tower subshift_tower(const LabeledAutomaton& a, int D) {
  if (D < 1) throw input_error("tower depth must be >= 1");
  bool single_char = true;
  for (const auto& sym : a.alphabet.symbols)
    if (sym.size() != 1) single_char = false;
  auto word_name = [&](const std::vector<int>& w) {
    std::string n;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && !single_char) n += ".";
      n += a.alphabet.symbols[w[i]];
    }
    return n;
  };

  std::vector<Graph> levels;
  std::vector<std::vector<int>> bonds;
  std::vector<std::vector<int>> prev_words;
  for (int k = 1; k <= D; ++k) {
    auto wk = words(a, k);
    auto wk1 = words(a, k + 1);
    std::vector<std::vector<int>> verts(wk.begin(), wk.end());
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& w : wk1) {
      std::vector<int> u(w.begin(), w.end() - 1);
      std::vector<int> v(w.begin() + 1, w.end());
      edges.emplace_back(idx.at(u), idx.at(v));
    }
    std::vector<std::string> names;
    names.reserve(verts.size());
    for (const auto& w : verts) names.push_back(word_name(w));
    levels.emplace_back(std::move(names), edges);
    if (k > 1) {
      std::map<std::vector<int>, int> prev_idx;
      for (size_t i = 0; i < prev_words.size(); ++i)
        prev_idx[prev_words[i]] = static_cast<int>(i);
      std::vector<int> bond(verts.size());
      for (size_t i = 0; i < verts.size(); ++i) {
        std::vector<int> prefix(verts[i].begin(), verts[i].end() - 1);
        bond[i] = prev_idx.at(prefix);
      }
      bonds.push_back(std::move(bond));
    }
    prev_words = std::move(verts);
  }
  return Tower(std::move(levels), std::move(bonds));
}

inline Tower subshift_tower(const ForbiddenWordSFT& s, int D) {
  return subshift_tower(recode_to_1step(s).as_automaton(), D);
}

/// Finite test of pattern membership at level n, using the depth-D
/// approximation S_D. Exact once shadowing_status is Witnessed through D.
inline bool pattern_allowed(const Tower& t, int n, int D,
                            const std::vector<std::string>& w) {
  t.check_range(n, D);
  if (w.empty()) return true;
  const Graph& gn = t.level(n);
  std::vector<int> letters;
  letters.reserve(w.size());
  for (const auto& sym : w) {
    int found = -1;
    for (int v = 0; v < gn.size(); ++v)
      if (gn.name(v) == sym) {
        found = v;
        break;
      }
    if (found < 0)
      throw input_error("pattern letter '" + sym + "' is not a level vertex");
    letters.push_back(found);
  }
  const Graph& gd = t.level(D);
  auto down = t.composed_map(n, D);
  std::vector<bool> frontier(gd.size());
  bool any = false;
  for (int v = 0; v < gd.size(); ++v)
    if (down[v] == letters[0]) frontier[v] = any = true;
  for (size_t i = 1; i < letters.size() && any; ++i) {
    std::vector<bool> next(gd.size(), false);
    any = false;
    for (int u = 0; u < gd.size(); ++u) {
      if (!frontier[u]) continue;
      for (int v : gd.succ(u))
        if (down[v] == letters[i]) next[v] = any = true;
    }
    frontier = std::move(next);
  }
  return any;
}

}  // namespace svdyn

#endif  // SVDYN_TOWER_HPP_
