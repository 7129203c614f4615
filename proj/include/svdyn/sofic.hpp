// sofic.hpp
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
// One-sided shift spaces over finite alphabets, presented by vertex-labeled
// automata. The language of an automaton is the set of label sequences of
// infinite forward walks starting at ANY vertex; a finite word is allowed
// iff it labels a finite walk (extendability is free because graphs are
// total). Word languages here are factorial and extendable.

#ifndef SVDYN_SOFIC_HPP_
#define SVDYN_SOFIC_HPP_

#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/graph.hpp"

namespace svdyn {

/// Cap on determinization / word-enumeration state counts, overridable via
/// the SVDYN_MAX_STATES environment variable.
inline size_t max_states() {
  if (const char* s = std::getenv("SVDYN_MAX_STATES")) {
    long long v = std::atoll(s);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 1000000;
}

struct Alphabet {
  std::vector<std::string> symbols;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> syms) : symbols(std::move(syms)) {
    if (symbols.empty()) throw input_error("alphabet must be nonempty");
    std::set<std::string> seen(symbols.begin(), symbols.end());
    if (seen.size() != symbols.size())
      throw input_error("alphabet has duplicate symbols");
  }

  int size() const { return static_cast<int>(symbols.size()); }
  int index_of(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (symbols[i] == s) return i;
    throw input_error("symbol '" + s + "' is not in the alphabet");
  }
  bool operator==(const Alphabet& o) const { return symbols == o.symbols; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }
};

/// A total graph with one alphabet symbol per vertex.
struct LabeledAutomaton {
  Graph graph;
  Alphabet alphabet;
  std::vector<int> label;  // vertex -> symbol index

  LabeledAutomaton(Graph g, Alphabet a, std::vector<int> lab)
      : graph(std::move(g)), alphabet(std::move(a)), label(std::move(lab)) {
    if (static_cast<int>(label.size()) != graph.size())
      throw input_error("labeling is not total");
    for (int s : label)
      if (s < 0 || s >= alphabet.size())
        throw input_error("label out of alphabet range");
  }

  const std::string& label_of(int v) const { return alphabet.symbols[label[v]]; }
};

/// Deterministic acceptor of a factorial word language: partial transitions,
/// every state accepting. States are 0..n-1, `initial` reads the first
/// symbol of a word.
struct WordDFA {
  Alphabet alphabet;
  int initial = 0;
  std::vector<std::vector<int>> trans;  // state x symbol -> state or -1

  int num_states() const { return static_cast<int>(trans.size()); }
};

/// The vertex shift of g: labels are the vertex identities.
inline LabeledAutomaton vertex_shift(const Graph& g) {
  std::set<std::string> seen(g.names().begin(), g.names().end());
  if (static_cast<int>(seen.size()) != g.size())
    throw input_error("vertex shift needs distinct vertex names");
  std::vector<int> lab(g.size());
  Alphabet a(g.names());
  for (int v = 0; v < g.size(); ++v) lab[v] = v;
  return LabeledAutomaton(g, std::move(a), std::move(lab));
}

/// Letterwise relabeling: symbol i of a.alphabet becomes target symbol
/// symbol_map[i]. The language becomes the image of a's language.
inline LabeledAutomaton relabel(const LabeledAutomaton& a,
                                const std::vector<int>& symbol_map,
                                Alphabet target) {
  if (static_cast<int>(symbol_map.size()) != a.alphabet.size())
    throw input_error("symbol map is not total on the alphabet");
  for (int t : symbol_map)
    if (t < 0 || t >= target.size())
      throw input_error("symbol map image out of range");
  std::vector<int> lab(a.graph.size());
  for (int v = 0; v < a.graph.size(); ++v) lab[v] = symbol_map[a.label[v]];
  return LabeledAutomaton(a.graph, std::move(target), std::move(lab));
}

inline LabeledAutomaton relabel(const LabeledAutomaton& a,
                                const std::map<std::string, std::string>& f) {
  std::vector<std::string> image;
  std::vector<int> symbol_map(a.alphabet.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < a.alphabet.size(); ++i) {
    auto it = f.find(a.alphabet.symbols[i]);
    if (it == f.end())
      throw input_error("symbol map missing '" + a.alphabet.symbols[i] + "'");
    auto [pos, inserted] = idx.emplace(it->second, static_cast<int>(image.size()));
    if (inserted) image.push_back(it->second);
    symbol_map[i] = pos->second;
  }
  return relabel(a, symbol_map, Alphabet(image));
}

/// Allowed words of length n, as sequences of symbol indices.
inline std::set<std::vector<int>> words(const LabeledAutomaton& a, int n) {
  if (n < 0) throw input_error("word length must be nonnegative");
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  // frontier of walk end-vertices per distinct label prefix
  std::map<std::vector<int>, std::vector<bool>> frontier;
  for (int v = 0; v < a.graph.size(); ++v) {
    auto& mask = frontier[{a.label[v]}];
    if (mask.empty()) mask.assign(a.graph.size(), false);
    mask[v] = true;
  }
  for (int step = 1; step < n; ++step) {
    std::map<std::vector<int>, std::vector<bool>> next;
    for (const auto& [w, mask] : frontier) {
      if (next.size() > max_states())
        throw input_error("word enumeration exceeds SVDYN_MAX_STATES");
      for (int u = 0; u < a.graph.size(); ++u) {
        if (!mask[u]) continue;
        for (int v : a.graph.succ(u)) {
          std::vector<int> w2 = w;
          w2.push_back(a.label[v]);
          auto& m2 = next[std::move(w2)];
          if (m2.empty()) m2.assign(a.graph.size(), false);
          m2[v] = true;
        }
      }
    }
    frontier = std::move(next);
  }
  for (auto& [w, mask] : frontier) out.insert(w);
  return out;
}

inline std::set<std::string> words_str(const LabeledAutomaton& a, int n,
                                       const std::string& sep = "") {
  std::set<std::string> out;
  for (const auto& w : words(a, n)) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && !sep.empty()) s += sep;
      s += a.alphabet.symbols[w[i]];
    }
    out.insert(s);
  }
  return out;
}

namespace detail {

/// Subset construction. State 0 is the pre-initial state (no symbol read);
/// from there, reading s lands on all vertices labeled s. The empty subset
/// is represented by a missing transition.
inline WordDFA determinize(const LabeledAutomaton& a) {
  const int k = a.alphabet.size();
  WordDFA d;
  d.alphabet = a.alphabet;
  d.initial = 0;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  d.trans.push_back(std::vector<int>(k, -1));

  auto intern = [&](std::vector<int> subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(d.trans.size());
    if (static_cast<size_t>(id) > max_states())
      throw input_error("determinization exceeds SVDYN_MAX_STATES");
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    d.trans.push_back(std::vector<int>(k, -1));
    return id;
  };

  std::queue<int> work;
  for (int s = 0; s < k; ++s) {
    std::vector<int> init;
    for (int v = 0; v < a.graph.size(); ++v)
      if (a.label[v] == s) init.push_back(v);
    if (init.empty()) continue;
    bool fresh = !ids.count(init);
    int id = intern(std::move(init));
    d.trans[0][s] = id;
    if (fresh) work.push(id);
  }
  while (!work.empty()) {
    int q = work.front();
    work.pop();
    const std::vector<int> subset = subsets[q - 1];
    for (int s = 0; s < k; ++s) {
      std::vector<int> next;
      for (int u : subset)
        for (int v : a.graph.succ(u))
          if (a.label[v] == s) next.push_back(v);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) continue;
      bool fresh = !ids.count(next);
      int id = intern(std::move(next));
      d.trans[q][s] = id;
      if (fresh) work.push(id);
    }
  }
  return d;
}

/// Moore partition refinement on a partial all-accepting DFA, then a BFS
/// renumbering from the initial state so equal languages give identical
/// tables.
inline WordDFA minimize(const WordDFA& d) {
  const int n = d.num_states();
  const int k = d.alphabet.size();
  std::vector<int> block(n, 0);
  int blocks = 1;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_block(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (int s = 0; s < k; ++s)
        sig.push_back(d.trans[q][s] < 0 ? -1 : block[d.trans[q][s]]);
      auto [it, ins] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next_block[q] = it->second;
    }
    int nb = static_cast<int>(sig_ids.size());
    block = std::move(next_block);
    if (nb == blocks) break;
    blocks = nb;
  }
  // representative transition table over blocks
  std::vector<std::vector<int>> btrans(blocks, std::vector<int>(k, -1));
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < k; ++s)
      btrans[block[q]][s] = d.trans[q][s] < 0 ? -1 : block[d.trans[q][s]];
  // canonical BFS order from the initial block
  std::vector<int> order(blocks, -1);
  std::vector<int> bfs;
  auto visit = [&](int b) {
    if (order[b] < 0) {
      order[b] = static_cast<int>(bfs.size());
      bfs.push_back(b);
    }
  };
  visit(block[d.initial]);
  for (size_t i = 0; i < bfs.size(); ++i)
    for (int s = 0; s < k; ++s)
      if (btrans[bfs[i]][s] >= 0) visit(btrans[bfs[i]][s]);
  WordDFA m;
  m.alphabet = d.alphabet;
  m.initial = 0;
  m.trans.assign(bfs.size(), std::vector<int>(k, -1));
  for (size_t i = 0; i < bfs.size(); ++i)
    for (int s = 0; s < k; ++s) {
      int t = btrans[bfs[i]][s];
      m.trans[i][s] = t < 0 ? -1 : order[t];
    }
  return m;
}

}  // namespace detail

/// Minimal partial DFA of the allowed-word language, all states accepting.
inline WordDFA allowed_words_dfa(const LabeledAutomaton& a) {
  // graphs are total, so every vertex already has an infinite forward walk;
  // the defensive trim would only matter for non-total carriers
  if (a.graph.size() == 0) throw input_error("empty shift");
  return detail::minimize(detail::determinize(a));
}

inline bool language_equal(const LabeledAutomaton& a, const LabeledAutomaton& b) {
  if (a.alphabet != b.alphabet)
    throw input_error("language comparison needs identical alphabets");
  WordDFA da = allowed_words_dfa(a);
  WordDFA db = allowed_words_dfa(b);
  return da.trans == db.trans;
}

/// L(a) subset of L(b): product walk looking for a word allowed in a but
/// not in b.
inline bool language_subset(const LabeledAutomaton& a, const LabeledAutomaton& b) {
  if (a.alphabet != b.alphabet)
    throw input_error("language comparison needs identical alphabets");
  WordDFA da = detail::determinize(a);
  WordDFA db = detail::determinize(b);
  const int k = da.alphabet.size();
  std::set<std::pair<int, int>> seen;
  std::queue<std::pair<int, int>> work;
  work.emplace(da.initial, db.initial);
  seen.insert({da.initial, db.initial});
  while (!work.empty()) {
    auto [qa, qb] = work.front();
    work.pop();
    for (int s = 0; s < k; ++s) {
      int na = da.trans[qa][s];
      int nb = db.trans[qb][s];
      if (na < 0) continue;
      if (nb < 0) return false;
      if (seen.insert({na, nb}).second) work.emplace(na, nb);
    }
  }
  return true;
}

/// A subshift given by forbidding all words of one fixed length M.
struct ForbiddenWordSFT {
  Alphabet alphabet;
  int M = 2;
  std::set<std::vector<int>> forbidden;  // each of length exactly M

  ForbiddenWordSFT(Alphabet a, int m, std::set<std::vector<int>> f)
      : alphabet(std::move(a)), M(m), forbidden(std::move(f)) {
    if (M < 1) throw input_error("forbidden word length must be positive");
    for (const auto& w : forbidden) {
      if (static_cast<int>(w.size()) != M)
        throw input_error("forbidden word of wrong length");
      for (int s : w)
        if (s < 0 || s >= alphabet.size())
          throw input_error("forbidden word symbol out of range");
    }
  }
};

/// 1-step recoding of an M-step SFT: vertices are the allowed M-words that
/// extend forward forever, edges are (M-1)-letter overlaps, and the decoder
/// reads off the first letter of each vertex.
struct RecodedSFT {
  Graph graph;
  Alphabet alphabet;
  std::vector<int> first_symbol;  // vertex -> symbol index (the decoder)
  std::vector<std::vector<int>> vertex_words;

  LabeledAutomaton as_automaton() const {
    return LabeledAutomaton(graph, alphabet, first_symbol);
  }
};

inline RecodedSFT recode_to_1step(const ForbiddenWordSFT& s) {
  if (s.M < 2) throw input_error("recoding needs word length M >= 2");
  const int k = s.alphabet.size();
  // enumerate allowed M-words
  std::vector<std::vector<int>> ws;
  std::vector<int> cur(s.M, 0);
  size_t total = 1;
  for (int i = 0; i < s.M; ++i) {
    total *= static_cast<size_t>(k);
    if (total > max_states())
      throw input_error("M-word enumeration exceeds SVDYN_MAX_STATES");
  }
  for (;;) {
    if (!s.forbidden.count(cur)) ws.push_back(cur);
    int i = s.M - 1;
    while (i >= 0 && cur[i] == k - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  // iteratively drop words with no forward extension
  std::vector<bool> alive(ws.size(), true);
  auto overlap_edge = [&](const std::vector<int>& u, const std::vector<int>& v) {
    for (int i = 1; i < s.M; ++i)
      if (u[i] != v[i - 1]) return false;
    // the merged (M+1)-word's only M-factors are u and v, both allowed
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < ws.size(); ++i) {
      if (!alive[i]) continue;
      bool has_succ = false;
      for (size_t j = 0; j < ws.size() && !has_succ; ++j)
        if (alive[j] && overlap_edge(ws[i], ws[j])) has_succ = true;
      if (!has_succ) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<std::vector<int>> verts;
  for (size_t i = 0; i < ws.size(); ++i)
    if (alive[i]) verts.push_back(ws[i]);
  if (verts.empty()) throw input_error("empty shift");

  bool single_char = true;
  for (const auto& sym : s.alphabet.symbols)
    if (sym.size() != 1) single_char = false;
  auto word_name = [&](const std::vector<int>& w) {
    std::string n;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && !single_char) n += ".";
      n += s.alphabet.symbols[w[i]];
    }
    return n;
  };
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (const auto& w : verts) names.push_back(word_name(w));
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (overlap_edge(verts[i], verts[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  RecodedSFT r{Graph(std::move(names), edges), s.alphabet, {}, verts};
  r.first_symbol.reserve(verts.size());
  for (const auto& w : verts) r.first_symbol.push_back(w[0]);
  return r;
}

/// True iff a's language is determined by its allowed (k+1)-words.
inline bool is_k_step_sft(const LabeledAutomaton& a, int k) {
  if (k < 1) throw input_error("step count must be >= 1");
  auto allowed = words(a, k + 1);
  // forbid the complement of the allowed (k+1)-words
  std::set<std::vector<int>> forb;
  std::vector<int> cur(k + 1, 0);
  const int kk = a.alphabet.size();
  size_t total = 1;
  for (int i = 0; i <= k; ++i) {
    total *= static_cast<size_t>(kk);
    if (total > max_states())
      throw input_error("window enumeration exceeds SVDYN_MAX_STATES");
  }
  for (;;) {
    if (!allowed.count(cur)) forb.insert(cur);
    int i = k;
    while (i >= 0 && cur[i] == kk - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  ForbiddenWordSFT sft(a.alphabet, k + 1, std::move(forb));
  RecodedSFT rec = recode_to_1step(sft);
  return language_equal(a, rec.as_automaton());
}

}  // namespace svdyn

#endif  // SVDYN_SOFIC_HPP_
