// graph.hpp
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
// Finite directed graphs read as set-valued maps of finite type:
// F(u) = set of out-neighbors of u. Every vertex must have at least one
// successor (totality), so every finite walk extends forward to infinity.

#ifndef SVDYN_GRAPH_HPP_
#define SVDYN_GRAPH_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/rational.hpp"

namespace svdyn {

/// Sorted set of vertex indices of some carrier graph.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet of(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    VertexSet s;
    s.vs_ = std::move(vs);
    return s;
  }
  static VertexSet full(int n) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    VertexSet s;
    s.vs_ = std::move(vs);
    return s;
  }

  const std::vector<int>& items() const { return vs_; }
  bool empty() const { return vs_.empty(); }
  size_t size() const { return vs_.size(); }
  bool contains(int v) const {
    return std::binary_search(vs_.begin(), vs_.end(), v);
  }

  bool operator==(const VertexSet& o) const { return vs_ == o.vs_; }
  bool operator!=(const VertexSet& o) const { return vs_ != o.vs_; }
  bool operator<(const VertexSet& o) const { return vs_ < o.vs_; }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.vs_.begin(), a.vs_.end(), b.vs_.begin(), b.vs_.end(),
                   std::back_inserter(r.vs_));
    return r;
  }
  friend VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.vs_.begin(), a.vs_.end(), b.vs_.begin(),
                          b.vs_.end(), std::back_inserter(r.vs_));
    return r;
  }
  friend bool set_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.vs_.begin(), b.vs_.end(), a.vs_.begin(), a.vs_.end());
  }
  friend bool sets_meet(const VertexSet& a, const VertexSet& b) {
    auto i = a.vs_.begin();
    auto j = b.vs_.begin();
    while (i != a.vs_.end() && j != b.vs_.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else return true;
    }
    return false;
  }

 private:
  std::vector<int> vs_;
};

class Graph {
 public:
  Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
      : names_(std::move(names)) {
    const int n = static_cast<int>(names_.size());
    if (n == 0) throw input_error("graph must have at least one vertex");
    succ_.resize(n);
    pred_.resize(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw input_error("edge endpoint out of range");
      succ_[u].push_back(v);
      pred_[v].push_back(u);
    }
    for (auto& s : succ_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    for (auto& p : pred_) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    for (int u = 0; u < n; ++u)
      if (succ_[u].empty())
        throw input_error("graph is not total: vertex '" + names_[u] +
                          "' has no outgoing edge");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    return Graph(std::move(names), edges);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<int>& succ(int u) const { return succ_.at(u); }
  const std::vector<int>& pred(int v) const { return pred_.at(v); }

  bool has_edge(int u, int v) const {
    const auto& s = succ_.at(u);
    return std::binary_search(s.begin(), s.end(), v);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < size(); ++u)
      for (int v : succ_[u]) es.emplace_back(u, v);
    return es;
  }
  size_t edge_count() const {
    size_t c = 0;
    for (const auto& s : succ_) c += s.size();
    return c;
  }

  bool operator==(const Graph& o) const {
    return names_ == o.names_ && succ_ == o.succ_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
};

inline void require_carrier(const Graph& g, const VertexSet& a) {
  if (!a.empty() && (a.items().front() < 0 || a.items().back() >= g.size()))
    throw input_error("vertex set is not a subset of the graph's vertices");
}

/// F(u): the set of successors of u. Nonempty by totality.
inline VertexSet image(const Graph& g, int u) {
  if (u < 0 || u >= g.size()) throw input_error("unknown vertex");
  return VertexSet::of(g.succ(u));
}

inline VertexSet image_of_set(const Graph& g, const VertexSet& a) {
  require_carrier(g, a);
  std::vector<int> out;
  for (int u : a.items())
    out.insert(out.end(), g.succ(u).begin(), g.succ(u).end());
  return VertexSet::of(std::move(out));
}

/// F^{-1}(A) = { u : F(u) meets A }.
inline VertexSet preimage(const Graph& g, const VertexSet& a) {
  require_carrier(g, a);
  std::vector<int> out;
  for (int v : a.items())
    out.insert(out.end(), g.pred(v).begin(), g.pred(v).end());
  return VertexSet::of(std::move(out));
}

struct HomFlags {
  bool homomorphism = false;
  bool edge_surjective = false;
  bool plus_directional = false;
  bool cover = false;  // all three of the above
};

/// Vertex map between graphs; homomorphism when it sends edges to edges.
struct GraphHom {
  Graph source;
  Graph target;
  std::vector<int> map;

  GraphHom(Graph src, Graph tgt, std::vector<int> m)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source.size())
      throw input_error("vertex map is not total on the source");
    for (int v : map)
      if (v < 0 || v >= target.size())
        throw input_error("vertex map image out of range");
  }

  static GraphHom identity(const Graph& g) {
    std::vector<int> m(g.size());
    for (int i = 0; i < g.size(); ++i) m[i] = i;
    return GraphHom(g, g, std::move(m));
  }

  int operator()(int v) const { return map.at(v); }
};

inline HomFlags check_hom(const Graph& src, const Graph& tgt,
                          const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != src.size())
    throw input_error("vertex map is not total on the source");
  for (int v : map)
    if (v < 0 || v >= tgt.size())
      throw input_error("vertex map image out of range");
  HomFlags f;
  f.homomorphism = true;
  f.plus_directional = true;
  std::vector<std::pair<int, int>> image_edges;
  for (int u = 0; u < src.size(); ++u) {
    const auto& s = src.succ(u);
    for (size_t i = 0; i < s.size(); ++i) {
      if (!tgt.has_edge(map[u], map[s[i]])) f.homomorphism = false;
      image_edges.emplace_back(map[u], map[s[i]]);
      if (map[s[i]] != map[s[0]]) f.plus_directional = false;
    }
  }
  std::sort(image_edges.begin(), image_edges.end());
  image_edges.erase(std::unique(image_edges.begin(), image_edges.end()),
                    image_edges.end());
  f.edge_surjective = (image_edges == tgt.edges());
  f.cover = f.homomorphism && f.edge_surjective && f.plus_directional;
  return f;
}

inline HomFlags check_hom(const GraphHom& h) {
  return check_hom(h.source, h.target, h.map);
}

/// h1 after h2 (h2 applied first); requires h2.target == h1.source.
inline GraphHom compose(const GraphHom& h1, const GraphHom& h2) {
  if (h2.target != h1.source)
    throw input_error("composition endpoints do not match");
  std::vector<int> m(h2.map.size());
  for (size_t v = 0; v < h2.map.size(); ++v) m[v] = h1.map[h2.map[v]];
  return GraphHom(h2.source, h1.target, std::move(m));
}

/// n-tuple orbital discriminant [A_0,...,A_n]: the vertices starting a walk
/// v_0...v_n with v_i in A_i, computed by backward inverse-image iteration.
inline VertexSet tuple_discriminant(const Graph& g,
                                    const std::vector<VertexSet>& pattern) {
  if (pattern.empty()) throw input_error("empty discriminant pattern");
  for (const auto& a : pattern) require_carrier(g, a);
  VertexSet s = pattern.back();
  for (size_t i = pattern.size() - 1; i-- > 0;)
    s = set_intersect(pattern[i], preimage(g, s));
  return s;
}

/// Vertices admitting an infinite walk whose constraint pattern is
/// `preamble` followed by `cycle` repeated forever. Greatest fixed point
/// over the cycle phases, then backward propagation through the preamble.
inline VertexSet periodic_discriminant(const Graph& g,
                                       const std::vector<VertexSet>& preamble,
                                       const std::vector<VertexSet>& cycle) {
  if (cycle.empty()) throw input_error("empty discriminant cycle");
  for (const auto& a : preamble) require_carrier(g, a);
  for (const auto& a : cycle) require_carrier(g, a);
  const size_t L = cycle.size();
  std::vector<VertexSet> t = cycle;
  for (;;) {
    std::vector<VertexSet> next(L);
    bool changed = false;
    for (size_t j = 0; j < L; ++j) {
      next[j] = set_intersect(cycle[j], preimage(g, t[(j + 1) % L]));
      if (next[j] != t[j]) changed = true;
    }
    t = std::move(next);
    if (!changed) break;
  }
  VertexSet s = t[0];
  for (size_t i = preamble.size(); i-- > 0;)
    s = set_intersect(preamble[i], preimage(g, s));
  return s;
}

}  // namespace svdyn

#endif  // SVDYN_GRAPH_HPP_
