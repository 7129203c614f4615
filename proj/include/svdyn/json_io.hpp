// json_io.hpp
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
// JSON formats:
//   graph      {"vertices": ["a","b"], "edges": [[0,1],[1,0]]}
//   hom        {"source": <graph>, "target": <graph>, "map": [0,0]}
//   automaton  {"graph": <graph>, "alphabet": ["0","1"], "labels": ["0","1"]}
//   sft        {"alphabet": ["0","1"], "M": 2, "forbidden": ["11"]}
//   tower      {"levels": [<graph>...], "bonds": [{"map": [0,...]}...]}
//   map        {"domain": [...], "branches": [...], "points": [...]}
//   pseudo-orbit {"delta": "1/64", "points": ["1", "127/64", ...]}
//   partition  {"cells": [<interval set>, ...]}
// Rationals are "p/q" strings (plain "p" for integers); decimals like
// "0.25" are converted exactly on input. Intervals are [lo, hi] pairs
// (closed) or {"lo","hi","lo_closed","hi_closed"} objects.

#ifndef SVDYN_JSON_IO_HPP_
#define SVDYN_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "svdyn/piecewise_map.hpp"

namespace svdyn {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

namespace detail {
inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw input_error("expected a rational as \"p/q\" string or integer");
}
inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw input_error(std::string("missing field '") + name + "'");
  return j.at(name);
}
}  // namespace detail

// ---- graphs ----

inline Graph graph_from_json(const Json& j) {
  const Json& vs = detail::field(j, "vertices");
  const Json& es = detail::field(j, "edges");
  if (!vs.is_array() || !es.is_array())
    throw input_error("graph fields 'vertices'/'edges' must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vs) {
    if (!v.is_string()) throw input_error("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("edges must be [i, j] index pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(std::move(names), edges);
}

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.names();
  Json es = Json::array();
  for (const auto& [u, v] : g.edges()) es.push_back(Json::array({u, v}));
  j["edges"] = std::move(es);
  return j;
}

inline std::string graph_to_dot(const Graph& g) {
  auto escape = [](const std::string& s) {
    std::string e;
    for (char c : s) {
      if (c == '"' || c == '\\') e += '\\';
      e += c;
    }
    return e;
  };
  std::string out = "digraph {\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + escape(g.name(v)) +
           "\"];\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline GraphHom hom_from_json(const Json& j) {
  Graph src = graph_from_json(detail::field(j, "source"));
  Graph tgt = graph_from_json(detail::field(j, "target"));
  const Json& m = detail::field(j, "map");
  if (!m.is_array()) throw input_error("'map' must be an array of indices");
  std::vector<int> map;
  for (const auto& t : m) {
    if (!t.is_number_integer()) throw input_error("'map' entries must be integers");
    map.push_back(t.get<int>());
  }
  return GraphHom(std::move(src), std::move(tgt), std::move(map));
}

inline VertexSet vertex_set_from_json(const Json& j, const Graph& g) {
  if (!j.is_array()) throw input_error("vertex set must be an array");
  std::vector<int> vs;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      vs.push_back(v.get<int>());
    } else if (v.is_string()) {
      const std::string name = v.get<std::string>();
      int found = -1;
      for (int i = 0; i < g.size(); ++i)
        if (g.name(i) == name) {
          found = i;
          break;
        }
      if (found < 0) throw input_error("unknown vertex name '" + name + "'");
      vs.push_back(found);
    } else {
      throw input_error("vertex set entries must be indices or names");
    }
  }
  VertexSet s = VertexSet::of(std::move(vs));
  require_carrier(g, s);
  return s;
}

inline Json vertex_set_to_json(const VertexSet& s, const Graph& g) {
  Json out = Json::array();
  for (int v : s.items()) out.push_back(g.name(v));
  return out;
}

// ---- automata and SFTs ----

inline LabeledAutomaton automaton_from_json(const Json& j) {
  Graph g = graph_from_json(detail::field(j, "graph"));
  const Json& as = detail::field(j, "alphabet");
  if (!as.is_array()) throw input_error("'alphabet' must be an array");
  std::vector<std::string> syms;
  for (const auto& s : as) {
    if (!s.is_string()) throw input_error("alphabet symbols must be strings");
    syms.push_back(s.get<std::string>());
  }
  Alphabet alpha(std::move(syms));
  const Json& ls = detail::field(j, "labels");
  if (!ls.is_array() || ls.size() != static_cast<size_t>(g.size()))
    throw input_error("'labels' must assign one symbol per vertex");
  std::vector<int> label;
  for (const auto& l : ls) {
    if (!l.is_string()) throw input_error("labels must be symbol strings");
    label.push_back(alpha.index_of(l.get<std::string>()));
  }
  return LabeledAutomaton(std::move(g), std::move(alpha), std::move(label));
}

inline Json automaton_to_json(const LabeledAutomaton& a) {
  Json j;
  j["graph"] = graph_to_json(a.graph);
  j["alphabet"] = a.alphabet.symbols;
  Json ls = Json::array();
  for (int v = 0; v < a.graph.size(); ++v) ls.push_back(a.label_of(v));
  j["labels"] = std::move(ls);
  return j;
}

inline std::vector<int> word_from_json(const Json& j, const Alphabet& a) {
  std::vector<int> w;
  if (j.is_string()) {
    // a plain string splits into single characters
    for (char c : j.get<std::string>()) w.push_back(a.index_of(std::string(1, c)));
    return w;
  }
  if (j.is_array()) {
    for (const auto& s : j) {
      if (!s.is_string()) throw input_error("word letters must be symbol strings");
      w.push_back(a.index_of(s.get<std::string>()));
    }
    return w;
  }
  throw input_error("words must be strings or symbol arrays");
}

inline ForbiddenWordSFT sft_from_json(const Json& j) {
  const Json& as = detail::field(j, "alphabet");
  std::vector<std::string> syms;
  for (const auto& s : as) syms.push_back(s.get<std::string>());
  Alphabet alpha(std::move(syms));
  const Json& mj = detail::field(j, "M");
  if (!mj.is_number_integer()) throw input_error("'M' must be an integer");
  int M = mj.get<int>();
  std::set<std::vector<int>> forb;
  for (const auto& w : detail::field(j, "forbidden"))
    forb.insert(word_from_json(w, alpha));
  return ForbiddenWordSFT(std::move(alpha), M, std::move(forb));
}

// ---- towers ----

inline Tower tower_from_json(const Json& j) {
  std::vector<Graph> levels;
  for (const auto& l : detail::field(j, "levels"))
    levels.push_back(graph_from_json(l));
  std::vector<std::vector<int>> bonds;
  for (const auto& b : detail::field(j, "bonds")) {
    const Json& m = detail::field(b, "map");
    std::vector<int> map;
    for (const auto& t : m) map.push_back(t.get<int>());
    bonds.push_back(std::move(map));
  }
  return Tower(std::move(levels), std::move(bonds));
}

inline Json tower_to_json(const Tower& t) {
  Json j;
  Json ls = Json::array();
  for (const auto& g : t.levels()) ls.push_back(graph_to_json(g));
  j["levels"] = std::move(ls);
  Json bs = Json::array();
  for (int i = 0; i + 1 < t.depth(); ++i) {
    Json b;
    b["map"] = t.bond_map(i);
    bs.push_back(std::move(b));
  }
  j["bonds"] = std::move(bs);
  return j;
}

// ---- interval sets, maps, partitions, pseudo-orbits ----

inline RatInterval interval_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw input_error("interval arrays must be [lo, hi]");
    return RatInterval(detail::rat_from_json(j[0]), detail::rat_from_json(j[1]));
  }
  if (j.is_object()) {
    RatInterval r(detail::rat_from_json(detail::field(j, "lo")),
                  detail::rat_from_json(detail::field(j, "hi")));
    if (j.contains("lo_closed")) r.lo_closed = j.at("lo_closed").get<bool>();
    if (j.contains("hi_closed")) r.hi_closed = j.at("hi_closed").get<bool>();
    return r;
  }
  throw input_error("intervals must be [lo,hi] or {lo,hi,lo_closed,hi_closed}");
}

inline IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("interval set must be an array");
  std::vector<RatInterval> ps;
  for (const auto& p : j) ps.push_back(interval_from_json(p));
  return IntervalSet::of(std::move(ps));
}

inline Json interval_set_to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& p : s.pieces()) {
    if (p.lo_closed && p.hi_closed) {
      out.push_back(Json::array({rat_str(p.lo), rat_str(p.hi)}));
    } else {
      Json o;
      o["lo"] = rat_str(p.lo);
      o["hi"] = rat_str(p.hi);
      o["lo_closed"] = p.lo_closed;
      o["hi_closed"] = p.hi_closed;
      out.push_back(std::move(o));
    }
  }
  return out;
}

inline PiecewiseSetMap map_from_json(const Json& j) {
  IntervalSet dom = interval_set_from_json(detail::field(j, "domain"));
  std::vector<AffineBranch> branches;
  for (const auto& b : detail::field(j, "branches")) {
    AffineBranch br;
    br.piece = interval_from_json(detail::field(b, "piece"));
    br.alpha = detail::rat_from_json(detail::field(b, "alpha"));
    br.beta = detail::rat_from_json(detail::field(b, "beta"));
    branches.push_back(std::move(br));
  }
  std::vector<ExceptionalPoint> points;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      ExceptionalPoint ep;
      ep.x = detail::rat_from_json(detail::field(p, "x"));
      for (const auto& v : detail::field(p, "values"))
        ep.values.push_back(detail::rat_from_json(v));
      points.push_back(std::move(ep));
    }
  }
  PiecewiseSetMap f(std::move(dom), std::move(branches), std::move(points));
  if (j.contains("graph_closed")) {
    bool asserted = j.at("graph_closed").get<bool>();
    if (asserted && !f.graph_closed())
      throw input_error("graph_closed asserted but a boundary limit escapes "
                        "the assigned value set");
  }
  return f;
}

inline Json map_to_json(const PiecewiseSetMap& f) {
  Json j;
  j["domain"] = interval_set_to_json(f.domain());
  Json bs = Json::array();
  for (const auto& b : f.branches()) {
    Json o;
    Json piece;
    piece["lo"] = rat_str(b.piece.lo);
    piece["hi"] = rat_str(b.piece.hi);
    piece["lo_closed"] = b.piece.lo_closed;
    piece["hi_closed"] = b.piece.hi_closed;
    o["piece"] = std::move(piece);
    o["alpha"] = rat_str(b.alpha);
    o["beta"] = rat_str(b.beta);
    bs.push_back(std::move(o));
  }
  j["branches"] = std::move(bs);
  Json ps = Json::array();
  for (const auto& p : f.exceptional_points()) {
    Json o;
    o["x"] = rat_str(p.x);
    Json vs = Json::array();
    for (const auto& v : p.values) vs.push_back(rat_str(v));
    o["values"] = std::move(vs);
    ps.push_back(std::move(o));
  }
  j["points"] = std::move(ps);
  j["graph_closed"] = f.graph_closed();
  return j;
}

inline PseudoOrbit pseudo_orbit_from_json(const Json& j) {
  Rat delta = detail::rat_from_json(detail::field(j, "delta"));
  std::vector<Rat> pts;
  for (const auto& p : detail::field(j, "points"))
    pts.push_back(detail::rat_from_json(p));
  return PseudoOrbit(std::move(pts), std::move(delta));
}

inline Json pseudo_orbit_to_json(const PseudoOrbit& po) {
  Json j;
  j["delta"] = rat_str(po.delta);
  Json ps = Json::array();
  for (const auto& p : po.points) ps.push_back(rat_str(p));
  j["points"] = std::move(ps);
  return j;
}

inline Partition partition_from_json(const Json& j, const IntervalSet& domain) {
  std::vector<IntervalSet> cells;
  for (const auto& c : detail::field(j, "cells"))
    cells.push_back(interval_set_from_json(c));
  return Partition(std::move(cells), domain);
}

inline Json partition_to_json(const Partition& p) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : p.cells()) cs.push_back(interval_set_to_json(c));
  j["cells"] = std::move(cs);
  return j;
}

// ---- reports ----

inline Json ml_report_to_json(const MLReport& r, const Graph& level_graph) {
  Json j;
  j["level"] = r.level;
  j["depth"] = r.depth;
  Json chain = Json::array();
  for (const auto& s : r.chain) chain.push_back(vertex_set_to_json(s, level_graph));
  j["chain"] = std::move(chain);
  j["witnessed_at"] = r.witnessed_at;
  j["stable_image"] = vertex_set_to_json(r.stable_image, level_graph);
  return j;
}

inline Json shadowing_report_to_json(const ShadowingReport& r) {
  Json j;
  j["level"] = r.level;
  j["depth"] = r.depth;
  j["margin"] = r.margin_requested;
  j["exact"] = r.exact;
  Json chain = Json::array();
  for (const auto& [m, states] : r.chain_summary) {
    Json e;
    e["m"] = m;
    e["dfa_states"] = states;
    chain.push_back(std::move(e));
  }
  j["chain"] = std::move(chain);
  Json st;
  if (r.status.kind == ShadowingStatus::Kind::Witnessed) {
    st["kind"] = "witnessed";
    st["m"] = r.status.m;
    st["margin"] = r.status.margin;
  } else {
    st["kind"] = "undetermined";
    st["last_strict_decrease"] = r.status.last_strict_decrease;
  }
  j["status"] = std::move(st);
  if (r.stabilized_shift)
    j["stabilized_shift"] = automaton_to_json(*r.stabilized_shift);
  else
    j["stabilized_shift"] = nullptr;
  return j;
}

}  // namespace svdyn

#endif  // SVDYN_JSON_IO_HPP_
