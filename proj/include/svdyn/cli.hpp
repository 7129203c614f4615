// cli.hpp
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
// Batch front end. Exit codes: 0 ok/witnessed/true, 1 refuted/false,
// 2 undetermined, 3 input or usage error. Reports are deterministic JSON
// (default) or plain text via --format text.

#ifndef SVDYN_CLI_HPP_
#define SVDYN_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svdyn/json_io.hpp"

namespace svdyn::cli {

struct Report {
  std::string subcommand;
  std::string status;  // ok | refuted | undetermined | error
  Json payload = Json::object();
  std::string summary;

  int exit_code() const {
    if (status == "ok") return 0;
    if (status == "refuted") return 1;
    if (status == "undetermined") return 2;
    return 3;
  }
};

namespace detail {

inline Json inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return parse_json(arg);
  return load_json_file(arg);
}

inline PiecewiseSetMap load_map(const std::string& arg) {
  if (arg == "doubling_sv" || arg == "doubling_nonclosed" ||
      arg.rfind("cantor_ternary(", 0) == 0)
    return builtin_map(arg);
  return map_from_json(load_json_file(arg));
}

inline void write_dot(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << graph_to_dot(g);
  if (!out) throw input_error("failed writing '" + path + "'");
}

inline void write_bare(const Json& payload, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << payload.dump(2) << "\n";
  if (!out) throw input_error("failed writing '" + path + "'");
}

inline Partition load_partition(const PiecewiseSetMap& f,
                                const std::optional<std::string>& file,
                                std::optional<int> dyadic,
                                std::optional<int> cantor_depth) {
  int given = (file ? 1 : 0) + (dyadic ? 1 : 0) + (cantor_depth ? 1 : 0);
  if (given != 1)
    throw input_error(
        "give exactly one of --partition, --dyadic, --cantor-depth");
  if (file) return partition_from_json(inline_or_file(*file), f.domain());
  if (dyadic) return Partition::dyadic(f.domain(), *dyadic);
  return cantor_cylinders(f.domain(), *cantor_depth);
}

}  // namespace detail

/// Parses and runs one command; writes the report to `out`.
inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"set-valued symbolic dynamics toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "finite directed graphs");
  graph_cmd->require_subcommand(1);
  std::string g_path, g_dot;
  auto* g_check = graph_cmd->add_subcommand("check", "validate a graph file");
  g_check->add_option("graph", g_path)->required();
  g_check->add_option("--dot", g_dot, "write DOT to this path");
  auto* g_hom = graph_cmd->add_subcommand("hom", "check a vertex map");
  std::string h_path;
  g_hom->add_option("hom", h_path)->required();
  auto* g_disc = graph_cmd->add_subcommand("discriminant", "orbital discriminant");
  std::string gd_path, gd_pattern, gd_preamble, gd_cycle;
  g_disc->add_option("graph", gd_path)->required();
  g_disc->add_option("--pattern", gd_pattern, "array of vertex sets");
  g_disc->add_option("--preamble", gd_preamble, "array of vertex sets");
  g_disc->add_option("--cycle", gd_cycle, "array of vertex sets");

  // shift
  auto* shift_cmd = app.add_subcommand("shift", "sofic shifts");
  shift_cmd->require_subcommand(1);
  auto* s_equal = shift_cmd->add_subcommand("equal", "language equality");
  std::string sa_path, sb_path;
  s_equal->add_option("a", sa_path)->required();
  s_equal->add_option("b", sb_path)->required();
  auto* s_recode = shift_cmd->add_subcommand("recode", "1-step recoding of an SFT");
  std::string sr_path, sr_dot;
  s_recode->add_option("sft", sr_path)->required();
  s_recode->add_option("--dot", sr_dot);
  auto* s_issft = shift_cmd->add_subcommand("is-sft", "k-step SFT test");
  std::string si_path;
  int si_k = 1;
  s_issft->add_option("automaton", si_path)->required();
  s_issft->add_option("--k", si_k)->required();

  // tower
  auto* tower_cmd = app.add_subcommand("tower", "graph covers");
  tower_cmd->require_subcommand(1);
  auto* t_ml = tower_cmd->add_subcommand("ml", "vertex-level image chain");
  std::string tm_path;
  int tm_level = 0, tm_depth = 0;
  t_ml->add_option("tower", tm_path)->required();
  t_ml->add_option("--level", tm_level)->required();
  t_ml->add_option("--depth", tm_depth)->required();
  auto* t_sh = tower_cmd->add_subcommand("shadowing", "orbit-shift stabilization");
  std::string ts_path;
  int ts_level = 0, ts_depth = 0, ts_margin = 2;
  bool ts_all = false;
  t_sh->add_option("tower", ts_path)->required();
  t_sh->add_option("--level", ts_level);
  t_sh->add_option("--depth", ts_depth)->required();
  t_sh->add_option("--margin", ts_margin);
  t_sh->add_flag("--all-levels", ts_all);
  auto* t_from = tower_cmd->add_subcommand("from-shift", "higher-block tower");
  std::string tf_path, tf_out;
  int tf_depth = 1;
  t_from->add_option("shift", tf_path)->required();
  t_from->add_option("--depth", tf_depth)->required();
  t_from->add_option("--out", tf_out, "also write the bare tower JSON here");

  // map
  auto* map_cmd = app.add_subcommand("map", "piecewise-affine interval maps");
  map_cmd->require_subcommand(1);
  std::string m_path, m_x, m_set, m_pattern, m_po, m_eps, m_delta, m_dot;
  std::optional<std::string> m_partition;
  std::optional<int> m_dyadic, m_cantor;
  auto add_map_arg = [&](CLI::App* c) {
    c->add_option("map", m_path, "map JSON file or builtin name")->required();
  };
  auto* m_eval = map_cmd->add_subcommand("eval", "F(x)");
  add_map_arg(m_eval);
  m_eval->add_option("--x", m_x)->required();
  auto* m_image = map_cmd->add_subcommand("image", "F(S)");
  add_map_arg(m_image);
  m_image->add_option("--set", m_set)->required();
  auto* m_pre = map_cmd->add_subcommand("preimage", "F^{-1}(S)");
  add_map_arg(m_pre);
  m_pre->add_option("--set", m_set)->required();
  auto* m_disc = map_cmd->add_subcommand("discriminant", "orbital discriminant");
  add_map_arg(m_disc);
  m_disc->add_option("--pattern", m_pattern, "array of interval sets")->required();
  auto* m_pc = map_cmd->add_subcommand("pseudo-check", "delta-pseudo-orbit test");
  add_map_arg(m_pc);
  m_pc->add_option("orbit", m_po)->required();
  auto* m_ss = map_cmd->add_subcommand("shadow-search", "witness set and orbit");
  add_map_arg(m_ss);
  m_ss->add_option("orbit", m_po)->required();
  m_ss->add_option("--epsilon", m_eps)->required();
  auto* m_q = map_cmd->add_subcommand("quotient", "partition quotient graph");
  add_map_arg(m_q);
  m_q->add_option("--partition", m_partition);
  m_q->add_option("--dyadic", m_dyadic);
  m_q->add_option("--cantor-depth", m_cantor);
  m_q->add_option("--dot", m_dot);
  auto* m_snap = map_cmd->add_subcommand("snap", "snap to a partition");
  add_map_arg(m_snap);
  m_snap->add_option("--partition", m_partition);
  m_snap->add_option("--dyadic", m_dyadic);
  m_snap->add_option("--cantor-depth", m_cantor);
  auto* m_bc = map_cmd->add_subcommand("ball-criterion", "shadowing ball test");
  add_map_arg(m_bc);
  m_bc->add_option("--epsilon", m_eps)->required();
  m_bc->add_option("--delta", m_delta)->required();

  // example
  auto* ex_cmd = app.add_subcommand("example", "emit a builtin map");
  std::string ex_name, ex_out;
  std::optional<int> ex_depth;
  ex_cmd->add_option("name", ex_name)->required();
  ex_cmd->add_option("--depth", ex_depth, "depth for cantor_ternary");
  ex_cmd->add_option("--out", ex_out, "also write the bare map JSON here");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  Report rep;
  try {
    if (g_check->parsed()) {
      rep.subcommand = "graph check";
      Graph g = graph_from_json(load_json_file(g_path));
      if (!g_dot.empty()) detail::write_dot(g, g_dot);
      rep.status = "ok";
      rep.payload["graph"] = graph_to_json(g);
      rep.summary = "total graph with " + std::to_string(g.size()) +
                    " vertices and " + std::to_string(g.edge_count()) + " edges";
    } else if (g_hom->parsed()) {
      rep.subcommand = "graph hom";
      GraphHom h = hom_from_json(load_json_file(h_path));
      HomFlags f = check_hom(h);
      rep.status = f.homomorphism ? "ok" : "refuted";
      rep.payload["homomorphism"] = f.homomorphism;
      rep.payload["edge_surjective"] = f.edge_surjective;
      rep.payload["plus_directional"] = f.plus_directional;
      rep.payload["cover"] = f.cover;
      rep.summary = std::string("map is ") +
                    (f.homomorphism ? "" : "not ") + "a graph homomorphism";
    } else if (g_disc->parsed()) {
      rep.subcommand = "graph discriminant";
      Graph g = graph_from_json(load_json_file(gd_path));
      auto sets_of = [&](const std::string& arg) {
        std::vector<VertexSet> sets;
        for (const auto& s : detail::inline_or_file(arg))
          sets.push_back(vertex_set_from_json(s, g));
        return sets;
      };
      VertexSet result;
      if (!gd_cycle.empty() && !gd_pattern.empty())
        throw input_error("give either --pattern or --cycle, not both");
      if (!gd_cycle.empty()) {
        std::vector<VertexSet> preamble;
        if (!gd_preamble.empty()) preamble = sets_of(gd_preamble);
        result = periodic_discriminant(g, preamble, sets_of(gd_cycle));
      } else if (!gd_pattern.empty()) {
        result = tuple_discriminant(g, sets_of(gd_pattern));
      } else {
        throw input_error("give --pattern or --cycle");
      }
      rep.status = result.empty() ? "refuted" : "ok";
      rep.payload["discriminant"] = vertex_set_to_json(result, g);
      rep.summary = result.empty() ? "no walk matches the pattern"
                                   : std::to_string(result.size()) +
                                         " start vertices match the pattern";
    } else if (s_equal->parsed()) {
      rep.subcommand = "shift equal";
      LabeledAutomaton a = automaton_from_json(load_json_file(sa_path));
      LabeledAutomaton b = automaton_from_json(load_json_file(sb_path));
      bool eq = language_equal(a, b);
      rep.status = eq ? "ok" : "refuted";
      rep.payload["equal"] = eq;
      rep.summary = eq ? "languages are equal" : "languages differ";
    } else if (s_recode->parsed()) {
      rep.subcommand = "shift recode";
      RecodedSFT r = recode_to_1step(sft_from_json(load_json_file(sr_path)));
      if (!sr_dot.empty()) detail::write_dot(r.graph, sr_dot);
      rep.status = "ok";
      rep.payload["graph"] = graph_to_json(r.graph);
      Json dec = Json::array();
      for (size_t v = 0; v < r.first_symbol.size(); ++v)
        dec.push_back(r.alphabet.symbols[r.first_symbol[v]]);
      rep.payload["decoder"] = std::move(dec);
      rep.summary = "1-step recoding with " + std::to_string(r.graph.size()) +
                    " vertices";
    } else if (s_issft->parsed()) {
      rep.subcommand = "shift is-sft";
      LabeledAutomaton a = automaton_from_json(load_json_file(si_path));
      bool is = is_k_step_sft(a, si_k);
      rep.status = is ? "ok" : "refuted";
      rep.payload["k"] = si_k;
      rep.payload["is_k_step_sft"] = is;
      rep.summary = std::string("language is ") + (is ? "" : "not ") + "a " +
                    std::to_string(si_k) + "-step SFT";
    } else if (t_ml->parsed()) {
      rep.subcommand = "tower ml";
      Tower t = tower_from_json(load_json_file(tm_path));
      MLReport r = vertex_ml(t, tm_level, tm_depth);
      bool stabilized = r.witnessed_at < r.depth || r.chain.size() == 1;
      rep.status = stabilized ? "ok" : "undetermined";
      rep.payload = ml_report_to_json(r, t.level(tm_level));
      rep.summary = "vertex chain constant from m=" +
                    std::to_string(r.witnessed_at) + " through depth " +
                    std::to_string(r.depth);
    } else if (t_sh->parsed()) {
      rep.subcommand = "tower shadowing";
      Tower t = tower_from_json(load_json_file(ts_path));
      if (ts_all) {
        // levels above depth - margin cannot have a wide enough window
        bool all_witnessed = true;
        Json reports = Json::array();
        for (int n = 0; n <= ts_depth - ts_margin && n < t.depth(); ++n) {
          ShadowingReport r = shadowing_status(t, n, ts_depth, ts_margin);
          all_witnessed = all_witnessed &&
                          r.status.kind == ShadowingStatus::Kind::Witnessed;
          reports.push_back(shadowing_report_to_json(r));
        }
        rep.status = all_witnessed ? "ok" : "undetermined";
        rep.payload["reports"] = std::move(reports);
        rep.summary = all_witnessed ? "witnessed at every level"
                                    : "undetermined at some level";
      } else {
        ShadowingReport r = shadowing_status(t, ts_level, ts_depth, ts_margin);
        bool w = r.status.kind == ShadowingStatus::Kind::Witnessed;
        rep.status = w ? "ok" : "undetermined";
        rep.payload = shadowing_report_to_json(r);
        rep.summary = w ? "witnessed at m=" + std::to_string(r.status.m) +
                              " with margin " + std::to_string(r.status.margin)
                        : "undetermined; last strict decrease at m=" +
                              std::to_string(r.status.last_strict_decrease);
      }
    } else if (t_from->parsed()) {
      rep.subcommand = "tower from-shift";
      Json j = load_json_file(tf_path);
      Tower t = j.contains("forbidden")
                    ? subshift_tower(sft_from_json(j), tf_depth)
                    : subshift_tower(automaton_from_json(j), tf_depth);
      rep.status = "ok";
      rep.payload = tower_to_json(t);
      if (!tf_out.empty()) detail::write_bare(rep.payload, tf_out);
      rep.summary = "higher-block tower with " + std::to_string(t.depth()) +
                    " levels";
    } else if (m_eval->parsed()) {
      rep.subcommand = "map eval";
      PiecewiseSetMap f = detail::load_map(m_path);
      IntervalSet v = f.eval(parse_rat(m_x));
      rep.status = "ok";
      rep.payload["value"] = interval_set_to_json(v);
      rep.summary = "F(" + m_x + ") = " + v.str();
    } else if (m_image->parsed()) {
      rep.subcommand = "map image";
      PiecewiseSetMap f = detail::load_map(m_path);
      IntervalSet v =
          f.image_set(interval_set_from_json(detail::inline_or_file(m_set)));
      rep.status = "ok";
      rep.payload["value"] = interval_set_to_json(v);
      rep.summary = "image = " + v.str();
    } else if (m_pre->parsed()) {
      rep.subcommand = "map preimage";
      PiecewiseSetMap f = detail::load_map(m_path);
      IntervalSet v =
          f.preimage_set(interval_set_from_json(detail::inline_or_file(m_set)));
      rep.status = "ok";
      rep.payload["value"] = interval_set_to_json(v);
      rep.summary = "preimage = " + v.str();
    } else if (m_disc->parsed()) {
      rep.subcommand = "map discriminant";
      PiecewiseSetMap f = detail::load_map(m_path);
      std::vector<IntervalSet> pattern;
      for (const auto& s : detail::inline_or_file(m_pattern))
        pattern.push_back(interval_set_from_json(s));
      IntervalSet v = f.tuple_discriminant(pattern);
      rep.status = v.is_empty() ? "refuted" : "ok";
      rep.payload["discriminant"] = interval_set_to_json(v);
      rep.summary = v.is_empty() ? "no orbit passes through the pattern"
                                 : "discriminant = " + v.str();
    } else if (m_pc->parsed()) {
      rep.subcommand = "map pseudo-check";
      PiecewiseSetMap f = detail::load_map(m_path);
      PseudoOrbit po = pseudo_orbit_from_json(load_json_file(m_po));
      bool is = is_pseudo_orbit(f, po);
      rep.status = is ? "ok" : "refuted";
      rep.payload["is_pseudo_orbit"] = is;
      rep.summary = is ? "sequence is a delta-pseudo-orbit"
                       : "sequence is not a delta-pseudo-orbit";
    } else if (m_ss->parsed()) {
      rep.subcommand = "map shadow-search";
      PiecewiseSetMap f = detail::load_map(m_path);
      PseudoOrbit po = pseudo_orbit_from_json(load_json_file(m_po));
      ShadowSearchResult r = shadow_search(f, po, parse_rat(m_eps));
      rep.status = r.witness_set.is_empty() ? "refuted" : "ok";
      rep.payload["witness_set"] = interval_set_to_json(r.witness_set);
      if (r.orbit) {
        Json orb = Json::array();
        for (const auto& z : *r.orbit) orb.push_back(rat_str(z));
        rep.payload["orbit"] = std::move(orb);
      } else {
        rep.payload["orbit"] = nullptr;
      }
      rep.summary = r.witness_set.is_empty()
                        ? "no orbit shadows the pseudo-orbit at this epsilon"
                        : "witness set = " + r.witness_set.str();
    } else if (m_q->parsed()) {
      rep.subcommand = "map quotient";
      PiecewiseSetMap f = detail::load_map(m_path);
      Partition p = detail::load_partition(f, m_partition, m_dyadic, m_cantor);
      Graph g = quotient_graph(f, p);
      if (!m_dot.empty()) detail::write_dot(g, m_dot);
      rep.status = "ok";
      rep.payload["graph"] = graph_to_json(g);
      rep.payload["partition"] = partition_to_json(p);
      rep.summary = "quotient graph on " + std::to_string(g.size()) + " cells";
    } else if (m_snap->parsed()) {
      rep.subcommand = "map snap";
      PiecewiseSetMap f = detail::load_map(m_path);
      Partition p = detail::load_partition(f, m_partition, m_dyadic, m_cantor);
      auto snapped = snap_to_shadowing(f, p);
      rep.status = "ok";
      Json cells = Json::array();
      for (size_t i = 0; i < snapped.size(); ++i) {
        Json c;
        c["cell"] = interval_set_to_json(p.cells()[i]);
        Json pieces = Json::array();
        for (const auto& [sub, val] : snapped[i].pieces) {
          Json e;
          e["on"] = interval_set_to_json(sub);
          e["value"] = interval_set_to_json(val);
          pieces.push_back(std::move(e));
        }
        c["pieces"] = std::move(pieces);
        cells.push_back(std::move(c));
      }
      rep.payload["cells"] = std::move(cells);
      rep.summary = "snapped map over " + std::to_string(p.size()) + " cells";
    } else if (m_bc->parsed()) {
      rep.subcommand = "map ball-criterion";
      PiecewiseSetMap f = detail::load_map(m_path);
      BallCriterionResult r =
          check_ball_criterion(f, parse_rat(m_eps), parse_rat(m_delta));
      rep.status = r.holds ? "ok" : "refuted";
      rep.payload["holds"] = r.holds;
      Json vio = Json::array();
      for (const auto& x : r.violations) vio.push_back(rat_str(x));
      rep.payload["violations"] = std::move(vio);
      rep.summary = r.holds ? "ball inclusion holds on the whole domain"
                            : "ball inclusion fails at " +
                                  std::to_string(r.violations.size()) +
                                  " sampled points";
    } else if (ex_cmd->parsed()) {
      rep.subcommand = "example";
      std::string name = ex_name;
      if (name == "cantor_ternary" && ex_depth)
        name += "(" + std::to_string(*ex_depth) + ")";
      PiecewiseSetMap f = builtin_map(name);
      rep.status = "ok";
      rep.payload = map_to_json(f);
      if (!ex_out.empty()) detail::write_bare(rep.payload, ex_out);
      rep.summary = "builtin map '" + name + "'";
    } else {
      rep.status = "error";
      rep.summary = "no subcommand given";
    }
  } catch (const input_error& e) {
    rep.status = "error";
    rep.payload = Json::object();
    rep.payload["message"] = e.what();
    rep.summary = e.what();
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.payload = Json::object();
    rep.payload["message"] = e.what();
    rep.summary = e.what();
  }

  if (format == "text") {
    out << rep.subcommand << ": " << rep.status << " - " << rep.summary << "\n";
  } else {
    Json j;
    j["subcommand"] = rep.subcommand;
    j["status"] = rep.status;
    j["payload"] = rep.payload;
    j["summary"] = rep.summary;
    out << j.dump(2) << "\n";
  }
  return rep.exit_code();
}

}  // namespace svdyn::cli

#endif  // SVDYN_CLI_HPP_
