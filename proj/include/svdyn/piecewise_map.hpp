// piecewise_map.hpp
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
// Exact piecewise-affine set-valued interval maps: point images are finite
// rational sets (one affine branch value, or an explicitly assigned value
// set at exceptional points). All arithmetic is exact rational; balls and
// distances are taken relative to the declared domain.

#ifndef SVDYN_PIECEWISE_MAP_HPP_
#define SVDYN_PIECEWISE_MAP_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/interval_set.hpp"
#include "svdyn/tower.hpp"

namespace svdyn {

struct AffineBranch {
  RatInterval piece;  // half-open/closed bounds; exactly one owner per point
  Rat alpha;
  Rat beta;
};

struct ExceptionalPoint {
  Rat x;
  std::vector<Rat> values;  // sorted, distinct, nonempty
};

class PiecewiseSetMap {
 public:
  PiecewiseSetMap(IntervalSet domain, std::vector<AffineBranch> branches,
                  std::vector<ExceptionalPoint> points)
      : domain_(std::move(domain)),
        branches_(std::move(branches)),
        points_(std::move(points)) {
    if (domain_.is_empty()) throw input_error("map domain must be nonempty");
    for (auto& p : points_) {
      std::sort(p.values.begin(), p.values.end());
      p.values.erase(std::unique(p.values.begin(), p.values.end()),
                     p.values.end());
      if (p.values.empty())
        throw input_error("exceptional point with empty value set");
    }
    std::sort(points_.begin(), points_.end(),
              [](const ExceptionalPoint& a, const ExceptionalPoint& b) {
                return a.x < b.x;
              });
    for (size_t i = 0; i + 1 < points_.size(); ++i)
      if (points_[i].x == points_[i + 1].x)
        throw input_error("duplicate exceptional point");
    std::sort(branches_.begin(), branches_.end(),
              [](const AffineBranch& a, const AffineBranch& b) {
                return a.piece.lo < b.piece.lo;
              });
    validate_partition();
    violations_ = closed_graph_violations_impl();
  }

  const IntervalSet& domain() const { return domain_; }
  const std::vector<AffineBranch>& branches() const { return branches_; }
  const std::vector<ExceptionalPoint>& exceptional_points() const {
    return points_;
  }
  bool graph_closed() const { return violations_.empty(); }
  /// Boundary points where a one-sided branch limit escapes the assigned
  /// value set (empty iff the graph is closed).
  const std::vector<Rat>& closed_graph_violations() const { return violations_; }

  /// F(x): a finite set of points.
  IntervalSet eval(const Rat& x) const {
    if (!domain_.contains(x)) throw input_error("point is outside the domain");
    for (const auto& p : points_)
      if (p.x == x) return IntervalSet::points(p.values);
    for (const auto& b : branches_)
      if (b.piece.contains(x)) return IntervalSet::point(b.alpha * x + b.beta);
    throw input_error("domain point not covered by any branch");
  }

  /// Exact image of a subset of the domain.
  IntervalSet image_set(const IntervalSet& s) const {
    if (!set_subset(s, domain_))
      throw input_error("image argument is not a subset of the domain");
    IntervalSet out;
    for (const auto& b : branches_) {
      IntervalSet clipped = set_intersect(s, IntervalSet::of({b.piece}));
      out = set_union(out, affine_image(clipped, b.alpha, b.beta));
    }
    for (const auto& p : points_)
      if (s.contains(p.x)) out = set_union(out, IntervalSet::points(p.values));
    return out;
  }

  /// Exact F^{-1}(S) = { x in domain : F(x) meets S }. S may lie anywhere.
  IntervalSet preimage_set(const IntervalSet& s) const {
    IntervalSet out;
    for (const auto& b : branches_) {
      IntervalSet pre;
      if (b.alpha != 0) {
        pre = affine_image(s, Rat(1) / b.alpha, -b.beta / b.alpha);
      } else {
        pre = s.contains(b.beta) ? IntervalSet::of({b.piece})
                                 : IntervalSet::empty();
      }
      pre = set_intersect(pre, IntervalSet::of({b.piece}));
      out = set_union(out, set_intersect(pre, domain_));
    }
    for (const auto& p : points_)
      for (const auto& v : p.values)
        if (s.contains(v)) {
          out = set_union(out, IntervalSet::point(p.x));
          break;
        }
    return out;
  }

  /// [A_0,...,A_n]: start points of orbits passing through the sets in
  /// order, by backward iteration S <- A_i intersect F^{-1}(S).
  IntervalSet tuple_discriminant(const std::vector<IntervalSet>& pattern) const {
    if (pattern.empty()) throw input_error("empty discriminant pattern");
    IntervalSet s = set_intersect(pattern.back(), domain_);
    for (size_t i = pattern.size() - 1; i-- > 0;)
      s = set_intersect(pattern[i], preimage_set(s));
    return s;
  }

 private:
  IntervalSet domain_;
  std::vector<AffineBranch> branches_;
  std::vector<ExceptionalPoint> points_;
  std::vector<Rat> violations_;

  bool is_exceptional(const Rat& x) const {
    for (const auto& p : points_)
      if (p.x == x) return true;
    return false;
  }

  int branch_cover_count(const Rat& x) const {
    int c = 0;
    for (const auto& b : branches_)
      if (b.piece.contains(x)) ++c;
    return c;
  }

  void validate_partition() const {
    std::vector<Rat> crit;
    for (const auto& p : domain_.pieces()) {
      crit.push_back(p.lo);
      crit.push_back(p.hi);
    }
    for (const auto& b : branches_) {
      crit.push_back(b.piece.lo);
      crit.push_back(b.piece.hi);
    }
    for (const auto& p : points_) crit.push_back(p.x);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    for (const auto& p : points_) {
      if (!domain_.contains(p.x))
        throw input_error("exceptional point outside the domain");
      if (branch_cover_count(p.x) != 0)
        throw input_error("exceptional point " + rat_str(p.x) +
                          " also covered by a branch piece");
    }
    auto check_point = [&](const Rat& x) {
      if (!domain_.contains(x) || is_exceptional(x)) return;
      int c = branch_cover_count(x);
      if (c != 1)
        throw input_error("domain point " + rat_str(x) + " covered by " +
                          std::to_string(c) + " branch pieces");
    };
    for (const auto& x : crit) check_point(x);
    for (size_t i = 0; i + 1 < crit.size(); ++i)
      check_point((crit[i] + crit[i + 1]) / 2);
  }

  /// A branch with an open end at b whose piece accumulates at b from
  /// inside the domain must have its limit value in F(b).
  std::vector<Rat> closed_graph_violations_impl() const {
    std::vector<Rat> out;
    for (const auto& b : branches_) {
      for (int side = 0; side < 2; ++side) {
        bool closed = side == 0 ? b.piece.lo_closed : b.piece.hi_closed;
        if (closed) continue;
        Rat e = side == 0 ? b.piece.lo : b.piece.hi;
        if (!domain_.contains(e)) continue;
        IntervalSet reach = set_intersect(
            IntervalSet::interval(b.piece.lo, b.piece.hi), domain_);
        bool accumulates = false;
        for (const auto& p : reach.pieces()) {
          if (side == 0 && p.lo == e && p.hi > e) accumulates = true;
          if (side == 1 && p.hi == e && p.lo < e) accumulates = true;
        }
        if (!accumulates) continue;
        Rat limit = b.alpha * e + b.beta;
        if (!eval(e).contains(limit)) out.push_back(e);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct PseudoOrbit {
  std::vector<Rat> points;
  Rat delta;

  PseudoOrbit(std::vector<Rat> pts, Rat d)
      : points(std::move(pts)), delta(std::move(d)) {
    if (points.empty()) throw input_error("pseudo-orbit must be nonempty");
  }
};

/// d(F(x_i), x_{i+1}) < delta for every consecutive pair, exactly.
inline bool is_pseudo_orbit(const PiecewiseSetMap& f, const PseudoOrbit& po) {
  for (const auto& x : po.points)
    if (!f.domain().contains(x))
      throw input_error("pseudo-orbit point outside the domain");
  for (size_t i = 0; i + 1 < po.points.size(); ++i)
    if (!(distance(po.points[i + 1], f.eval(po.points[i])) < po.delta))
      return false;
  return true;
}

struct ShadowSearchResult {
  IntervalSet witness_set;
  std::optional<std::vector<Rat>> orbit;
};

/// Witness set = discriminant of the closed epsilon-balls around the
/// pseudo-orbit (relative to the domain). When nonempty, extracts an
/// explicit orbit: deterministic picks threaded through the backward
/// constraint sets, so z_{i+1} in F(z_i) and |z_i - x_i| <= epsilon.
inline ShadowSearchResult shadow_search(const PiecewiseSetMap& f,
                                        const PseudoOrbit& po, const Rat& eps) {
  if (!(eps > 0)) throw input_error("epsilon must be positive");
  const size_t n = po.points.size();
  std::vector<IntervalSet> constraint(n);
  constraint[n - 1] = closed_ball(po.points[n - 1], eps, f.domain());
  for (size_t i = n - 1; i-- > 0;)
    constraint[i] = set_intersect(closed_ball(po.points[i], eps, f.domain()),
                                  f.preimage_set(constraint[i + 1]));
  ShadowSearchResult r;
  r.witness_set = constraint[0];
  if (r.witness_set.is_empty()) return r;
  std::vector<Rat> orbit;
  orbit.push_back(r.witness_set.pick());
  for (size_t i = 1; i < n; ++i) {
    IntervalSet choices = set_intersect(f.eval(orbit.back()), constraint[i]);
    orbit.push_back(choices.pick());
  }
  r.orbit = std::move(orbit);
  return r;
}

/// Decides B(F(x), delta+eps) subset of F(B(x, eps)) for all x in the
/// domain (closed balls, relative metric) by exact case analysis: the
/// truth of the inclusion is constant between consecutive critical x
/// values, which are the piece/domain endpoints shifted by eps and the
/// pairwise crossings of the affine interval-end functions involved.
struct BallCriterionResult {
  bool holds = true;
  std::vector<Rat> violations;  // sampled witnesses when it fails
};

inline BallCriterionResult check_ball_criterion(const PiecewiseSetMap& f,
                                                const Rat& eps,
                                                const Rat& delta) {
  if (!(eps > 0) || !(delta > 0))
    throw input_error("epsilon and delta must be positive");
  const Rat big = delta + eps;

  std::vector<Rat> anchors;  // x positions where the combinatorics can change
  std::vector<Rat> consts;   // y-level constants of the two sides
  for (const auto& p : f.domain().pieces()) {
    anchors.push_back(p.lo);
    anchors.push_back(p.hi);
    consts.push_back(p.lo);
    consts.push_back(p.hi);
  }
  for (const auto& b : f.branches()) {
    anchors.push_back(b.piece.lo);
    anchors.push_back(b.piece.hi);
    IntervalSet eff =
        set_intersect(IntervalSet::of({b.piece}), f.domain());
    for (const auto& p : eff.pieces()) {
      consts.push_back(b.alpha * p.lo + b.beta);
      consts.push_back(b.alpha * p.hi + b.beta);
    }
  }
  for (const auto& p : f.exceptional_points()) {
    anchors.push_back(p.x);
    for (const auto& v : p.values) consts.push_back(v);
  }

  // moving forms s*x + t: ends of the left-hand ball through the branch
  // owning x, and ends of the right-hand images of the eps-ball boundary
  std::vector<std::pair<Rat, Rat>> forms;
  for (const auto& b : f.branches()) {
    forms.emplace_back(b.alpha, b.beta - big);
    forms.emplace_back(b.alpha, b.beta + big);
    forms.emplace_back(b.alpha, b.beta - b.alpha * eps);
    forms.emplace_back(b.alpha, b.beta + b.alpha * eps);
  }

  std::vector<Rat> crit;
  for (const auto& a : anchors) {
    crit.push_back(a);
    crit.push_back(a - eps);
    crit.push_back(a + eps);
  }
  for (const auto& [s, t] : forms) {
    if (s == 0) continue;
    for (const auto& c : consts) crit.push_back((c - t) / s);
  }
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      const auto& [s1, t1] = forms[i];
      const auto& [s2, t2] = forms[j];
      if (s1 == s2) continue;
      crit.push_back((t2 - t1) / (s1 - s2));
    }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::vector<Rat> samples;
  for (const auto& c : crit)
    if (f.domain().contains(c)) samples.push_back(c);
  for (size_t i = 0; i + 1 < crit.size(); ++i) {
    Rat mid = (crit[i] + crit[i + 1]) / 2;
    if (f.domain().contains(mid)) samples.push_back(mid);
  }

  BallCriterionResult r;
  for (const auto& x : samples) {
    IntervalSet lhs;
    for (const auto& v : f.eval(x).as_points())
      lhs = set_union(lhs, IntervalSet::interval(v - big, v + big));
    lhs = set_intersect(lhs, f.domain());
    IntervalSet rhs = f.image_set(closed_ball(x, eps, f.domain()));
    if (!set_subset(lhs, rhs)) {
      r.holds = false;
      r.violations.push_back(x);
    }
  }
  return r;
}

/// Ordered list of disjoint cells covering the domain.
class Partition {
 public:
  explicit Partition(std::vector<IntervalSet> cells, const IntervalSet& domain)
      : cells_(std::move(cells)) {
    if (cells_.empty()) throw input_error("partition must have cells");
    IntervalSet un;
    for (size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i].is_empty()) throw input_error("empty partition cell");
      if (sets_meet(un, cells_[i]))
        throw input_error("partition cells overlap");
      un = set_union(un, cells_[i]);
    }
    if (un != domain)
      throw input_error("partition cells do not cover the domain exactly");
  }

  const std::vector<IntervalSet>& cells() const { return cells_; }
  size_t size() const { return cells_.size(); }

  int cell_of(const Rat& x) const {
    for (size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].contains(x)) return static_cast<int>(i);
    return -1;
  }

  /// Cuts the domain at the given ascending boundaries; a boundary point
  /// shared by two prospective cells goes to the lower-indexed one.
  static Partition from_boundaries(const IntervalSet& domain,
                                   const std::vector<Rat>& cuts) {
    std::vector<IntervalSet> cells;
    Rat lo = domain.min();
    bool first = true;
    std::vector<Rat> all = cuts;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    all.push_back(domain.max());
    for (const auto& hi : all) {
      IntervalSet hull = first ? IntervalSet::interval(lo, hi, true, true)
                               : IntervalSet::interval(lo, hi, false, true);
      IntervalSet cell = set_intersect(hull, domain);
      if (!cell.is_empty()) cells.push_back(cell);
      lo = hi;
      first = false;
    }
    return Partition(std::move(cells), domain);
  }

  /// 2^(m+1) half-open dyadic cells of mesh (hi-lo)/2^(m+1) over an
  /// interval domain.
  static Partition dyadic(const IntervalSet& domain, int m) {
    if (m < 0) throw input_error("dyadic depth must be >= 0");
    Rat lo = domain.min(), hi = domain.max();
    int cells = 1 << (m + 1);
    std::vector<Rat> cuts;
    for (int i = 1; i < cells; ++i)
      cuts.push_back(lo + (hi - lo) * i / cells);
    return from_boundaries(domain, cuts);
  }

 private:
  std::vector<IntervalSet> cells_;
};

/// True iff every cell of fine lies inside one cell of coarse.
inline std::optional<std::vector<int>> refinement_map(const Partition& fine,
                                                      const Partition& coarse) {
  std::vector<int> map(fine.size(), -1);
  for (size_t i = 0; i < fine.size(); ++i) {
    for (size_t j = 0; j < coarse.size(); ++j)
      if (set_subset(fine.cells()[i], coarse.cells()[j])) {
        map[i] = static_cast<int>(j);
        break;
      }
    if (map[i] < 0) return std::nullopt;
  }
  return map;
}

/// Finite quotient dynamics on partition cells: U -> V iff F(U) meets V.
inline Graph quotient_graph(const PiecewiseSetMap& f, const Partition& p) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < p.size(); ++i) {
    IntervalSet img = f.image_set(p.cells()[i]);
    bool any = false;
    for (size_t j = 0; j < p.size(); ++j)
      if (sets_meet(img, p.cells()[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        any = true;
      }
    if (!any)
      throw input_error("partition cell " + std::to_string(i) +
                        " has image meeting no cell");
  }
  std::vector<std::string> names;
  names.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) names.push_back("C" + std::to_string(i));
  return Graph(std::move(names), edges);
}

/// Tower of quotient graphs along a refining sequence of partitions; bonds
/// send a cell to the containing coarser cell.
inline Tower quotient_tower(const PiecewiseSetMap& f,
                            const std::vector<Partition>& refinements) {
  if (refinements.empty()) throw input_error("quotient tower needs partitions");
  std::vector<Graph> levels;
  std::vector<std::vector<int>> bonds;
  for (size_t k = 0; k < refinements.size(); ++k) {
    levels.push_back(quotient_graph(f, refinements[k]));
    if (k > 0) {
      auto m = refinement_map(refinements[k], refinements[k - 1]);
      if (!m)
        throw input_error("partition " + std::to_string(k) +
                          " does not refine its predecessor");
      bonds.push_back(std::move(*m));
    }
  }
  return Tower(std::move(levels), std::move(bonds));
}

/// The snap of F to a partition: x maps to the union of all cells meeting
/// F(x). Piecewise constant; represented per cell as (sub-piece, value)
/// pairs on the finitely many sub-pieces where the cell-hitting pattern is
/// constant. The induced cell dynamics is exactly quotient_graph(f, p).
struct SnappedCell {
  std::vector<std::pair<IntervalSet, IntervalSet>> pieces;
};

inline IntervalSet snapped_eval(const PiecewiseSetMap& f, const Partition& p,
                                const Rat& x) {
  IntervalSet out;
  for (const auto& v : f.eval(x).as_points()) {
    int c = p.cell_of(v);
    if (c >= 0) out = set_union(out, p.cells()[c]);
  }
  return out;
}

inline std::vector<SnappedCell> snap_to_shadowing(const PiecewiseSetMap& f,
                                                  const Partition& p) {
  std::vector<SnappedCell> out(p.size());
  for (size_t ci = 0; ci < p.size(); ++ci) {
    const IntervalSet& cell = p.cells()[ci];
    std::vector<Rat> cuts;
    for (const auto& pc : cell.pieces()) {
      cuts.push_back(pc.lo);
      cuts.push_back(pc.hi);
    }
    for (const auto& b : f.branches()) {
      for (const Rat& e : {b.piece.lo, b.piece.hi})
        if (cell.contains(e)) cuts.push_back(e);
      if (b.alpha == 0) continue;
      for (const auto& other : p.cells())
        for (const auto& pc : other.pieces())
          for (const Rat& q : {pc.lo, pc.hi}) {
            Rat x = (q - b.beta) / b.alpha;
            if (cell.contains(x) && b.piece.contains(x)) cuts.push_back(x);
          }
    }
    for (const auto& ep : f.exceptional_points())
      if (cell.contains(ep.x)) cuts.push_back(ep.x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto add_piece = [&](const IntervalSet& sub) {
      if (sub.is_empty()) return;
      IntervalSet value = snapped_eval(f, p, sub.pick());
      auto& ps = out[ci].pieces;
      if (!ps.empty() && ps.back().second == value)
        ps.back().first = set_union(ps.back().first, sub);
      else
        ps.emplace_back(sub, value);
    };
    for (size_t i = 0; i < cuts.size(); ++i) {
      add_piece(set_intersect(IntervalSet::point(cuts[i]), cell));
      if (i + 1 < cuts.size())
        add_piece(set_intersect(
            IntervalSet::interval(cuts[i], cuts[i + 1], false, false), cell));
    }
  }
  return out;
}

/// The built-in example maps.
///   doubling_sv:        x -> {2x} on [0,1), {0,2} at 1, {2x-2} on (1,2]
///   doubling_nonclosed: same pieces but {0} at 1 (graph not closed)
///   cantor_ternary(d):  x -> {3x}/{3x-3}/{3x-6} on depth-d approximations
///                       of the three unit Cantor pieces, {0,3} at 1 and 2
inline PiecewiseSetMap builtin_doubling_sv() {
  return PiecewiseSetMap(
      IntervalSet::interval(Rat(0), Rat(2)),
      {{RatInterval(Rat(0), Rat(1), true, false), Rat(2), Rat(0)},
       {RatInterval(Rat(1), Rat(2), false, true), Rat(2), Rat(-2)}},
      {{Rat(1), {Rat(0), Rat(2)}}});
}

inline PiecewiseSetMap builtin_doubling_nonclosed() {
  return PiecewiseSetMap(
      IntervalSet::interval(Rat(0), Rat(2)),
      {{RatInterval(Rat(0), Rat(1), true, false), Rat(2), Rat(0)},
       {RatInterval(Rat(1), Rat(2), false, true), Rat(2), Rat(-2)}},
      {{Rat(1), {Rat(0)}}});
}

inline IntervalSet cantor_approx(const Rat& lo, const Rat& hi, int depth) {
  if (depth == 0) return IntervalSet::interval(lo, hi);
  Rat third = (hi - lo) / 3;
  return set_union(cantor_approx(lo, lo + third, depth - 1),
                   cantor_approx(hi - third, hi, depth - 1));
}

inline PiecewiseSetMap builtin_cantor_ternary(int depth) {
  if (depth < 0) throw input_error("cantor depth must be >= 0");
  IntervalSet dom = set_union(
      set_union(cantor_approx(Rat(0), Rat(1), depth),
                cantor_approx(Rat(1), Rat(2), depth)),
      cantor_approx(Rat(2), Rat(3), depth));
  return PiecewiseSetMap(
      dom,
      {{RatInterval(Rat(0), Rat(1), true, false), Rat(3), Rat(0)},
       {RatInterval(Rat(1), Rat(2), false, false), Rat(3), Rat(-3)},
       {RatInterval(Rat(2), Rat(3), false, true), Rat(3), Rat(-6)}},
      {{Rat(1), {Rat(0), Rat(3)}}, {Rat(2), {Rat(0), Rat(3)}}});
}

/// Cylinder cells of the cantor_ternary domain at partition depth c >= 1:
/// 3 * 2^(c-1) cells; the shared points 1 and 2 go to the lower cell.
inline Partition cantor_cylinders(const IntervalSet& domain, int c) {
  if (c < 1) throw input_error("cylinder depth must be >= 1");
  std::vector<Rat> cuts;
  std::function<void(Rat, Rat, int)> rec = [&](Rat lo, Rat hi, int d) {
    if (d == 0) return;
    Rat third = (hi - lo) / 3;
    rec(lo, lo + third, d - 1);
    cuts.push_back(lo + third);
    rec(hi - third, hi, d - 1);
  };
  for (int unit = 0; unit < 3; ++unit) {
    if (unit) cuts.push_back(Rat(unit));
    rec(Rat(unit), Rat(unit + 1), c - 1);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return Partition::from_boundaries(domain, cuts);
}

inline PiecewiseSetMap builtin_map(const std::string& name) {
  if (name == "doubling_sv") return builtin_doubling_sv();
  if (name == "doubling_nonclosed") return builtin_doubling_nonclosed();
  if (name.rfind("cantor_ternary(", 0) == 0 && name.back() == ')') {
    std::string d = name.substr(15, name.size() - 16);
    for (char ch : d)
      if (ch < '0' || ch > '9') throw input_error("bad depth in '" + name + "'");
    if (d.empty()) throw input_error("bad depth in '" + name + "'");
    return builtin_cantor_ternary(std::atoi(d.c_str()));
  }
  throw input_error("unknown builtin map '" + name + "'");
}

}  // namespace svdyn

#endif  // SVDYN_PIECEWISE_MAP_HPP_
