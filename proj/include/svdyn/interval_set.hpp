// interval_set.hpp
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

#ifndef SVDYN_INTERVAL_SET_HPP_
#define SVDYN_INTERVAL_SET_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/rational.hpp"

namespace svdyn {

/// One interval with rational endpoints and per-endpoint open/closed flags.
/// A point is encoded as lo == hi with both ends closed.
struct RatInterval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;

  RatInterval() = default;
  RatInterval(Rat l, Rat h, bool lc = true, bool hc = true)
      : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {}

  static RatInterval point(const Rat& x) { return RatInterval(x, x); }

  bool valid() const {
    return lo < hi || (lo == hi && lo_closed && hi_closed);
  }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
  bool operator==(const RatInterval& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed;
  }
};

/// Finite union of disjoint intervals in canonical form: sorted, pairwise
/// non-mergeable (touching pieces with a closed side are merged).
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet empty() { return IntervalSet(); }

  static IntervalSet of(std::vector<RatInterval> pieces) {
    for (const auto& p : pieces)
      if (!p.valid())
        throw input_error("invalid interval [" + rat_str(p.lo) + "," +
                          rat_str(p.hi) + "]");
    IntervalSet s;
    s.pieces_ = normalize(std::move(pieces));
    return s;
  }

  static IntervalSet interval(const Rat& lo, const Rat& hi, bool lc = true,
                              bool hc = true) {
    return of({RatInterval(lo, hi, lc, hc)});
  }
  static IntervalSet point(const Rat& x) { return of({RatInterval::point(x)}); }

  static IntervalSet points(std::vector<Rat> xs) {
    std::vector<RatInterval> ps;
    ps.reserve(xs.size());
    for (auto& x : xs) ps.push_back(RatInterval::point(x));
    return of(std::move(ps));
  }

  const std::vector<RatInterval>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  size_t size() const { return pieces_.size(); }

  bool contains(const Rat& x) const {
    // pieces are sorted by lo; linear scan is fine at our sizes
    for (const auto& p : pieces_) {
      if (p.lo > x) break;
      if (p.contains(x)) return true;
    }
    return false;
  }

  bool all_closed() const {
    for (const auto& p : pieces_)
      if (!p.lo_closed || !p.hi_closed) return false;
    return true;
  }

  IntervalSet closure() const {
    std::vector<RatInterval> ps = pieces_;
    for (auto& p : ps) p.lo_closed = p.hi_closed = true;
    return of(std::move(ps));
  }

  /// True iff the set is a finite set of points.
  bool is_finite() const {
    for (const auto& p : pieces_)
      if (!p.is_point()) return false;
    return true;
  }

  std::vector<Rat> as_points() const {
    std::vector<Rat> xs;
    for (const auto& p : pieces_) {
      if (!p.is_point()) throw input_error("interval set is not a finite set of points");
      xs.push_back(p.lo);
    }
    return xs;
  }

  bool operator==(const IntervalSet& o) const { return pieces_ == o.pieces_; }
  bool operator!=(const IntervalSet& o) const { return !(*this == o); }

  friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<RatInterval> all = a.pieces_;
    all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
    IntervalSet s;
    s.pieces_ = normalize(std::move(all));
    return s;
  }

  friend IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<RatInterval> out;
    for (const auto& p : a.pieces_)
      for (const auto& q : b.pieces_) {
        if (q.lo > p.hi) break;
        auto r = clip(p, q);
        if (r) out.push_back(*r);
      }
    IntervalSet s;
    s.pieces_ = normalize(std::move(out));
    return s;
  }

  /// a minus b, exact with endpoint flags.
  friend IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<RatInterval> out;
    for (const auto& p : a.pieces_) {
      std::vector<RatInterval> rest = {p};
      for (const auto& q : b.pieces_) {
        std::vector<RatInterval> next;
        for (const auto& r : rest) subtract_piece(r, q, next);
        rest = std::move(next);
        if (rest.empty()) break;
      }
      out.insert(out.end(), rest.begin(), rest.end());
    }
    IntervalSet s;
    s.pieces_ = normalize(std::move(out));
    return s;
  }

  friend bool set_subset(const IntervalSet& a, const IntervalSet& b) {
    return set_difference(a, b).is_empty();
  }

  friend bool sets_meet(const IntervalSet& a, const IntervalSet& b) {
    for (const auto& p : a.pieces_)
      for (const auto& q : b.pieces_) {
        if (q.lo > p.hi) break;
        if (clip(p, q)) return true;
      }
    return false;
  }

  /// Image under x -> alpha*x + beta. alpha == 0 collapses a nonempty set
  /// to the point {beta}.
  friend IntervalSet affine_image(const IntervalSet& a, const Rat& alpha,
                                  const Rat& beta) {
    if (a.is_empty()) return IntervalSet();
    if (alpha == 0) return IntervalSet::point(beta);
    std::vector<RatInterval> out;
    out.reserve(a.pieces_.size());
    for (const auto& p : a.pieces_) {
      Rat l = alpha * p.lo + beta, h = alpha * p.hi + beta;
      if (alpha > 0)
        out.emplace_back(l, h, p.lo_closed, p.hi_closed);
      else
        out.emplace_back(h, l, p.hi_closed, p.lo_closed);
    }
    IntervalSet s;
    s.pieces_ = normalize(std::move(out));
    return s;
  }

  /// Distance from x to the closure of the set (0 if inside).
  friend Rat distance(const Rat& x, const IntervalSet& a) {
    if (a.is_empty()) throw input_error("distance to empty set");
    std::optional<Rat> best;
    for (const auto& p : a.pieces_) {
      Rat d = x < p.lo ? Rat(p.lo - x) : (x > p.hi ? Rat(x - p.hi) : Rat(0));
      if (!best || d < *best) best = d;
    }
    return *best;
  }

  Rat min() const {
    if (is_empty()) throw input_error("min of empty interval set");
    return pieces_.front().lo;
  }
  Rat max() const {
    if (is_empty()) throw input_error("max of empty interval set");
    return pieces_.back().hi;
  }

  /// A deterministic representative: the midpoint of the first piece
  /// (the point itself for degenerate pieces). Always a member.
  Rat pick() const {
    if (is_empty()) throw input_error("pick from empty interval set");
    const auto& p = pieces_.front();
    if (p.is_point()) return p.lo;
    return (p.lo + p.hi) / 2;
  }

  std::string str() const {
    if (pieces_.empty()) return "{}";
    std::string s;
    for (size_t i = 0; i < pieces_.size(); ++i) {
      const auto& p = pieces_[i];
      if (i) s += " u ";
      if (p.is_point()) {
        s += "{" + rat_str(p.lo) + "}";
      } else {
        s += (p.lo_closed ? "[" : "(");
        s += rat_str(p.lo) + "," + rat_str(p.hi);
        s += (p.hi_closed ? "]" : ")");
      }
    }
    return s;
  }

 private:
  std::vector<RatInterval> pieces_;

  static std::optional<RatInterval> clip(const RatInterval& p,
                                         const RatInterval& q) {
    RatInterval r;
    if (p.lo > q.lo) {
      r.lo = p.lo; r.lo_closed = p.lo_closed;
    } else if (p.lo < q.lo) {
      r.lo = q.lo; r.lo_closed = q.lo_closed;
    } else {
      r.lo = p.lo; r.lo_closed = p.lo_closed && q.lo_closed;
    }
    if (p.hi < q.hi) {
      r.hi = p.hi; r.hi_closed = p.hi_closed;
    } else if (p.hi > q.hi) {
      r.hi = q.hi; r.hi_closed = q.hi_closed;
    } else {
      r.hi = p.hi; r.hi_closed = p.hi_closed && q.hi_closed;
    }
    if (!r.valid()) return std::nullopt;
    return r;
  }

  static void subtract_piece(const RatInterval& r, const RatInterval& q,
                             std::vector<RatInterval>& out) {
    if (q.hi < r.lo || q.lo > r.hi || (q.hi == r.lo && !(q.hi_closed && r.lo_closed)) ||
        (q.lo == r.hi && !(q.lo_closed && r.hi_closed))) {
      out.push_back(r);
      return;
    }
    // left remainder
    if (r.lo < q.lo || (r.lo == q.lo && r.lo_closed && !q.lo_closed)) {
      RatInterval left(r.lo, q.lo, r.lo_closed, !q.lo_closed);
      if (left.valid()) out.push_back(left);
    }
    // right remainder
    if (r.hi > q.hi || (r.hi == q.hi && r.hi_closed && !q.hi_closed)) {
      RatInterval right(q.hi, r.hi, !q.hi_closed, r.hi_closed);
      if (right.valid()) out.push_back(right);
    }
  }

  static std::vector<RatInterval> normalize(std::vector<RatInterval> ps) {
    std::sort(ps.begin(), ps.end(), [](const RatInterval& a, const RatInterval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed first
      if (a.hi != b.hi) return a.hi < b.hi;
      return a.hi_closed < b.hi_closed;
    });
    std::vector<RatInterval> out;
    for (auto& p : ps) {
      if (out.empty()) {
        out.push_back(p);
        continue;
      }
      RatInterval& cur = out.back();
      bool connect = p.lo < cur.hi ||
                     (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (!connect) {
        out.push_back(p);
        continue;
      }
      if (p.hi > cur.hi) {
        cur.hi = p.hi;
        cur.hi_closed = p.hi_closed;
      } else if (p.hi == cur.hi) {
        cur.hi_closed = cur.hi_closed || p.hi_closed;
      }
    }
    return out;
  }
};

/// Closed ball around x, restricted to the carrier set (relative metric).
inline IntervalSet closed_ball(const Rat& x, const Rat& eps,
                               const IntervalSet& carrier) {
  return set_intersect(IntervalSet::interval(x - eps, x + eps), carrier);
}

/// Exact Hausdorff distance between the closures of two nonempty sets.
inline Rat hausdorff(const IntervalSet& a, const IntervalSet& b) {
  if (a.is_empty() || b.is_empty())
    throw input_error("hausdorff distance of empty set");
  auto one_sided = [](const IntervalSet& from, const IntervalSet& to) {
    // sup_{x in from} d(x, to); attained at piece endpoints of `from` or at
    // midpoints of `to`'s gaps lying inside `from`.
    std::vector<Rat> cands;
    for (const auto& p : from.pieces()) {
      cands.push_back(p.lo);
      cands.push_back(p.hi);
    }
    const auto& tp = to.pieces();
    for (size_t i = 0; i + 1 < tp.size(); ++i) {
      Rat mid = (tp[i].hi + tp[i + 1].lo) / 2;
      if (from.closure().contains(mid)) cands.push_back(mid);
    }
    Rat best(0);
    for (const auto& c : cands) {
      Rat d = distance(c, to);
      if (d > best) best = d;
    }
    return best;
  };
  Rat d1 = one_sided(a, b), d2 = one_sided(b, a);
  return d1 > d2 ? d1 : d2;
}

}  // namespace svdyn

#endif  // SVDYN_INTERVAL_SET_HPP_
