// Copyright 2026 The hcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HCOVER_GENERAL_COVER_HPP_
#define HCOVER_GENERAL_COVER_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hcover/cover1d.hpp"
#include "hcover/envelope.hpp"
#include "hcover/geometry.hpp"
#include "hcover/hull.hpp"
#include "hcover/lower_cover.hpp"
#include "hcover/lp.hpp"
#include "hcover/range_tree.hpp"
#include "hcover/region.hpp"
#include "hcover/rotation.hpp"
#include "hcover/solution.hpp"

namespace hcover {

// Point (p1, p2) <-> line y = p1 x - p2. A point lies above a line iff the
// dual of the line lies above the dual of the point.
inline Line dual_line(const Point& p) { return Line::non_vertical(p.x, -p.y); }
inline Point dual_point(const Line& l) { return {l.slope, -l.intercept}; }

// For a lower halfplane h_l: the dual points of the upper halfplanes that
// cover every point h_l misses lie weakly above this envelope.
class KRegionQuery {
 public:
  explicit KRegionQuery(std::span<const Point> leftover) {
    if (leftover.empty()) return;
    std::vector<Line> lines;
    lines.reserve(leftover.size());
    for (const Point& p : leftover) lines.push_back(dual_line(p));
    env_ = upper_envelope(lines);
  }

  bool contains(const Point& q) const { return !env_ || q.y >= env_->eval(q.x); }
  const std::optional<EnvelopeChain>& envelope() const { return env_; }

 private:
  std::optional<EnvelopeChain> env_;
};

// Smallest index of a halfplane holding all of P, by one extreme-point query
// on the hull of P per halfplane.
inline std::optional<std::size_t> solve_size_one(std::span<const Point> points, std::span<const Halfplane> hs) {
  if (points.empty()) return hs.empty() ? std::nullopt : std::optional<std::size_t>(0);
  const std::vector<Point> hull = convex_hull(points);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].contains(extreme_point_query(hull, Point{hs[i].a, hs[i].b}))) return i;
  }
  return std::nullopt;
}

// Two distinct halfplanes covering P, if any: two lower ones, two upper ones, or a
// lower and an upper one found through the dual K regions. The mixed case
// scans every lower halfplane (O(n^2 log n) overall). Indices ascending.
inline std::optional<std::pair<std::size_t, std::size_t>> solve_two_cover(std::span<const Point> points,
                                                                          std::span<const Halfplane> hs) {
  if (hs.size() < 2) return std::nullopt;
  const RotatedInstance rot = generic_rotation(points, hs, RotationMode::kGeneral);
  std::vector<std::size_t> lower_idx, upper_idx;
  std::vector<Halfplane> lower, upper_reflected;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Halfplane& h = rot.halfplanes[i];
    if (sign(h.b) > 0) {
      lower_idx.push_back(i);
      lower.push_back(h);
    } else {
      upper_idx.push_back(i);
      upper_reflected.push_back({h.a, -h.b, h.c, h.open});
    }
  }
  // A single covering halfplane is paired with the smallest other index.
  auto as_pair = [](std::vector<std::size_t> chosen, const std::vector<std::size_t>& idx)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (chosen.empty() || chosen.size() > 2) return std::nullopt;
    const std::size_t a = idx[chosen.front()];
    const std::size_t b = chosen.size() == 2 ? idx[chosen.back()] : (a == 0 ? 1 : 0);
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  if (!lower.empty()) {
    const CoverSolution s = solve_lower_only(rot.points, lower);
    if (s.optimal()) {
      if (auto r = as_pair(s.chosen, lower_idx)) return r;
    }
  }
  if (!upper_reflected.empty()) {
    std::vector<Point> mirrored;
    for (const Point& p : rot.points) mirrored.push_back({p.x, -p.y});
    const CoverSolution s = solve_lower_only(mirrored, upper_reflected);
    if (s.optimal()) {
      if (auto r = as_pair(s.chosen, upper_idx)) return r;
    }
  }
  std::vector<Point> duals;
  for (std::size_t u : upper_idx) duals.push_back(dual_point(bounding_line(rot.halfplanes[u])));
  for (std::size_t l : lower_idx) {
    std::vector<Point> leftover;
    for (const Point& p : rot.points) {
      if (!rot.halfplanes[l].contains(p)) leftover.push_back(p);
    }
    const KRegionQuery k(leftover);
    for (std::size_t j = 0; j < upper_idx.size(); ++j) {
      if (k.contains(duals[j])) return std::make_pair(std::min(l, upper_idx[j]), std::max(l, upper_idx[j]));
    }
  }
  return std::nullopt;
}

// Points sorted counterclockwise around o, ties by distance from o.
struct AngularOrder {
  Point o;
  std::vector<std::size_t> order;  // rank -> input index
  std::vector<Point> points;       // rank -> point
};

inline AngularOrder angular_order(std::span<const Point> points, const Point& o) {
  AngularOrder out{o, std::vector<std::size_t>(points.size()), {}};
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(), [&](std::size_t i, std::size_t j) {
    const Point u = points[i] - o, v = points[j] - o;
    const int c = angle_compare(u, v);
    if (c != 0) return c < 0;
    const Scalar du = dot(u, u), dv = dot(v, v);
    if (du != dv) return du < dv;
    return i < j;
  });
  for (std::size_t i : out.order) out.points.push_back(points[i]);
  return out;
}

// Directions swept by a piece of the region boundary as seen from o, from
// `from` counterclockwise to `to`; an open end is an asymptotic direction.
struct DirectionSpan {
  Point from;
  Point to;
  bool from_open = false;
  bool to_open = false;

  bool contains(const Point& w) const {
    if (from_open && same_direction(w, from)) return false;
    if (to_open && same_direction(w, to)) return false;
    return direction_in_arc(from, to, w);
  }
};

inline DirectionSpan edge_span(const RegionEdge& e, const Point& o) {
  DirectionSpan s;
  if (e.start) {
    s.from = *e.start - o;
  } else {
    s.from = Scalar(-1) * e.dir;
    s.from_open = true;
  }
  if (e.end) {
    s.to = *e.end - o;
  } else {
    s.to = e.dir;
    s.to_open = true;
  }
  return s;
}

namespace detail {

inline bool same_line(const Halfplane& g, const Halfplane& h) {
  return sign(g.a * h.b - g.b * h.a) == 0 && sign(g.a * h.a + g.b * h.b) > 0 && g.c * h.a == h.c * g.a &&
         g.c * h.b == h.c * g.b;
}

// Rank of the last point whose direction is at or before span.to going
// counterclockwise, cyclically.
inline std::size_t last_rank_before(const AngularOrder& ao, const DirectionSpan& span) {
  const auto& pts = ao.points;
  auto it = std::partition_point(pts.begin(), pts.end(), [&](const Point& p) {
    const int c = angle_compare(p - ao.o, span.to);
    return span.to_open ? c < 0 : c <= 0;
  });
  const std::size_t n = pts.size();
  return (static_cast<std::size_t>(it - pts.begin()) + n - 1) % n;
}

}  // namespace detail

// Edge spans of the region around o, for locating the edge a ray from o
// leaves through.
class SpanIndex {
 public:
  SpanIndex(const ConvexRegion& region, const Point& o) {
    for (const RegionEdge& e : region.edges) spans_.push_back(edge_span(e, o));
  }

  // Edge whose span holds direction u, or nullopt when the ray never leaves.
  std::optional<std::size_t> locate(const Point& u) const {
    if (spans_.empty()) return std::nullopt;
    const Point& s0 = spans_[0].from;
    std::size_t lo = 0, hi = spans_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (angle_compare_from(s0, spans_[mid].from, u) <= 0) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (spans_[lo].contains(u)) return lo;
    return std::nullopt;
  }

 private:
  std::vector<DirectionSpan> spans_;
};

// First input index (smallest) of a point strictly inside every complement,
// i.e. in no halfplane. `region` is the closure of that intersection, with o
// in its interior.
inline std::optional<std::size_t> first_uncovered_point(std::span<const Point> points, std::span<const Halfplane> hs,
                                                        const ConvexRegion& region, const Point& o) {
  const SpanIndex index(region, o);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == o) return i;
    const auto e = index.locate(points[i] - o);
    if (!e) return i;
    if (sign(hs[region.edges[*e].source].excess(points[i])) > 0) return i;
  }
  return std::nullopt;
}

// One arc per halfplane over the ranks of `ao`: the run containing the points
// seen through the region edge the halfplane carries, or else the run whose
// span holds the direction of the region vertex extreme in its inward
// normal. `region` is the closure of the intersection of complements.
inline std::vector<CyclicArc> general_candidates(const AngularOrder& ao, std::span<const Halfplane> hs,
                                                 const ConvexRegion& region) {
  std::vector<CyclicArc> out;
  const std::size_t n = ao.points.size();
  if (n == 0) return out;
  std::vector<Halfplane> comp;
  for (const Halfplane& h : hs) comp.push_back(h.complement());
  const NormalFan fan(region, comp);
  const RangeOutsideTree tree(ao.points, true);
  // Gaps of at least a half turn between consecutive ranks. When the points
  // do not surround o, a run may wrap through such a gap, and the edge/vertex
  // anchor above never reaches it; those runs are added separately.
  std::vector<std::size_t> wide_gaps;
  for (std::size_t r = 0; r < n; ++r) {
    const Point u = ao.points[r] - ao.o, w = ao.points[(r + 1) % n] - ao.o;
    const int c = sign(cross(u, w));
    if (c < 0 || (c == 0 && (sign(dot(u, w)) < 0 || r + 1 == n))) wide_gaps.push_back(r);
  }
  auto add_wrapping = [&](std::size_t i) {
    const Halfplane& h = hs[i];
    for (std::size_t r : wide_gaps) {
      const std::size_t next = (r + 1) % n;
      if (!h.contains(ao.points[r]) || !h.contains(ao.points[next])) continue;
      if (!out.empty() && out.back().halfplane == i && arc_contains_rank(out.back(), next, n)) {
        continue;
      }
      const auto run = tree.maximal_run(next, h);
      if (run) out.push_back({run->first, run->last, i, run->full_cycle});
    }
  };
  auto primary = [&](std::size_t i) -> std::optional<CyclicArc> {
    const Halfplane& h = hs[i];
    const auto hit = fan.locate(h.inward_normal());
    if (!hit) return std::nullopt;
    const RegionEdge& e = region.edges[hit->edge];
    DirectionSpan span;
    if (hit->on_edge && detail::same_line(h, hs[e.source])) {
      span = edge_span(e, ao.o);
    } else {
      if (!e.end) return std::nullopt;
      span.from = span.to = *e.end - ao.o;
    }
    const std::size_t r = detail::last_rank_before(ao, span);
    if (!span.contains(ao.points[r] - ao.o)) {
      // No point in the span: the run must hold both neighbors around it.
      if (!h.contains(ao.points[(r + 1) % n])) return std::nullopt;
    }
    if (!h.contains(ao.points[r])) return std::nullopt;
    const auto run = tree.maximal_run(r, h);
    if (!run) return std::nullopt;
    return CyclicArc{run->first, run->last, i, run->full_cycle};
  };
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (auto arc = primary(i)) out.push_back(*arc);
    add_wrapping(i);
  }
  return out;
}

// Case of some point o in no halfplane: cyclic candidate arcs around o and a
// circular point cover. Chosen indices refer to hs.
inline CoverSolution solve_nonempty_interior(std::span<const Point> points, std::span<const Halfplane> hs,
                                             const Point& o) {
  std::vector<Halfplane> comp;
  for (const Halfplane& h : hs) comp.push_back(h.complement());
  const ConvexRegion region = detail::region_around(comp, o);
  if (auto w = first_uncovered_point(points, hs, region, o)) return CoverSolution::infeasible(*w);
  if (points.empty()) return {};
  const AngularOrder ao = angular_order(points, o);
  const std::vector<CyclicArc> arcs = general_candidates(ao, hs, region);
  const CoverSolution res = circular_point_cover(ao.points.size(), arcs);
  if (!res.optimal()) throw std::logic_error("candidate arcs miss a point of a feasible instance");
  CoverSolution sol;
  for (std::size_t a : res.chosen) sol.chosen.push_back(arcs[a].halfplane);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.chosen.erase(std::unique(sol.chosen.begin(), sol.chosen.end()), sol.chosen.end());
  return sol;
}

// Minimum number of halfplanes of any orientation covering P.
inline CoverSolution solve_general(std::span<const Point> points, std::span<const Halfplane> hs,
                                   std::uint64_t seed = 0) {
  if (points.empty()) return {};
  if (hs.empty()) return CoverSolution::infeasible(0);
  const MaxSlackResult slack = max_slack_point(hs, seed);
  if (slack.has_interior) return solve_nonempty_interior(points, hs, slack.o);
  // The halfplanes cover the plane, so at most three are needed.
  CoverSolution sol;
  if (auto one = solve_size_one(points, hs)) {
    sol.chosen = {*one};
    return sol;
  }
  if (auto two = solve_two_cover(points, hs)) {
    sol.chosen = {two->first, two->second};
    return sol;
  }
  sol.chosen = slack.certificate.indices;
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace hcover

#endif  // HCOVER_GENERAL_COVER_HPP_
