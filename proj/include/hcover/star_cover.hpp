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

#ifndef HCOVER_STAR_COVER_HPP_
#define HCOVER_STAR_COVER_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcover/cover1d.hpp"
#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/region.hpp"
#include "hcover/solution.hpp"

namespace hcover {

// Polygon given counterclockwise around a center o. Every triangle
// (o, v_k, v_{k+1}) must be strictly counterclockwise and the vertices must
// wind around o exactly once; together these make the polygon simple and
// star-shaped with o in the interior of its kernel.
class StarPolygon {
 public:
  StarPolygon(Point center, std::vector<Point> vertices)
      : o_(std::move(center)), v_(std::move(vertices)) {
    const std::size_t n = v_.size();
    if (n < 3) throw Error(ErrorCode::kInvalidInput, "star polygon needs at least 3 vertices");
    int wraps = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Point& a = v_[k];
      const Point& b = v_[(k + 1) % n];
      if (orient(o_, a, b) <= 0) {
        throw Error(ErrorCode::kInvalidInput,
                    "edge " + std::to_string(k) + " is not strictly counterclockwise around the center");
      }
      if (angle_compare(b - o_, a - o_) < 0) ++wraps;
    }
    if (wraps != 1) throw Error(ErrorCode::kInvalidInput, "vertices wind around the center more than once");
  }

  const Point& center() const { return o_; }
  std::size_t size() const { return v_.size(); }
  const Point& vertex(std::size_t k) const { return v_[k % v_.size()]; }
  const std::vector<Point>& vertices() const { return v_; }
  Point spoke(std::size_t k) const { return vertex(k) - o_; }

  // Wedge k = triangle (o, v_k, v_{k+1}) whose half-open angular range
  // [v_k, v_{k+1}) holds direction u.
  std::size_t wedge_of(const Point& u) const {
    const Point d0 = spoke(0);
    std::size_t lo = 0, hi = v_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (angle_compare_from(d0, spoke(mid), u) <= 0) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

  // Closed containment for a point p != o.
  bool contains(const Point& p) const {
    const std::size_t k = wedge_of(p - o_);
    return orient(vertex(k), vertex(k + 1), p) >= 0;
  }

 private:
  Point o_;
  std::vector<Point> v_;
};

// A maximal segment [cw, ccw] of the bounding line of hs[halfplane] inside
// the polygon. Seen from o it spans the directions from cw - o
// counterclockwise to ccw - o, less than half a turn.
struct Chord {
  std::size_t halfplane;
  Point cw;
  Point ccw;

  bool degenerate() const { return cw == ccw; }
};

inline void require_center_outside(const StarPolygon& poly, std::span<const Halfplane> hs) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].contains(poly.center()) || sign(hs[i].excess(poly.center())) == 0) {
      throw Error(ErrorCode::kHalfplaneContainsCenter,
                  "halfplane " + std::to_string(i) + " contains the center or passes through it");
    }
  }
}

namespace detail {

inline std::vector<Halfplane> complements(std::span<const Halfplane> hs) {
  std::vector<Halfplane> out;
  out.reserve(hs.size());
  for (const Halfplane& h : hs) out.push_back(h.complement());
  return out;
}

// Does the segment [p, q] meet the intersection of the open complements of
// hs[i] for i in `which`? Clips t in [0, 1] by strict linear inequalities.
template <class Indices>
bool segment_meets_open_complements(const Point& p, const Point& q, std::span<const Halfplane> hs,
                                    const Indices& which) {
  std::optional<Scalar> lo, hi;  // t > lo, t < hi
  for (std::size_t i : which) {
    const Halfplane& h = hs[i];
    // Strictly outside h:  excess(p) + t * slope > 0.
    const Scalar base = h.excess(p);
    const Scalar slope = h.a * (q.x - p.x) + h.b * (q.y - p.y);
    const int s = sign(slope);
    if (s == 0) {
      if (sign(base) <= 0) return false;
      continue;
    }
    const Scalar root = -base / slope;
    if (s > 0) {
      if (!lo || root > *lo) lo = root;
    } else if (!hi || root < *hi) {
      hi = root;
    }
  }
  const Scalar a = lo ? std::max(*lo, Scalar(0)) : Scalar(0);
  const Scalar b = hi ? std::min(*hi, Scalar(1)) : Scalar(1);
  return a < b;
}

}  // namespace detail

struct StarFeasibility {
  bool feasible = false;
  std::size_t witness = 0;  // an edge v_k v_{k+1} with an uncovered point
  ConvexRegion region;      // closure of the intersection of complements
};

inline StarFeasibility check_feasible_star(const StarPolygon& poly, std::span<const Halfplane> hs) {
  require_center_outside(poly, hs);
  StarFeasibility out;
  const std::vector<Halfplane> comp = detail::complements(hs);
  if (hs.empty()) {
    out.region.kind = RegionKind::kPlane;
    out.region.interior = poly.center();
    return out;
  }
  out.region = detail::region_around(comp, poly.center());
  // The interior of the region is cut out by its edge constraints alone.
  std::vector<std::size_t> facets;
  for (const RegionEdge& e : out.region.edges) facets.push_back(e.source);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (detail::segment_meets_open_complements(poly.vertex(k), poly.vertex(k + 1), hs, facets)) {
      out.witness = k;
      return out;
    }
  }
  out.feasible = true;
  return out;
}

inline bool verify_boundary_cover(const StarPolygon& poly, std::span<const Halfplane> hs,
                                  std::span<const std::size_t> chosen) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (detail::segment_meets_open_complements(poly.vertex(k), poly.vertex(k + 1), hs, chosen)) {
      return false;
    }
  }
  return true;
}

// Maximal segment of the bounding line of h inside the polygon through x,
// found by walking the spoke triangles in both directions.
inline Chord chord_through(const StarPolygon& poly, const Halfplane& h, std::size_t index, const Point& x) {
  const Point& o = poly.center();
  const std::size_t n = poly.size();
  const Scalar off = h.c - h.a * o.x - h.b * o.y;  // negative: o is outside h
  auto walk = [&](bool ccw) {
    std::size_t k = poly.wedge_of(x - o);
    Point cur = x;
    for (std::size_t steps = 0; steps <= n + 1; ++steps) {
      const std::size_t j = ccw ? (k + 1) % n : k;
      const Point u = poly.spoke(j);
      const Scalar au = h.a * u.x + h.b * u.y;
      if (sign(au) < 0) {
        const Scalar t = off / au;
        if (t <= 1) {
          cur = o + t * u;
          k = ccw ? j : (k + n - 1) % n;
          continue;
        }
      }
      // Leaves through the polygon edge of wedge k.
      const Point& p = poly.vertex(k);
      const Point& q = poly.vertex(k + 1);
      const Scalar den = h.a * (q.x - p.x) + h.b * (q.y - p.y);
      if (sign(den) == 0) return cur;
      const Scalar s = -h.excess(p) / den;
      return p + s * (q - p);
    }
    throw std::logic_error("chord walk did not terminate");
  };
  return {index, walk(false), walk(true)};
}

// One chord per halfplane: the one through the region edge it carries, or
// else through the point where the ray from o to the region vertex extreme
// in h's inward normal meets the bounding line. Requires feasibility.
inline std::vector<Chord> star_candidates(const StarPolygon& poly, std::span<const Halfplane> hs,
                                          const ConvexRegion& region) {
  const std::vector<Halfplane> comp = detail::complements(hs);
  const NormalFan fan(region, comp);
  const Point& o = poly.center();
  std::vector<Chord> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Halfplane& h = hs[i];
    const auto hit = fan.locate(h.inward_normal());
    if (!hit) continue;
    const RegionEdge& e = region.edges[hit->edge];
    if (hit->on_edge && sign(h.excess(*e.start)) == 0 && sign(h.excess(*e.end)) == 0) {
      out.push_back(chord_through(poly, h, i, make_rational(1, 2) * (*e.start + *e.end)));
      continue;
    }
    const Point u = *e.end - o;
    const Scalar au = h.a * u.x + h.b * u.y;
    if (sign(au) >= 0) continue;
    const Point anchor = o + ((h.c - h.a * o.x - h.b * o.y) / au) * u;
    if (!poly.contains(anchor)) continue;
    out.push_back(chord_through(poly, h, i, anchor));
  }
  return out;
}

// Exact angular ranks of the chord endpoints seen from o.
struct ChordArcs {
  std::size_t ranks = 0;
  std::vector<CyclicArc> arcs;  // halfplane = index into the chord list
};

inline ChordArcs chord_arcs(const Point& o, std::span<const Chord> chords) {
  std::vector<Point> dirs;
  for (const Chord& c : chords) {
    dirs.push_back(c.cw - o);
    dirs.push_back(c.ccw - o);
  }
  auto less = [](const Point& u, const Point& v) { return angle_compare(u, v) < 0; };
  std::sort(dirs.begin(), dirs.end(), less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](const Point& u, const Point& v) { return same_direction(u, v); }),
             dirs.end());
  auto rank = [&](const Point& p) {
    return static_cast<std::size_t>(std::lower_bound(dirs.begin(), dirs.end(), p - o, less) - dirs.begin());
  };
  ChordArcs out;
  out.ranks = dirs.size();
  for (std::size_t c = 0; c < chords.size(); ++c) out.arcs.push_back({rank(chords[c].cw), rank(chords[c].ccw), c});
  return out;
}

// Chosen halfplane indices ascending; an infeasible result names a polygon
// edge with an uncovered point.
inline CoverSolution solve_star_cover(const StarPolygon& poly, std::span<const Halfplane> hs) {
  const StarFeasibility feas = check_feasible_star(poly, hs);
  if (!feas.feasible) return CoverSolution::infeasible(feas.witness);
  const std::vector<Chord> chords = star_candidates(poly, hs, feas.region);
  const ChordArcs arcs = chord_arcs(poly.center(), chords);
  const CoverSolution circle = circle_cover(arcs.ranks, arcs.arcs);
  if (!circle.optimal()) throw std::logic_error("candidate arcs miss part of a feasible boundary");
  CoverSolution sol;
  for (std::size_t a : circle.chosen) sol.chosen.push_back(chords[a].halfplane);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace hcover

#endif  // HCOVER_STAR_COVER_HPP_
