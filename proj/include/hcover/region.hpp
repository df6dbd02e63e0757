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

#ifndef HCOVER_REGION_HPP_
#define HCOVER_REGION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcover/geometry.hpp"
#include "hcover/hull.hpp"
#include "hcover/lp.hpp"

namespace hcover {

enum class RegionKind {
  kEmpty,
  kPoint,
  kSegment,
  kRay,
  kLine,
  kPlane,
  kPolygon,    // bounded, nonempty interior
  kUnbounded,  // unbounded, nonempty interior
};

// A boundary piece on the bounding line of hs[source], traversed with the
// region on its left. Missing endpoints are at infinity.
struct RegionEdge {
  std::size_t source;
  Point dir;
  std::optional<Point> start;
  std::optional<Point> end;
};

struct ConvexRegion {
  RegionKind kind = RegionKind::kEmpty;
  std::vector<RegionEdge> edges;  // counterclockwise
  std::vector<Point> vertices;    // counterclockwise, finite ones only
  std::optional<Point> interior;  // strictly interior point if any

  bool has_interior() const {
    return kind == RegionKind::kPolygon || kind == RegionKind::kUnbounded ||
           kind == RegionKind::kPlane;
  }
  bool bounded() const {
    return kind == RegionKind::kEmpty || kind == RegionKind::kPoint ||
           kind == RegionKind::kSegment || kind == RegionKind::kPolygon;
  }
};

namespace detail {

inline std::vector<LpConstraint> closed_constraints(std::span<const Halfplane> hs,
                                                    bool shrink) {
  std::vector<LpConstraint> cons;
  cons.reserve(hs.size());
  for (const Halfplane& h : hs) {
    cons.push_back({{h.a, h.b},
                    Ext{Scalar(0), h.c, shrink ? Scalar(-l1_norm(h)) : Scalar(0)}});
  }
  return cons;
}

// Region with nonempty interior around the strictly interior point o, via the
// polar dual: constraint i becomes the point n_i / (c_i - n_i.o), and the
// region's edges are the vertices of the hull of those points plus the origin.
inline ConvexRegion region_around(std::span<const Halfplane> hs, const Point& o) {
  const std::size_t m = hs.size();
  std::vector<Point> dual(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar s = hs[i].c - hs[i].a * o.x - hs[i].b * o.y;
    dual[i] = {hs[i].a / s, hs[i].b / s};
  }
  dual[m] = {Scalar(0), Scalar(0)};
  std::vector<std::size_t> all(m + 1);
  for (std::size_t i = 0; i <= m; ++i) all[i] = i;
  std::vector<std::size_t> hull = convex_hull_indices(dual, std::move(all));

  ConvexRegion r;
  r.interior = o;
  std::vector<std::size_t> seq;
  bool bounded = true;
  const auto at_origin = std::find(hull.begin(), hull.end(), m);
  if (at_origin != hull.end()) {
    bounded = false;
    std::rotate(hull.begin(), at_origin, hull.end());
    seq.assign(hull.begin() + 1, hull.end());
  } else {
    const Point& zero = dual[m];
    const std::size_t h = hull.size();
    std::size_t gap = h;
    for (std::size_t k = 0; k < h && h >= 2; ++k) {
      const Point& u = dual[hull[k]];
      const Point& w = dual[hull[(k + 1) % h]];
      if (orient(u, w, zero) == 0) {
        gap = (k + 1) % h;
        break;
      }
    }
    if (gap != h) {
      bounded = false;
      std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(gap),
                  hull.end());
    }
    seq = hull;
  }

  r.kind = bounded ? RegionKind::kPolygon : RegionKind::kUnbounded;
  const std::size_t e = seq.size();
  for (std::size_t i : seq) r.edges.push_back({i, hs[i].boundary_direction(), {}, {}});
  const std::size_t joints = bounded ? e : (e == 0 ? 0 : e - 1);
  for (std::size_t k = 0; k < joints; ++k) {
    const std::size_t k1 = (k + 1) % e;
    auto v = boundary_intersection(hs[seq[k]], hs[seq[k1]]);
    if (!v) continue;  // parallel sides of a strip
    r.edges[k].end = *v;
    r.edges[k1].start = *v;
    r.vertices.push_back(*v);
  }
  if (bounded && !r.vertices.empty()) {
    // Start the vertex list at the start of edges[0].
    std::rotate(r.vertices.begin(), r.vertices.end() - 1, r.vertices.end());
  }
  return r;
}

}  // namespace detail

// Exact intersection of the closed halfplanes hs (open flags are ignored, so
// for complements this is the closure). Empty input gives the whole plane.
inline ConvexRegion halfplane_intersection(std::span<const Halfplane> hs,
                                           std::uint64_t seed = 0) {
  ConvexRegion r;
  if (hs.empty()) {
    r.kind = RegionKind::kPlane;
    r.interior = Point{Scalar(0), Scalar(0)};
    return r;
  }
  {
    const auto cons = detail::closed_constraints(hs, true);
    const LpOutcome lp = solve_lp(cons, seed);
    if (lp.feasible) return detail::region_around(hs, concretize(cons, lp.optimum));
  }
  const auto cons = detail::closed_constraints(hs, false);
  const LpOutcome lp = solve_lp(cons, seed);
  if (!lp.feasible) return r;
  const Point q = concretize(cons, lp.optimum);

  // No interior: the region lies in a line, which is the bounding line of two
  // opposed constraints that are both tight at q. Without such a pair it is q.
  std::map<std::pair<Scalar, Scalar>, std::size_t> tight;
  std::optional<std::size_t> carrier;
  for (std::size_t i = 0; i < hs.size() && !carrier; ++i) {
    if (sign(hs[i].excess(q)) != 0) continue;
    const Scalar w = l1_norm(hs[i]);
    const Scalar ux = hs[i].a / w, uy = hs[i].b / w;
    if (tight.count({-ux, -uy}) != 0) carrier = i;
    tight.emplace(std::make_pair(ux, uy), i);
  }
  if (!carrier) {
    r.kind = RegionKind::kPoint;
    r.vertices = {q};
    return r;
  }
  const Point dir = hs[*carrier].boundary_direction();
  std::optional<Scalar> lo, hi;
  for (const Halfplane& h : hs) {
    const Scalar coef = h.a * dir.x + h.b * dir.y;
    if (sign(coef) == 0) continue;
    const Scalar t = -h.excess(q) / coef;
    if (sign(coef) > 0) {
      if (!hi || t < *hi) hi = t;
    } else if (!lo || t > *lo) {
      lo = t;
    }
  }
  RegionEdge edge{*carrier, dir, {}, {}};
  if (lo) edge.start = q + *lo * dir;
  if (hi) edge.end = q + *hi * dir;
  if (lo && hi && *lo == *hi) {
    r.kind = RegionKind::kPoint;
    r.vertices = {*edge.start};
    return r;
  }
  if (lo && hi) {
    r.kind = RegionKind::kSegment;
  } else if (lo || hi) {
    r.kind = RegionKind::kRay;
  } else {
    r.kind = RegionKind::kLine;
  }
  if (edge.start) r.vertices.push_back(*edge.start);
  if (edge.end) r.vertices.push_back(*edge.end);
  r.edges.push_back(std::move(edge));
  return r;
}

// Outward edge normals of a region with interior, in counterclockwise order.
// A direction either coincides with one edge normal or falls strictly between
// two consecutive ones, naming the vertex they share.
class NormalFan {
 public:
  struct Hit {
    bool on_edge = false;
    std::size_t edge = 0;  // the coinciding edge, or the edge ending at the vertex
  };

  NormalFan() = default;
  NormalFan(const ConvexRegion& region, std::span<const Halfplane> hs)
      : bounded_(region.kind == RegionKind::kPolygon) {
    for (const RegionEdge& e : region.edges) normals_.push_back({hs[e.source].a, hs[e.source].b});
  }

  std::size_t size() const { return normals_.size(); }

  // nullopt when no vertex or edge of the region maximizes <u, p>.
  std::optional<Hit> locate(const Point& u) const {
    const std::size_t m = normals_.size();
    if (m == 0) return std::nullopt;
    const Point& n0 = normals_[0];
    // Last k with angle(n0 -> n_k) <= angle(n0 -> u).
    std::size_t lo = 0, hi = m - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (angle_compare_from(n0, normals_[mid], u) <= 0) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (same_direction(normals_[lo], u)) return Hit{true, lo};
    if (!bounded_ && lo == m - 1) return std::nullopt;
    return Hit{false, lo};
  }

 private:
  std::vector<Point> normals_;
  bool bounded_ = false;
};

}  // namespace hcover

#endif  // HCOVER_REGION_HPP_
