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

#ifndef HCOVER_POLYLINE_COVER_HPP_
#define HCOVER_POLYLINE_COVER_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcover/cover1d.hpp"
#include "hcover/envelope.hpp"
#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/lower_cover.hpp"
#include "hcover/range_tree.hpp"
#include "hcover/solution.hpp"
#include "hcover/star_cover.hpp"

namespace hcover {

// Closed x-interval [lo, hi] over which the polyline lies in hs[halfplane].
struct XInterval {
  Scalar lo;
  Scalar hi;
  std::size_t halfplane;
};

inline void require_x_monotone(std::span<const Point> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::kEmptyInput, "polyline without vertices");
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (!(vertices[k - 1].x < vertices[k].x)) {
      throw Error(ErrorCode::kInvalidInput,
                  "polyline x-coordinates not strictly increasing at vertex " + std::to_string(k));
    }
  }
}

namespace detail {

// Segment k with x_k <= x <= x_{k+1}; the last segment for x = x_n.
inline std::size_t segment_at(std::span<const Point> v, const Scalar& x) {
  auto it = std::upper_bound(v.begin(), v.end(), x, [](const Scalar& a, const Point& p) { return a < p.x; });
  const std::size_t k = static_cast<std::size_t>(it - v.begin());
  return std::min(k == 0 ? 0 : k - 1, v.size() - 2);
}

inline Point polyline_at(std::span<const Point> v, const Scalar& x) {
  if (v.size() == 1) return v[0];
  const std::size_t k = segment_at(v, x);
  const Point& p = v[k];
  const Point& q = v[k + 1];
  return {x, p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)};
}

// x where the segment (p, q) crosses the bounding line of h.
inline Scalar crossing_on(const Point& p, const Point& q, const Halfplane& h) {
  const Scalar ep = h.excess(p);
  const Scalar eq = h.excess(q);
  return p.x + (ep / (ep - eq)) * (q.x - p.x);
}

}  // namespace detail

// Feasible iff the polyline never rises above the upper envelope of the
// bounding lines. Both are piecewise linear, so checking at every vertex and
// every envelope breakpoint inside the x-range suffices. The witness is a
// segment index.
inline StarFeasibility check_feasible_polyline(std::span<const Point> v, std::span<const Halfplane> hs) {
  require_x_monotone(v);
  require_lower(hs);
  StarFeasibility out;
  if (hs.empty()) return out;
  const std::vector<Line> lines = bounding_lines(hs);
  const EnvelopeChain env = upper_envelope(lines);
  const std::size_t last_seg = v.size() > 1 ? v.size() - 2 : 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].y > env.eval(v[k].x)) {
      out.witness = std::min(k, last_seg);
      return out;
    }
  }
  for (const Scalar& x : env.breaks) {
    if (x <= v.front().x || x >= v.back().x) continue;
    if (detail::polyline_at(v, x).y > env.eval(x)) {
      out.witness = detail::segment_at(v, x);
      return out;
    }
  }
  out.feasible = true;
  return out;
}

inline bool verify_polyline_cover(std::span<const Point> v, std::span<const Halfplane> hs,
                                  std::span<const std::size_t> chosen) {
  if (v.size() == 1) {
    for (std::size_t i : chosen) {
      if (hs[i].contains(v[0])) return true;
    }
    return false;
  }
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (detail::segment_meets_open_complements(v[k], v[k + 1], hs, chosen)) return false;
  }
  return true;
}

// The maximal x-interval of coverage by h containing x (which must be
// covered), using the vertex tree to jump to the first uncovered vertex.
inline XInterval polyline_chord(std::span<const Point> v, const RangeOutsideTree& tree, const Halfplane& h,
                                std::size_t index, const Scalar& x) {
  const std::size_t k = detail::segment_at(v, x);
  XInterval out{v.front().x, v.back().x, index};
  if (!h.contains(v[k])) {
    out.lo = detail::crossing_on(v[k], v[k + 1], h);
  } else if (const auto j = tree.first_uncovered(k, Direction::kLeft, h)) {
    out.lo = detail::crossing_on(v[*j], v[*j + 1], h);
  }
  if (!h.contains(v[k + 1])) {
    out.hi = detail::crossing_on(v[k], v[k + 1], h);
  } else if (const auto j = tree.first_uncovered(k + 1, Direction::kRight, h)) {
    out.hi = detail::crossing_on(v[*j - 1], v[*j], h);
  }
  return out;
}

// At most one interval per halfplane: through the part of the envelope
// carried by h, or through the envelope vertex where the slope passes h's.
// Requires at least two vertices and a feasible instance.
inline std::vector<XInterval> polyline_candidates(std::span<const Point> v, std::span<const Halfplane> hs) {
  std::vector<XInterval> out;
  if (hs.empty()) return out;
  const std::vector<Line> lines = bounding_lines(hs);
  const EnvelopeChain env = upper_envelope(lines);
  const RangeOutsideTree tree(std::vector<Point>(v.begin(), v.end()), false);
  const Scalar& x0 = v.front().x;
  const Scalar& xn = v.back().x;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Line& line = lines[i];
    const std::size_t e = env.first_steeper(line.slope);
    std::optional<Scalar> anchor;
    if (e > 0 && env.edges[e - 1].line.slope == line.slope && env.edges[e - 1].line.intercept == line.intercept) {
      Scalar lo = x0, hi = xn;
      if (e - 1 > 0) lo = std::max(lo, env.breaks[e - 2]);
      if (e - 1 < env.breaks.size()) hi = std::min(hi, env.breaks[e - 1]);
      if (lo <= hi) anchor = lo;
    } else if (e > 0 && e < env.edges.size()) {
      const Scalar& xv = env.breaks[e - 1];
      if (x0 <= xv && xv <= xn && hs[i].contains(detail::polyline_at(v, xv))) anchor = xv;
    }
    if (anchor) out.push_back(polyline_chord(v, tree, hs[i], i, *anchor));
  }
  return out;
}

// Minimum cover of [x_0, x_n] by closed intervals: rank the endpoints and
// cover every step between consecutive ranks. Chosen entries index `iv`.
inline CoverSolution interval_cover_continuous(const Scalar& x0, const Scalar& xn, std::span<const XInterval> iv) {
  std::vector<Scalar> xs = {x0, xn};
  for (const XInterval& c : iv) {
    xs.push_back(c.lo);
    xs.push_back(c.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto rank = [&xs](const Scalar& x) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  const std::size_t first = rank(x0), steps = rank(xn) - first;
  std::vector<IndexRun> runs;
  std::vector<std::size_t> origin;
  for (std::size_t c = 0; c < iv.size(); ++c) {
    const std::size_t lo = std::max(rank(iv[c].lo), first);
    const std::size_t hi = std::min(rank(iv[c].hi), first + steps);
    if (hi <= lo) continue;
    runs.push_back({lo - first, hi - first - 1, iv[c].halfplane});
    origin.push_back(c);
  }
  CoverSolution sol = greedy_interval_cover(steps, runs);
  for (std::size_t& c : sol.chosen) c = origin[c];
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

// Minimum number of lower halfplanes covering every point of an x-monotone
// polyline. Chosen indices refer to `hs`; an infeasible result names a
// segment with an uncovered point.
inline CoverSolution solve_polyline_cover(std::span<const Point> v, std::span<const Halfplane> hs) {
  const StarFeasibility f = check_feasible_polyline(v, hs);
  if (!f.feasible) return CoverSolution::infeasible(f.witness);
  CoverSolution sol;
  if (v.size() == 1) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (hs[i].contains(v[0])) {
        sol.chosen = {i};
        break;
      }
    }
    return sol;
  }
  const std::vector<XInterval> iv = polyline_candidates(v, hs);
  const CoverSolution steps = interval_cover_continuous(v.front().x, v.back().x, iv);
  if (!steps.optimal()) throw std::logic_error("candidate intervals miss part of a feasible polyline");
  for (std::size_t c : steps.chosen) sol.chosen.push_back(iv[c].halfplane);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace hcover

#endif  // HCOVER_POLYLINE_COVER_HPP_
