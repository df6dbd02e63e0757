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

#ifndef HCOVER_LOWER_COVER_HPP_
#define HCOVER_LOWER_COVER_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcover/cover1d.hpp"
#include "hcover/envelope.hpp"
#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/range_tree.hpp"
#include "hcover/rotation.hpp"
#include "hcover/solution.hpp"

namespace hcover {

// Lower-only instance in general position: points strictly increasing in x,
// halfplanes lower with pairwise distinct slopes. origin[k] is the caller's
// index of halfplanes[k].
struct LowerInstance {
  std::vector<Point> points;
  std::vector<Halfplane> halfplanes;
  std::vector<std::size_t> origin;
  Rotation rotation;
};

struct Feasibility {
  bool feasible = true;
  std::optional<std::size_t> witness;  // first point in no halfplane
};

inline void require_lower(std::span<const Halfplane> hs) {
  for (const Halfplane& h : hs) {
    if (h.orientation() != Orientation::kLower) {
      throw Error(ErrorCode::kInvalidInput, "lower-only solver given a non-lower halfplane");
    }
  }
}

inline std::vector<Line> bounding_lines(std::span<const Halfplane> hs) {
  std::vector<Line> lines;
  lines.reserve(hs.size());
  for (const Halfplane& h : hs) lines.push_back(bounding_line(h));
  return lines;
}

// Every point must lie weakly below the upper envelope of the bounding lines.
inline Feasibility check_feasible_lower(std::span<const Point> points,
                                        std::span<const Halfplane> hs) {
  require_lower(hs);
  Feasibility f;
  if (points.empty()) return f;
  if (hs.empty()) return {false, 0};
  const std::vector<Line> lines = bounding_lines(hs);
  const EnvelopeChain env = upper_envelope(lines);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].y > env.eval(points[i].x)) return {false, i};
  }
  return f;
}

inline LowerInstance make_lower_instance(std::span<const Point> points,
                                         std::span<const Halfplane> hs) {
  require_lower(hs);
  std::vector<Point> uniq(points.begin(), points.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  RotatedInstance rot = generic_rotation(uniq, hs, RotationMode::kKeepLower);
  LowerInstance inst;
  inst.rotation = rot.rotation;
  inst.points = std::move(rot.points);
  std::sort(inst.points.begin(), inst.points.end());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (rot.dominated(i)) continue;
    inst.halfplanes.push_back(rot.halfplanes[i]);
    inst.origin.push_back(i);
  }
  return inst;
}

namespace detail {

// Anchor for a run whose x-span must meet [xl, xr] (either end may be
// unbounded): a point inside the span, or else the left one of the two
// points straddling it when both are in h.
inline std::optional<std::size_t> anchor_in_span(std::span<const Point> pts,
                                                 const std::optional<Scalar>& xl,
                                                 const std::optional<Scalar>& xr,
                                                 const Halfplane& h) {
  std::size_t first = 0;
  if (xl) {
    first = static_cast<std::size_t>(
        std::lower_bound(pts.begin(), pts.end(), *xl,
                         [](const Point& p, const Scalar& x) { return p.x < x; }) -
        pts.begin());
  }
  if (first < pts.size() && (!xr || pts[first].x <= *xr)) return first;
  if (first == 0 || first == pts.size()) return std::nullopt;
  if (h.contains(pts[first - 1]) && h.contains(pts[first])) return first - 1;
  return std::nullopt;
}

}  // namespace detail

// s(h) for halfplane k: the run of h containing the points below the
// envelope edge on h's line, or else the run whose x-span contains the
// envelope vertex whose tangent is parallel to h's line.
inline std::optional<IndexRun> candidate_for_halfplane(const LowerInstance& inst, std::size_t k,
                                                       const EnvelopeChain& env,
                                                       const RangeOutsideTree& tree,
                                                       QueryStats* stats = nullptr) {
  const Halfplane& h = inst.halfplanes[k];
  const Line line = bounding_line(h);
  std::optional<Scalar> xl, xr;
  const std::size_t e = env.first_steeper(line.slope);
  if (e > 0 && env.edges[e - 1].source == k) {
    // Case 1: h's line carries edge e - 1.
    if (e - 1 > 0) xl = env.breaks[e - 2];
    if (e - 1 < env.breaks.size()) xr = env.breaks[e - 1];
  } else {
    // Case 2: the vertex between edges e - 1 and e.
    if (e == 0 || e == env.edges.size()) return std::nullopt;
    xl = xr = env.breaks[e - 1];
  }
  const auto anchor = detail::anchor_in_span(inst.points, xl, xr, h);
  if (!anchor) return std::nullopt;
  const auto run = tree.maximal_run(*anchor, h, stats);
  if (!run) return std::nullopt;
  return IndexRun{run->first, run->last, k};
}

// At most one run per halfplane of the instance; IndexRun::halfplane is the
// instance-local index.
inline std::vector<IndexRun> build_candidates(const LowerInstance& inst,
                                              QueryStats* stats = nullptr) {
  std::vector<IndexRun> out;
  if (inst.points.empty() || inst.halfplanes.empty()) return out;
  const std::vector<Line> lines = bounding_lines(inst.halfplanes);
  const EnvelopeChain env = upper_envelope(lines);
  const RangeOutsideTree tree(inst.points, false);
  for (std::size_t k = 0; k < inst.halfplanes.size(); ++k) {
    if (auto run = candidate_for_halfplane(inst, k, env, tree, stats)) out.push_back(*run);
  }
  return out;
}

// Minimum number of lower halfplanes covering all points. Chosen indices
// refer to `hs`; an infeasible result names the first uncovered point.
inline CoverSolution solve_lower_only(std::span<const Point> points,
                                      std::span<const Halfplane> hs) {
  const Feasibility f = check_feasible_lower(points, hs);
  if (!f.feasible) return CoverSolution::infeasible(*f.witness);
  if (points.empty()) return {};
  const LowerInstance inst = make_lower_instance(points, hs);
  std::vector<IndexRun> runs = build_candidates(inst);
  for (IndexRun& r : runs) r.halfplane = inst.origin[r.halfplane];
  CoverSolution sol = greedy_interval_cover(inst.points.size(), runs);
  if (!sol.optimal()) {
    // Unreachable for a feasible instance; kept as a guard.
    throw Error(ErrorCode::kInvalidInput, "candidate runs failed to cover a feasible instance");
  }
  for (std::size_t& c : sol.chosen) c = runs[c].halfplane;
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace hcover

#endif  // HCOVER_LOWER_COVER_HPP_
