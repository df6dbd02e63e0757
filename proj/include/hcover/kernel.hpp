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


#ifndef HCOVER_KERNEL_HPP_
#define HCOVER_KERNEL_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/hull.hpp"
#include "hcover/star_cover.hpp"

namespace hcover {

// Extent of the hull along u, scaled by |u|. Zero for an empty hull.
inline Scalar directional_width(std::span<const Point> hull, const Point& u) {
  if (hull.empty()) return Scalar(0);
  Scalar lo = dot(u, hull[0]), hi = lo;
  for (const Point& p : hull) {
    const Scalar v = dot(u, p);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

struct KernelCheck {
  bool ok = true;
  std::optional<Point> violation;  // a direction where the width ratio drops below 1 - eps
};

namespace detail {

inline void require_epsilon(const Scalar& eps) {
  if (sign(eps) < 0 || eps >= 1) throw Error(ErrorCode::kInvalidInput, "epsilon must lie in [0, 1)");
}

// Edge normals and edge directions of a hull, both signs. Between two
// consecutive directions of the union over both hulls, the extreme vertices
// stay fixed, so the width difference is one linear form on an arc of at
// most a half turn and its sign is decided at the arc ends.
inline void add_critical(std::span<const Point> hull, std::vector<Point>& dirs) {
  const std::size_t h = hull.size();
  if (h < 2) return;
  for (std::size_t k = 0; k < h; ++k) {
    const Point d = hull[(k + 1) % h] - hull[k];
    const Point nrm{d.y, -d.x};
    dirs.push_back(nrm);
    dirs.push_back(Scalar(-1) * nrm);
    dirs.push_back(d);
    dirs.push_back(Scalar(-1) * d);
  }
}

inline KernelCheck check_hulls(std::span<const Point> sub_hull, std::span<const Point> hull,
                               const Scalar& eps) {
  std::vector<Point> dirs;
  add_critical(sub_hull, dirs);
  add_critical(hull, dirs);
  std::sort(dirs.begin(), dirs.end(),
            [](const Point& u, const Point& v) { return angle_compare(u, v) < 0; });
  const Scalar keep = 1 - eps;
  for (const Point& u : dirs) {
    if (directional_width(sub_hull, u) < keep * directional_width(hull, u)) return {false, u};
  }
  return {};
}

}  // namespace detail

// Exact test of whether sub is an eps-kernel of q. Every point of sub must
// be a point of q.
inline KernelCheck is_epsilon_kernel(std::span<const Point> sub, std::span<const Point> q,
                                     const Scalar& eps) {
  detail::require_epsilon(eps);
  std::vector<Point> sorted(q.begin(), q.end());
  std::sort(sorted.begin(), sorted.end());
  for (const Point& p : sub) {
    if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
      throw Error(ErrorCode::kSubsetViolation, "kernel candidate holds a point outside Q");
    }
  }
  const std::vector<Point> hull = convex_hull(q);
  if (sub.empty() && !q.empty()) {
    // Nothing approximates a nonempty hull; report a direction of positive width if any.
    if (hull.size() < 2) return {false, std::nullopt};
    const Point d = hull[1] - hull[0];
    return {false, d};
  }
  return detail::check_hulls(convex_hull(sub), hull, eps);
}

struct KernelResult {
  std::size_t size = 0;
  std::vector<std::size_t> indices;  // into Q, ascending
};

constexpr std::size_t kDefaultKernelCap = 16;

// Smallest eps-kernel by exhaustive search over index subsets of increasing
// size; the witness is the lexicographically least index set of that size.
inline KernelResult optimal_kernel_bruteforce(std::span<const Point> q, const Scalar& eps,
                                              std::size_t cap = kDefaultKernelCap) {
  detail::require_epsilon(eps);
  if (q.size() > cap) throw Error(ErrorCode::kCapExceeded, "too many points for exhaustive kernel search");
  const std::size_t n = q.size();
  if (n == 0) return {};
  const std::vector<Point> hull = convex_hull(q);
  std::vector<Point> sub;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      sub.clear();
      for (std::size_t i : idx) sub.push_back(q[i]);
      if (detail::check_hulls(convex_hull(sub), hull, eps).ok) return {k, idx};
      // Next combination in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {n, {}};  // not reached: Q itself is always a kernel
}

// Slot for an external reduction from kernels to star boundary coverage:
// the reducer emits a star polygon and halfplanes, with point_of[j] naming the
// point of Q that halfplane j stands for.
struct KernelReduction {
  StarPolygon polygon;
  std::vector<Halfplane> halfplanes;
  std::vector<std::size_t> point_of;
};

using KernelReducer = std::function<KernelReduction(std::span<const Point>, const Scalar&)>;

// Runs a supplied reduction through the star solver and checks the answer
// with the exact verifier. Returns nullopt if the reduction's cover is not a
// kernel or the star instance is infeasible.
inline std::optional<KernelResult> kernel_via_reduction(std::span<const Point> q, const Scalar& eps,
                                                        const KernelReducer& reducer) {
  detail::require_epsilon(eps);
  const KernelReduction red = reducer(q, eps);
  if (red.point_of.size() != red.halfplanes.size()) {
    throw Error(ErrorCode::kInvalidInput, "reduction must map every halfplane to a point");
  }
  const CoverSolution sol = solve_star_cover(red.polygon, red.halfplanes);
  if (!sol.optimal()) return std::nullopt;
  KernelResult res;
  for (std::size_t j : sol.chosen) res.indices.push_back(red.point_of[j]);
  std::sort(res.indices.begin(), res.indices.end());
  res.indices.erase(std::unique(res.indices.begin(), res.indices.end()), res.indices.end());
  res.size = res.indices.size();
  std::vector<Point> sub;
  for (std::size_t i : res.indices) sub.push_back(q[i]);
  if (!is_epsilon_kernel(sub, q, eps).ok) return std::nullopt;
  return res;
}

}  // namespace hcover

#endif  // HCOVER_KERNEL_HPP_
