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

#ifndef HCOVER_HULL_HPP_
#define HCOVER_HULL_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"

namespace hcover {

// Andrew's monotone chain over indices into `pts`. Returns the extreme
// vertices counterclockwise starting at the lexicographically smallest one.
// Collinear boundary points and duplicates are dropped. The input order of
// `idx` is irrelevant; it is sorted in place.
inline std::vector<std::size_t> convex_hull_indices(std::span<const Point> pts,
                                                    std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&pts](std::size_t i, std::size_t j) {
    return pts[i] < pts[j] || (pts[i] == pts[j] && i < j);
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&pts](std::size_t i, std::size_t j) {
                          return pts[i] == pts[j];
                        }),
            idx.end());
  const std::size_t n = idx.size();
  if (n <= 2) return idx;
  std::vector<std::size_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && orient(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::vector<Point> convex_hull(std::span<const Point> pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Point> out;
  for (std::size_t i : convex_hull_indices(pts, std::move(idx))) out.push_back(pts[i]);
  return out;
}

// Position (into the hull sequence) of the vertex maximizing <d, p>, found by
// binary search over edge angles. `at(k)` returns the k-th hull vertex; the
// hull must be in the form produced by convex_hull. Ties go to the vertex
// that is smaller in (y, x) order.
inline bool yx_less(const Point& p, const Point& q) {
  return p.y < q.y || (p.y == q.y && p.x < q.x);
}

template <class At>
std::size_t extreme_position(std::size_t m, const At& at, const Point& d) {
  if (m == 0) throw Error(ErrorCode::kEmptyInput, "extreme point query on empty hull");
  if (m == 1) return 0;
  if (m == 2) {
    const int s = sign(dot(d, at(1) - at(0)));
    if (s > 0) return 1;
    if (s < 0) return 0;
    return yx_less(at(1), at(0)) ? 1 : 0;
  }
  // The maximizer is the tail of the first edge whose direction is at or past
  // t = d rotated by +90 degrees, measuring angles from the first edge.
  const Point e0 = at(1) - at(0);
  const Point t{-d.y, d.x};
  auto edge = [&](std::size_t k) { return at((k + 1) % m) - at(k); };
  std::size_t lo = 0;
  std::size_t hi = m;  // first edge with angle >= angle(t), m if none
  if (angle_compare_from(e0, e0, t) < 0) {
    lo = 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (angle_compare_from(e0, edge(mid), t) >= 0) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
  } else {
    hi = 0;
  }
  const std::size_t k = hi % m;
  // Tie when that edge is parallel to t: both endpoints maximize.
  if (sign(dot(d, edge(k))) == 0) {
    const std::size_t k1 = (k + 1) % m;
    return yx_less(at(k1), at(k)) ? k1 : k;
  }
  return k;
}

inline Point extreme_point_query(std::span<const Point> hull, const Point& d) {
  return hull[extreme_position(hull.size(), [&hull](std::size_t k) -> const Point& {
    return hull[k];
  }, d)];
}

}  // namespace hcover

#endif  // HCOVER_HULL_HPP_
