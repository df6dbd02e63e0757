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

#ifndef HCOVER_ROTATION_HPP_
#define HCOVER_ROTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/lp.hpp"

namespace hcover {

// Rotation by the angle with the given rational cosine and sine.
struct Rotation {
  Scalar cos{1};
  Scalar sin{0};

  Point apply(const Point& p) const {
    return {cos * p.x - sin * p.y, sin * p.x + cos * p.y};
  }
  // a.p <= c becomes (R a).(R p) <= c, so incidences are preserved exactly.
  Halfplane apply(const Halfplane& h) const {
    const Point n = apply(Point{h.a, h.b});
    return {n.x, n.y, h.c, h.open};
  }
  bool is_identity() const { return sign(sin) == 0 && cos == 1; }
};

// From the triple (k^2 - 1, 2k, k^2 + 1); k = 2 gives cos 3/5, sin 4/5.
inline Rotation pythagorean_rotation(long k, bool clockwise = false) {
  const Scalar r(k * k + 1);
  Rotation rot{Scalar(k * k - 1) / r, Scalar(2 * k) / r};
  if (clockwise) rot.sin = -rot.sin;
  return rot;
}

enum class RotationMode {
  kGeneral,    // every bounding line must become non-vertical
  kKeepLower,  // additionally every halfplane must stay a lower halfplane
};

struct RotatedInstance {
  Rotation rotation;
  std::vector<Point> points;
  std::vector<Halfplane> halfplanes;
  // representative[i] == i for kept halfplanes; otherwise the index of a
  // parallel, same-direction halfplane that contains halfplane i.
  std::vector<std::size_t> representative;

  bool dominated(std::size_t i) const { return representative[i] != i; }
};

// For each halfplane, the kept halfplane among those with the same inward
// direction: the one with the largest normalized offset, ties to the
// smallest index.
inline std::vector<std::size_t> parallel_representatives(std::span<const Halfplane> hs) {
  const std::size_t m = hs.size();
  std::vector<Point> dir(m);
  std::vector<Scalar> off(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar w = l1_norm(hs[i]);
    dir[i] = {hs[i].a / w, hs[i].b / w};
    off[i] = hs[i].c / w;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (!(dir[i] == dir[j])) return dir[i] < dir[j];
    if (off[i] != off[j]) return off[i] > off[j];
    return i < j;
  });
  std::vector<std::size_t> rep(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = order[k];
    rep[i] = (k > 0 && dir[order[k - 1]] == dir[i]) ? rep[order[k - 1]] : i;
  }
  return rep;
}

namespace detail {

inline bool distinct_x(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x == pts[i - 1].x) return false;
  }
  return true;
}

}  // namespace detail

// Tries the identity, then rotations from Pythagorean triples of decreasing
// angle (both senses), until identical points aside, all x-coordinates are
// distinct and no bounding line is vertical. Deterministic.
inline RotatedInstance generic_rotation(std::span<const Point> points,
                                        std::span<const Halfplane> halfplanes,
                                        RotationMode mode = RotationMode::kGeneral) {
  if (mode == RotationMode::kKeepLower) {
    for (const Halfplane& h : halfplanes) {
      if (h.orientation() != Orientation::kLower) {
        throw Error(ErrorCode::kInvalidInput, "expected lower halfplanes only");
      }
    }
  }
  constexpr int kMaxFullChecks = 64;
  constexpr long kMaxK = 1L << 20;
  int full_checks = 0;
  for (long k = 1; k <= kMaxK; ++k) {
    for (int sense = 0; sense < (k == 1 ? 1 : 2); ++sense) {
      const Rotation rot = k == 1 ? Rotation{} : pythagorean_rotation(k, sense == 1);
      RotatedInstance out;
      out.rotation = rot;
      out.halfplanes.reserve(halfplanes.size());
      bool ok = true;
      for (const Halfplane& h : halfplanes) {
        Halfplane g = rot.apply(h);
        const int sb = sign(g.b);
        if (sb == 0 || (mode == RotationMode::kKeepLower && sb < 0)) {
          ok = false;
          break;
        }
        out.halfplanes.push_back(std::move(g));
      }
      if (!ok) continue;
      out.points.reserve(points.size());
      for (const Point& p : points) out.points.push_back(rot.apply(p));
      if (!detail::distinct_x(out.points)) {
        if (++full_checks >= kMaxFullChecks) {
          throw Error(ErrorCode::kGenericityFailure, "no rotation gives general position");
        }
        continue;
      }
      out.representative = parallel_representatives(out.halfplanes);
      return out;
    }
  }
  throw Error(ErrorCode::kGenericityFailure, "rotation candidates exhausted");
}

}  // namespace hcover

#endif  // HCOVER_ROTATION_HPP_
