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

#ifndef HCOVER_GEOMETRY_HPP_
#define HCOVER_GEOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>

#include "hcover/scalar.hpp"

namespace hcover {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& p, const Point& q) {
    return p.x == q.x && p.y == q.y;
  }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& p, const Point& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  }
};

inline Point operator-(const Point& p, const Point& q) {
  return {p.x - q.x, p.y - q.y};
}
inline Point operator+(const Point& p, const Point& q) {
  return {p.x + q.x, p.y + q.y};
}
inline Point operator*(const Scalar& s, const Point& p) {
  return {s * p.x, s * p.y};
}

inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Scalar cross(const Point& u, const Point& v) {
  return u.x * v.y - u.y * v.x;
}

// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q - p, r - p));
}

enum class Orientation { kLower, kUpper, kVertical };

// Closed halfplane {a*x + b*y <= c}, or the open set {a*x + b*y < c} when
// `open` is set. Open halfplanes only arise as complements.
struct Halfplane {
  Scalar a;
  Scalar b;
  Scalar c;
  bool open = false;

  // a*x + b*y - c; non-positive inside a closed halfplane.
  Scalar excess(const Point& p) const { return a * p.x + b * p.y - c; }

  bool contains(const Point& p) const {
    const int s = sign(excess(p));
    return open ? s < 0 : s <= 0;
  }

  Orientation orientation() const {
    const int s = sign(b);
    if (s > 0) return Orientation::kLower;
    if (s < 0) return Orientation::kUpper;
    return Orientation::kVertical;
  }

  // The closed halfplane's complement is open, and vice versa.
  Halfplane complement() const { return {-a, -b, -c, !open}; }

  // Direction perpendicular to the bounding line, pointing into the halfplane.
  Point inward_normal() const { return {-a, -b}; }

  // Direction of the bounding line, oriented so the halfplane is on its left.
  Point boundary_direction() const { return {-b, a}; }

  friend bool operator==(const Halfplane& h, const Halfplane& g) {
    return h.a == g.a && h.b == g.b && h.c == g.c && h.open == g.open;
  }
};

inline Halfplane lower_halfplane(const Scalar& slope, const Scalar& intercept) {
  // y <= slope*x + intercept
  return {-slope, Scalar(1), intercept};
}

inline Halfplane upper_halfplane(const Scalar& slope, const Scalar& intercept) {
  // y >= slope*x + intercept
  return {slope, Scalar(-1), -intercept};
}

struct Line {
  Scalar slope;
  Scalar intercept;
  bool vertical = false;
  Scalar x;  // for vertical lines, x = this value

  static Line non_vertical(Scalar m, Scalar t) {
    return Line{std::move(m), std::move(t), false, Scalar(0)};
  }
  static Line vertical_at(Scalar x0) {
    return Line{Scalar(0), Scalar(0), true, std::move(x0)};
  }

  Scalar eval(const Scalar& at) const { return slope * at + intercept; }

  friend bool operator==(const Line& l, const Line& m) {
    if (l.vertical != m.vertical) return false;
    return l.vertical ? l.x == m.x
                      : (l.slope == m.slope && l.intercept == m.intercept);
  }
};

inline Line bounding_line(const Halfplane& h) {
  if (sign(h.b) == 0) return Line::vertical_at(h.c / h.a);
  return Line::non_vertical(-h.a / h.b, h.c / h.b);
}

// Intersection point of the bounding lines of g and h; nullopt if parallel.
inline std::optional<Point> boundary_intersection(const Halfplane& g,
                                                  const Halfplane& h) {
  const Scalar det = g.a * h.b - g.b * h.a;
  if (sign(det) == 0) return std::nullopt;
  return Point{(g.c * h.b - g.b * h.c) / det, (g.a * h.c - g.c * h.a) / det};
}

// ---------------------------------------------------------------------------
// Exact angular ordering of direction vectors.

// 0 for angles in [0, pi), 1 for [pi, 2*pi). The zero vector is not allowed.
inline int angle_half(const Point& v) {
  const int sy = sign(v.y);
  return (sy > 0 || (sy == 0 && sign(v.x) > 0)) ? 0 : 1;
}

// Three-way comparison of the polar angles of u and v in [0, 2*pi).
inline int angle_compare(const Point& u, const Point& v) {
  const int hu = angle_half(u);
  const int hv = angle_half(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return -sign(cross(u, v));
}

// Three-way comparison of the counterclockwise angles from `ref` to u and v,
// each measured in [0, 2*pi).
inline int angle_compare_from(const Point& ref, const Point& u, const Point& v) {
  auto half = [&ref](const Point& w) {
    const int c = sign(cross(ref, w));
    return (c > 0 || (c == 0 && sign(dot(ref, w)) > 0)) ? 0 : 1;
  };
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return -sign(cross(u, v));
}

inline bool same_direction(const Point& u, const Point& v) {
  return sign(cross(u, v)) == 0 && sign(dot(u, v)) > 0;
}

// True iff direction w lies on the closed counterclockwise arc from `from`
// to `to`. A zero-length arc (same direction) contains only that direction.
inline bool direction_in_arc(const Point& from, const Point& to, const Point& w) {
  return angle_compare_from(from, w, to) <= 0;
}

}  // namespace hcover

#endif  // HCOVER_GEOMETRY_HPP_
