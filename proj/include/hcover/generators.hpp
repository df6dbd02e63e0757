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

#ifndef HCOVER_GENERATORS_HPP_
#define HCOVER_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/instance.hpp"
#include "hcover/lp.hpp"

namespace hcover {

inline const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {
      "uniform", "parabola-eq", "parabola-neq", "zigzag", "star-random",
      "polyline-lb", "planted-2cover", "planted-3cover"};
  return kinds;
}

namespace gen_detail {

class Rand {
 public:
  explicit Rand(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(gen_() % i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline bool covered_by(const std::vector<Halfplane>& hs, const Point& p) {
  for (const Halfplane& h : hs) {
    if (h.contains(p)) return true;
  }
  return false;
}

// Does h alone, or h with any member of hs, cover every point?
inline bool makes_small_cover(const std::vector<Point>& pts, const std::vector<Halfplane>& hs,
                              const Halfplane& h) {
  std::vector<std::size_t> missed;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!h.contains(pts[i])) missed.push_back(i);
  }
  if (missed.empty()) return true;
  for (const Halfplane& g : hs) {
    bool all = true;
    for (std::size_t i : missed) {
      if (!g.contains(pts[i])) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline std::vector<long> distinct_sorted(Rand& rng, std::size_t n, long lo, long hi) {
  std::set<long> s;
  while (s.size() < n) s.insert(rng.uniform(lo, hi));
  return {s.begin(), s.end()};
}

// y <= 2 b x - b^2, tangent to y = x^2 at x = b.
inline Halfplane tangent_below(const Scalar& b) { return {Scalar(-2 * b), Scalar(1), Scalar(-b * b)}; }

inline Instance uniform(std::size_t n, Rand& rng) {
  Instance inst;
  std::vector<std::pair<long, long>> lines;
  for (std::size_t k = 0; k < n; ++k) {
    const long m = rng.uniform(-1000, 1000);
    const long t = rng.uniform(0, 1000000);
    lines.push_back({m, t});
    inst.halfplanes.push_back({Scalar(-m), Scalar(1), Scalar(t)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const long x = rng.uniform(-10000, 10000);
    const auto& [m, t] = lines[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];
    inst.points.push_back({Scalar(x), Scalar(m * x + t - rng.uniform(0, 1000000))});
  }
  return inst;
}

inline Instance parabola(std::size_t n, Rand& rng, bool perturb) {
  Instance inst;
  const long span = 10 * static_cast<long>(std::max<std::size_t>(n, 1));
  const std::vector<long> a = distinct_sorted(rng, n, -span, span);
  for (long v : a) inst.points.push_back({Scalar(v), Scalar(v * v)});
  std::vector<Scalar> b(a.begin(), a.end());
  if (perturb && n > 0) {
    b[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))] += make_rational(1, 2);
  }
  for (const Scalar& v : b) inst.halfplanes.push_back(tangent_below(v));
  if (!perturb) inst.metadata["planted_size"] = static_cast<std::int64_t>(n);
  return inst;
}

// Low points at even x, high points on y = x^2 at odd x. Each halfplane
// covers every low point and exactly one high point, so every halfplane has
// about n/2 maximal runs while the optimum is the number of high points.
inline Instance zigzag(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidInput, "zigzag needs n >= 2");
  Instance inst;
  const long nn = static_cast<long>(n);
  for (long x = 0; x < nn; ++x) {
    inst.points.push_back({Scalar(x), Scalar(x % 2 == 0 ? -2 * nn * nn - 1 : x * x)});
  }
  const std::size_t high = n / 2;
  for (std::size_t j = 0; j < n; ++j) {
    const long xt = 2 * static_cast<long>(j % high) + 1;
    if (j < high) {
      inst.halfplanes.push_back(tangent_below(Scalar(xt)));
      continue;
    }
    // Through (xt, xt^2) with slope 2*xt +- 1/2: meets the parabola again
    // within 1/2 of xt, so it still covers only that high point.
    const Scalar slope = Scalar(2 * xt) + (j < 2 * high ? make_rational(1, 2) : make_rational(-1, 2));
    inst.halfplanes.push_back({-slope, Scalar(1), Scalar(xt * xt) - slope * xt});
  }
  inst.metadata["planted_size"] = static_cast<std::int64_t>(high);
  return inst;
}

inline Instance star_random(std::size_t n, Rand& rng) {
  const std::size_t k = std::max<std::size_t>(n, 3);
  Instance inst;
  inst.kind = InstanceKind::kStar;
  inst.center = Point{Scalar(0), Scalar(0)};
  std::vector<Point> dirs;
  for (;;) {
    dirs.clear();
    while (dirs.size() < k) {
      const Point d{Scalar(rng.uniform(-12, 12)), Scalar(rng.uniform(-12, 12))};
      if (sign(d.x) == 0 && sign(d.y) == 0) continue;
      bool dup = false;
      for (const Point& e : dirs) dup = dup || same_direction(d, e);
      if (!dup) dirs.push_back(d);
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const Point& u, const Point& v) { return angle_compare(u, v) < 0; });
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) ok = ok && sign(cross(dirs[i], dirs[(i + 1) % k])) > 0;
    if (ok) break;
  }
  for (const Point& d : dirs) inst.vertices.push_back(Scalar(rng.uniform(1, 3)) * d);
  // Most edges get a halfplane covering all of it; the rest are chords
  // through random boundary points.
  const std::size_t m = k + k / 2;
  std::vector<std::size_t> edges(k);
  for (std::size_t e = 0; e < k; ++e) edges[e] = e;
  rng.shuffle(edges);
  for (std::size_t e : edges) {
    if (rng.uniform(0, 7) == 0) continue;
    const Point& v = inst.vertices[e];
    const Point& w = inst.vertices[(e + 1) % k];
    const Point nrm{w.y - v.y, v.x - w.x};
    const Scalar lim = dot(nrm, v) * make_rational(rng.uniform(2, 4), 4);
    inst.halfplanes.push_back({-nrm.x, -nrm.y, -lim});
  }
  while (inst.halfplanes.size() < m) {
    const std::size_t e = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1));
    const Point& v = inst.vertices[e];
    const Point& w = inst.vertices[(e + 1) % k];
    const Point q = v + make_rational(rng.uniform(1, 3), 4) * (w - v);
    Point nrm{Scalar(rng.uniform(-5, 5)), Scalar(rng.uniform(-5, 5))};
    const int s = sign(dot(nrm, q));
    if (s == 0) continue;
    if (s < 0) nrm = Scalar(-1) * nrm;
    // {p : nrm.p >= nrm.q} holds q, not o.
    inst.halfplanes.push_back({-nrm.x, -nrm.y, -dot(nrm, q)});
  }
  rng.shuffle(inst.halfplanes);
  return inst;
}

// Spikes down from each parabola point to a floor low enough that a
// halfplane covering a point also covers both adjacent spike edges and the
// floor next to them. Covering the polyline is then the same as covering
// the points.
inline Instance polyline_lb(std::size_t n, Rand& rng) {
  Instance base = parabola(std::max<std::size_t>(n, 1), rng, false);
  Instance inst;
  inst.kind = InstanceKind::kPolyline;
  inst.halfplanes = base.halfplanes;
  Scalar kappa(0), min_y = base.points[0].y;
  for (const Halfplane& h : inst.halfplanes) kappa = std::max(kappa, abs_value(h.a / h.b));
  Scalar min_gap(1), max_gap(0);
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    min_y = std::min(min_y, base.points[i].y);
    if (i == 0) continue;
    const Scalar g = base.points[i].x - base.points[i - 1].x;
    if (i == 1 || g < min_gap) min_gap = g;
    max_gap = std::max(max_gap, g);
  }
  const Scalar delta = min_gap / 4;
  const Scalar floor_y = min_y - kappa * std::max(max_gap, delta) - 1;
  for (const Point& p : base.points) {
    inst.vertices.push_back({p.x - delta, floor_y});
    inst.vertices.push_back(p);
    inst.vertices.push_back({p.x + delta, floor_y});
  }
  inst.metadata["planted_size"] = static_cast<std::int64_t>(base.points.size());
  return inst;
}

inline Instance planted_two(std::size_t n, Rand& rng) {
  n = std::max<std::size_t>(n, 2);
  Instance inst;
  const long m1 = rng.uniform(-3, 3), t1 = rng.uniform(-10, 10);
  const long m2 = rng.uniform(-3, 3), t2 = rng.uniform(-10, 10);
  const Halfplane low{Scalar(-m1), Scalar(1), Scalar(t1)};
  const Halfplane up{Scalar(m2), Scalar(-1), Scalar(-t2)};
  // One point private to each planted halfplane, so neither covers alone.
  std::vector<Point>& pts = inst.points;
  while (pts.size() < n) {
    const Point p{Scalar(rng.uniform(-50, 50)), Scalar(rng.uniform(-50, 50))};
    const bool in_low = low.contains(p), in_up = up.contains(p);
    if (pts.empty() ? (in_low && !in_up) : pts.size() == 1 ? (in_up && !in_low) : (in_low || in_up)) {
      pts.push_back(p);
    }
  }
  std::vector<Halfplane> hs = {low, up};
  const std::size_t distractors = n / 2;
  for (std::size_t tries = 0; hs.size() < 2 + distractors && tries < 50 * n; ++tries) {
    const Halfplane h{Scalar(rng.uniform(-6, 6)), Scalar(rng.uniform(-6, 6)), Scalar(rng.uniform(-60, 60))};
    if (sign(h.a) == 0 && sign(h.b) == 0) continue;
    bool alone = true;
    for (const Point& p : pts) alone = alone && h.contains(p);
    if (!alone) hs.push_back(h);
  }
  rng.shuffle(pts);
  rng.shuffle(hs);
  inst.halfplanes = std::move(hs);
  inst.metadata["planted_size"] = 2;
  return inst;
}

inline Instance planted_three(std::size_t n, Rand& rng) {
  n = std::max<std::size_t>(n, 3);
  Instance inst;
  // {y >= 0, y <= x, y <= -x}: their union is the plane.
  std::vector<Halfplane> hs = {{Scalar(0), Scalar(-1), Scalar(0)},
                               {Scalar(-1), Scalar(1), Scalar(0)},
                               {Scalar(1), Scalar(1), Scalar(0)}};
  std::vector<Point>& pts = inst.points;
  const long r = 50;
  // Private points: above |x|; right of |y| below the axis; left of -|y| below the axis.
  for (;;) {
    const long x = rng.uniform(-r, r), y = rng.uniform(1, r);
    if (y > std::abs(x)) {
      pts.push_back({Scalar(x), Scalar(y)});
      break;
    }
  }
  for (;;) {
    const long x = rng.uniform(1, r), y = rng.uniform(-r, -1);
    if (x > -y) {
      pts.push_back({Scalar(x), Scalar(y)});
      break;
    }
  }
  for (;;) {
    const long x = rng.uniform(-r, -1), y = rng.uniform(-r, -1);
    if (x < y) {
      pts.push_back({Scalar(x), Scalar(y)});
      break;
    }
  }
  while (pts.size() < n) pts.push_back({Scalar(rng.uniform(-r, r)), Scalar(rng.uniform(-r, r))});
  const std::size_t distractors = std::min<std::size_t>(n / 4 + 1, 12);
  for (std::size_t tries = 0; hs.size() < 3 + distractors && tries < 200 * distractors; ++tries) {
    const Halfplane h{Scalar(rng.uniform(-6, 6)), Scalar(rng.uniform(-6, 6)), Scalar(rng.uniform(-60, 60))};
    if (sign(h.a) == 0 && sign(h.b) == 0) continue;
    if (!gen_detail::makes_small_cover(pts, hs, h)) hs.push_back(h);
  }
  rng.shuffle(pts);
  rng.shuffle(hs);
  inst.halfplanes = std::move(hs);
  inst.metadata["planted_size"] = 3;
  return inst;
}

}  // namespace gen_detail

// Deterministic in (kind, n, seed).
inline Instance generate(std::string_view kind, std::size_t n, std::uint64_t seed) {
  gen_detail::Rand rng(seed);
  if (kind == "uniform") return gen_detail::uniform(n, rng);
  if (kind == "parabola-eq") return gen_detail::parabola(n, rng, false);
  if (kind == "parabola-neq") return gen_detail::parabola(n, rng, true);
  if (kind == "zigzag") return gen_detail::zigzag(n);
  if (kind == "star-random") return gen_detail::star_random(n, rng);
  if (kind == "polyline-lb") return gen_detail::polyline_lb(n, rng);
  if (kind == "planted-2cover") return gen_detail::planted_two(n, rng);
  if (kind == "planted-3cover") return gen_detail::planted_three(n, rng);
  throw Error(ErrorCode::kInvalidInput, "unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace hcover

#endif  // HCOVER_GENERATORS_HPP_
