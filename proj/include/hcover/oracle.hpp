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

#ifndef HCOVER_ORACLE_HPP_
#define HCOVER_ORACLE_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/range_tree.hpp"
#include "hcover/solution.hpp"

// Brute-force ground truth. Nothing here calls into the solvers; coverage is
// re-derived from the raw coefficients.
namespace hcover::oracle {

struct OracleBudget {
  std::size_t max_points = 4096;
  std::size_t max_halfplanes = 24;
  std::size_t max_subset = 24;
  std::chrono::milliseconds time_cap{60000};
};

namespace detail {

inline bool in_closed(const Halfplane& h, const Point& p) {
  return h.a * p.x + h.b * p.y <= h.c;
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds cap)
      : end_(std::chrono::steady_clock::now() + cap) {}
  void check() {
    if ((++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > end_) {
      throw Error(ErrorCode::kBudgetExceeded, "oracle time cap reached");
    }
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

// Visits k-subsets of {0..m-1} in colex order until f returns true.
template <class F>
bool for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (f(c)) return true;
    std::size_t i = 0;
    while (i < k && (i + 1 < k ? c[i] + 1 == c[i + 1] : c[i] + 1 == m)) ++i;
    if (i == k) return false;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = j;
  }
}

}  // namespace detail

// Smallest subset (colex-first among the smallest) of `hs` covering every
// point, by enumeration of increasing size.
inline CoverSolution brute_min_point_cover(std::span<const Point> points,
                                           std::span<const Halfplane> hs,
                                           const OracleBudget& budget = {}) {
  if (points.size() > budget.max_points || hs.size() > budget.max_halfplanes) {
    throw Error(ErrorCode::kBudgetExceeded, "instance larger than the oracle budget");
  }
  const std::size_t n = points.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(hs.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<bool> any(n, false);
  for (std::size_t k = 0; k < hs.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::in_closed(hs[k], points[i])) {
        mask[k][i / 64] |= std::uint64_t{1} << (i % 64);
        any[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!any[i]) return CoverSolution::infeasible(i);
  }
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (n % 64 != 0) full.back() = (std::uint64_t{1} << (n % 64)) - 1;
  detail::Deadline deadline(budget.time_cap);
  std::vector<std::uint64_t> acc(words);
  const std::size_t top = std::min(hs.size(), budget.max_subset);
  for (std::size_t k = 0; k <= top; ++k) {
    CoverSolution sol;
    const bool found = detail::for_each_subset(hs.size(), k, [&](const std::vector<std::size_t>& c) {
      deadline.check();
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t h : c) {
        for (std::size_t w = 0; w < words; ++w) acc[w] |= mask[h][w];
      }
      if (acc != full) return false;
      sol.chosen = c;
      return true;
    });
    if (found) return sol;
  }
  throw Error(ErrorCode::kBudgetExceeded, "optimum larger than the subset-size budget");
}

// Every maximal run of consecutive covered points (Gamma_h), by linear scan.
inline std::vector<SpanRun> naive_runs(std::span<const Point> ordered, const Halfplane& h,
                                       bool cyclic) {
  const std::size_t n = ordered.size();
  std::vector<bool> in(n);
  bool all = n > 0;
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = detail::in_closed(h, ordered[i]);
    all = all && in[i];
  }
  std::vector<SpanRun> out;
  if (cyclic && all) return {SpanRun{0, n - 1, true}};
  if (!cyclic) {
    for (std::size_t i = 0; i < n;) {
      if (!in[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < n && in[j + 1]) ++j;
      out.push_back({i, j, false});
      i = j + 1;
    }
    return out;
  }
  // Cyclic: start scanning right after some uncovered index.
  std::size_t gap = 0;
  while (gap < n && in[gap]) ++gap;
  if (gap == n) return out;
  for (std::size_t step = 1; step <= n;) {
    const std::size_t i = (gap + step) % n;
    if (!in[i]) {
      ++step;
      continue;
    }
    std::size_t len = 0;
    while (in[(i + len + 1) % n]) ++len;
    out.push_back({i, (i + len) % n, false});
    step += len + 1;
  }
  return out;
}


namespace detail {

// Closed interval of t in [0, 1] with p + t (q - p) inside h, if any.
inline std::optional<std::pair<Scalar, Scalar>> covered_interval(const Point& p, const Point& q,
                                                                 const Halfplane& h) {
  const Scalar base = h.a * p.x + h.b * p.y - h.c;
  const Scalar slope = h.a * (q.x - p.x) + h.b * (q.y - p.y);
  Scalar lo(0), hi(1);
  if (sign(slope) == 0) {
    if (sign(base) > 0) return std::nullopt;
  } else if (sign(slope) > 0) {
    hi = std::min(hi, Scalar(-base / slope));
  } else {
    lo = std::max(lo, Scalar(-base / slope));
  }
  if (hi < lo) return std::nullopt;
  return std::make_pair(lo, hi);
}

inline bool union_covers_unit(std::vector<std::pair<Scalar, Scalar>> iv) {
  std::sort(iv.begin(), iv.end());
  bool have = false;
  Scalar reach(0);
  for (const auto& [lo, hi] : iv) {
    if (have ? lo > reach : sign(lo) > 0) return false;
    if (!have || hi > reach) reach = hi;
    have = true;
  }
  return have && reach >= 1;
}

// Segments (p_k, q_k) of a chain covered exactly by subsets of hs.
inline CoverSolution brute_segment_cover(const std::vector<std::pair<Point, Point>>& segs,
                                         std::span<const Halfplane> hs, const OracleBudget& budget) {
  if (segs.size() > budget.max_points || hs.size() > budget.max_halfplanes) {
    throw Error(ErrorCode::kBudgetExceeded, "instance larger than the oracle budget");
  }
  using Iv = std::optional<std::pair<Scalar, Scalar>>;
  std::vector<std::vector<Iv>> iv(hs.size());
  for (std::size_t h = 0; h < hs.size(); ++h) {
    for (const auto& [p, q] : segs) iv[h].push_back(covered_interval(p, q, hs[h]));
  }
  auto covers = [&](const std::vector<std::size_t>& subset) {
    for (std::size_t k = 0; k < segs.size(); ++k) {
      std::vector<std::pair<Scalar, Scalar>> parts;
      for (std::size_t h : subset) {
        if (iv[h][k]) parts.push_back(*iv[h][k]);
      }
      if (!union_covers_unit(std::move(parts))) return false;
    }
    return true;
  };
  std::vector<std::size_t> all(hs.size());
  for (std::size_t h = 0; h < hs.size(); ++h) all[h] = h;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    std::vector<std::pair<Scalar, Scalar>> parts;
    for (std::size_t h = 0; h < hs.size(); ++h) {
      if (iv[h][k]) parts.push_back(*iv[h][k]);
    }
    if (!union_covers_unit(std::move(parts))) return CoverSolution::infeasible(k);
  }
  Deadline deadline(budget.time_cap);
  const std::size_t top = std::min(hs.size(), budget.max_subset);
  for (std::size_t k = 0; k <= top; ++k) {
    CoverSolution sol;
    const bool found = for_each_subset(hs.size(), k, [&](const std::vector<std::size_t>& c) {
      deadline.check();
      if (!covers(c)) return false;
      sol.chosen = c;
      return true;
    });
    if (found) return sol;
  }
  throw Error(ErrorCode::kBudgetExceeded, "optimum larger than the subset-size budget");
}

inline bool on_segment(const Point& p, const Point& q, const Point& x) {
  if (sign(cross(q - p, x - p)) != 0) return false;
  return sign(dot(x - p, x - q)) <= 0;
}

// Closed point-in-polygon by crossing number.
inline bool in_polygon(std::span<const Point> poly, const Point& x) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = poly[k];
    const Point& q = poly[(k + 1) % n];
    if (on_segment(p, q, x)) return true;
    if ((p.y > x.y) != (q.y > x.y)) {
      const Scalar xc = p.x + (x.y - p.y) * (q.x - p.x) / (q.y - p.y);
      if (x.x < xc) inside = !inside;
    }
  }
  return inside;
}

}  // namespace detail

// Minimum subset covering the closed polygon boundary (vertices in order,
// closing edge included); infeasible names an edge with an uncovered point.
inline CoverSolution brute_star_cover(std::span<const Point> vertices, std::span<const Halfplane> hs,
                                      const OracleBudget& budget = {}) {
  std::vector<std::pair<Point, Point>> segs;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    segs.push_back({vertices[k], vertices[(k + 1) % vertices.size()]});
  }
  return detail::brute_segment_cover(segs, hs, budget);
}

// Same for an open chain of vertices.
inline CoverSolution brute_polyline_cover(std::span<const Point> vertices, std::span<const Halfplane> hs,
                                          const OracleBudget& budget = {}) {
  std::vector<std::pair<Point, Point>> segs;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) segs.push_back({vertices[k], vertices[k + 1]});
  if (vertices.size() == 1) segs.push_back({vertices[0], vertices[0]});
  return detail::brute_segment_cover(segs, hs, budget);
}

struct NaiveChord {
  Point cw;   // clockwise end as seen from the center
  Point ccw;
};

// Every maximal segment of the bounding line of h inside the closed polygon:
// cut the line at its meetings with the boundary and test each piece.
inline std::vector<NaiveChord> naive_chords(const Point& center, std::span<const Point> vertices,
                                            const Halfplane& h) {
  const Point d{-h.b, h.a};
  const Point base = sign(h.b) != 0 ? Point{Scalar(0), h.c / h.b} : Point{h.c / h.a, Scalar(0)};
  auto at = [&](const Scalar& s) { return base + s * d; };
  const Scalar dd = dot(d, d);
  std::vector<Scalar> cuts;
  const std::size_t n = vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = vertices[k];
    const Point& q = vertices[(k + 1) % n];
    const Scalar ep = h.a * p.x + h.b * p.y - h.c;
    const Scalar eq = h.a * q.x + h.b * q.y - h.c;
    if (sign(ep) == 0) cuts.push_back(dot(p - base, d) / dd);
    if (sign(eq) == 0) cuts.push_back(dot(q - base, d) / dd);
    if (sign(ep) * sign(eq) < 0) {
      const Point x = p + (ep / (ep - eq)) * (q - p);
      cuts.push_back(dot(x - base, d) / dd);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<NaiveChord> out;
  std::size_t i = 0;
  while (i < cuts.size()) {
    std::size_t j = i;
    while (j + 1 < cuts.size() && detail::in_polygon(vertices, at((cuts[j] + cuts[j + 1]) / 2))) ++j;
    Point a = at(cuts[i]), b = at(cuts[j]);
    if (sign(cross(a - center, b - center)) < 0) std::swap(a, b);
    out.push_back({a, b});
    i = j + 1;
  }
  return out;
}

// Every maximal x-interval over which the polyline lies in h, merged from
// per-segment coverage.
inline std::vector<std::pair<Scalar, Scalar>> naive_polyline_intervals(std::span<const Point> vertices,
                                                                       const Halfplane& h) {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const Point& p = vertices[k];
    const Point& q = vertices[k + 1];
    const auto t = detail::covered_interval(p, q, h);
    if (!t) continue;
    const Scalar lo = p.x + t->first * (q.x - p.x);
    const Scalar hi = p.x + t->second * (q.x - p.x);
    if (!out.empty() && out.back().second == lo) {
      out.back().second = hi;
    } else {
      out.push_back({lo, hi});
    }
  }
  return out;
}

}  // namespace hcover::oracle

#endif  // HCOVER_ORACLE_HPP_
