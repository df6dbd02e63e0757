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

#ifndef HCOVER_RANGE_TREE_HPP_
#define HCOVER_RANGE_TREE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"
#include "hcover/hull.hpp"

namespace hcover {

enum class Direction { kLeft, kRight };

struct QueryStats {
  std::size_t node_tests = 0;
  std::size_t point_tests = 0;
};

// Maximal run of consecutive covered indices, from `first` to `last` going
// right (wrapping around in cyclic mode). `full_cycle` marks a cyclic run
// covering every index.
struct SpanRun {
  std::size_t first = 0;
  std::size_t last = 0;
  bool full_cycle = false;

  friend bool operator==(const SpanRun&, const SpanRun&) = default;
};

// Segment tree over an ordered point sequence; every node keeps the convex
// hull of its span so "is some point of this span outside h" costs one
// extreme-point query.
class RangeOutsideTree {
 public:
  RangeOutsideTree(std::vector<Point> points, bool cyclic)
      : points_(std::move(points)), cyclic_(cyclic) {
    if (points_.empty()) throw Error(ErrorCode::kEmptyInput, "range tree over no points");
    hulls_.resize(4 * points_.size());
    build(1, 0, points_.size() - 1);
  }

  std::size_t size() const { return points_.size(); }
  bool cyclic() const { return cyclic_; }
  const std::vector<Point>& points() const { return points_; }

  // Calls f(lo, hi, hull_indices) for every node.
  template <class F>
  void for_each_node(F&& f) const {
    visit(1, 0, points_.size() - 1, f);
  }

  // Nearest index strictly beyond `anchor` in direction `dir` (wrapping in
  // cyclic mode, never returning anchor itself) whose point is not in h.
  std::optional<std::size_t> first_uncovered(std::size_t anchor, Direction dir,
                                             const Halfplane& h,
                                             QueryStats* stats = nullptr) const {
    const std::size_t n = points_.size();
    if (dir == Direction::kRight) {
      if (anchor + 1 < n) {
        if (auto r = leftmost_outside(anchor + 1, n - 1, h, stats)) return r;
      }
      if (cyclic_ && anchor > 0) return leftmost_outside(0, anchor - 1, h, stats);
      return std::nullopt;
    }
    if (anchor > 0) {
      if (auto r = rightmost_outside(0, anchor - 1, h, stats)) return r;
    }
    if (cyclic_ && anchor + 1 < n) return rightmost_outside(anchor + 1, n - 1, h, stats);
    return std::nullopt;
  }

  // The maximal covered run containing `anchor`, or nullopt if the anchor
  // point itself is not in h.
  std::optional<SpanRun> maximal_run(std::size_t anchor, const Halfplane& h,
                                     QueryStats* stats = nullptr) const {
    if (!h.contains(points_[anchor])) return std::nullopt;
    const std::size_t n = points_.size();
    const auto right = first_uncovered(anchor, Direction::kRight, h, stats);
    if (cyclic_ && !right) return SpanRun{0, n - 1, true};
    const auto left = first_uncovered(anchor, Direction::kLeft, h, stats);
    SpanRun run;
    if (cyclic_) {
      run.first = (*left + 1) % n;
      run.last = (*right + n - 1) % n;
    } else {
      run.first = left ? *left + 1 : 0;
      run.last = right ? *right - 1 : n - 1;
    }
    return run;
  }

 private:
  void build(std::size_t node, std::size_t lo, std::size_t hi) {
    if (lo == hi) {
      hulls_[node] = {lo};
      return;
    }
    const std::size_t mid = (lo + hi) / 2;
    build(2 * node, lo, mid);
    build(2 * node + 1, mid + 1, hi);
    std::vector<std::size_t> merged = hulls_[2 * node];
    merged.insert(merged.end(), hulls_[2 * node + 1].begin(), hulls_[2 * node + 1].end());
    hulls_[node] = convex_hull_indices(points_, std::move(merged));
  }

  template <class F>
  void visit(std::size_t node, std::size_t lo, std::size_t hi, F& f) const {
    f(lo, hi, hulls_[node]);
    if (lo == hi) return;
    const std::size_t mid = (lo + hi) / 2;
    visit(2 * node, lo, mid, f);
    visit(2 * node + 1, mid + 1, hi, f);
  }

  bool node_outside(std::size_t node, const Halfplane& h, QueryStats* stats) const {
    if (stats != nullptr) ++stats->node_tests;
    const std::vector<std::size_t>& hull = hulls_[node];
    const std::size_t k = extreme_position(
        hull.size(), [&](std::size_t i) -> const Point& { return points_[hull[i]]; },
        Point{h.a, h.b});
    return !h.contains(points_[hull[k]]);
  }

  bool point_outside(std::size_t i, const Halfplane& h, QueryStats* stats) const {
    if (stats != nullptr) ++stats->point_tests;
    return !h.contains(points_[i]);
  }

  std::optional<std::size_t> leftmost_outside(std::size_t l, std::size_t r, const Halfplane& h,
                                              QueryStats* stats) const {
    if (point_outside(l, h, stats)) return l;  // common case: the run ends right away
    return leftmost(1, 0, points_.size() - 1, l, r, h, stats);
  }

  std::optional<std::size_t> rightmost_outside(std::size_t l, std::size_t r, const Halfplane& h,
                                               QueryStats* stats) const {
    if (point_outside(r, h, stats)) return r;
    return rightmost(1, 0, points_.size() - 1, l, r, h, stats);
  }

  std::optional<std::size_t> leftmost(std::size_t node, std::size_t lo, std::size_t hi,
                                      std::size_t l, std::size_t r, const Halfplane& h,
                                      QueryStats* stats) const {
    if (hi < l || lo > r) return std::nullopt;
    if (!node_outside(node, h, stats)) return std::nullopt;
    if (lo == hi) return lo;
    const std::size_t mid = (lo + hi) / 2;
    if (auto res = leftmost(2 * node, lo, mid, l, r, h, stats)) return res;
    return leftmost(2 * node + 1, mid + 1, hi, l, r, h, stats);
  }

  std::optional<std::size_t> rightmost(std::size_t node, std::size_t lo, std::size_t hi,
                                       std::size_t l, std::size_t r, const Halfplane& h,
                                       QueryStats* stats) const {
    if (hi < l || lo > r) return std::nullopt;
    if (!node_outside(node, h, stats)) return std::nullopt;
    if (lo == hi) return lo;
    const std::size_t mid = (lo + hi) / 2;
    if (auto res = rightmost(2 * node + 1, mid + 1, hi, l, r, h, stats)) return res;
    return rightmost(2 * node, lo, mid, l, r, h, stats);
  }

  std::vector<Point> points_;
  bool cyclic_;
  std::vector<std::vector<std::size_t>> hulls_;
};

}  // namespace hcover

#endif  // HCOVER_RANGE_TREE_HPP_
