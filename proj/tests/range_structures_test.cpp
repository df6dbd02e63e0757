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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hcover/hull.hpp"
#include "hcover/range_tree.hpp"
#include "test_util.hpp"

namespace hcover {
namespace {

using testing::hp;
using testing::pt;
using testing::Rng;

std::optional<std::size_t> scan_first(const std::vector<Point>& pts, bool cyclic,
                                      std::size_t anchor, Direction dir, const Halfplane& h) {
  const std::size_t n = pts.size();
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t i;
    if (dir == Direction::kRight) {
      if (!cyclic && anchor + step >= n) break;
      i = (anchor + step) % n;
    } else {
      if (!cyclic && step > anchor) break;
      i = (anchor + n - step) % n;
    }
    if (!h.contains(pts[i])) return i;
  }
  return std::nullopt;
}

std::vector<Point> sorted_by_x(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

TEST(RangeTree, SingleLeaf) {
  RangeOutsideTree t({pt(3, 4)}, false);
  int nodes = 0;
  t.for_each_node([&](std::size_t lo, std::size_t hi, const std::vector<std::size_t>& hull) {
    ++nodes;
    EXPECT_EQ(lo, 0u);
    EXPECT_EQ(hi, 0u);
    EXPECT_EQ(hull, std::vector<std::size_t>{0});
  });
  EXPECT_EQ(nodes, 1);
  EXPECT_THROW(RangeOutsideTree({}, false), Error);
}

TEST(RangeTree, NodeHullsMatchSpans) {
  Rng rng(21);
  for (std::size_t n : {8u, 64u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Point> pts = sorted_by_x(rng.points(n, -30, 30));
      RangeOutsideTree t(pts, trial % 2 == 1);
      t.for_each_node([&](std::size_t lo, std::size_t hi, const std::vector<std::size_t>& hull) {
        std::vector<Point> span(pts.begin() + static_cast<long>(lo), pts.begin() + static_cast<long>(hi) + 1);
        std::vector<Point> got;
        for (std::size_t i : hull) got.push_back(pts[i]);
        ASSERT_EQ(got, convex_hull(span));
      });
    }
  }
}

TEST(RangeTree, FirstUncoveredExample) {
  RangeOutsideTree t({pt(0, 0), pt(1, 3), pt(2, 0)}, false);
  const Halfplane below2 = hp(0, 1, 2);
  EXPECT_EQ(t.first_uncovered(0, Direction::kRight, below2), std::optional<std::size_t>(1));
  const Halfplane below5 = hp(0, 1, 5);
  EXPECT_EQ(t.first_uncovered(0, Direction::kRight, below5), std::nullopt);
  EXPECT_EQ(t.first_uncovered(2, Direction::kLeft, below5), std::nullopt);
}

TEST(RangeTree, MaximalRunExamples) {
  // Covered: 0, 1, 2, 4; index 3 sticks out.
  std::vector<Point> pts = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 9), pt(4, 0)};
  const Halfplane h = hp(0, 1, 1);
  RangeOutsideTree lin(pts, false);
  EXPECT_EQ(lin.maximal_run(1, h), (SpanRun{0, 2, false}));
  EXPECT_EQ(lin.maximal_run(3, h), std::nullopt);
  RangeOutsideTree cyc(pts, true);
  EXPECT_EQ(cyc.maximal_run(1, h), (SpanRun{4, 2, false}));
  EXPECT_TRUE(cyc.maximal_run(2, hp(0, 1, 10))->full_cycle);
}

TEST(RangeTree, MatchesLinearScan) {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 40));
    const bool cyclic = trial % 2 == 1;
    std::vector<Point> pts = rng.points(n, -10, 10);
    if (!cyclic) pts = sorted_by_x(pts);
    RangeOutsideTree t(pts, cyclic);
    const Halfplane h = rng.halfplane(-6, 6);
    const std::size_t anchor = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    for (Direction d : {Direction::kLeft, Direction::kRight}) {
      ASSERT_EQ(t.first_uncovered(anchor, d, h), scan_first(pts, cyclic, anchor, d, h));
    }
    const auto run = t.maximal_run(anchor, h);
    if (!h.contains(pts[anchor])) {
      ASSERT_FALSE(run);
      continue;
    }
    ASSERT_TRUE(run);
    if (run->full_cycle) {
      for (const Point& p : pts) ASSERT_TRUE(h.contains(p));
      continue;
    }
    // Every index of the run is covered and both neighbours are not.
    std::size_t i = run->first;
    for (;;) {
      ASSERT_TRUE(h.contains(pts[i]));
      if (i == run->last) break;
      i = (i + 1) % n;
    }
    if (cyclic) {
      ASSERT_FALSE(h.contains(pts[(run->first + n - 1) % n]));
      ASSERT_FALSE(h.contains(pts[(run->last + 1) % n]));
    } else {
      if (run->first > 0) ASSERT_FALSE(h.contains(pts[run->first - 1]));
      if (run->last + 1 < n) ASSERT_FALSE(h.contains(pts[run->last + 1]));
    }
  }
}

TEST(RangeTree, QueryCountIsPolylog) {
  Rng rng(23);
  const std::size_t n = std::size_t{1} << 17;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({Scalar(static_cast<long>(i)), Scalar(rng.uniform(0, 1000000))});
  RangeOutsideTree t(pts, false);
  const double lg = std::log2(static_cast<double>(n));
  for (int q = 0; q < 200; ++q) {
    const Halfplane h{Scalar(rng.uniform(-3, 3)), Scalar(1), Scalar(rng.uniform(0, 2000000))};
    const std::size_t anchor = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    QueryStats stats;
    const auto run = t.maximal_run(anchor, h, &stats);
    (void)run;
    ASSERT_LE(static_cast<double>(stats.node_tests), 4 * lg + 4);
  }
}

}  // namespace
}  // namespace hcover
